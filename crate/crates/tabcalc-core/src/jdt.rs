//! Jeu de taquin slides, rectification with recorded traces, tableau
//! switching (standard via chains, semistandard via standardisation),
//! dual equivalence, chain concatenation, rectangle complementation, and
//! slide-trace transport.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::shapes::{diamond, Cell, Partition, SkewShape};
use crate::tableaux::{destandardise, standardise, ChainTableau, SkewTableau};

/// One recorded slide: the inner corner it started from, the outer cell it
/// vacated, and the shape left behind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlideStep {
    pub start: Cell,
    pub end: Cell,
    pub shape_after: SkewShape,
}

/// The sequence of slides performed by a rectification, in order.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SlideTrace {
    pub steps: Vec<SlideStep>,
}

fn entry_map(tab: &SkewTableau) -> BTreeMap<Cell, usize> {
    tab.shape()
        .cells()
        .into_iter()
        .map(|c| (c, tab.entry(c).unwrap()))
        .collect()
}

fn tableau_from_entries(shape: SkewShape, entries: &BTreeMap<Cell, usize>) -> SkewTableau {
    let rows = (0..shape.rows())
        .map(|i| {
            shape
                .row_range(i)
                .map(|j| entries[&Cell::new(i, j)])
                .collect()
        })
        .collect();
    SkewTableau::from_parts_unchecked(shape, rows)
}

/// The removable cells of the inner shape (slide starting points),
/// topmost — equivalently largest-diagonal — first.
pub fn inner_corners(shape: &SkewShape) -> Vec<Cell> {
    let inner = shape.inner();
    (0..inner.len())
        .filter_map(|i| {
            inner
                .with_cell_removed(i)
                .map(|_| Cell::new(i, inner.part(i) - 1))
        })
        .collect()
}

/// Slides the hole opened at the inner corner `start` through the tableau,
/// repeatedly filled from the smaller of its right/below neighbours (tie:
/// the below entry moves). Returns the slid tableau and the vacated cell,
/// which leaves the outer shape while `start` leaves the inner shape.
pub fn inward_slide(tab: &SkewTableau, start: Cell) -> Result<(SkewTableau, Cell), Error> {
    let inner = tab.shape().inner();
    let new_inner = inner
        .with_cell_removed(start.row)
        .filter(|_| inner.part(start.row) == start.col + 1)
        .ok_or(Error::InvalidCell { cell: start })?;
    let mut entries = entry_map(tab);
    let mut hole = start;
    loop {
        let right = Cell::new(hole.row, hole.col + 1);
        let below = Cell::new(hole.row + 1, hole.col);
        let source = match (entries.get(&right), entries.get(&below)) {
            (None, None) => break,
            (Some(_), None) => right,
            (None, Some(_)) => below,
            (Some(r), Some(b)) => {
                if b <= r {
                    below
                } else {
                    right
                }
            }
        };
        let e = entries.remove(&source).unwrap();
        entries.insert(hole, e);
        hole = source;
    }
    let new_outer = tab
        .shape()
        .outer()
        .with_cell_removed(hole.row)
        .filter(|_| tab.shape().outer().part(hole.row) == hole.col + 1)
        .expect("a slide ends at a removable cell of the outer shape");
    let shape = SkewShape::new(new_outer, new_inner).expect("slides keep shapes nested");
    Ok((tableau_from_entries(shape, &entries), hole))
}

/// The inverse of [`inward_slide`]: opens a hole at the addable outer
/// co-corner `start` and fills it from the larger of its left/above
/// neighbours (tie: the above entry moves). Returns the slid tableau and
/// the vacated cell, which joins the inner shape while `start` joins the
/// outer shape.
pub fn outward_slide(tab: &SkewTableau, start: Cell) -> Result<(SkewTableau, Cell), Error> {
    let outer = tab.shape().outer();
    let new_outer = outer
        .with_cell_added(start.row)
        .filter(|_| outer.part(start.row) == start.col)
        .ok_or(Error::InvalidCell { cell: start })?;
    let mut entries = entry_map(tab);
    let mut hole = start;
    loop {
        let left = (hole.col > 0).then(|| Cell::new(hole.row, hole.col - 1));
        let above = (hole.row > 0).then(|| Cell::new(hole.row - 1, hole.col));
        let left_entry = left.and_then(|c| entries.get(&c));
        let above_entry = above.and_then(|c| entries.get(&c));
        let source = match (left_entry, above_entry) {
            (None, None) => break,
            (Some(_), None) => left.unwrap(),
            (None, Some(_)) => above.unwrap(),
            (Some(l), Some(a)) => {
                if a >= l {
                    above.unwrap()
                } else {
                    left.unwrap()
                }
            }
        };
        let e = entries.remove(&source).unwrap();
        entries.insert(hole, e);
        hole = source;
    }
    let new_inner = tab
        .shape()
        .inner()
        .with_cell_added(hole.row)
        .filter(|p| p.part(hole.row) == hole.col + 1)
        .expect("a slide ends at an addable cell of the inner shape");
    let shape = SkewShape::new(new_outer, new_inner).expect("slides keep shapes nested");
    Ok((tableau_from_entries(shape, &entries), hole))
}

/// Rectifies `T` to partition shape by repeated inward slides, always
/// starting from the inner corner with the largest diagonal index (ties
/// broken towards the smallest row). The result is independent of this
/// choice; the returned trace records the slides actually performed.
pub fn rectify(tab: &SkewTableau) -> (SkewTableau, SlideTrace) {
    rectify_with(tab, |_| 0)
}

/// [`rectify`] with an explicit corner-selection policy: `pick` receives
/// the current inner corners (topmost first) and returns the index of the
/// corner to slide into. Any policy yields the same rectified tableau.
pub fn rectify_with(
    tab: &SkewTableau,
    mut pick: impl FnMut(&[Cell]) -> usize,
) -> (SkewTableau, SlideTrace) {
    let mut current = tab.clone();
    let mut steps = Vec::new();
    loop {
        let corners = inner_corners(current.shape());
        if corners.is_empty() {
            return (current, SlideTrace { steps });
        }
        let start = corners[pick(&corners)];
        let (next, end) = inward_slide(&current, start).expect("inner corners are valid starts");
        steps.push(SlideStep {
            start,
            end,
            shape_after: next.shape().clone(),
        });
        current = next;
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Slot {
    Red(usize),
    Blue(usize),
}

/// Switches a pair of chains `S` (from α to β) and `T` (from β to γ):
/// the steps of `S` are slid past `T` largest label first, each hole
/// travelling through `T`'s cells exactly as an inward slide. Returns
/// `(T′, S′)` with `T′` from α to some δ and `S′` from δ to γ;
/// switching `(T′, S′)` restores `(S, T)`.
pub fn switch_chains(
    s: &ChainTableau,
    t: &ChainTableau,
) -> Result<(ChainTableau, ChainTableau), Error> {
    if s.outer() != t.inner() {
        return Err(Error::Mismatch {
            msg: "second chain must start where the first ends".to_string(),
        });
    }
    let mut slots: BTreeMap<Cell, Slot> = BTreeMap::new();
    for i in 0..s.size() {
        slots.insert(s.cell_at(i), Slot::Red(i));
    }
    for j in 0..t.size() {
        slots.insert(t.cell_at(j), Slot::Blue(j));
    }
    for i in (0..s.size()).rev() {
        let mut hole = s.cell_at(i);
        let removed = slots.remove(&hole);
        debug_assert_eq!(removed, Some(Slot::Red(i)));
        loop {
            let right = Cell::new(hole.row, hole.col + 1);
            let below = Cell::new(hole.row + 1, hole.col);
            let blue = |c: &Cell| match slots.get(c) {
                Some(Slot::Blue(l)) => Some(*l),
                _ => None,
            };
            let source = match (blue(&right), blue(&below)) {
                (None, None) => break,
                (Some(_), None) => right,
                (None, Some(_)) => below,
                (Some(r), Some(b)) => {
                    if b < r {
                        below
                    } else {
                        right
                    }
                }
            };
            let slot = slots.remove(&source).unwrap();
            slots.insert(hole, slot);
            hole = source;
        }
        slots.insert(hole, Slot::Red(i));
    }
    let mut blue_cells = vec![Cell::new(0, 0); t.size()];
    let mut red_cells = vec![Cell::new(0, 0); s.size()];
    for (cell, slot) in &slots {
        match slot {
            Slot::Blue(j) => blue_cells[*j] = *cell,
            Slot::Red(i) => red_cells[*i] = *cell,
        }
    }
    let t_prime = chain_through(s.inner().clone(), &blue_cells);
    let s_prime = chain_through(t_prime.outer().clone(), &red_cells);
    Ok((t_prime, s_prime))
}

/// Builds the chain that starts at `start` and adds `cells` in order.
fn chain_through(start: Partition, cells: &[Cell]) -> ChainTableau {
    let mut chain = vec![start];
    for cell in cells {
        let next = chain
            .last()
            .unwrap()
            .with_cell_added(cell.row)
            .filter(|p| p.part(cell.row) == cell.col + 1)
            .expect("switching adds cells along a chain");
        chain.push(next);
    }
    ChainTableau::new(chain).expect("switching yields a saturated chain")
}

/// Switches a pair of semistandard tableaux `S` (shape μ/ν) and `T`
/// (shape λ/μ): their standardisations are switched and the results
/// carry the original weights. Returns `(T′, S′)`.
pub fn switch(
    s: &SkewTableau,
    t: &SkewTableau,
) -> Result<(SkewTableau, SkewTableau), Error> {
    if s.shape().outer() != t.shape().inner() {
        return Err(Error::Mismatch {
            msg: "second tableau must sit outside the first".to_string(),
        });
    }
    let (ct, cs) = switch_chains(&standardise(s), &standardise(t))?;
    let t_prime = destandardise(&ct, &t.weight()).expect("switching is weight-compatible");
    let s_prime = destandardise(&cs, &s.weight()).expect("switching is weight-compatible");
    Ok((t_prime, s_prime))
}

/// Joins two chains end to start; see [`ChainTableau::concat`].
pub fn concat(t: &ChainTableau, u: &ChainTableau) -> Result<ChainTableau, Error> {
    t.concat(u)
}

/// Decides dual equivalence of two equally-shaped tableaux: identical
/// inward slides are applied to both until partition shape, and the
/// tableaux are dual equivalent exactly when the shapes agree after every
/// step. One complete reduction suffices.
pub fn dual_equivalent(s1: &SkewTableau, s2: &SkewTableau) -> Result<bool, Error> {
    if s1.shape() != s2.shape() {
        return Err(Error::Mismatch {
            msg: "dual equivalence compares tableaux of equal shape".to_string(),
        });
    }
    let mut a = s1.clone();
    let mut b = s2.clone();
    loop {
        let corners = inner_corners(a.shape());
        let Some(&start) = corners.first() else {
            return Ok(true);
        };
        let (a2, ea) = inward_slide(&a, start).expect("inner corner");
        let (b2, eb) = inward_slide(&b, start).expect("inner corner");
        if ea != eb {
            return Ok(false);
        }
        a = a2;
        b = b2;
    }
}

/// [`dual_equivalent`] on chains, via their label tableaux.
pub fn dual_equivalent_chains(s1: &ChainTableau, s2: &ChainTableau) -> Result<bool, Error> {
    dual_equivalent(&s1.label_tableau(), &s2.label_tableau())
}

/// Transports `P` back along the rectification of `L`: rectifying `L`
/// records a slide trace, and the reversed trace is applied to `P` as
/// outward slides. `P` must have the partition shape `L` rectifies to;
/// the result is the unique tableau of `L`'s shape that rectifies to `P`
/// and is dual equivalent to `L`.
pub fn phi(l: &SkewTableau, p: &SkewTableau) -> Result<SkewTableau, Error> {
    let (c, trace) = rectify(l);
    if !p.shape().inner().is_empty() || p.shape().outer() != c.shape().outer() {
        return Err(Error::Mismatch {
            msg: alloc::format!(
                "second tableau must have partition shape {}",
                c.shape().outer()
            ),
        });
    }
    let mut t = p.clone();
    for step in trace.steps.iter().rev() {
        let (next, vacated) = outward_slide(&t, step.end).expect("reversed trace cells are addable");
        debug_assert_eq!(vacated, step.start, "transport retraces the recorded shapes");
        t = next;
    }
    Ok(t)
}

/// Complements every member of the chain in a `rows × cols` rectangle and
/// reverses the order: a chain from α to β becomes one from β's complement
/// to α's complement.
pub fn diamond_tableau(
    s: &ChainTableau,
    rows: usize,
    cols: usize,
) -> Result<ChainTableau, Error> {
    let mut members = Vec::with_capacity(s.members().len());
    for p in s.members().iter().rev() {
        members.push(diamond(p, rows, cols)?);
    }
    Ok(ChainTableau::new(members).expect("complementation reverses chains"))
}

/// A grid of partitions `λ^[i,j]` whose rows and columns are all chains,
/// with the non-degeneracy condition that `λ^[i,j+1] ≠ λ^[i+1,j]`
/// whenever the two cells of `λ^[i+1,j+1]/λ^[i,j]` do not form a domino.
/// The border rows and columns of such a grid are exactly the four chains
/// related by one switching step sequence; used to cross-check
/// [`switch_chains`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchingFamily {
    grid: Vec<Vec<Partition>>,
}

impl SwitchingFamily {
    /// Validates the grid invariants.
    pub fn new(grid: Vec<Vec<Partition>>) -> Result<Self, Error> {
        if grid.is_empty() || grid[0].is_empty() || grid.iter().any(|r| r.len() != grid[0].len())
        {
            return Err(Error::Mismatch {
                msg: "family grid must be a non-empty rectangle".to_string(),
            });
        }
        let (m, n) = (grid.len(), grid[0].len());
        for row in &grid {
            ChainTableau::new(row.clone()).map_err(|_| Error::Mismatch {
                msg: "every family row must be a chain".to_string(),
            })?;
        }
        for j in 0..n {
            let col: Vec<Partition> = grid.iter().map(|row| row[j].clone()).collect();
            ChainTableau::new(col).map_err(|_| Error::Mismatch {
                msg: "every family column must be a chain".to_string(),
            })?;
        }
        for i in 0..m - 1 {
            for j in 0..n - 1 {
                let a = added_cells(&grid[i][j], &grid[i + 1][j + 1]);
                debug_assert_eq!(a.len(), 2);
                let domino = a[0].row == a[1].row && a[0].col.abs_diff(a[1].col) == 1
                    || a[0].col == a[1].col && a[0].row.abs_diff(a[1].row) == 1;
                if !domino && grid[i][j + 1] == grid[i + 1][j] {
                    return Err(Error::Mismatch {
                        msg: "degenerate family square outside a domino".to_string(),
                    });
                }
            }
        }
        Ok(SwitchingFamily { grid })
    }

    /// Materializes the family traversed while switching `(S, T)`:
    /// `λ^[i,j]` consists of the start shape, the cells of `S`'s first `i`
    /// steps, and the positions of `T`'s first `j` steps at the moment
    /// `S`'s steps `≥ i` have all been switched past `T`. Column `0` is
    /// `S`, row `i = max` is `T`, row `0` is `T′`, column `j = max` is `S′`.
    pub fn from_switch(s: &ChainTableau, t: &ChainTableau) -> Result<Self, Error> {
        if s.outer() != t.inner() {
            return Err(Error::Mismatch {
                msg: "second chain must start where the first ends".to_string(),
            });
        }
        let (m, n) = (s.size(), t.size());
        let mut slots: BTreeMap<Cell, Slot> = BTreeMap::new();
        for i in 0..m {
            slots.insert(s.cell_at(i), Slot::Red(i));
        }
        for j in 0..n {
            slots.insert(t.cell_at(j), Slot::Blue(j));
        }
        // configs[i] = slot positions once steps ≥ i have been switched.
        let mut configs: Vec<BTreeMap<Cell, Slot>> = vec![BTreeMap::new(); m + 1];
        configs[m] = slots.clone();
        for i in (0..m).rev() {
            let mut hole = s.cell_at(i);
            slots.remove(&hole);
            loop {
                let right = Cell::new(hole.row, hole.col + 1);
                let below = Cell::new(hole.row + 1, hole.col);
                let blue = |c: &Cell| match slots.get(c) {
                    Some(Slot::Blue(l)) => Some(*l),
                    _ => None,
                };
                let source = match (blue(&right), blue(&below)) {
                    (None, None) => break,
                    (Some(_), None) => right,
                    (None, Some(_)) => below,
                    (Some(r), Some(b)) => {
                        if b < r {
                            below
                        } else {
                            right
                        }
                    }
                };
                let slot = slots.remove(&source).unwrap();
                slots.insert(hole, slot);
                hole = source;
            }
            slots.insert(hole, Slot::Red(i));
            configs[i] = slots.clone();
        }
        let alpha = s.inner();
        let mut grid = Vec::with_capacity(m + 1);
        for (i, config) in configs.iter().enumerate() {
            let mut row = Vec::with_capacity(n + 1);
            for j in 0..=n {
                let extra: Vec<Cell> = config
                    .iter()
                    .filter_map(|(cell, slot)| match slot {
                        Slot::Red(l) if *l < i => Some(*cell),
                        Slot::Blue(l) if *l < j => Some(*cell),
                        _ => None,
                    })
                    .collect();
                row.push(young_diagram_of(alpha, &extra).ok_or(Error::Mismatch {
                    msg: "switching configuration is not left-justified".to_string(),
                })?);
            }
            grid.push(row);
        }
        SwitchingFamily::new(grid)
    }

    pub fn grid(&self) -> &[Vec<Partition>] {
        &self.grid
    }
}

/// The cells of `larger` that are not cells of `smaller`.
fn added_cells(smaller: &Partition, larger: &Partition) -> Vec<Cell> {
    let mut cells = Vec::new();
    for i in 0..larger.len() {
        for j in smaller.part(i)..larger.part(i) {
            cells.push(Cell::new(i, j));
        }
    }
    cells
}

/// The partition whose diagram is `base`'s plus `extra`, if that union is
/// a left-justified diagram.
fn young_diagram_of(base: &Partition, extra: &[Cell]) -> Option<Partition> {
    let rows = extra
        .iter()
        .map(|c| c.row + 1)
        .max()
        .unwrap_or(0)
        .max(base.len());
    let mut occupied: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); rows];
    for (i, set) in occupied.iter_mut().enumerate() {
        set.extend(0..base.part(i));
    }
    for c in extra {
        if !occupied[c.row].insert(c.col) {
            return None;
        }
    }
    let mut parts = Vec::with_capacity(rows);
    for set in &occupied {
        let len = set.len();
        if set.iter().next_back().is_some_and(|&max| max + 1 != len) {
            return None;
        }
        parts.push(len);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return None;
    }
    Some(Partition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableaux::{canonical, enumerate_standard, Weight};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> SkewTableau {
        s.parse().unwrap()
    }

    fn chain(label: &str) -> ChainTableau {
        ChainTableau::from_label_tableau(&t(label)).unwrap()
    }

    #[test]
    fn inward_slide_examples() {
        let before = t("2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5");
        let after = t("1:0,0,1,1|1:1,2,3,3|0:0,2,4,5|0:1,4|0:3,5");
        assert_eq!(
            inward_slide(&before, Cell::new(0, 1)).unwrap(),
            (after, Cell::new(3, 2))
        );
        assert_eq!(
            inward_slide(&canonical(&p("[2,1]")), Cell::new(0, 0)),
            Err(Error::InvalidCell {
                cell: Cell::new(0, 0)
            })
        );
        assert_eq!(
            inward_slide(&t("1:1|0:0"), Cell::new(0, 0)).unwrap(),
            (t("0:0,1"), Cell::new(1, 0))
        );
        // Tie: equal right/below entries — the below entry moves.
        let tie = t("1:0|0:0,1");
        let (slid, end) = inward_slide(&tie, Cell::new(0, 0)).unwrap();
        assert_eq!(slid, t("0:0,0|0:1"));
        assert_eq!(end, Cell::new(1, 1));
    }

    #[test]
    fn outward_inverts_inward() {
        let before = t("2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5");
        let (after, end) = inward_slide(&before, Cell::new(0, 1)).unwrap();
        assert_eq!(
            outward_slide(&after, end).unwrap(),
            (before.clone(), Cell::new(0, 1))
        );
        let (back, vac) = outward_slide(&t("0:0,1"), Cell::new(1, 0)).unwrap();
        assert_eq!(back, t("1:1|0:0"));
        assert_eq!(vac, Cell::new(0, 0));
        assert_eq!(
            outward_slide(&before, Cell::new(0, 0)),
            Err(Error::InvalidCell {
                cell: Cell::new(0, 0)
            })
        );
        // Outward then inward into the returned cell is the identity.
        let (out, vac) = outward_slide(&before, Cell::new(5, 0)).unwrap();
        assert_eq!(inward_slide(&out, vac).unwrap(), (before, Cell::new(5, 0)));
    }

    #[test]
    fn rectify_examples() {
        let t_bar = t("6:0,1,2|4:0,1,1,3|4:2,2|2:1,2,4|1:3,3|0:3,4");
        assert_eq!(
            rectify(&t_bar).0,
            t("0:0,0,1,1,2|0:1,1,2,2,3|0:2,3,3,4|0:3|0:4")
        );
        let companion_example = t("3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5");
        assert_eq!(
            rectify(&companion_example).0,
            t("0:0,0,0,1,1|0:1,1,2,3,3|0:2,4,4,5|0:3|0:5")
        );
        let fixed = canonical(&p("[3,1]"));
        let (r, trace) = rectify(&fixed);
        assert_eq!(r, fixed);
        assert!(trace.steps.is_empty());
    }

    #[test]
    fn rectify_is_policy_independent() {
        let tab = t("3:0,1|1:0,1,1,3|0:0,2,2,3|0:1,4,4,5|0:3,5");
        let (bottom, _) = rectify_with(&tab, |corners| corners.len() - 1);
        assert_eq!(rectify(&tab).0, bottom);
    }

    #[test]
    fn switch_chain_example() {
        let s = chain("0:0,1|0:2");
        let tt = chain("2:1|1:2|0:0");
        let (t_prime, s_prime) = switch_chains(&s, &tt).unwrap();
        assert_eq!(t_prime, chain("0:0,1|0:2"));
        assert_eq!(s_prime, chain("2:1|1:0|0:2"));
        // Switching is involutive.
        assert_eq!(switch_chains(&t_prime, &s_prime).unwrap(), (s, tt));
    }

    #[test]
    fn switch_trivial_chains() {
        let tt = chain("2:1|1:2|0:0");
        let empty_s = ChainTableau::trivial(tt.inner().clone());
        assert_eq!(
            switch_chains(&empty_s, &tt).unwrap(),
            (tt.clone(), ChainTableau::trivial(tt.outer().clone()))
        );
        let empty_t = ChainTableau::trivial(tt.outer().clone());
        assert_eq!(
            switch_chains(&tt, &empty_t).unwrap(),
            (ChainTableau::trivial(tt.inner().clone()), tt.clone())
        );
        let s = chain("0:0|0:1");
        let u = chain("1:0|1:1");
        assert!(switch_chains(&s, &s).is_err());
        let _ = switch_chains(&s, &u).unwrap();
    }

    #[test]
    fn switch_semistandard_examples() {
        let s = t("0:0,0");
        let u = t("2:0|0:0,1");
        let (t_prime, s_prime) = switch(&s, &u).unwrap();
        assert_eq!(t_prime, t("0:0,0|0:1"));
        assert_eq!(s_prime, t("2:0|1:0"));
        // Weights are preserved and switching back restores the pair.
        assert_eq!(t_prime.weight(), u.weight());
        assert_eq!(s_prime.weight(), s.weight());
        assert_eq!(switch(&t_prime, &s_prime).unwrap(), (s, u));
        // Empty partner.
        let v = t("0:0|0:1");
        assert_eq!(
            switch(&SkewTableau::empty(), &v).unwrap(),
            (v.clone(), "1:|1:".parse().unwrap())
        );
    }

    #[test]
    fn concat_examples() {
        let a = ChainTableau::new(vec![p("[]"), p("[1]")]).unwrap();
        let b = ChainTableau::new(vec![p("[1]"), p("[1,1]")]).unwrap();
        let joined = concat(&a, &b).unwrap();
        assert_eq!(
            joined,
            ChainTableau::new(vec![p("[]"), p("[1]"), p("[1,1]")]).unwrap()
        );
        assert_eq!(
            concat(&a, &ChainTableau::trivial(p("[1]"))).unwrap(),
            a
        );
        assert!(concat(&b, &a).is_err());
    }

    #[test]
    fn dual_equivalence_examples() {
        // All chains of a partition shape are dual equivalent.
        let chains: Vec<ChainTableau> =
            enumerate_standard(&"[2,2]".parse().unwrap()).collect();
        for a in &chains {
            for b in &chains {
                assert!(dual_equivalent_chains(a, b).unwrap());
            }
        }
        // The two chains of shape (2,1)/(1) are not.
        let skew: Vec<ChainTableau> =
            enumerate_standard(&"[2,1]/[1]".parse().unwrap()).collect();
        assert_eq!(skew.len(), 2);
        assert!(!dual_equivalent_chains(&skew[0], &skew[1]).unwrap());
        // The two fillings of (2,2)/(1), with reading words acb and bca, are.
        let pair: Vec<ChainTableau> =
            enumerate_standard(&"[2,2]/[1]".parse().unwrap()).collect();
        assert_eq!(pair.len(), 2);
        assert!(dual_equivalent_chains(&pair[0], &pair[1]).unwrap());
        assert!(dual_equivalent(&t("0:0"), &t("0:0|0:1")).is_err());
    }

    #[test]
    fn phi_standard_example() {
        let l = t("4:2,7,11|3:5,9|1:0,1,10|1:3,12|0:4,6|0:8");
        let c = t("0:0,1,2,7,11|0:3,5,9|0:4,6,10|0:8,12");
        assert_eq!(rectify(&l).0, c);
        let p_tab = t("0:0,2,4,5,9|0:1,3,7|0:6,10,12|0:8,11");
        let result = phi(&l, &p_tab).unwrap();
        assert_eq!(result, t("4:2,5,9|3:4,7|1:0,3,10|1:1,12|0:6,11|0:8"));
        assert_eq!(rectify(&result).0, p_tab);
        assert!(dual_equivalent(&result, &l).unwrap());
        // Transporting the rectification itself returns the input.
        assert_eq!(phi(&l, &c).unwrap(), l);
        assert!(phi(&l, &t("0:0")).is_err());
    }

    #[test]
    fn diamond_examples() {
        let at = ChainTableau::trivial(p("[2,1]"));
        assert_eq!(
            diamond_tableau(&at, 2, 3).unwrap(),
            ChainTableau::trivial(p("[2,1]"))
        );
        let two = ChainTableau::new(vec![p("[]"), p("[1]"), p("[1,1]")]).unwrap();
        let d = diamond_tableau(&two, 2, 2).unwrap();
        assert_eq!(
            d,
            ChainTableau::new(vec![p("[1,1]"), p("[2,1]"), p("[2,2]")]).unwrap()
        );
        assert_eq!(diamond_tableau(&d, 2, 2).unwrap(), two);
        assert!(diamond_tableau(&two, 1, 5).is_err());
    }

    #[test]
    fn diamond_reverses_switching() {
        let s = chain("0:0,1|0:2");
        let tt = chain("2:1|1:2|0:0");
        let (t_prime, s_prime) = switch_chains(&s, &tt).unwrap();
        let (rows, cols) = (3, 3);
        let swapped = switch_chains(
            &diamond_tableau(&tt, rows, cols).unwrap(),
            &diamond_tableau(&s, rows, cols).unwrap(),
        )
        .unwrap();
        assert_eq!(swapped.0, diamond_tableau(&s_prime, rows, cols).unwrap());
        assert_eq!(swapped.1, diamond_tableau(&t_prime, rows, cols).unwrap());
    }

    #[test]
    fn switching_family_example() {
        let s = chain("0:0,1|0:2");
        let tt = chain("2:1|1:2|0:0");
        let family = SwitchingFamily::from_switch(&s, &tt).unwrap();
        let grid = family.grid();
        assert_eq!(grid.len(), s.size() + 1);
        assert_eq!(grid[0].len(), tt.size() + 1);
        // Borders: column 0 is S, last row is T, row 0 is T′, last column is S′.
        let (t_prime, s_prime) = switch_chains(&s, &tt).unwrap();
        let col0: Vec<Partition> = grid.iter().map(|r| r[0].clone()).collect();
        assert_eq!(col0, s.members());
        assert_eq!(grid[s.size()], tt.members());
        assert_eq!(grid[0], t_prime.members());
        let coln: Vec<Partition> = grid.iter().map(|r| r[tt.size()].clone()).collect();
        assert_eq!(coln, s_prime.members());
        // A degenerate grid is rejected: (2,1)/(1) is not a domino, so the
        // two mid corners may not coincide.
        assert!(SwitchingFamily::new(vec![
            vec![p("[1]"), p("[2]")],
            vec![p("[2]"), p("[2,1]")],
        ])
        .is_err());
        assert!(SwitchingFamily::new(vec![
            vec![p("[1]"), p("[2]")],
            vec![p("[1,1]"), p("[2,1]")],
        ])
        .is_ok());
        // The same square is fine when the added pair forms a domino.
        assert!(SwitchingFamily::new(vec![
            vec![p("[]"), p("[1]")],
            vec![p("[1]"), p("[1,1]")],
        ])
        .is_ok());
    }

    #[test]
    fn slides_commute_with_standardisation() {
        let tab = t("2:0,1,1|1:0,1,3,3|0:0,2,2,5|0:1,4,4|0:3,5");
        let (slid, _) = inward_slide(&tab, Cell::new(0, 1)).unwrap();
        let label = standardise(&tab).label_tableau();
        let (label_slid, _) = inward_slide(&label, Cell::new(0, 1)).unwrap();
        assert_eq!(standardise(&slid), standardise(&label_slid));
        // Weights survive slides.
        assert_eq!(slid.weight(), tab.weight());
    }

    #[test]
    fn switch_standardisation_consistency() {
        let s = t("0:0,0");
        let u = t("2:0|0:0,1");
        let (t_prime, s_prime) = switch(&s, &u).unwrap();
        let (ct, cs) = switch_chains(&standardise(&s), &standardise(&u)).unwrap();
        assert_eq!(standardise(&t_prime), ct);
        assert_eq!(standardise(&s_prime), cs);
        let _ = Weight::new(vec![0]);
    }
}
