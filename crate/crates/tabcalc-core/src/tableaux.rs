//! Skew semistandard tableaux, standard tableaux as Young-lattice chains,
//! reading words, standardisation, companion tableaux, dominance tests,
//! enumeration (plain, Littlewood-Richardson, and standard), and the
//! Bender-Knuth involution.
//!
//! Text format for tableaux (bit-exact): rows separated by `|`, each row
//! `o:e1,e2,...` where `o` is the number of leading skipped columns and the
//! `e`'s are the entries; a row without cells prints as `o:`. Example:
//! `4:0,0|2:0,1,1|1:0,1,2,2|0:0,1,3|0:2,4`.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::shapes::{Cell, Partition, SkewShape};
use crate::textio::Cursor;

/// A weight vector: component `k` counts occurrences of the letter `k`.
/// Trailing zeros are permitted and ignored by equality.
#[derive(Debug, Clone, Default)]
pub struct Weight {
    counts: Vec<usize>,
}

impl Weight {
    pub fn new(counts: impl Into<Vec<usize>>) -> Self {
        Weight {
            counts: counts.into(),
        }
    }

    /// Count of the letter `k`; 0 past the stored components.
    pub fn get(&self, k: usize) -> usize {
        self.counts.get(k).copied().unwrap_or(0)
    }

    /// The stored components, including any trailing zeros.
    pub fn as_slice(&self) -> &[usize] {
        &self.counts
    }

    /// Total number of letters counted.
    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Reinterprets the weight as a partition if it is weakly decreasing.
    pub fn to_partition(&self) -> Option<Partition> {
        Partition::from_weight(&self.counts)
    }

    fn trimmed(&self) -> &[usize] {
        let mut len = self.counts.len();
        while len > 0 && self.counts[len - 1] == 0 {
            len -= 1;
        }
        &self.counts[..len]
    }
}

impl PartialEq for Weight {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for Weight {}

impl From<&Partition> for Weight {
    fn from(p: &Partition) -> Self {
        Weight::new(p.parts().to_vec())
    }
}

/// The two reading orders. Both are valid in the sense that a cell is
/// always read before every cell weakly below and weakly left of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadingOrder {
    /// Rows top to bottom, each row right to left.
    Semitic,
    /// Columns right to left, each column top to bottom.
    Kanji,
}

/// A skew semistandard tableau: a skew shape together with one letter per
/// cell, weakly increasing along rows and strictly increasing down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewTableau {
    shape: SkewShape,
    /// `rows[i]` holds the entries of row `i`, columns `inner[i]..outer[i]`.
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    /// Validates semistandardness; `rows[i]` must have exactly
    /// `outer[i] - inner[i]` entries.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self, Error> {
        if rows.len() != shape.rows()
            || rows
                .iter()
                .enumerate()
                .any(|(i, r)| r.len() != shape.row_range(i).len())
        {
            return Err(Error::Mismatch {
                msg: "entry rows do not match the shape".to_string(),
            });
        }
        let tab = SkewTableau { shape, rows };
        match tab.first_violation() {
            Some(cell) => Err(Error::NotSemistandard { cell }),
            None => Ok(tab),
        }
    }

    /// Internal constructor for results that are semistandard by
    /// construction; still checked when debug assertions are on.
    pub(crate) fn from_parts_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        let tab = SkewTableau { shape, rows };
        debug_assert!(tab.first_violation().is_none(), "internal: not semistandard");
        tab
    }

    /// First cell (row-major) whose entry breaks weak row increase or
    /// strict column increase, if any.
    fn first_violation(&self) -> Option<Cell> {
        for i in 0..self.shape.rows() {
            for j in self.shape.row_range(i) {
                let e = self.entry(Cell::new(i, j)).unwrap();
                if j + 1 < self.shape.outer().part(i) {
                    if let Some(right) = self.entry(Cell::new(i, j + 1)) {
                        if e > right {
                            return Some(Cell::new(i, j + 1));
                        }
                    }
                }
                if i > 0 {
                    if let Some(above) = self.entry(Cell::new(i - 1, j)) {
                        if above >= e {
                            return Some(Cell::new(i, j));
                        }
                    }
                }
            }
        }
        None
    }

    /// The empty tableau.
    pub fn empty() -> Self {
        SkewTableau {
            shape: SkewShape::from(Partition::zero()),
            rows: Vec::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    /// The entry at `cell`, if the cell belongs to the diagram.
    pub fn entry(&self, cell: Cell) -> Option<usize> {
        if self.shape.contains_cell(cell) {
            Some(self.rows[cell.row][cell.col - self.shape.inner().part(cell.row)])
        } else {
            None
        }
    }

    /// Entries of row `i`, leftmost cell first.
    pub fn row_entries(&self, i: usize) -> &[usize] {
        &self.rows[i]
    }

    /// Largest letter used, if the tableau is non-empty.
    pub fn max_letter(&self) -> Option<usize> {
        self.rows.iter().flatten().copied().max()
    }

    /// Copy with the entry at `cell` replaced; checked in debug builds.
    pub(crate) fn with_entry(&self, cell: Cell, letter: usize) -> Self {
        let mut rows = self.rows.clone();
        rows[cell.row][cell.col - self.shape.inner().part(cell.row)] = letter;
        SkewTableau::from_parts_unchecked(self.shape.clone(), rows)
    }

    pub(crate) fn into_parts(self) -> (SkewShape, Vec<Vec<usize>>) {
        (self.shape, self.rows)
    }

    /// The number of occurrences of each letter.
    pub fn weight(&self) -> Weight {
        let mut counts = Vec::new();
        for e in self.rows.iter().flatten() {
            if *e >= counts.len() {
                counts.resize(*e + 1, 0);
            }
            counts[*e] += 1;
        }
        Weight::new(counts)
    }

    /// The reading word of the tableau in the requested order.
    pub fn reading_word(&self, order: ReadingOrder) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.size());
        match order {
            ReadingOrder::Semitic => {
                for i in 0..self.shape.rows() {
                    for j in self.shape.row_range(i).rev() {
                        word.push(self.entry(Cell::new(i, j)).unwrap());
                    }
                }
            }
            ReadingOrder::Kanji => {
                for j in (0..self.shape.outer().part(0)).rev() {
                    for i in 0..self.shape.rows() {
                        if let Some(e) = self.entry(Cell::new(i, j)) {
                            word.push(e);
                        }
                    }
                }
            }
        }
        word
    }

    /// The cells of the diagram in the given reading order.
    pub fn reading_cells(&self, order: ReadingOrder) -> Vec<Cell> {
        let mut cells = Vec::with_capacity(self.size());
        match order {
            ReadingOrder::Semitic => {
                for i in 0..self.shape.rows() {
                    for j in self.shape.row_range(i).rev() {
                        cells.push(Cell::new(i, j));
                    }
                }
            }
            ReadingOrder::Kanji => {
                for j in (0..self.shape.outer().part(0)).rev() {
                    for i in 0..self.shape.rows() {
                        let cell = Cell::new(i, j);
                        if self.shape.contains_cell(cell) {
                            cells.push(cell);
                        }
                    }
                }
            }
        }
        cells
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.shape.rows() {
            if i > 0 {
                write!(f, "|")?;
            }
            write!(f, "{}:", self.shape.inner().part(i))?;
            for (k, e) in self.rows[i].iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        if s.is_empty() {
            return Ok(SkewTableau::empty());
        }
        let mut cur = Cursor::new(s);
        let mut offsets: Vec<(usize, usize)> = Vec::new(); // (offset, its byte pos)
        let mut rows: Vec<Vec<usize>> = Vec::new();
        let mut entry_pos: Vec<Vec<usize>> = Vec::new();
        loop {
            let opos = cur.pos();
            let offset = cur.number()?;
            cur.expect(':')?;
            offsets.push((offset, opos));
            let mut row = Vec::new();
            let mut pos_row = Vec::new();
            if matches!(cur.peek(), Some(c) if c.is_ascii_digit()) {
                loop {
                    pos_row.push(cur.pos());
                    row.push(cur.number()?);
                    if !cur.eat(',') {
                        break;
                    }
                }
            }
            rows.push(row);
            entry_pos.push(pos_row);
            if !cur.eat('|') {
                break;
            }
        }
        cur.finish()?;

        let inner_parts: Vec<usize> = offsets.iter().map(|&(o, _)| o).collect();
        let outer_parts: Vec<usize> = offsets
            .iter()
            .zip(&rows)
            .map(|(&(o, _), r)| o + r.len())
            .collect();
        for (i, w) in inner_parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Parse {
                    pos: offsets[i + 1].1,
                    msg: "row offsets must weakly decrease".to_string(),
                });
            }
        }
        for (i, w) in outer_parts.windows(2).enumerate() {
            if w[0] < w[1] {
                return Err(Error::Parse {
                    pos: offsets[i + 1].1,
                    msg: "row ends must weakly decrease".to_string(),
                });
            }
        }
        let shape = SkewShape::new(Partition::new(outer_parts), Partition::new(inner_parts))
            .map_err(|_| Error::Parse {
                pos: 0,
                msg: "rows do not form a skew shape".to_string(),
            })?;
        rows.truncate(shape.rows());
        match SkewTableau::new(shape, rows) {
            Ok(t) => Ok(t),
            Err(Error::NotSemistandard { cell }) => {
                let pos = entry_pos
                    .get(cell.row)
                    .and_then(|r| {
                        let offset = offsets[cell.row].0;
                        r.get(cell.col - offset)
                    })
                    .copied()
                    .unwrap_or(0);
                Err(Error::Parse {
                    pos,
                    msg: alloc::format!(
                        "not semistandard at cell ({}, {})",
                        cell.row, cell.col
                    ),
                })
            }
            Err(e) => Err(e),
        }
    }
}

/// The canonical tableau of shape `λ`: row `i` filled with the letter `i`.
pub fn canonical(lambda: &Partition) -> SkewTableau {
    let rows = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &len)| vec![i; len])
        .collect();
    SkewTableau::from_parts_unchecked(SkewShape::from(lambda.clone()), rows)
}

/// A saturated chain in the Young lattice: each member is a partition and
/// consecutive members differ by exactly one added cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainTableau {
    chain: Vec<Partition>,
}

impl ChainTableau {
    /// Validates saturation; the chain must be non-empty.
    pub fn new(chain: Vec<Partition>) -> Result<Self, Error> {
        if chain.is_empty() {
            return Err(Error::NotChain { index: 0 });
        }
        for t in 0..chain.len() - 1 {
            if step_cell(&chain[t], &chain[t + 1]).is_none() {
                return Err(Error::NotChain { index: t });
            }
        }
        Ok(ChainTableau { chain })
    }

    /// The trivial chain sitting at a single partition.
    pub fn trivial(at: Partition) -> Self {
        ChainTableau { chain: vec![at] }
    }

    pub fn members(&self) -> &[Partition] {
        &self.chain
    }

    /// Number of steps (cells added).
    pub fn size(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn inner(&self) -> &Partition {
        &self.chain[0]
    }

    pub fn outer(&self) -> &Partition {
        self.chain.last().unwrap()
    }

    pub fn shape(&self) -> SkewShape {
        SkewShape::new(self.outer().clone(), self.inner().clone())
            .expect("chain ends are nested")
    }

    /// The cell added at step `t` (between members `t` and `t+1`).
    pub fn cell_at(&self, t: usize) -> Cell {
        step_cell(&self.chain[t], &self.chain[t + 1]).expect("validated chain")
    }

    /// The label tableau: the cell added at step `t` is filled with `t`.
    pub fn label_tableau(&self) -> SkewTableau {
        let shape = self.shape();
        let mut rows: Vec<Vec<usize>> = (0..shape.rows())
            .map(|i| vec![0; shape.row_range(i).len()])
            .collect();
        for t in 0..self.size() {
            let cell = self.cell_at(t);
            rows[cell.row][cell.col - shape.inner().part(cell.row)] = t;
        }
        SkewTableau::from_parts_unchecked(shape, rows)
    }

    /// Reads a chain back from a label tableau (entries must be exactly
    /// `0..size`, each used once).
    pub fn from_label_tableau(tab: &SkewTableau) -> Result<Self, Error> {
        let m = tab.size();
        let mut cells = vec![None; m];
        for cell in tab.shape().cells() {
            let e = tab.entry(cell).unwrap();
            if e >= m || cells[e].is_some() {
                return Err(Error::Incompatible {
                    msg: alloc::format!("labels must be 0..{m}, each once"),
                });
            }
            cells[e] = Some(cell);
        }
        let mut chain = Vec::with_capacity(m + 1);
        let mut current = tab.shape().inner().clone();
        chain.push(current.clone());
        for cell in cells {
            let cell = cell.unwrap();
            current = current
                .with_cell_added(cell.row)
                .filter(|p| p.part(cell.row) == cell.col + 1)
                .ok_or(Error::NotChain { index: chain.len() - 1 })?;
            chain.push(current.clone());
        }
        Ok(ChainTableau { chain })
    }

    /// Appends `other`, whose inner partition must equal this outer one.
    pub fn concat(&self, other: &ChainTableau) -> Result<ChainTableau, Error> {
        if self.outer() != other.inner() {
            return Err(Error::Mismatch {
                msg: "chain ends do not meet".to_string(),
            });
        }
        let mut chain = self.chain.clone();
        chain.extend_from_slice(&other.chain[1..]);
        Ok(ChainTableau { chain })
    }
}

/// The unique cell by which `next` extends `prev`, if it is exactly one.
fn step_cell(prev: &Partition, next: &Partition) -> Option<Cell> {
    if next.size() != prev.size() + 1 || !next.contains(prev) {
        return None;
    }
    for i in 0..next.len() {
        if next.part(i) == prev.part(i) + 1 {
            return Some(Cell::new(i, prev.part(i)));
        }
    }
    None
}

/// The standardisation of `T`: cells ordered by entry, ties by increasing
/// column, produce a saturated chain from the inner to the outer shape.
pub fn standardise(tab: &SkewTableau) -> ChainTableau {
    let mut cells = tab.shape().cells();
    cells.sort_by_key(|c| (tab.entry(*c).unwrap(), c.col));
    let mut chain = Vec::with_capacity(cells.len() + 1);
    let mut current = tab.shape().inner().clone();
    chain.push(current.clone());
    for cell in cells {
        current = current
            .with_cell_added(cell.row)
            .expect("standardisation order adds cells along a chain");
        debug_assert_eq!(current.part(cell.row), cell.col + 1);
        chain.push(current.clone());
    }
    ChainTableau { chain }
}

/// The unique semistandard tableau with standardisation `chain` and weight
/// `alpha`, when one exists: chain steps in the `k`-th weight block receive
/// the letter `k`.
pub fn destandardise(chain: &ChainTableau, alpha: &Weight) -> Result<SkewTableau, Error> {
    if chain.size() != alpha.total() {
        return Err(Error::Mismatch {
            msg: alloc::format!(
                "chain has {} steps but the weight counts {} letters",
                chain.size(),
                alpha.total()
            ),
        });
    }
    let shape = chain.shape();
    let mut rows: Vec<Vec<usize>> = (0..shape.rows())
        .map(|i| vec![0; shape.row_range(i).len()])
        .collect();
    let mut letter = 0usize;
    let mut used = 0usize;
    for t in 0..chain.size() {
        while used == alpha.get(letter) {
            letter += 1;
            used = 0;
        }
        used += 1;
        let cell = chain.cell_at(t);
        rows[cell.row][cell.col - shape.inner().part(cell.row)] = t; // placeholder
        rows[cell.row][cell.col - shape.inner().part(cell.row)] = letter;
    }
    let tab = SkewTableau::new(shape, rows).map_err(|e| Error::Incompatible {
        msg: alloc::format!("no tableau with this chain and weight: {e}"),
    })?;
    if &standardise(&tab) != chain {
        return Err(Error::Incompatible {
            msg: "weight blocks break the standardisation tie-break".to_string(),
        });
    }
    Ok(tab)
}

/// First cell (in the Semitic traversal) at which the running weight,
/// seeded with `kappa`, leaves the partition cone; `None` if dominant.
pub fn first_dominance_violation(tab: &SkewTableau, kappa: &Partition) -> Option<Cell> {
    let mut alpha: Vec<usize> = kappa.parts().to_vec();
    for cell in tab.reading_cells(ReadingOrder::Semitic) {
        let e = tab.entry(cell).unwrap();
        if e >= alpha.len() {
            alpha.resize(e + 1, 0);
        }
        alpha[e] += 1;
        if e > 0 && alpha[e] > alpha[e - 1] {
            return Some(cell);
        }
    }
    None
}

/// Is `T` `(κ+wt T)/κ`-dominant? Traverses rows top to bottom, right to
/// left within each row, incrementing the weight and requiring it to stay
/// a partition throughout.
pub fn is_dominant_for(tab: &SkewTableau, kappa: &Partition) -> bool {
    first_dominance_violation(tab, kappa).is_none()
}

/// The companion tableau of `T` over `κ`: the unique tableau of shape
/// `(κ + wt T)/κ` whose row `l` holds, for each `k`, as many copies of `k`
/// as row `k` of `T` holds copies of `l`.
pub fn companion(tab: &SkewTableau, kappa: &Partition) -> Result<SkewTableau, Error> {
    if let Some(cell) = first_dominance_violation(tab, kappa) {
        return Err(Error::NotDominant { cell });
    }
    let wt = tab.weight();
    let letters = wt.as_slice().len();
    let outer: Vec<usize> = (0..letters.max(kappa.len()))
        .map(|l| kappa.part(l) + wt.get(l))
        .collect();
    let outer = Partition::new(outer);
    let shape = SkewShape::new(outer, kappa.clone()).expect("dominant weight nests over κ");
    let mut rows = Vec::with_capacity(shape.rows());
    for l in 0..shape.rows() {
        let mut row = Vec::with_capacity(shape.row_range(l).len());
        for k in 0..tab.shape().rows() {
            let count = tab.row_entries(k).iter().filter(|&&e| e == l).count();
            row.extend(core::iter::repeat_n(k, count));
        }
        rows.push(row);
    }
    Ok(SkewTableau::new(shape, rows).expect("companion of a dominant tableau is semistandard"))
}

/// The Bender-Knuth involution at `k`: swaps the multiplicities of `k` and
/// `k+1` by rewriting the free (column-unpaired) run in every row.
pub fn bender_knuth(tab: &SkewTableau, k: usize) -> SkewTableau {
    let mut rows: Vec<Vec<usize>> = (0..tab.shape().rows())
        .map(|i| tab.row_entries(i).to_vec())
        .collect();
    let shape = tab.shape();
    for i in 0..shape.rows() {
        let mut free = Vec::new(); // in-row indices of free k's and (k+1)'s
        let mut s = 0usize; // free (k+1)'s
        for j in shape.row_range(i) {
            let e = tab.entry(Cell::new(i, j)).unwrap();
            if e == k {
                let below = tab.entry(Cell::new(i + 1, j));
                if below != Some(k + 1) {
                    free.push(j - shape.inner().part(i));
                }
            } else if e == k + 1 {
                let above = if i == 0 { None } else { tab.entry(Cell::new(i - 1, j)) };
                if above != Some(k) {
                    free.push(j - shape.inner().part(i));
                    s += 1;
                }
            }
        }
        debug_assert!(free.windows(2).all(|w| w[1] == w[0] + 1), "free run is contiguous");
        for (t, &idx) in free.iter().enumerate() {
            rows[i][idx] = if t < s { k } else { k + 1 };
        }
    }
    SkewTableau::new(shape.clone(), rows).expect("Bender-Knuth preserves semistandardness")
}

/// Streams every semistandard filling of `shape` with letters `< n`, in
/// lexicographic order of the Semitic reading word.
pub fn enumerate_tableaux(shape: &SkewShape, n: usize) -> TableauIter {
    TableauIter::new(shape.clone(), n)
}

/// Streams the 0-dominant (Littlewood-Richardson) fillings of `shape`, in
/// lexicographic order of the Semitic reading word.
///
/// With `weight` given, exactly the fillings of that weight; otherwise all
/// of them. With `n` given, only letters `< n` (cells are pruned by the
/// column-completion bound `letter + cells below in the column ≤ n-1`).
pub fn enumerate_lr(
    shape: &SkewShape,
    weight: Option<&Partition>,
    n: Option<usize>,
) -> LrTableauIter {
    LrTableauIter::new(shape.clone(), weight.cloned(), n)
}

/// Streams every saturated chain from the inner to the outer shape.
pub fn enumerate_standard(shape: &SkewShape) -> StandardChainIter {
    StandardChainIter::new(shape.clone())
}

/// Cells of `shape` in Semitic order, with the per-cell data the searches
/// need: index of the right neighbour and of the cell above (as positions
/// in the Semitic sequence), and the number of diagram cells strictly
/// below in the same column.
struct SearchCells {
    shape: SkewShape,
    cells: Vec<Cell>,
    right: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    below_count: Vec<usize>,
}

impl SearchCells {
    fn new(shape: SkewShape) -> Self {
        let mut cells = Vec::with_capacity(shape.size());
        for i in 0..shape.rows() {
            for j in shape.row_range(i).rev() {
                cells.push(Cell::new(i, j));
            }
        }
        let index_of = |cell: Cell| cells.iter().position(|&c| c == cell);
        let mut right = Vec::with_capacity(cells.len());
        let mut above = Vec::with_capacity(cells.len());
        let mut below_count = Vec::with_capacity(cells.len());
        for &cell in &cells {
            right.push(index_of(Cell::new(cell.row, cell.col + 1)));
            above.push(if cell.row == 0 {
                None
            } else {
                index_of(Cell::new(cell.row - 1, cell.col))
            });
            below_count.push(
                (cell.row + 1..shape.rows())
                    .filter(|&i| shape.row_range(i).contains(&cell.col))
                    .count(),
            );
        }
        SearchCells {
            shape,
            cells,
            right,
            above,
            below_count,
        }
    }

    fn build(&self, letters: &[usize]) -> SkewTableau {
        let mut rows: Vec<Vec<usize>> = (0..self.shape.rows())
            .map(|i| vec![0; self.shape.row_range(i).len()])
            .collect();
        for (idx, &cell) in self.cells.iter().enumerate() {
            rows[cell.row][cell.col - self.shape.inner().part(cell.row)] = letters[idx];
        }
        SkewTableau::from_parts_unchecked(self.shape.clone(), rows)
    }
}

/// Iterator over all semistandard fillings; see [`enumerate_tableaux`].
pub struct TableauIter {
    cells: SearchCells,
    n: usize,
    stack: Vec<usize>,
    state: SearchState,
}

enum SearchState {
    Fresh,
    Running,
    Done,
}

impl TableauIter {
    fn new(shape: SkewShape, n: usize) -> Self {
        TableauIter {
            cells: SearchCells::new(shape),
            n,
            stack: Vec::new(),
            state: SearchState::Fresh,
        }
    }

    /// Inclusive candidate bounds for the cell at depth `d`.
    fn bounds(&self, d: usize) -> (usize, usize) {
        let lo = match self.cells.above[d] {
            Some(a) => self.stack[a] + 1,
            None => 0,
        };
        let mut hi = match self.cells.right[d] {
            Some(r) => self.stack[r],
            None => usize::MAX,
        };
        let room = self.n.saturating_sub(1 + self.cells.below_count[d]);
        hi = hi.min(room);
        if self.n == 0 {
            hi = 0; // empty range via lo > hi below when there are cells
        }
        (lo, hi)
    }
}

impl Iterator for TableauIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        let total = self.cells.cells.len();
        let mut resume = match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Running;
                if total == 0 {
                    self.state = SearchState::Done;
                    return if self.n > 0 || self.cells.shape.size() == 0 {
                        Some(self.cells.build(&[]))
                    } else {
                        None
                    };
                }
                0
            }
            SearchState::Running => match self.stack.pop() {
                Some(last) => last + 1,
                None => {
                    self.state = SearchState::Done;
                    return None;
                }
            },
        };
        loop {
            let d = self.stack.len();
            let (lo, hi) = self.bounds(d);
            let candidate = resume.max(lo);
            if self.n > 0 && candidate <= hi {
                self.stack.push(candidate);
                if self.stack.len() == total {
                    return Some(self.cells.build(&self.stack));
                }
                resume = 0;
            } else {
                match self.stack.pop() {
                    Some(last) => resume = last + 1,
                    None => {
                        self.state = SearchState::Done;
                        return None;
                    }
                }
            }
        }
    }
}

/// Iterator over 0-dominant fillings; see [`enumerate_lr`].
pub struct LrTableauIter {
    cells: SearchCells,
    weight: Option<Partition>,
    n: Option<usize>,
    stack: Vec<usize>,
    alpha: Vec<usize>,
    state: SearchState,
    dead_ends: usize,
}

impl LrTableauIter {
    fn new(shape: SkewShape, weight: Option<Partition>, n: Option<usize>) -> Self {
        LrTableauIter {
            cells: SearchCells::new(shape),
            weight,
            n,
            stack: Vec::new(),
            alpha: Vec::new(),
            state: SearchState::Fresh,
            dead_ends: 0,
        }
    }

    /// Number of partial fillings encountered so far that admitted no
    /// candidate letter at all. Stays 0 when `weight` is `None`.
    pub fn dead_ends(&self) -> usize {
        self.dead_ends
    }

    fn is_valid(&self, d: usize, e: usize) -> bool {
        if let Some(a) = self.cells.above[d] {
            if e <= self.stack[a] {
                return false;
            }
        }
        if let Some(r) = self.cells.right[d] {
            if e > self.stack[r] {
                return false;
            }
        }
        // The running weight must stay a partition…
        if e > 0 && self.alpha.get(e - 1).copied().unwrap_or(0) <= self.alpha.get(e).copied().unwrap_or(0)
        {
            return false;
        }
        // …must not overshoot the target weight…
        if let Some(w) = &self.weight {
            if self.alpha.get(e).copied().unwrap_or(0) + 1 > w.part(e) {
                return false;
            }
        }
        // …and the column below the cell must still be completable.
        if let Some(n) = self.n {
            if e + self.cells.below_count[d] + 1 > n {
                return false;
            }
        }
        true
    }

    /// Smallest valid candidate `≥ from` at depth `d`, if any.
    fn first_valid(&self, d: usize, from: usize) -> Option<usize> {
        // Letters never exceed the number of distinct letters used so far
        // (the running weight must stay a partition), so the scan is finite.
        let limit = {
            let mut hi = self.alpha.iter().take_while(|&&c| c > 0).count();
            if let Some(r) = self.cells.right[d] {
                hi = hi.min(self.stack[r]);
            }
            hi
        };
        (from..=limit).find(|&e| self.is_valid(d, e))
    }

    fn push(&mut self, e: usize) {
        self.stack.push(e);
        if e >= self.alpha.len() {
            self.alpha.resize(e + 1, 0);
        }
        self.alpha[e] += 1;
    }

    fn pop(&mut self) -> usize {
        let e = self.stack.pop().unwrap();
        self.alpha[e] -= 1;
        e
    }

    fn weight_reached(&self) -> bool {
        match &self.weight {
            None => true,
            Some(w) => {
                (0..self.alpha.len().max(w.len()))
                    .all(|k| self.alpha.get(k).copied().unwrap_or(0) == w.part(k))
            }
        }
    }
}

impl Iterator for LrTableauIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        let total = self.cells.cells.len();
        let mut resume = match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Running;
                if total == 0 {
                    self.state = SearchState::Done;
                    return if self.weight_reached() {
                        Some(self.cells.build(&[]))
                    } else {
                        None
                    };
                }
                0
            }
            SearchState::Running => self.pop() + 1,
        };
        loop {
            let d = self.stack.len();
            match self.first_valid(d, resume) {
                Some(e) => {
                    self.push(e);
                    if self.stack.len() == total {
                        if self.weight_reached() {
                            return Some(self.cells.build(&self.stack));
                        }
                        resume = self.pop() + 1;
                    } else {
                        resume = 0;
                    }
                }
                None => {
                    if resume == 0 && d < total {
                        // A partial filling with no candidate at all.
                        self.dead_ends += 1;
                    }
                    if self.stack.is_empty() {
                        self.state = SearchState::Done;
                        return None;
                    }
                    resume = self.pop() + 1;
                }
            }
        }
    }
}

/// Iterator over saturated chains; see [`enumerate_standard`].
pub struct StandardChainIter {
    shape: SkewShape,
    chain: Vec<Partition>,
    state: SearchState,
}

impl StandardChainIter {
    fn new(shape: SkewShape) -> Self {
        let chain = vec![shape.inner().clone()];
        StandardChainIter {
            shape,
            chain,
            state: SearchState::Fresh,
        }
    }

    /// Smallest row `≥ from` into which the current partition can grow
    /// while staying inside the outer shape.
    fn next_row(&self, from: usize) -> Option<usize> {
        let current = self.chain.last().unwrap();
        (from..self.shape.outer().len()).find(|&i| {
            current.part(i) < self.shape.outer().part(i)
                && (i == 0 || current.part(i) < current.part(i - 1))
        })
    }

    fn pop_row(&mut self) -> usize {
        let popped = self.chain.pop().unwrap();
        let prev = self.chain.last().unwrap();
        (0..popped.len()).find(|&i| popped.part(i) != prev.part(i)).unwrap()
    }
}

impl Iterator for StandardChainIter {
    type Item = ChainTableau;

    fn next(&mut self) -> Option<ChainTableau> {
        let total = self.shape.size();
        let mut resume = match self.state {
            SearchState::Done => return None,
            SearchState::Fresh => {
                self.state = SearchState::Running;
                if total == 0 {
                    self.state = SearchState::Done;
                    return Some(ChainTableau {
                        chain: self.chain.clone(),
                    });
                }
                0
            }
            SearchState::Running => self.pop_row() + 1,
        };
        loop {
            match self.next_row(resume) {
                Some(i) => {
                    let next = self.chain.last().unwrap().with_cell_added(i).unwrap();
                    self.chain.push(next);
                    if self.chain.len() == total + 1 {
                        return Some(ChainTableau {
                            chain: self.chain.clone(),
                        });
                    }
                    resume = 0;
                }
                None => {
                    if self.chain.len() == 1 {
                        self.state = SearchState::Done;
                        return None;
                    }
                    resume = self.pop_row() + 1;
                }
            }
        }
    }
}
