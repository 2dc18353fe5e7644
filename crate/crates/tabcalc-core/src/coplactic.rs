//! Coplactic (raising/lowering) operators on words and tableaux, dominant
//! normal forms with recorded traces, coplactic-graph exploration,
//! Robinson's bijection and its inverse, the slide/operator
//! correspondence on companion tableaux, operator application bounds, and
//! the grouped monomials describing min-index raising traces.
//!
//! Words are serialized space-separated (`4 0 1 5 …`); trace steps print
//! as `e_i@p` / `f_i@p` where `p` is the letter position at application
//! time.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::Error;
use crate::jdt::{inner_corners, phi, rectify};
use crate::shapes::{Cell, Partition};
use crate::tableaux::{
    companion, first_dominance_violation, is_dominant_for, ReadingOrder, SkewTableau, Weight,
};
use crate::textio::Cursor;

/// How a word relates to the letter pair `(i, i+1)`.
///
/// Dominant: every prefix holds at least as many `i` as `i+1`.
/// Anti-dominant: every suffix holds at least as many `i+1` as `i`.
/// Neutral: both at once; neither: none of the two.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WordClass {
    Dominant,
    AntiDominant,
    Neutral,
    Neither,
}

/// Classifies `w` with respect to the letter pair `(i, i+1)`.
pub fn word_class(w: &[usize], i: usize) -> WordClass {
    let mut run = 0isize;
    let mut dominant = true;
    for &letter in w {
        if letter == i {
            run += 1;
        } else if letter == i + 1 {
            run -= 1;
        }
        if run < 0 {
            dominant = false;
            break;
        }
    }
    let mut run = 0isize;
    let mut anti = true;
    for &letter in w.iter().rev() {
        if letter == i + 1 {
            run += 1;
        } else if letter == i {
            run -= 1;
        }
        if run < 0 {
            anti = false;
            break;
        }
    }
    match (dominant, anti) {
        (true, true) => WordClass::Neutral,
        (true, false) => WordClass::Dominant,
        (false, true) => WordClass::AntiDominant,
        (false, false) => WordClass::Neither,
    }
}

/// The position the raising operator `e_i` acts on: the letter `i+1`
/// immediately before the longest suffix dominant for `i`. `None` when
/// the whole word is dominant for `i`.
pub fn raise_position(w: &[usize], i: usize) -> Option<usize> {
    // m = minimum over prefixes of the running (#i − #(i+1)) count of the
    // suffix starting at p; the suffix is dominant exactly when m == 0.
    let mut m = 0isize;
    let mut best = w.len();
    for p in (0..w.len()).rev() {
        let sigma = match w[p] {
            l if l == i => 1,
            l if l == i + 1 => -1,
            _ => 0,
        };
        m = 0.min(sigma + m);
        if m == 0 {
            best = p;
        }
    }
    if m == 0 {
        return None; // the whole word is dominant for i
    }
    debug_assert_eq!(w[best - 1], i + 1);
    Some(best - 1)
}

/// The raising operator `e_i`: decrements the letter found by
/// [`raise_position`]. `None` exactly when `w` is dominant for `i`.
pub fn raise(w: &[usize], i: usize) -> Option<Vec<usize>> {
    let pos = raise_position(w, i)?;
    let mut out = w.to_vec();
    out[pos] = i;
    Some(out)
}

/// The position the lowering operator `f_i` acts on: the letter `i`
/// immediately after the longest prefix anti-dominant for `i`. `None`
/// when the whole word is anti-dominant for `i`.
pub fn lower_position(w: &[usize], i: usize) -> Option<usize> {
    // k = minimum over suffixes of the running (#(i+1) − #i) count of the
    // prefix ending at q; the prefix is anti-dominant exactly when k == 0.
    let mut k = 0isize;
    let mut best = 0;
    for (q, &letter) in w.iter().enumerate() {
        let tau = match letter {
            l if l == i + 1 => 1,
            l if l == i => -1,
            _ => 0,
        };
        k = 0.min(tau + k);
        if k == 0 {
            best = q + 1;
        }
    }
    if k == 0 {
        return None; // the whole word is anti-dominant for i
    }
    debug_assert_eq!(w[best], i);
    Some(best)
}

/// The lowering operator `f_i`: increments the letter found by
/// [`lower_position`]. `None` exactly when `w` is anti-dominant for `i`.
pub fn lower(w: &[usize], i: usize) -> Option<Vec<usize>> {
    let pos = lower_position(w, i)?;
    let mut out = w.to_vec();
    out[pos] = i + 1;
    Some(out)
}

/// The cell of `tab` at Semitic reading position `pos`.
fn semitic_cell(tab: &SkewTableau, pos: usize) -> Cell {
    tab.reading_cells(ReadingOrder::Semitic)[pos]
}

fn rebuild_checked(tab: &SkewTableau, cell: Cell, letter: usize, what: &str) -> SkewTableau {
    let (shape, rows) = tab.with_entry(cell, letter).into_parts();
    match SkewTableau::new(shape, rows) {
        Ok(t) => t,
        Err(_) => panic!("{what} must preserve semistandardness"),
    }
}

/// Checks that the word operator selects the same cell through both
/// reading orders; any valid order must agree.
fn assert_order_independent(tab: &SkewTableau, cell: Cell, pos: Option<usize>) {
    let kanji = tab.reading_word(ReadingOrder::Kanji);
    let kanji_cell = pos
        .map(|p| tab.reading_cells(ReadingOrder::Kanji)[p])
        .unwrap_or(cell);
    assert_eq!(
        cell, kanji_cell,
        "operator cell must not depend on the reading order"
    );
    let _ = kanji;
}

/// The raising operator on a tableau: `e_i` applied to the Semitic word,
/// rewriting the corresponding cell. `None` exactly when the word is
/// dominant for `i`. The result is checked to be semistandard and the
/// selected cell is checked to agree with the Kanji reading order.
pub fn raise_tab(tab: &SkewTableau, i: usize) -> Option<SkewTableau> {
    let w = tab.reading_word(ReadingOrder::Semitic);
    let pos = raise_position(&w, i)?;
    let cell = semitic_cell(tab, pos);
    let kanji_pos = raise_position(&tab.reading_word(ReadingOrder::Kanji), i);
    assert_order_independent(tab, cell, kanji_pos);
    Some(rebuild_checked(tab, cell, i, "raising"))
}

/// The lowering operator on a tableau, inverse to [`raise_tab`]. `None`
/// exactly when the word is anti-dominant for `i`.
pub fn lower_tab(tab: &SkewTableau, i: usize) -> Option<SkewTableau> {
    let w = tab.reading_word(ReadingOrder::Semitic);
    let pos = lower_position(&w, i)?;
    let cell = semitic_cell(tab, pos);
    let kanji_pos = lower_position(&tab.reading_word(ReadingOrder::Kanji), i);
    assert_order_independent(tab, cell, kanji_pos);
    Some(rebuild_checked(tab, cell, i + 1, "lowering"))
}

/// Which operator a trace step applied.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    Raise,
    Lower,
}

/// One applied operator: its kind, its index, and the letter position it
/// acted on (in the word as it was at application time).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceStep {
    pub kind: StepKind,
    pub index: usize,
    pub position: usize,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            StepKind::Raise => 'e',
            StepKind::Lower => 'f',
        };
        write!(f, "{kind}_{}@{}", self.index, self.position)
    }
}

/// The operator-selection policy of an iterated normal form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Policy {
    /// Always apply the defined raising operator of smallest index.
    MinIndex,
    /// Always apply the defined raising operator of largest index.
    MaxIndex,
    /// Neither of the two canonical policies.
    Custom,
}

/// A replayable record of applied operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RaisingTrace {
    pub steps: Vec<TraceStep>,
    pub policy: Policy,
}

impl fmt::Display for RaisingTrace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, step) in self.steps.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{step}")?;
        }
        Ok(())
    }
}

/// Iterates raising operators on a word, chosen by `policy`, until none
/// applies. The normal form is dominant for every index and does not
/// depend on the policy; the trace records each step.
pub fn dominant_normal_form_word(w: &[usize], policy: Policy) -> (Vec<usize>, RaisingTrace) {
    let mut current = w.to_vec();
    let mut steps = Vec::new();
    loop {
        let top = current.iter().copied().max().unwrap_or(0);
        let found = pick_raise(policy, top, |i| raise_position(&current, i));
        let Some((i, pos)) = found else {
            return (current, RaisingTrace { steps, policy });
        };
        current[pos] = i;
        steps.push(TraceStep {
            kind: StepKind::Raise,
            index: i,
            position: pos,
        });
    }
}

/// Iterates raising operators on a tableau until none applies; the
/// normal form together with the rectification determines the tableau.
pub fn dominant_normal_form_tab(
    tab: &SkewTableau,
    policy: Policy,
) -> (SkewTableau, RaisingTrace) {
    let mut current = tab.clone();
    let mut steps = Vec::new();
    loop {
        let w = current.reading_word(ReadingOrder::Semitic);
        let top = w.iter().copied().max().unwrap_or(0);
        let found = pick_raise(policy, top, |i| raise_position(&w, i));
        let Some((i, pos)) = found else {
            return (current, RaisingTrace { steps, policy });
        };
        current = raise_tab(&current, i).expect("position scan found the operator defined");
        steps.push(TraceStep {
            kind: StepKind::Raise,
            index: i,
            position: pos,
        });
    }
}

fn pick_raise(
    policy: Policy,
    top_letter: usize,
    mut position: impl FnMut(usize) -> Option<usize>,
) -> Option<(usize, usize)> {
    let candidates = 0..top_letter;
    match policy {
        Policy::MinIndex => candidates.clone().find_map(|i| Some((i, position(i)?))),
        Policy::MaxIndex | Policy::Custom => {
            candidates.rev().find_map(|i| Some((i, position(i)?)))
        }
    }
}

/// Robinson's bijection: maps `T` to the pair of its raising normal form
/// (a 0-dominant tableau of the same shape) and its rectification (a
/// partition-shape tableau of the same weight).
pub fn rob(tab: &SkewTableau) -> (SkewTableau, SkewTableau) {
    let (l, _) = dominant_normal_form_tab(tab, Policy::MinIndex);
    let (p, _) = rectify(tab);
    (l, p)
}

/// The inverse of [`rob`]: `L` must be 0-dominant and `P` must have the
/// partition shape given by `L`'s weight; returns the unique tableau with
/// normal form `L` and rectification `P`.
pub fn rob_inverse(l: &SkewTableau, p: &SkewTableau) -> Result<SkewTableau, Error> {
    if let Some(cell) = first_dominance_violation(l, &Partition::zero()) {
        return Err(Error::NotDominant { cell });
    }
    let nu = l
        .weight()
        .to_partition()
        .expect("a 0-dominant tableau has partition weight");
    if !p.shape().inner().is_empty() || *p.shape().outer() != nu {
        return Err(Error::Mismatch {
            msg: alloc::format!(
                "second tableau must have partition shape {nu} (the weight of the first)"
            ),
        });
    }
    phi(l, p)
}

/// An edge of a coplactic graph: `f_index(vertices[from]) = vertices[to]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GraphEdge {
    pub from: usize,
    pub index: usize,
    pub to: usize,
}

/// The closure of one word under all raising and lowering operators.
/// Vertices are listed in discovery (breadth-first) order starting at the
/// root word, expanding each vertex by increasing operator index, raising
/// before lowering; the weight histogram keys are length-`n` count
/// vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSummary {
    pub vertices: Vec<Vec<usize>>,
    pub edges: Vec<GraphEdge>,
    pub weight_counts: BTreeMap<Vec<usize>, usize>,
}

/// Default bound on explored vertices.
pub const DEFAULT_VERTEX_CAP: usize = 1_000_000;

fn word_weight(w: &[usize], n: usize) -> Vec<usize> {
    let mut counts = vec![0usize; n];
    for &letter in w {
        counts[letter] += 1;
    }
    counts
}

/// Explores the coplactic graph component of `w` over the alphabet
/// `0..n`. Fails with a resource error when more than `vertex_cap`
/// vertices would be needed.
pub fn coplactic_component(
    w: &[usize],
    n: usize,
    vertex_cap: usize,
) -> Result<GraphSummary, Error> {
    if w.iter().any(|&letter| letter >= n) {
        return Err(Error::Incompatible {
            msg: alloc::format!("word letters must be below the alphabet bound {n}"),
        });
    }
    let mut ids: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut weight_counts: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    let mut edges = Vec::new();
    let mut queue = VecDeque::new();

    let admit = |word: Vec<usize>,
                     ids: &mut BTreeMap<Vec<usize>, usize>,
                     vertices: &mut Vec<Vec<usize>>,
                     weight_counts: &mut BTreeMap<Vec<usize>, usize>,
                     queue: &mut VecDeque<usize>|
     -> Result<usize, Error> {
        if let Some(&id) = ids.get(&word) {
            return Ok(id);
        }
        if vertices.len() >= vertex_cap {
            return Err(Error::ResourceExceeded {
                limit: vertex_cap,
                what: "coplactic graph vertices",
            });
        }
        let id = vertices.len();
        *weight_counts.entry(word_weight(&word, n)).or_insert(0) += 1;
        ids.insert(word.clone(), id);
        vertices.push(word);
        queue.push_back(id);
        Ok(id)
    };

    admit(
        w.to_vec(),
        &mut ids,
        &mut vertices,
        &mut weight_counts,
        &mut queue,
    )?;
    while let Some(v) = queue.pop_front() {
        let word = vertices[v].clone();
        for i in 0..n.saturating_sub(1) {
            if let Some(raised) = raise(&word, i) {
                admit(raised, &mut ids, &mut vertices, &mut weight_counts, &mut queue)?;
            }
            if let Some(lowered) = lower(&word, i) {
                let to = admit(
                    lowered,
                    &mut ids,
                    &mut vertices,
                    &mut weight_counts,
                    &mut queue,
                )?;
                edges.push(GraphEdge { from: v, index: i, to });
            }
        }
    }
    Ok(GraphSummary {
        vertices,
        edges,
        weight_counts,
    })
}

/// The operators mirrored by one inward slide on a companion tableau; see
/// [`companion_slide`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompanionSlide {
    /// The raising indices applied, in order: `k, k+1, …, l−1` where `k`
    /// is the slide's starting row and `l` its final row.
    pub raises: Vec<usize>,
    /// The raised tableau (unchanged when the slide stays in its row).
    pub tableau: SkewTableau,
    /// The base partition after the slide (one cell removed in row `k`).
    pub kappa: Partition,
    /// The outer companion shape after the slide (one cell removed in
    /// row `l`).
    pub nu: Partition,
}

/// Mirrors the inward slide of `companion(T, κ)` starting at the inner
/// corner `s` (row `k`) as a chain of raising operators on `T` itself:
/// each row the slide's hole descends through contributes one operator,
/// yielding `e_k, …, e_{l−1}` when the slide ends in row `l`. The raised
/// tableau is the first tableau in the chain dominant for the shrunken
/// base κ′ (checked), and its companion over κ′ is the slid companion.
pub fn companion_slide(
    tab: &SkewTableau,
    kappa: &Partition,
    s: Cell,
) -> Result<CompanionSlide, Error> {
    let bar = companion(tab, kappa)?;
    if !inner_corners(bar.shape()).contains(&s) {
        return Err(Error::InvalidCell { cell: s });
    }
    let k = s.row;

    // Label each companion cell with the Semitic position of the matching
    // letter occurrence of T: the p-th cell of companion row i pairs with
    // the p-th occurrence of the letter i in T's Semitic word.
    let w = tab.reading_word(ReadingOrder::Semitic);
    let mut labels: BTreeMap<Cell, usize> = BTreeMap::new();
    let mut seen: BTreeMap<usize, usize> = BTreeMap::new();
    for (q, &letter) in w.iter().enumerate() {
        let p = seen.entry(letter).or_insert(0);
        labels.insert(Cell::new(letter, kappa.part(letter) + *p), q);
        *p += 1;
    }
    debug_assert_eq!(labels.len(), bar.size());

    // Standard inward slide on the labels; each downward hole move pulls
    // the position that the matching raising operator acts on.
    let mut hole = s;
    let mut pulls: Vec<(usize, usize)> = Vec::new();
    loop {
        let right = Cell::new(hole.row, hole.col + 1);
        let below = Cell::new(hole.row + 1, hole.col);
        let source = match (labels.get(&right), labels.get(&below)) {
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
        let label = labels.remove(&source).unwrap();
        if source == below {
            pulls.push((hole.row, label));
        }
        labels.insert(hole, label);
        hole = source;
    }
    let l = hole.row;
    debug_assert_eq!(pulls.len(), l - k);

    let mut kappa_parts = kappa.parts().to_vec();
    kappa_parts[k] -= 1;
    let kappa_prime = Partition::new(kappa_parts);
    let nu_prime = bar
        .shape()
        .outer()
        .with_cell_removed(l)
        .filter(|p| p.part(l) == hole.col)
        .expect("the slide ends at a removable cell of the companion shape");

    let mut current = tab.clone();
    let mut raises = Vec::with_capacity(pulls.len());
    for &(r, position) in &pulls {
        assert!(
            !is_dominant_for(&current, &kappa_prime),
            "the slide must continue while the tableau is not dominant"
        );
        let word = current.reading_word(ReadingOrder::Semitic);
        let found = raise_position(&word, r)
            .expect("each hole descent matches a defined raising operator");
        assert_eq!(
            found, position,
            "the raising operator acts on the pulled letter occurrence"
        );
        current = raise_tab(&current, r).unwrap();
        raises.push(r);
    }
    assert!(
        is_dominant_for(&current, &kappa_prime),
        "the raised tableau is dominant for the shrunken base"
    );
    Ok(CompanionSlide {
        raises,
        tableau: current,
        kappa: kappa_prime,
        nu: nu_prime,
    })
}

/// How many times `e_i` applies in succession before becoming undefined.
pub fn raise_bound(tab: &SkewTableau, i: usize) -> usize {
    let mut current = tab.clone();
    let mut count = 0;
    while let Some(next) = raise_tab(&current, i) {
        current = next;
        count += 1;
    }
    count
}

/// How many times `f_i` applies in succession before becoming undefined.
pub fn lower_bound(tab: &SkewTableau, i: usize) -> usize {
    let mut current = tab.clone();
    let mut count = 0;
    while let Some(next) = lower_tab(&current, i) {
        current = next;
        count += 1;
    }
    count
}

/// A product of factors `S_{rs}` (r < s) with positive multiplicities,
/// recording a grouped min-index raising trace.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobinsonMonomial {
    factors: BTreeMap<(usize, usize), usize>,
}

impl RobinsonMonomial {
    /// Multiplicity of the factor `S_{rs}`.
    pub fn multiplicity(&self, r: usize, s: usize) -> usize {
        self.factors.get(&(r, s)).copied().unwrap_or(0)
    }

    /// The factors with their multiplicities, ordered by `(r, s)`.
    pub fn factors(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.factors.iter().map(|(&p, &m)| (p, m))
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }
}

/// Formats an ordered factor sequence, collapsing consecutive repeats
/// into powers: `S_{01}^2 S_{12} S_{13}^2 S_{24}^2 S_{45} S_{25}`. The
/// empty sequence prints as `1`.
pub fn format_factors(factors: &[(usize, usize)]) -> String {
    if factors.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut run_start = 0;
    for k in 0..=factors.len() {
        if k < factors.len() && factors[k] == factors[run_start] {
            continue;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        let (r, s) = factors[run_start];
        if r < 10 && s < 10 {
            out.push_str(&alloc::format!("S_{{{r}{s}}}"));
        } else {
            out.push_str(&alloc::format!("S_{{{r},{s}}}"));
        }
        let power = k - run_start;
        if power > 1 {
            out.push_str(&alloc::format!("^{power}"));
        }
        run_start = k;
    }
    out
}

/// Groups a min-index raising trace into factors: each maximal run of
/// indices descending by exactly one, `e_{s−1}, e_{s−2}, …, e_r`, becomes
/// the factor `S_{rs}`. Returns the collected monomial and the ordered
/// factor sequence. Traces containing lowering steps or produced under a
/// different policy are rejected.
pub fn association_monomial(
    trace: &RaisingTrace,
) -> Result<(RobinsonMonomial, Vec<(usize, usize)>), Error> {
    if trace.policy != Policy::MinIndex {
        return Err(Error::BadTrace {
            msg: "grouping applies to min-index traces".to_string(),
        });
    }
    if trace.steps.iter().any(|s| s.kind != StepKind::Raise) {
        return Err(Error::BadTrace {
            msg: "grouping applies to raising-only traces".to_string(),
        });
    }
    let mut sequence = Vec::new();
    let mut factors: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut k = 0;
    while k < trace.steps.len() {
        let s = trace.steps[k].index + 1;
        let mut r = trace.steps[k].index;
        k += 1;
        while k < trace.steps.len() && r > 0 && trace.steps[k].index == r - 1 {
            r -= 1;
            k += 1;
        }
        sequence.push((r, s));
        *factors.entry((r, s)).or_insert(0) += 1;
    }
    Ok((RobinsonMonomial { factors }, sequence))
}

/// Rebuilds the partition-shape tableau a min-index trace leads to, from
/// its grouped monomial and the weight of the source: row `r` holds
/// `multiplicity(r, s)` copies of each letter `s > r`, preceded by enough
/// copies of `r` to give the letter `r` column count `α_r` overall.
pub fn monomial_tableau(
    monomial: &RobinsonMonomial,
    alpha: &Weight,
) -> Result<SkewTableau, Error> {
    let letters = alpha.as_slice().len();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for r in 0..letters {
        let consumed: usize = (0..r).map(|q| monomial.multiplicity(q, r)).sum();
        let own = alpha.get(r).checked_sub(consumed).ok_or_else(|| {
            Error::Incompatible {
                msg: alloc::format!("letter {r} is raised more often than it occurs"),
            }
        })?;
        let mut row = vec![r; own];
        for s in r + 1..letters {
            row.extend(core::iter::repeat_n(s, monomial.multiplicity(r, s)));
        }
        rows.push(row);
    }
    while rows.last().is_some_and(|r| r.is_empty()) {
        rows.pop();
    }
    let lengths: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    if lengths.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Incompatible {
            msg: "reconstructed rows do not form a partition shape".to_string(),
        });
    }
    let shape = crate::shapes::SkewShape::from(Partition::new(lengths));
    SkewTableau::new(shape, rows).map_err(|e| Error::Incompatible {
        msg: alloc::format!("reconstruction is not semistandard: {e}"),
    })
}

/// Parses a space-separated word; the empty string is the empty word.
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut cur = Cursor::new(s.trim());
    let mut word = vec![cur.number()?];
    while !cur.at_end() {
        cur.expect(' ')?;
        word.push(cur.number()?);
    }
    Ok(word)
}

/// Formats a word space-separated.
pub fn format_word(w: &[usize]) -> String {
    let mut out = String::new();
    for (k, letter) in w.iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        out.push_str(&letter.to_string());
    }
    out
}
