//! Partitions, skew shapes, cells, the dominance order on weight vectors,
//! and shape constructions: product shapes, rectangle complements, and
//! horizontal strips.
//!
//! Coordinates are 0-based matrix coordinates (row `i` grows downwards,
//! column `j` rightwards). Partitions are stored with trailing zeros
//! trimmed; any row access past the stored parts reads as 0.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::error::Error;
use crate::textio::Cursor;

/// A cell `(i, j)` of a diagram, in matrix orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// The diagonal index `j - i`.
    pub fn diagonal(&self) -> isize {
        self.col as isize - self.row as isize
    }
}

/// A partition: a weakly decreasing sequence of positive integers (trailing
/// zeros are trimmed away; the empty sequence is the zero partition).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from `parts`, trimming trailing zeros.
    ///
    /// Panics if `parts` is not weakly decreasing; textual input should go
    /// through [`FromStr`] instead, which reports a parse error.
    pub fn new(parts: impl Into<Vec<usize>>) -> Self {
        let mut parts = parts.into();
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing"
        );
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// The zero partition.
    pub fn zero() -> Self {
        Partition::default()
    }

    /// Reinterprets a weight vector as a partition if it is weakly
    /// decreasing (ignoring trailing zeros).
    pub fn from_weight(counts: &[usize]) -> Option<Self> {
        if counts.windows(2).all(|w| w[0] >= w[1]) {
            Some(Partition::new(counts.to_vec()))
        } else {
            None
        }
    }

    /// The stored (positive) parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length at `i`; 0 past the stored parts.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of positive parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells `|λ|`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Young-lattice order: does this diagram contain `inner` cell-wise?
    pub fn contains(&self, inner: &Partition) -> bool {
        (0..inner.len()).all(|i| inner.part(i) <= self.part(i))
    }

    /// The partition with one more cell in row `i`, if that is a partition.
    pub fn with_cell_added(&self, i: usize) -> Option<Partition> {
        if i > self.len() {
            return None;
        }
        if i > 0 && self.part(i) + 1 > self.part(i - 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        if i == parts.len() {
            parts.push(1);
        } else {
            parts[i] += 1;
        }
        Some(Partition { parts })
    }

    /// The partition with one cell removed from row `i`, if that is a
    /// partition.
    pub fn with_cell_removed(&self, i: usize) -> Option<Partition> {
        if self.part(i) == 0 || self.part(i + 1) == self.part(i) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Some(Partition { parts })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor::new(s);
        let p = parse_partition(&mut cur)?;
        cur.finish()?;
        Ok(p)
    }
}

/// Parses `[a,b,...]` at the cursor, checking weak decrease.
pub(crate) fn parse_partition(cur: &mut Cursor<'_>) -> Result<Partition, Error> {
    cur.expect('[')?;
    let mut parts = Vec::new();
    if !cur.eat(']') {
        loop {
            let start = cur.pos();
            let n = cur.number()?;
            if let Some(&prev) = parts.last() {
                if n > prev {
                    return Err(Error::Parse {
                        pos: start,
                        msg: "parts must be weakly decreasing".to_string(),
                    });
                }
            }
            parts.push(n);
            if cur.eat(']') {
                break;
            }
            cur.expect(',')?;
        }
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    Ok(Partition { parts })
}

/// A skew shape `outer/inner` with `inner` contained in `outer`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, Error> {
        if !outer.contains(&inner) {
            return Err(Error::NotNested);
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of cells `|outer| - |inner|`.
    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of rows the diagram spans (rows of the outer partition).
    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    /// Column span `inner[i]..outer[i]` of row `i`.
    pub fn row_range(&self, i: usize) -> core::ops::Range<usize> {
        self.inner.part(i)..self.outer.part(i)
    }

    /// Is `cell` part of the diagram?
    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.row_range(cell.row).contains(&cell.col)
    }

    /// All cells, row-major (top to bottom, left to right within a row).
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.rows() {
            for j in self.row_range(i) {
                out.push(Cell::new(i, j));
            }
        }
        out
    }
}

impl From<Partition> for SkewShape {
    /// Embeds a partition as `λ/0`.
    fn from(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::zero(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.outer, self.inner)
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    /// Accepts `[..]/[..]` or a bare partition `[..]` (read as `λ/0`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let mut cur = Cursor::new(s);
        let outer = parse_partition(&mut cur)?;
        let inner = if cur.eat('/') {
            parse_partition(&mut cur)?
        } else {
            Partition::zero()
        };
        cur.finish()?;
        if !outer.contains(&inner) {
            return Err(Error::Parse {
                pos: 0,
                msg: "inner partition not contained in outer".to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }
}

/// Dominance order on weight vectors: `a ⪯ b` iff every prefix sum of `a`
/// is at most the corresponding prefix sum of `b` and the totals agree.
pub fn dominance_leq(a: &[usize], b: &[usize]) -> bool {
    let mut sum_a = 0usize;
    let mut sum_b = 0usize;
    for k in 0..a.len().max(b.len()) {
        sum_a += a.get(k).copied().unwrap_or(0);
        sum_b += b.get(k).copied().unwrap_or(0);
        if sum_a > sum_b {
            return false;
        }
    }
    sum_a == sum_b
}

/// The canonical skew representative of the product `λ*μ`: a copy of `μ`
/// placed strictly above and to the right of a copy of `λ`.
///
/// With `c = λ[0]` and `r` the number of parts of `μ`, the outer shape is
/// `(μ_0+c, …, μ_{r-1}+c, λ_0, λ_1, …)` over the inner rectangle `(c)^r`.
pub fn product_shape(lambda: &Partition, mu: &Partition) -> SkewShape {
    let c = lambda.part(0);
    let r = mu.len();
    let mut outer = Vec::with_capacity(r + lambda.len());
    for k in 0..r {
        outer.push(mu.part(k) + c);
    }
    outer.extend_from_slice(lambda.parts());
    let inner = alloc::vec![c; r];
    SkewShape {
        outer: Partition::new(outer),
        inner: Partition::new(inner),
    }
}

/// The complement `λ^◇` of `λ` in an `n×m` rectangle:
/// `λ^◇_i = m - λ_{n-1-i}`. Involutive and order-reversing.
pub fn diamond(lambda: &Partition, rows: usize, cols: usize) -> Result<Partition, Error> {
    if lambda.len() > rows || lambda.part(0) > cols {
        return Err(Error::RectangleTooSmall);
    }
    let parts: Vec<usize> = (0..rows).map(|i| cols - lambda.part(rows - 1 - i)).collect();
    Ok(Partition::new(parts))
}

/// Does no column of the diagram contain two cells?
pub fn is_horizontal_strip(shape: &SkewShape) -> bool {
    (0..shape.rows()).all(|i| shape.inner().part(i) >= shape.outer().part(i + 1))
}

/// All partitions of `d`, in descending lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    collect_partitions(d, d, &mut current, &mut out);
    out
}

/// All partitions of every size up to and including `d`.
pub fn partitions_of_at_most(d: usize) -> Vec<Partition> {
    (0..=d).flat_map(partitions_of).collect()
}

fn collect_partitions(
    remaining: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        out.push(Partition::new(current.clone()));
        return;
    }
    for next in (1..=remaining.min(max_part)).rev() {
        current.push(next);
        collect_partitions(remaining - next, next, current, out);
        current.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_trims_trailing_zeros() {
        assert_eq!(Partition::new(alloc::vec![4, 2, 1, 0, 0]), p("[4,2,1]"));
        assert_eq!(Partition::new(Vec::new()), p("[]"));
        assert_eq!(p("[4,2,1,0]"), p("[4,2,1]"));
    }

    #[test]
    #[should_panic(expected = "weakly decreasing")]
    fn partition_rejects_increase() {
        Partition::new(alloc::vec![1, 2]);
    }

    #[test]
    fn partition_text_round_trip() {
        for s in ["[]", "[1]", "[4,2,1]", "[6,5,5,3,2]"] {
            assert_eq!(p(s).to_string(), s);
        }
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[1,".parse::<Partition>().is_err());
        assert!("4,2".parse::<Partition>().is_err());
    }

    #[test]
    fn out_of_range_parts_read_as_zero() {
        let q = p("[3,1]");
        assert_eq!(q.part(0), 3);
        assert_eq!(q.part(5), 0);
        assert_eq!(q.size(), 4);
    }

    #[test]
    fn contains_examples() {
        assert!(p("[4,2,1]").contains(&p("[2,1]")));
        assert!(!p("[]").contains(&p("[1]")));
        assert!(!p("[2,2]").contains(&p("[3]")));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance_leq(&[3, 2, 2], &[4, 2, 1]));
        assert!(dominance_leq(&[1, 1, 1], &[3]));
        assert!(!dominance_leq(&[3, 1], &[2, 2]));
        assert!(dominance_leq(&[2, 2], &[3, 1]));
        // Unequal totals are incomparable.
        assert!(!dominance_leq(&[1], &[2]));
        assert!(!dominance_leq(&[2], &[1]));
    }

    #[test]
    fn cells_examples() {
        let shape = SkewShape::from(p("[4,2,1]"));
        let cells = shape.cells();
        assert_eq!(cells.len(), 7);
        assert_eq!(
            &cells[..4],
            &[
                Cell::new(0, 0),
                Cell::new(0, 1),
                Cell::new(0, 2),
                Cell::new(0, 3)
            ]
        );

        let skew = SkewShape::new(p("[2,1]"), p("[1]")).unwrap();
        assert_eq!(skew.cells(), alloc::vec![Cell::new(0, 1), Cell::new(1, 0)]);

        let big = SkewShape::new(p("[6,5,5,3,2]"), p("[4,2,1]")).unwrap();
        assert_eq!(big.cells().len(), 14);
    }

    #[test]
    fn skew_shape_text_round_trip() {
        let s: SkewShape = "[6,5,5,3,2]/[4,2,1]".parse().unwrap();
        assert_eq!(s.to_string(), "[6,5,5,3,2]/[4,2,1]");
        let bare: SkewShape = "[2,1]".parse().unwrap();
        assert_eq!(bare.to_string(), "[2,1]/[]");
        assert!("[1]/[2]".parse::<SkewShape>().is_err());
    }

    #[test]
    fn product_shape_examples() {
        assert_eq!(
            product_shape(&p("[1]"), &p("[1]")),
            "[2,1]/[1]".parse().unwrap()
        );
        assert_eq!(
            product_shape(&p("[5,4,3,1,1]"), &p("[4,2,1]")),
            "[9,7,6,5,4,3,1,1]/[5,5,5]".parse().unwrap()
        );
        assert_eq!(
            product_shape(&p("[3,1]"), &p("[]")),
            SkewShape::from(p("[3,1]"))
        );
    }

    #[test]
    fn product_shape_separation() {
        // Every μ-copy cell sits strictly above and strictly right of every
        // λ-copy cell.
        let lambda = p("[5,4,3,1,1]");
        let mu = p("[4,2,1]");
        let shape = product_shape(&lambda, &mu);
        assert_eq!(shape.size(), lambda.size() + mu.size());
        let r = mu.len();
        let cells = shape.cells();
        let (mu_cells, lambda_cells): (Vec<Cell>, Vec<Cell>) =
            cells.iter().partition(|c| c.row < r);
        assert_eq!(mu_cells.len(), mu.size());
        assert_eq!(lambda_cells.len(), lambda.size());
        for a in &mu_cells {
            for b in &lambda_cells {
                assert!(a.row < b.row && a.col > b.col);
            }
        }
    }

    #[test]
    fn diamond_examples() {
        assert_eq!(diamond(&p("[]"), 2, 3).unwrap(), p("[3,3]"));
        assert_eq!(diamond(&p("[3,3]"), 2, 3).unwrap(), p("[]"));
        assert_eq!(diamond(&p("[2,1]"), 2, 3).unwrap(), p("[2,1]"));
        assert_eq!(diamond(&p("[4]"), 1, 3), Err(Error::RectangleTooSmall));
        assert_eq!(diamond(&p("[1,1]"), 1, 3), Err(Error::RectangleTooSmall));
    }

    #[test]
    fn diamond_involutive_and_order_reversing() {
        let all: Vec<Partition> = partitions_of_at_most(6)
            .into_iter()
            .filter(|q| q.len() <= 3 && q.part(0) <= 3)
            .collect();
        for a in &all {
            assert_eq!(&diamond(&diamond(a, 3, 3).unwrap(), 3, 3).unwrap(), a);
            for b in &all {
                if a.contains(b) {
                    let da = diamond(a, 3, 3).unwrap();
                    let db = diamond(b, 3, 3).unwrap();
                    assert!(db.contains(&da));
                }
            }
        }
    }

    #[test]
    fn horizontal_strip_examples() {
        let yes: SkewShape = "[3,1]/[1]".parse().unwrap();
        let no: SkewShape = "[2,2]/[1]".parse().unwrap();
        let yes2: SkewShape = "[5,2]/[2]".parse().unwrap();
        assert!(is_horizontal_strip(&yes));
        assert!(!is_horizontal_strip(&no));
        assert!(is_horizontal_strip(&yes2));
    }

    #[test]
    fn dominance_is_partial_order_small() {
        // Reflexive, antisymmetric, transitive on partitions of d ≤ 6.
        for d in 0..=6usize {
            let parts: Vec<Partition> = partitions_of(d);
            for a in &parts {
                assert!(dominance_leq(a.parts(), a.parts()));
                for b in &parts {
                    let ab = dominance_leq(a.parts(), b.parts());
                    let ba = dominance_leq(b.parts(), a.parts());
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    for c in &parts {
                        if ab && dominance_leq(b.parts(), c.parts()) {
                            assert!(dominance_leq(a.parts(), c.parts()));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn corner_helpers() {
        let q = p("[3,1]");
        assert_eq!(q.with_cell_added(0), Some(p("[4,1]")));
        assert_eq!(q.with_cell_added(1), Some(p("[3,2]")));
        assert_eq!(q.with_cell_added(2), Some(p("[3,1,1]")));
        assert_eq!(q.with_cell_added(3), None);
        assert_eq!(q.with_cell_removed(0), Some(p("[2,1]")));
        assert_eq!(q.with_cell_removed(1), Some(p("[3]")));
        assert_eq!(q.with_cell_removed(2), None);
        assert_eq!(p("[2,2]").with_cell_removed(0), None);
    }
}
