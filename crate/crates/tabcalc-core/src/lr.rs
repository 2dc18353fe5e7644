//! Littlewood-Richardson coefficients by direct tableau counting, Schur
//! products and skew expansions, Kostka numbers, the single-row Pieri
//! fast path, and the three coefficient-symmetry bijections (factoring a
//! product shape, tableau switching, and their composite commuting map).

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::jdt::switch;
use crate::shapes::{product_shape, Partition, SkewShape};
use crate::tableaux::{
    canonical, companion, enumerate_lr, enumerate_tableaux, first_dominance_violation,
    SkewTableau, Weight,
};

/// A formal sum of partition-indexed terms of a common degree, printed in
/// descending lexicographic key order as `1*[6,4,1] + 2*[5,5,1]` (the
/// zero expansion prints as `0`). Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurExpansion {
    degree: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new(degree: usize) -> Self {
        SchurExpansion {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// Adds `coeff` to the term at `key`, dropping the term if it cancels.
    pub fn add(&mut self, key: Partition, coeff: BigInt) {
        assert_eq!(key.size(), self.degree, "all keys share the degree");
        let total = self.coefficient(&key) + coeff;
        if total.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, total);
        }
    }

    pub fn coefficient(&self, key: &Partition) -> BigInt {
        self.terms.get(key).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending lexicographic key order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The sum of all coefficients (the total term multiplicity).
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (key, coeff)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{coeff}*{key}")?;
        }
        Ok(())
    }
}

/// The coefficient of `s_ν` in the expansion of `s_χ`: the number of
/// 0-dominant semistandard tableaux of shape `χ` and weight `ν`.
pub fn lr_coefficient(shape: &SkewShape, nu: &Partition) -> Result<usize, Error> {
    if shape.size() != nu.size() {
        return Err(Error::Mismatch {
            msg: alloc::format!(
                "shape size {} differs from target size {}",
                shape.size(),
                nu.size()
            ),
        });
    }
    Ok(enumerate_lr(shape, Some(nu), None).count())
}

fn expansion_from_lr(shape: &SkewShape, n: Option<usize>) -> SchurExpansion {
    let mut expansion = SchurExpansion::new(shape.size());
    for tab in enumerate_lr(shape, None, n) {
        let nu = tab
            .weight()
            .to_partition()
            .expect("a dominant tableau has partition weight");
        expansion.add(nu, BigInt::from(1));
    }
    expansion
}

/// The expansion of the product `s_λ·s_μ`, computed by enumerating the
/// dominant tableaux of the disjoint product shape in one pass.
pub fn schur_product(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    expansion_from_lr(&product_shape(lambda, mu), None)
}

/// The expansion of the skew polynomial `s_χ`, optionally restricted to
/// targets with at most `n` parts.
pub fn skew_expand(shape: &SkewShape, n: Option<usize>) -> SchurExpansion {
    expansion_from_lr(shape, n)
}

/// The number of straight tableaux of shape `λ` and weight `μ`.
pub fn kostka(lambda: &Partition, mu: &Weight) -> Result<usize, Error> {
    if lambda.size() != mu.total() {
        return Err(Error::Mismatch {
            msg: alloc::format!(
                "shape size {} differs from weight total {}",
                lambda.size(),
                mu.total()
            ),
        });
    }
    let shape = SkewShape::from(lambda.clone());
    let n = mu.as_slice().len();
    Ok(enumerate_tableaux(&shape, n)
        .filter(|t| t.weight() == *mu)
        .count())
}

/// The expansion of `s_λ·s_(r)`: one term for each partition obtained by
/// adding a horizontal strip of `r` cells to `λ`.
pub fn pieri_row(lambda: &Partition, r: usize) -> SchurExpansion {
    let mut expansion = SchurExpansion::new(lambda.size() + r);
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    grow_strip(lambda, 0, r, &mut parts, &mut expansion);
    expansion
}

fn grow_strip(
    lambda: &Partition,
    row: usize,
    budget: usize,
    parts: &mut Vec<usize>,
    out: &mut SchurExpansion,
) {
    if row > lambda.len() {
        if budget == 0 {
            out.add(Partition::new(parts.clone()), BigInt::from(1));
        }
        return;
    }
    let lower = lambda.part(row);
    let cap = if row == 0 { lower + budget } else { lambda.part(row - 1) };
    for new_len in lower..=cap.min(lower + budget) {
        parts.push(new_len);
        grow_strip(lambda, row + 1, budget - (new_len - lower), parts, out);
        parts.pop();
    }
}

/// Which way [`factor_bijection`] maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorDirection {
    /// From a dominant tableau over the product shape `λ*μ` to one over
    /// `ν/μ` of weight `λ`.
    Forward,
    /// The inverse direction.
    Backward,
}

fn require_dominant(tab: &SkewTableau) -> Result<(), Error> {
    match first_dominance_violation(tab, &Partition::zero()) {
        Some(cell) => Err(Error::NotDominant { cell }),
        None => Ok(()),
    }
}

/// Restricts `tab` to the rows at and below `top`, re-indexed to start at
/// row zero.
fn lower_rows(tab: &SkewTableau, top: usize) -> Result<SkewTableau, Error> {
    let shape = tab.shape();
    let rows: Vec<Vec<usize>> = (top..shape.rows())
        .map(|r| tab.row_entries(r).to_vec())
        .collect();
    let outer: Vec<usize> = (top..shape.rows()).map(|r| shape.outer().part(r)).collect();
    let inner: Vec<usize> = (top..shape.rows()).map(|r| shape.inner().part(r)).collect();
    let shape = SkewShape::new(Partition::new(outer), Partition::new(inner))?;
    SkewTableau::new(shape, rows)
}

/// Rebuilds the tableau whose companion over `kappa` is `bar`: letter `i`
/// joins row `k` once for each entry `k` in row `i` of `bar`.
fn companion_inverse(bar: &SkewTableau, kappa: &Partition) -> Result<SkewTableau, Error> {
    let height = bar
        .weight()
        .to_partition()
        .ok_or_else(|| Error::Incompatible {
            msg: "row lengths of the source must form a partition".to_string(),
        })?;
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); height.len()];
    for i in 0..bar.shape().rows() {
        for &k in bar.row_entries(i) {
            rows[k].push(i);
        }
    }
    let tab = SkewTableau::new(SkewShape::from(height), rows)?;
    debug_assert_eq!(companion(&tab, kappa).as_ref(), Ok(bar));
    Ok(tab)
}

/// The correspondence behind `|LR(λ*μ, ν)| = |LR(ν/μ, λ)|`. Forward:
/// restrict a dominant tableau over the product shape to its `λ` block
/// and take the companion over `μ`. Backward: invert the companion and
/// stack the canonical `μ` block back on top. The two directions are
/// mutually inverse.
pub fn factor_bijection(
    tab: &SkewTableau,
    lambda: &Partition,
    mu: &Partition,
    direction: FactorDirection,
) -> Result<SkewTableau, Error> {
    match direction {
        FactorDirection::Forward => {
            if *tab.shape() != product_shape(lambda, mu) {
                return Err(Error::Incompatible {
                    msg: "input does not live on the stated product shape".to_string(),
                });
            }
            require_dominant(tab)?;
            let block = lower_rows(tab, mu.len())?;
            companion(&block, mu)
        }
        FactorDirection::Backward => {
            if *tab.shape().inner() != *mu {
                return Err(Error::Incompatible {
                    msg: "input inner shape differs from the stated base".to_string(),
                });
            }
            if tab.weight() != Weight::from(lambda) {
                return Err(Error::Mismatch {
                    msg: "input weight differs from the stated block shape".to_string(),
                });
            }
            require_dominant(tab)?;
            let block = companion_inverse(tab, mu)?;
            let mut rows: Vec<Vec<usize>> = (0..mu.len()).map(|i| vec![i; mu.part(i)]).collect();
            for r in 0..block.shape().rows() {
                rows.push(block.row_entries(r).to_vec());
            }
            SkewTableau::new(product_shape(lambda, mu), rows)
        }
    }
}

/// The switching form of coefficient symmetry: for `T` rectifying to the
/// canonical tableau of its weight `λ`, switching the canonical filling
/// of the inner shape `μ` past `T` leaves the canonical `λ` tableau
/// inside and the image `T*` outside, realizing `c_{ν/μ}^λ = c_{ν/λ}^μ`.
/// Applying the map twice returns `T`.
pub fn switch_bijection(
    tab: &SkewTableau,
    lambda: &Partition,
    mu: &Partition,
) -> Result<SkewTableau, Error> {
    if *tab.shape().inner() != *mu {
        return Err(Error::Incompatible {
            msg: "input inner shape differs from the stated base".to_string(),
        });
    }
    if tab.weight() != Weight::from(lambda) {
        return Err(Error::Mismatch {
            msg: "input weight differs from the stated rectification shape".to_string(),
        });
    }
    require_dominant(tab)?;
    let (inner_image, outer_image) = switch(&canonical(mu), tab)?;
    assert_eq!(
        inner_image,
        canonical(lambda),
        "switching a dominant tableau past a canonical block leaves a canonical block"
    );
    Ok(outer_image)
}

/// The composite bijection `LR(λ*μ, ν) → LR(μ*λ, ν)` witnessing the
/// commutativity of the product expansion: factor out the `λ` block,
/// switch it past the base, and refactor over the swapped product shape.
pub fn commute_bijection(
    tab: &SkewTableau,
    lambda: &Partition,
    mu: &Partition,
) -> Result<SkewTableau, Error> {
    let factored = factor_bijection(tab, lambda, mu, FactorDirection::Forward)?;
    let switched = switch_bijection(&factored, lambda, mu)?;
    factor_bijection(&switched, mu, lambda, FactorDirection::Backward)
}
