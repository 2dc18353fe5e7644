//! Brute-force symmetric-polynomial arithmetic over a fixed number of
//! indeterminates: monomial expansions of (skew) Schur polynomials and of
//! the elementary/complete families, products, symmetry and homogeneity
//! checks, and basis conversions. Everything here works from raw monomial
//! lists with no tableau combinatorics beyond plain enumeration, so it
//! serves as an independent check of the counting routines in [`crate::lr`].

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::Error;
use crate::lr::SchurExpansion;
use crate::shapes::{Partition, SkewShape};
use crate::tableaux::enumerate_tableaux;

/// A polynomial in `n` indeterminates, stored as a map from exponent
/// vectors (always of length `n`) to nonzero integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialPoly {
    n: usize,
    coeffs: BTreeMap<Vec<usize>, BigInt>,
}

impl MonomialPoly {
    pub fn zero(n: usize) -> Self {
        MonomialPoly {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(n: usize) -> Self {
        let mut p = MonomialPoly::zero(n);
        p.add_term(vec![0; n], BigInt::from(1));
        p
    }

    /// Adds `coeff·X^expo`, dropping the term if it cancels.
    pub fn add_term(&mut self, expo: Vec<usize>, coeff: BigInt) {
        assert_eq!(expo.len(), self.n, "exponent vectors have length n");
        let total = self.coefficient(&expo) + coeff;
        if total.is_zero() {
            self.coeffs.remove(&expo);
        } else {
            self.coeffs.insert(expo, total);
        }
    }

    pub fn coefficient(&self, expo: &[usize]) -> BigInt {
        self.coeffs.get(expo).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &BigInt)> {
        self.coeffs.iter()
    }

    /// The common total degree of all terms, or `None` when terms of
    /// different degrees are present (the zero polynomial reports 0).
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degrees = self.coeffs.keys().map(|e| e.iter().sum::<usize>());
        let first = degrees.next().unwrap_or(0);
        degrees.all(|d| d == first).then_some(first)
    }
}

/// Expansion size ceiling: shapes whose projected filling count exceeds
/// this are refused rather than enumerated.
pub const PROJECTED_TABLEAU_LIMIT: usize = 10_000_000;

/// Upper bound on `|Tab(shape, n)|`: each row filled independently has
/// `C(n + len − 1, len)` weakly increasing fillings. The product stops
/// early once it clears the limit.
fn projected_tableau_count(shape: &SkewShape, n: usize) -> usize {
    let mut product: u128 = 1;
    for r in 0..shape.rows() {
        let len = (shape.outer().part(r) - shape.inner().part(r)) as u128;
        let mut choices: u128 = 1;
        for k in 0..len {
            choices = choices.saturating_mul(n as u128 + k);
            choices /= k + 1;
        }
        product = product.saturating_mul(choices);
        if product > PROJECTED_TABLEAU_LIMIT as u128 {
            return usize::MAX;
        }
    }
    product as usize
}

/// The monomial expansion `Σ_T X^{wt T}` over all fillings of `shape`
/// with letters below `n`. Refuses shapes whose projected filling count
/// exceeds [`PROJECTED_TABLEAU_LIMIT`].
pub fn schur_monomials(shape: &SkewShape, n: usize) -> Result<MonomialPoly, Error> {
    if projected_tableau_count(shape, n) > PROJECTED_TABLEAU_LIMIT {
        return Err(Error::ResourceExceeded {
            limit: PROJECTED_TABLEAU_LIMIT,
            what: "projected tableau count",
        });
    }
    let mut poly = MonomialPoly::zero(n);
    for tab in enumerate_tableaux(shape, n) {
        let weight = tab.weight();
        let expo: Vec<usize> = (0..n).map(|i| weight.get(i)).collect();
        poly.add_term(expo, BigInt::from(1));
    }
    Ok(poly)
}

/// The elementary polynomial `e_d(n)`: one term per strictly increasing
/// choice of `d` indeterminates.
pub fn elementary(d: usize, n: usize) -> MonomialPoly {
    let mut poly = MonomialPoly::zero(n);
    let mut picked = Vec::with_capacity(d);
    pick_indices(true, d, 0, n, &mut picked, &mut poly);
    poly
}

/// The complete polynomial `h_d(n)`: one term per weakly increasing
/// choice of `d` indeterminates.
pub fn complete(d: usize, n: usize) -> MonomialPoly {
    let mut poly = MonomialPoly::zero(n);
    let mut picked = Vec::with_capacity(d);
    pick_indices(false, d, 0, n, &mut picked, &mut poly);
    poly
}

fn pick_indices(
    strict: bool,
    remaining: usize,
    from: usize,
    n: usize,
    picked: &mut Vec<usize>,
    out: &mut MonomialPoly,
) {
    if remaining == 0 {
        let mut expo = vec![0; n];
        for &i in picked.iter() {
            expo[i] += 1;
        }
        out.add_term(expo, BigInt::from(1));
        return;
    }
    for i in from..n {
        picked.push(i);
        pick_indices(strict, remaining - 1, if strict { i + 1 } else { i }, n, picked, out);
        picked.pop();
    }
}

/// The product of two polynomials over the same indeterminates.
pub fn multiply(p: &MonomialPoly, q: &MonomialPoly) -> Result<MonomialPoly, Error> {
    if p.n != q.n {
        return Err(Error::VariableMismatch {
            left: p.n,
            right: q.n,
        });
    }
    let mut out = MonomialPoly::zero(p.n);
    for (a, ca) in p.terms() {
        for (b, cb) in q.terms() {
            let expo: Vec<usize> = a.iter().zip(b).map(|(x, y)| x + y).collect();
            out.add_term(expo, ca * cb);
        }
    }
    Ok(out)
}

/// Whether every adjacent indeterminate swap fixes the coefficients (and
/// hence every permutation does).
pub fn is_symmetric(p: &MonomialPoly) -> bool {
    for i in 0..p.n.saturating_sub(1) {
        for (expo, coeff) in p.terms() {
            let mut swapped = expo.clone();
            swapped.swap(i, i + 1);
            if p.coefficient(&swapped) != *coeff {
                return false;
            }
        }
    }
    true
}

/// Reads a symmetric polynomial off in the symmetrized-monomial basis:
/// the coefficient of `m_λ` is the coefficient at the weakly decreasing
/// representative `X^λ` of each orbit.
pub fn to_m_basis(p: &MonomialPoly) -> Result<BTreeMap<Partition, BigInt>, Error> {
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let mut out = BTreeMap::new();
    for (expo, coeff) in p.terms() {
        if expo.windows(2).all(|w| w[0] >= w[1]) {
            out.insert(Partition::new(expo.clone()), coeff.clone());
        }
    }
    Ok(out)
}

/// Decomposes a symmetric homogeneous polynomial over Schur polynomials
/// by unitriangular elimination: repeatedly subtract the expansion of the
/// dominance-maximal surviving partition exponent (the lexicographically
/// largest partition key, which is always dominance-maximal) until
/// nothing remains. Coefficients may be negative for inputs that are not
/// Schur-positive.
pub fn to_schur_basis(p: &MonomialPoly) -> Result<SchurExpansion, Error> {
    if !is_symmetric(p) {
        return Err(Error::NotSymmetric);
    }
    let Some(degree) = p.homogeneous_degree() else {
        return Err(Error::NotHomogeneous);
    };
    let mut rest = p.clone();
    let mut out = SchurExpansion::new(degree);
    while !rest.is_zero() {
        let lead = rest
            .coeffs
            .keys()
            .filter(|e| e.windows(2).all(|w| w[0] >= w[1]))
            .max()
            .cloned()
            .expect("a nonzero symmetric polynomial has a dominant representative");
        let coeff = rest.coefficient(&lead);
        let key = Partition::new(lead);
        let expansion = schur_monomials(&SkewShape::from(key.clone()), p.n)?;
        for (expo, c) in expansion.terms() {
            rest.add_term(expo.clone(), -(&coeff) * c);
        }
        out.add(key, coeff);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lr::schur_product;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sh(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn schur_monomials_examples() {
        let s = schur_monomials(&sh("[4,2,1]"), 3).unwrap();
        assert_eq!(s.coefficient_sum_check(), 15);
        let m = to_m_basis(&s).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[&p("[4,2,1]")], big(1));
        assert_eq!(m[&p("[3,3,1]")], big(1));
        assert_eq!(m[&p("[3,2,2]")], big(2));
        let one_cell = schur_monomials(&sh("[1]"), 2).unwrap();
        assert_eq!(one_cell.coefficient(&[1, 0]), big(1));
        assert_eq!(one_cell.coefficient(&[0, 1]), big(1));
        assert_eq!(one_cell.len(), 2);
        assert!(schur_monomials(&sh("[1,1,1]"), 2).unwrap().is_zero());
    }

    impl MonomialPoly {
        /// Total tableau count behind the expansion (test helper).
        fn coefficient_sum_check(&self) -> i64 {
            self.terms()
                .map(|(_, c)| i64::try_from(c).unwrap())
                .sum()
        }
    }

    #[test]
    fn degree_guard() {
        assert!(matches!(
            schur_monomials(&sh("[5,5,5]"), 8),
            Err(Error::ResourceExceeded { .. })
        ));
    }

    #[test]
    fn elementary_and_complete() {
        let e2 = elementary(2, 3);
        assert_eq!(e2.len(), 3);
        assert_eq!(e2.coefficient(&[1, 1, 0]), big(1));
        assert_eq!(e2.coefficient(&[1, 0, 1]), big(1));
        assert_eq!(e2.coefficient(&[0, 1, 1]), big(1));
        assert!(elementary(4, 3).is_zero());
        assert_eq!(elementary(0, 3), MonomialPoly::one(3));
        let h2 = complete(2, 2);
        assert_eq!(h2.coefficient(&[2, 0]), big(1));
        assert_eq!(h2.coefficient(&[1, 1]), big(1));
        assert_eq!(h2.coefficient(&[0, 2]), big(1));
        let m = to_m_basis(&complete(3, 2)).unwrap();
        let keys: Vec<Partition> = m.keys().cloned().collect();
        assert_eq!(keys, vec![p("[2,1]"), p("[3]")]);
        assert!(m.values().all(|c| *c == big(1)));
    }

    #[test]
    fn families_are_schur_instances() {
        for n in 1..=5usize {
            for d in 1..=6usize {
                let column = Partition::new(vec![1; d]);
                assert_eq!(
                    elementary(d, n),
                    schur_monomials(&SkewShape::from(column), n).unwrap()
                );
                assert_eq!(
                    complete(d, n),
                    schur_monomials(&SkewShape::from(Partition::new(vec![d])), n).unwrap()
                );
            }
        }
    }

    #[test]
    fn multiply_examples() {
        let x = schur_monomials(&sh("[1]"), 2).unwrap();
        assert_eq!(multiply(&x, &MonomialPoly::one(2)).unwrap(), x);
        let square = multiply(&x, &x).unwrap();
        assert_eq!(square.coefficient(&[2, 0]), big(1));
        assert_eq!(square.coefficient(&[1, 1]), big(2));
        assert_eq!(square.coefficient(&[0, 2]), big(1));
        assert!(multiply(&x, &MonomialPoly::one(3)).is_err());
        let s = multiply(
            &schur_monomials(&sh("[2,1]"), 3).unwrap(),
            &schur_monomials(&sh("[2]"), 3).unwrap(),
        )
        .unwrap();
        assert!(is_symmetric(&s));
    }

    #[test]
    fn symmetry_examples() {
        assert!(is_symmetric(&schur_monomials(&sh("[3,1]/[1]"), 3).unwrap()));
        let mut x0 = MonomialPoly::zero(2);
        x0.add_term(vec![1, 0], big(1));
        assert!(!is_symmetric(&x0));
        assert!(is_symmetric(&MonomialPoly::zero(3)));
        assert!(to_m_basis(&x0).is_err());
    }

    #[test]
    fn m_basis_examples() {
        let mut m21 = MonomialPoly::zero(2);
        m21.add_term(vec![2, 1], big(1));
        m21.add_term(vec![1, 2], big(1));
        let basis = to_m_basis(&m21).unwrap();
        assert_eq!(basis.len(), 1);
        assert_eq!(basis[&p("[2,1]")], big(1));
        let basis = to_m_basis(&complete(2, 2)).unwrap();
        assert_eq!(basis[&p("[2]")], big(1));
        assert_eq!(basis[&p("[1,1]")], big(1));
    }

    #[test]
    fn schur_basis_examples() {
        let s = schur_monomials(&sh("[3,1]"), 3).unwrap();
        let e = to_schur_basis(&s).unwrap();
        assert_eq!(e.len(), 1);
        assert_eq!(e.coefficient(&p("[3,1]")), big(1));
        let x = schur_monomials(&sh("[1]"), 2).unwrap();
        let e = to_schur_basis(&multiply(&x, &x).unwrap()).unwrap();
        assert_eq!(e.coefficient(&p("[2]")), big(1));
        assert_eq!(e.coefficient(&p("[1,1]")), big(1));
        assert_eq!(e.len(), 2);
        let mut x0 = MonomialPoly::zero(2);
        x0.add_term(vec![1, 0], big(1));
        assert!(to_schur_basis(&x0).is_err());
        let mut inhomogeneous = MonomialPoly::one(1);
        inhomogeneous.add_term(vec![1], big(1));
        assert!(is_symmetric(&inhomogeneous));
        assert!(matches!(
            to_schur_basis(&inhomogeneous),
            Err(Error::NotHomogeneous)
        ));
        assert!(to_schur_basis(&MonomialPoly::zero(2)).unwrap().is_empty());
    }

    #[test]
    fn round_trip_reconstruction() {
        let n = 3;
        for (a, b) in [("[2,1]", "[2]"), ("[3]", "[1,1]"), ("[2,2]", "[2,1]")] {
            let product = multiply(
                &schur_monomials(&sh(a), n).unwrap(),
                &schur_monomials(&sh(b), n).unwrap(),
            )
            .unwrap();
            let expansion = to_schur_basis(&product).unwrap();
            let mut rebuilt = MonomialPoly::zero(n);
            for (key, coeff) in expansion.terms() {
                let s = schur_monomials(&SkewShape::from(key.clone()), n).unwrap();
                for (expo, c) in s.terms() {
                    rebuilt.add_term(expo.clone(), coeff * c);
                }
            }
            assert_eq!(rebuilt, product);
        }
    }

    #[test]
    fn oracle_agrees_with_counting_small() {
        let n = 3;
        for (a, b) in [("[1]", "[1]"), ("[2,1]", "[2]"), ("[2,1]", "[2,1]")] {
            let product = multiply(
                &schur_monomials(&sh(a), n).unwrap(),
                &schur_monomials(&sh(b), n).unwrap(),
            )
            .unwrap();
            let decomposed = to_schur_basis(&product).unwrap();
            let counted = schur_product(&p(a), &p(b));
            let mut filtered = SchurExpansion::new(counted.degree());
            for (key, coeff) in counted.terms() {
                if key.len() <= n {
                    filtered.add(key.clone(), coeff.clone());
                }
            }
            assert_eq!(decomposed, filtered);
        }
    }
}
