//! Littlewood-Richardson coefficients and Schur-basis expansions computed by
//! explicit tableau combinatorics, together with an independent brute-force
//! polynomial oracle for cross-checking the results.
//!
//! The crate is organised around the objects it manipulates:
//!
//! - [`shapes`]: partitions, skew shapes, cells, dominance order, and shape
//!   constructions (product shape, rectangle complement, horizontal strips).
//! - [`tableaux`]: skew semistandard tableaux, Young-lattice chains, reading
//!   words, standardisation, companion tableaux, enumeration, and the
//!   Bender-Knuth involution.
//! - [`jdt`]: jeu de taquin slides, rectification, tableau switching, dual
//!   equivalence, and trace-transport reconstruction.
//! - [`coplactic`]: raising/lowering operators on words and tableaux,
//!   dominant normal forms, the weight-preserving tableau bijection
//!   `rob`/`rob_inverse`, graph exploration, and companion slides.
//! - [`lr`]: Littlewood-Richardson coefficients, Schur products, Kostka
//!   numbers, the Pieri fast path, and the coefficient-symmetry bijections.
//! - [`polyoracle`]: monomial-level symmetric-polynomial arithmetic used as
//!   an independent verification route.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so the API is safe for unrestricted concurrent use. The crate is
//! `no_std` (with `alloc`); textual input/output uses the [`core::fmt`] and
//! [`core::str::FromStr`] machinery.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

mod textio;

pub mod coplactic;
pub mod error;
pub mod jdt;
pub mod lr;
pub mod polyoracle;
pub mod shapes;
pub mod tableaux;

pub use error::Error;
