//! Exact-arithmetic invariants of free-by-cyclic and {universal Coxeter}-by-cyclic
//! groups: stretch factors, characteristic polynomials, twisted Alexander
//! polynomials, Reidemeister torsion, Nielsen/Lefschetz data, and fingerprint
//! comparison.
//!
//! The algebraic core is generic over the coefficient field (see [`scalar`]);
//! concrete aliases for the rationals and small prime fields live at the crate
//! root.

pub mod coxeter;
pub mod error;
pub mod experiment;
pub mod fingerprint;
pub mod freegroup;
pub mod graphmap;
pub mod laurent;
pub mod matrix;
pub mod scalar;
pub mod twisted;

pub use error::{Error, Result};

/// Exact rational scalar used throughout the crate.
pub type Rat = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;

/// The field with two elements.
pub type F2 = scalar::Fp<2>;

/// Laurent polynomial over the rationals.
pub type QPoly = laurent::LaurentPoly<Rat>;
/// Laurent polynomial over the two-element field.
pub type F2Poly = laurent::LaurentPoly<F2>;

/// Dense matrix over arbitrary-precision integers.
pub type IMat = matrix::Mat<Int>;
/// Dense matrix over exact rationals.
pub type QMat = matrix::Mat<Rat>;
