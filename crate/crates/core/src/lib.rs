//! Distinguished exponents of multivariate Puiseux series.
//!
//! The crate computes, for a fractional power series with common exponent
//! denominator `m`, a finite subset of its exponents whose monomials generate
//! the same field extension as the series itself. The selection is driven by
//! the gcd of maximal minors of the integer matrices `[m·I | v₁ … v_l]`, and
//! every result can be cross-checked against explicit subgroup enumeration in
//! `(ℤ/mℤ)^r`.
//!
//! On top of the engine sit the classical invariants of plane branches
//! (characteristic exponents, Puiseux pairs), the characteristic monomials of
//! quasi-ordinary branches, and an iterative n-th root lifter for power series.
//!
//! Series coefficients and root-lifting coefficients are generic over
//! [`Scalar`] / [`FieldScalar`]; the aliases below name the exact
//! instantiations used throughout the command-line tool.

pub mod classical;
pub mod distinguished;
pub mod error;
pub mod exponent;
pub mod intlattice;
pub mod rootlift;
pub mod scalar;
pub mod series;

pub use classical::{
    characteristic_of_branch, puiseux_pairs, quasi_ordinary_monomials, BranchCharacteristic,
    PuiseuxPair, QuasiOrdinaryReport,
};
pub use distinguished::{
    distinguished_exponents, extension_degree, normalize_denominator, verify_corollary,
    DistinguishedResult,
};
pub use error::{Error, Result};
pub use exponent::{compare, ExponentVector, MonomialOrdering};
pub use intlattice::{
    gcd_minors, gcd_minors_oracle, smith_normal_form, span, stabilizer, IntMatrix, IntScalar,
    ModSubgroup,
};
pub use rootlift::{
    lift_nth_root, nth_root_series, verify_root, ExtScalar, RadicalExtension, TruncatedRoot,
};
pub use scalar::{FieldScalar, Scalar};
pub use series::PuiseuxSeries;

/// Exact rational numbers, the default coefficient field.
pub type Rational = num_rational::BigRational;

/// Puiseux series with exact rational coefficients.
pub type QSeries = PuiseuxSeries<Rational>;

/// Puiseux series with double-precision coefficients (support computations only).
pub type F64Series = PuiseuxSeries<f64>;

/// Integer matrix over arbitrary-precision integers.
pub type BigIntMatrix = IntMatrix<num_bigint::BigInt>;

/// Integer matrix over machine integers; callers are responsible for overflow.
pub type I64Matrix = IntMatrix<i64>;

/// Truncated n-th root with coefficients in `ℚ[y]/(yⁿ − a)`.
pub type QRoot = TruncatedRoot<ExtScalar>;
