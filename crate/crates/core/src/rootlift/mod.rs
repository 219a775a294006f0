//! Iterative n-th roots of power series in one variable.
//!
//! Given `ζ = a_{λ₀}T^{λ₀} + …`, the lifter starts from `c·T^{λ₀/n}` with
//! `cⁿ = a_{λ₀}` and repeatedly cancels the lowest-order term of
//! `rootⁿ − ζ`. Coefficients live in any [`FieldScalar`]; for rational input
//! the leading root is taken in `ℚ` when it exists and otherwise adjoined
//! symbolically as `y` with `yⁿ = a_{λ₀}`.

mod ext;
mod lift;

pub use ext::{rational_nth_root, ExtScalar, RadicalExtension};
pub use lift::{
    lift_nth_root, nth_root_series, nth_root_series_with, power_series_coefficients, verify_root,
    TruncatedRoot,
};
