//! Exact integer lattice kernel: Smith normal form, gcd of minors, and
//! explicit subgroups of `(ℤ/mℤ)^r`.

mod matrix;
mod minors;
mod snf;
mod subgroup;

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::Signed;

pub use matrix::IntMatrix;
pub use minors::{determinant_oracle, gcd_minors_oracle};
pub use snf::{gcd_minors, smith_normal_form};
pub use subgroup::{span, stabilizer, ModSubgroup, MAX_ENUMERATION};

/// Integer types usable as matrix entries.
///
/// Machine integers satisfy this bound too, but only arbitrary-precision
/// integers are free of silent overflow during elimination.
pub trait IntScalar: Integer + Signed + Clone + Debug {}

impl<T: Integer + Signed + Clone + Debug> IntScalar for T {}
