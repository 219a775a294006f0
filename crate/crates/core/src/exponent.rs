//! Exponent vectors and monomial orderings.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Numerators `(i₁, …, i_r)` of a monomial `X₁^{i₁/m} ⋯ X_r^{i_r/m}`.
///
/// The shared denominator `m` lives with the series (or is passed alongside),
/// never in the vector itself.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<BigUint>);

impl ExponentVector {
    pub fn new(entries: Vec<BigUint>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Argument(
                "an exponent vector needs at least one variable".into(),
            ));
        }
        Ok(ExponentVector(entries))
    }

    /// Convenience constructor for small literals. Panics on an empty slice.
    pub fn from_u64s(entries: &[u64]) -> Self {
        Self::new(entries.iter().map(|&e| BigUint::from(e)).collect())
            .expect("exponent vector must be nonempty")
    }

    pub fn zero(nvars: usize) -> Self {
        assert!(nvars > 0);
        ExponentVector(vec![BigUint::zero(); nvars])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigUint> {
        self.0
    }

    /// Total degree `i₁ + … + i_r`.
    pub fn degree(&self) -> BigUint {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn to_bigints(&self) -> Vec<BigInt> {
        self.0.iter().map(|e| BigInt::from(e.clone())).collect()
    }

    /// Entries reduced modulo `m`.
    pub fn residues(&self, m: u64) -> Vec<u64> {
        let m = BigUint::from(m);
        self.0
            .iter()
            .map(|e| (e % &m).to_u64().expect("residue fits in u64"))
            .collect()
    }

    /// Componentwise `self ≤ other`.
    pub fn le_componentwise(&self, other: &Self) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub(crate) fn check_len(&self, nvars: usize) -> Result<()> {
        if self.len() != nvars {
            return Err(Error::Dimension {
                expected: nvars,
                found: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Total orderings on exponent vectors of a fixed length.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    /// Lexicographic, first variable most significant.
    Lex,
    /// Total degree, ties broken lexicographically.
    #[default]
    GrLex,
    /// Total degree, ties broken by the reverse lexicographic rule: the
    /// vector with the smaller last differing entry is the larger one.
    GrevLex,
}

impl MonomialOrdering {
    pub const ALL: [MonomialOrdering; 3] = [Self::Lex, Self::GrLex, Self::GrevLex];

    pub fn is_graded(self) -> bool {
        !matches!(self, Self::Lex)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::Lex => "lex",
            Self::GrLex => "grlex",
            Self::GrevLex => "grevlex",
        }
    }

    /// Infallible comparison; callers must ensure equal lengths.
    pub(crate) fn cmp_unchecked(self, a: &ExponentVector, b: &ExponentVector) -> Ordering {
        match self {
            Self::Lex => a.0.cmp(&b.0),
            Self::GrLex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
            Self::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                a.0.iter()
                    .zip(&b.0)
                    .rev()
                    .find(|(x, y)| x != y)
                    .map_or(Ordering::Equal, |(x, y)| y.cmp(x))
            }),
        }
    }
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrdering {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lex" => Ok(Self::Lex),
            "grlex" => Ok(Self::GrLex),
            "grevlex" => Ok(Self::GrevLex),
            other => Err(Error::Argument(format!("unknown monomial ordering `{other}`"))),
        }
    }
}

/// Compares two exponent vectors under `ord`.
pub fn compare(a: &ExponentVector, b: &ExponentVector, ord: MonomialOrdering) -> Result<Ordering> {
    a.check_len(b.len())?;
    Ok(ord.cmp_unchecked(a, b))
}
