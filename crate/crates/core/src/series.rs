use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;
use crate::scalar::Scalar;

/// A finite Puiseux series `Σ c_v X₁^{v₁/m} ⋯ X_r^{v_r/m}`.
///
/// No stored coefficient is zero, so the key set is exactly the support.
#[derive(Clone, Debug, PartialEq)]
pub struct PuiseuxSeries<C> {
    nvars: usize,
    denominator: BigUint,
    coeffs: BTreeMap<ExponentVector, C>,
}

impl<C: Scalar> PuiseuxSeries<C> {
    pub fn zero(nvars: usize, denominator: BigUint) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::Argument("a series needs at least one variable".into()));
        }
        if denominator.is_zero() {
            return Err(Error::Argument("denominator must be positive".into()));
        }
        Ok(PuiseuxSeries {
            nvars,
            denominator,
            coeffs: BTreeMap::new(),
        })
    }

    /// Builds a series from `(exponent, coefficient)` pairs, merging repeated
    /// exponents and dropping terms that cancel.
    pub fn from_terms<I>(nvars: usize, denominator: BigUint, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (ExponentVector, C)>,
    {
        let mut s = Self::zero(nvars, denominator)?;
        for (e, c) in terms {
            s.add_term(e, c)?;
        }
        Ok(s)
    }

    /// Support-only constructor: every exponent gets coefficient one.
    pub fn from_support<'a, I>(nvars: usize, denominator: BigUint, support: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a ExponentVector>,
    {
        let mut s = Self::zero(nvars, denominator)?;
        for e in support {
            e.check_len(nvars)?;
            s.coeffs.insert(e.clone(), C::one());
        }
        Ok(s)
    }

    /// Adds `c·X^{e/m}` in place.
    pub fn add_term(&mut self, e: ExponentVector, c: C) -> Result<()> {
        e.check_len(self.nvars)?;
        let sum = match self.coeffs.remove(&e) {
            Some(old) => old + c,
            None => c,
        };
        if !sum.is_zero() {
            self.coeffs.insert(e, sum);
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn denominator(&self) -> &BigUint {
        &self.denominator
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, e: &ExponentVector) -> Option<&C> {
        self.coeffs.get(e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &C)> {
        self.coeffs.iter()
    }

    /// The set of exponents with nonzero coefficient.
    pub fn support(&self) -> BTreeSet<ExponentVector> {
        self.coeffs.keys().cloned().collect()
    }

    /// Applies `f` to every coefficient, dropping terms that map to zero.
    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> PuiseuxSeries<D> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| (e.clone(), f(c)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        PuiseuxSeries {
            nvars: self.nvars,
            denominator: self.denominator.clone(),
            coeffs,
        }
    }

    /// Same series written over the denominator `m·factor`.
    pub fn scale_denominator(&self, factor: &BigUint) -> Result<Self> {
        if factor.is_zero() {
            return Err(Error::Argument("scale factor must be positive".into()));
        }
        if factor.is_one() {
            return Ok(self.clone());
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let scaled = e.entries().iter().map(|x| x * factor).collect();
                (ExponentVector::new(scaled).expect("nonempty"), c.clone())
            })
            .collect();
        Ok(PuiseuxSeries {
            nvars: self.nvars,
            denominator: &self.denominator * factor,
            coeffs,
        })
    }

    /// Same series written over `m / divisor`; every exponent entry must be
    /// divisible by `divisor`.
    pub(crate) fn divide_denominator(&self, divisor: &BigUint) -> Self {
        debug_assert!((&self.denominator % divisor).is_zero());
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, c)| {
                let entries = e.entries().iter().map(|x| x / divisor).collect();
                (ExponentVector::new(entries).expect("nonempty"), c.clone())
            })
            .collect();
        PuiseuxSeries {
            nvars: self.nvars,
            denominator: &self.denominator / divisor,
            coeffs,
        }
    }
}
