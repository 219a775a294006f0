use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};

/// The ring `ℚ[y]/(y^degree − radicand)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RadicalExtension {
    degree: usize,
    radicand: BigRational,
}

impl RadicalExtension {
    pub fn new(degree: usize, radicand: BigRational) -> Result<Arc<Self>> {
        if degree == 0 {
            return Err(Error::Argument("extension degree must be positive".into()));
        }
        if radicand.is_zero() {
            return Err(Error::Argument("radicand must be nonzero".into()));
        }
        Ok(Arc::new(RadicalExtension { degree, radicand }))
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn radicand(&self) -> &BigRational {
        &self.radicand
    }

    /// The class of `y`.
    pub fn generator(self: &Arc<Self>) -> ExtScalar {
        ExtScalar::from_coeffs(
            vec![BigRational::zero(), BigRational::one()],
            Some(Arc::clone(self)),
        )
    }

    fn reduce(&self, coeffs: &mut Vec<BigRational>) {
        let d = self.degree;
        while coeffs.len() > d {
            let top = coeffs.pop().expect("nonempty");
            let k = coeffs.len() - d;
            coeffs[k] = &coeffs[k] + top * &self.radicand;
        }
        trim(coeffs);
    }

    fn modulus(&self) -> Vec<BigRational> {
        let mut p = vec![BigRational::zero(); self.degree + 1];
        p[0] = -self.radicand.clone();
        p[self.degree] = BigRational::one();
        p
    }
}

impl fmt::Display for RadicalExtension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "y^{} = {}", self.degree, self.radicand)
    }
}

/// Element of `ℚ[y]/(yⁿ − a)`.
///
/// Rational constants carry no ring and combine with elements of any
/// extension; this is what lets `zero()`/`one()` exist without a context.
#[derive(Clone, Debug)]
pub struct ExtScalar {
    coeffs: Vec<BigRational>,
    ext: Option<Arc<RadicalExtension>>,
}

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(&mut out);
    out
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = b[db].clone();
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let k = rem.len() - 1 - db;
        let c = rem.last().expect("nonempty") / &lead;
        for (i, bi) in b.iter().enumerate() {
            rem[k + i] = &rem[k + i] - &c * bi;
        }
        quot[k] = c;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

impl ExtScalar {
    fn from_coeffs(mut coeffs: Vec<BigRational>, ext: Option<Arc<RadicalExtension>>) -> Self {
        match &ext {
            Some(e) => e.reduce(&mut coeffs),
            None => trim(&mut coeffs),
        }
        ExtScalar { coeffs, ext }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c], None)
    }

    /// Coefficients of `1, y, y², …` (trailing zeros trimmed).
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn extension(&self) -> Option<&Arc<RadicalExtension>> {
        self.ext.as_ref()
    }

    /// The value as a rational, when it does not involve `y`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    fn join(a: &Option<Arc<RadicalExtension>>, b: &Option<Arc<RadicalExtension>>) -> Option<Arc<RadicalExtension>> {
        match (a, b) {
            (Some(x), Some(y)) => {
                assert!(x == y, "mixing elements of different extensions");
                Some(Arc::clone(x))
            }
            (Some(x), None) | (None, Some(x)) => Some(Arc::clone(x)),
            (None, None) => None,
        }
    }

    /// Inverse by the extended Euclidean algorithm against `yⁿ − a`.
    pub fn try_inverse(&self) -> Result<Self> {
        match self.coeffs.len() {
            0 => return Err(Error::Extension("division by zero".into())),
            1 => return Ok(Self::from_coeffs(vec![self.coeffs[0].recip()], self.ext.clone())),
            _ => {}
        }
        let ext = self.ext.as_ref().expect("non-constant elements carry their ring");
        let (mut r0, mut r1) = (ext.modulus(), self.coeffs.clone());
        let (mut t0, mut t1): (Vec<BigRational>, Vec<BigRational>) = (Vec::new(), vec![BigRational::one()]);
        while !r1.is_empty() {
            let (q, rem) = poly_divrem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, rem);
            let t2 = poly_sub(&t0, &poly_mul(&q, &t1));
            t0 = std::mem::replace(&mut t1, t2);
        }
        if r0.len() != 1 {
            return Err(Error::Extension(format!(
                "{self} is a zero divisor modulo {ext} (the defining polynomial is reducible)"
            )));
        }
        let scale = r0[0].recip();
        let inv = t0.into_iter().map(|c| c * &scale).collect();
        Ok(Self::from_coeffs(inv, Some(Arc::clone(ext))))
    }
}

impl From<BigRational> for ExtScalar {
    fn from(c: BigRational) -> Self {
        Self::constant(c)
    }
}

impl PartialEq for ExtScalar {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Add for ExtScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let ext = Self::join(&self.ext, &rhs.ext);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut a = self.coeffs;
        a.resize(n, BigRational::zero());
        for (x, y) in a.iter_mut().zip(rhs.coeffs) {
            *x = &*x + y;
        }
        Self::from_coeffs(a, ext)
    }
}

impl Neg for ExtScalar {
    type Output = Self;
    fn neg(self) -> Self {
        ExtScalar {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            ext: self.ext,
        }
    }
}

impl Sub for ExtScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for ExtScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let ext = Self::join(&self.ext, &rhs.ext);
        Self::from_coeffs(poly_mul(&self.coeffs, &rhs.coeffs), ext)
    }
}

impl Zero for ExtScalar {
    fn zero() -> Self {
        ExtScalar {
            coeffs: Vec::new(),
            ext: None,
        }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for ExtScalar {
    fn one() -> Self {
        Self::constant(BigRational::one())
    }
}

impl Scalar for ExtScalar {
    fn from_i64(v: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(v)))
    }
}

impl FieldScalar for ExtScalar {
    fn checked_inv(&self) -> Option<Self> {
        self.try_inverse().ok()
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.len() <= 1 {
            return write!(f, "{}", self.as_rational().expect("constant"));
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            let power = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            match (k, abs.is_one()) {
                (0, _) => write!(f, "{abs}")?,
                (_, true) => f.write_str(&power)?,
                (_, false) => write!(f, "{abs}*{power}")?,
            }
        }
        Ok(())
    }
}

/// Exact `n`-th root of a rational, if one exists (negative radicands only
/// for odd `n`).
pub fn rational_nth_root(a: &BigRational, n: u32) -> Option<BigRational> {
    if n == 0 {
        return None;
    }
    if a.is_zero() {
        return Some(BigRational::zero());
    }
    let negative = a.is_negative();
    if negative && n.is_multiple_of(2) {
        return None;
    }
    let root_of = |x: &BigInt| -> Option<BigInt> {
        let r = x.abs().nth_root(n);
        (Pow::pow(&r, n) == x.abs()).then_some(r)
    };
    let num = root_of(a.numer())?;
    let den = root_of(a.denom())?;
    let num = if negative { BigInt::from_biguint(Sign::Minus, num.magnitude().clone()) } else { num };
    Some(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn generator_power_is_radicand() {
        let ext = RadicalExtension::new(3, q(2, 1)).unwrap();
        let y = ext.generator();
        let y3 = y.clone() * y.clone() * y.clone();
        assert_eq!(y3.as_rational(), Some(q(2, 1)));
    }

    #[test]
    fn inverse_of_generator() {
        let ext = RadicalExtension::new(2, q(5, 1)).unwrap();
        let y = ext.generator();
        let inv = y.try_inverse().unwrap();
        assert_eq!(inv.coeffs(), &[q(0, 1), q(1, 5)]);
        assert!((y * inv).is_one());
    }

    #[test]
    fn inverse_of_general_element() {
        let ext = RadicalExtension::new(3, q(2, 1)).unwrap();
        let y = ext.generator();
        let x = ExtScalar::from_i64(1) + y.clone() + y.clone() * y.clone() * ExtScalar::constant(q(3, 2));
        let inv = x.try_inverse().unwrap();
        assert!((x * inv).is_one());
    }

    #[test]
    fn zero_divisor_detected() {
        // y² − 4 = (y − 2)(y + 2)
        let ext = RadicalExtension::new(2, q(4, 1)).unwrap();
        let y = ext.generator();
        let x = y - ExtScalar::from_i64(2);
        assert!(matches!(x.try_inverse(), Err(Error::Extension(_))));
        assert!(ExtScalar::zero().checked_inv().is_none());
    }

    #[test]
    fn display() {
        let ext = RadicalExtension::new(3, q(2, 1)).unwrap();
        let y = ext.generator();
        let x = ExtScalar::from_i64(1) - y.clone() * ExtScalar::constant(q(1, 2)) + y.clone() * y;
        assert_eq!(x.to_string(), "1 - 1/2*y + y^2");
        assert_eq!(ExtScalar::constant(q(-1, 8)).to_string(), "-1/8");
        assert_eq!(ext.to_string(), "y^3 = 2");
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_nth_root(&q(4, 9), 2), Some(q(2, 3)));
        assert_eq!(rational_nth_root(&q(-8, 27), 3), Some(q(-2, 3)));
        assert_eq!(rational_nth_root(&q(-4, 1), 2), None);
        assert_eq!(rational_nth_root(&q(2, 1), 2), None);
        assert_eq!(rational_nth_root(&q(7, 1), 1), Some(q(7, 1)));
    }
}
