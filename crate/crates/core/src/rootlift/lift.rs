use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::ext::{rational_nth_root, ExtScalar, RadicalExtension};
use crate::error::{Error, Result};
use crate::scalar::{FieldScalar, Scalar};
use crate::series::PuiseuxSeries;

/// Approximate n-th root `Σ b_k T^{k + λ₀/n}` of a power series.
///
/// Terms are keyed by the integer offset `k`, so every exponent lies in
/// `λ₀/n + ℕ` by construction.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedRoot<F> {
    n: u32,
    lambda0: u64,
    terms: BTreeMap<u64, F>,
    lambdas: Vec<u64>,
    achieved_order: u64,
}

impl<F: Scalar> TruncatedRoot<F> {
    /// Wraps hand-built terms (offset `k` ↦ coefficient of `T^{k + λ₀/n}`),
    /// e.g. to feed [`verify_root`].
    pub fn from_terms(n: u32, lambda0: u64, terms: BTreeMap<u64, F>) -> Self {
        let terms = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        TruncatedRoot {
            n,
            lambda0,
            terms,
            lambdas: Vec::new(),
            achieved_order: 0,
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Order `ν(ζ)` of the series being rooted.
    pub fn lambda0(&self) -> u64 {
        self.lambda0
    }

    /// Coefficients keyed by offset from `λ₀/n`.
    pub fn terms(&self) -> &BTreeMap<u64, F> {
        &self.terms
    }

    /// Orders `λ₀ < λ₁ < …` of the successive defects `rootⁿ − ζ` met while
    /// lifting.
    pub fn lambdas(&self) -> &[u64] {
        &self.lambdas
    }

    /// `rootⁿ − ζ` has no term of order below this.
    pub fn achieved_order(&self) -> u64 {
        self.achieved_order
    }

    pub fn exponent_of(&self, offset: u64) -> BigRational {
        BigRational::new(
            BigInt::from(offset) * BigInt::from(self.n) + BigInt::from(self.lambda0),
            BigInt::from(self.n),
        )
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms_with_exponents(&self) -> impl Iterator<Item = (BigRational, &F)> {
        self.terms.iter().map(|(&k, c)| (self.exponent_of(k), c))
    }
}

fn mul_trunc<F: Scalar>(a: &BTreeMap<u64, F>, b: &BTreeMap<u64, F>, limit: u64) -> BTreeMap<u64, F> {
    let mut out: BTreeMap<u64, F> = BTreeMap::new();
    for (&i, x) in a {
        if i >= limit {
            break;
        }
        for (&j, y) in b {
            if i + j >= limit {
                break;
            }
            let entry = out.entry(i + j).or_insert_with(F::zero);
            *entry = entry.clone() + x.clone() * y.clone();
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn pow_trunc<F: Scalar>(base: &BTreeMap<u64, F>, mut n: u32, limit: u64) -> BTreeMap<u64, F> {
    let mut acc: BTreeMap<u64, F> = BTreeMap::from([(0, F::one())]);
    let mut sq = base.clone();
    while n > 0 {
        if n & 1 == 1 {
            acc = mul_trunc(&acc, &sq, limit);
        }
        n >>= 1;
        if n > 0 {
            sq = mul_trunc(&sq, &sq, limit);
        }
    }
    acc
}

fn pow_scalar<F: Scalar>(x: &F, n: u32) -> F {
    (0..n).fold(F::one(), |acc, _| acc * x.clone())
}

/// Lifts an n-th root of `zeta` (integer exponent ↦ coefficient) until
/// `rootⁿ − ζ` vanishes below `target_order`.
///
/// `leading_root` must satisfy `leading_rootⁿ = a_{λ₀}`. Each round reads the
/// initial term `d·T^λ` of the current defect and appends
/// `−d/(n·c^{n−1})·T^{λ − λ₀ + λ₀/n}`.
pub fn lift_nth_root<F: FieldScalar>(
    zeta: &BTreeMap<u64, F>,
    n: u32,
    target_order: u64,
    leading_root: F,
) -> Result<TruncatedRoot<F>> {
    if n == 0 {
        return Err(Error::Argument("root exponent must be positive".into()));
    }
    let Some((lambda0, lead)) = zeta.iter().find(|(_, c)| !c.is_zero()) else {
        return Err(Error::Domain("cannot take a root of the zero series".into()));
    };
    let lambda0 = *lambda0;
    if target_order <= lambda0 {
        return Err(Error::Argument(format!(
            "target order {target_order} must exceed the series order {lambda0}"
        )));
    }
    if pow_scalar(&leading_root, n) != *lead {
        return Err(Error::Extension(format!(
            "{leading_root:?} is not an n-th root of the leading coefficient {lead:?}"
        )));
    }
    let divisor = F::from_i64(i64::from(n)) * pow_scalar(&leading_root, n - 1);
    let inv = divisor
        .checked_inv()
        .ok_or_else(|| Error::Extension("n·c^(n-1) is not invertible".into()))?;

    let limit = target_order - lambda0;
    let mut terms = BTreeMap::from([(0u64, leading_root)]);
    let mut lambdas = vec![lambda0];
    let mut last = lambda0;

    loop {
        // rootⁿ = T^{λ₀}·Pⁿ with P = Σ b_k T^k
        let power = pow_trunc(&terms, n, limit);
        let defect_at = |e: u64| -> F {
            let p = power.get(&(e - lambda0)).cloned().unwrap_or_else(F::zero);
            let z = zeta.get(&e).cloned().unwrap_or_else(F::zero);
            p - z
        };
        let next = (last + 1..target_order)
            .map(|e| (e, defect_at(e)))
            .find(|(_, d)| !d.is_zero());
        let Some((lambda, d)) = next else {
            break;
        };
        terms.insert(lambda - lambda0, -(d * inv.clone()));
        lambdas.push(lambda);
        last = lambda;
    }

    Ok(TruncatedRoot {
        n,
        lambda0,
        terms,
        lambdas,
        achieved_order: target_order,
    })
}

/// Integer-exponent coefficients of a univariate series, failing when some
/// exponent is fractional.
pub fn power_series_coefficients<C: Scalar>(zeta: &PuiseuxSeries<C>) -> Result<BTreeMap<u64, C>> {
    if zeta.nvars() != 1 {
        return Err(Error::Domain(format!(
            "expected a series in one variable, got {}",
            zeta.nvars()
        )));
    }
    let m = zeta.denominator();
    zeta.terms()
        .map(|(e, c)| {
            let x = &e.entries()[0];
            if !(x % m).is_zero() {
                return Err(Error::Domain(format!(
                    "exponent {x}/{m} is not an integer; expected a power series"
                )));
            }
            let k = (x / m)
                .to_u64()
                .ok_or_else(|| Error::Argument("exponent too large".into()))?;
            Ok((k, c.clone()))
        })
        .collect()
}

/// Generic entry point: `leading_root` maps `a_{λ₀}` to a chosen n-th root.
pub fn nth_root_series_with<F: FieldScalar>(
    zeta: &PuiseuxSeries<F>,
    n: u32,
    target_order: u64,
    leading_root: impl FnOnce(&F) -> Result<F>,
) -> Result<TruncatedRoot<F>> {
    if zeta.is_zero() {
        return Err(Error::Domain("cannot take a root of the zero series".into()));
    }
    let coeffs = power_series_coefficients(zeta)?;
    let lead = coeffs.values().next().expect("nonzero series");
    let c = leading_root(lead)?;
    lift_nth_root(&coeffs, n, target_order, c)
}

/// n-th root of a rational power series. The leading root is rational when
/// `a_{λ₀}` is a rational n-th power, otherwise the symbol `y` with
/// `yⁿ = a_{λ₀}`.
pub fn nth_root_series(
    zeta: &PuiseuxSeries<BigRational>,
    n: u32,
    target_order: u64,
) -> Result<TruncatedRoot<ExtScalar>> {
    if n == 0 {
        return Err(Error::Argument("root exponent must be positive".into()));
    }
    let lifted = zeta.map_coeffs(|c| ExtScalar::constant(c.clone()));
    nth_root_series_with(&lifted, n, target_order, |a| {
        let a = a.as_rational().expect("rational input");
        match rational_nth_root(&a, n) {
            Some(c) => Ok(ExtScalar::constant(c)),
            None => Ok(RadicalExtension::new(n as usize, a)?.generator()),
        }
    })
}

/// Checks that `rootⁿ − ζ` has no term of order below `order`, and that every
/// exponent of `rootⁿ` below `order` is a nonnegative integer.
///
/// Works with rational exponents throughout, independently of the offset
/// bookkeeping used by the lifter.
pub fn verify_root<F: FieldScalar>(root: &TruncatedRoot<F>, zeta: &PuiseuxSeries<F>, order: u64) -> bool {
    if zeta.nvars() != 1 {
        return false;
    }
    if root.terms.is_empty() {
        return zeta.is_zero();
    }
    let bound = BigRational::from_integer(BigInt::from(order));
    let base: BTreeMap<BigRational, F> = root
        .terms_with_exponents()
        .map(|(e, c)| (e, c.clone()))
        .collect();

    let mut power: BTreeMap<BigRational, F> = BTreeMap::from([(BigRational::zero(), F::one())]);
    for _ in 0..root.n {
        let mut next: BTreeMap<BigRational, F> = BTreeMap::new();
        for (ea, ca) in &power {
            for (eb, cb) in &base {
                let e = ea + eb;
                if e >= bound {
                    continue;
                }
                let entry = next.entry(e).or_insert_with(F::zero);
                *entry = entry.clone() + ca.clone() * cb.clone();
            }
        }
        next.retain(|_, c| !c.is_zero());
        power = next;
    }

    if power.keys().any(|e| !e.is_integer()) {
        return false;
    }

    let m = BigInt::from(zeta.denominator().clone());
    for (e, c) in zeta.terms() {
        let x = BigRational::new(BigInt::from(e.entries()[0].clone()), m.clone());
        if x >= bound {
            continue;
        }
        let entry = power.entry(x).or_insert_with(F::zero);
        *entry = entry.clone() - c.clone();
    }
    power.values().all(Zero::is_zero)
}
