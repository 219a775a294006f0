//! Classical invariants read off from distinguished exponents: the
//! characteristic `{m, β₁, …, β_g}` and Puiseux pairs of a plane branch, and
//! the characteristic monomials of a quasi-ordinary branch.

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::distinguished::{distinguished_exponents, extension_degree, normalize_denominator, DistinguishedResult};
use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, MonomialOrdering};
use crate::scalar::Scalar;
use crate::series::PuiseuxSeries;

/// Characteristic exponents of a plane branch `Y = ζ(X^{1/m})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchCharacteristic {
    m: BigUint,
    betas: Vec<BigUint>,
    e_chain: Vec<BigUint>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PuiseuxPair {
    pub p: BigUint,
    pub q: BigUint,
}

impl fmt::Display for PuiseuxPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

impl BranchCharacteristic {
    /// Validates `β₁ < … < β_g`, `β_k ∉ mℤ`, and that every `β_l` strictly
    /// lowers `e_l = gcd(e_{l−1}, β_l)` (with `e₀ = m`).
    pub fn new(m: BigUint, betas: Vec<BigUint>) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::Argument("denominator must be positive".into()));
        }
        if betas.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain("characteristic exponents must increase strictly".into()));
        }
        let mut e_chain = Vec::with_capacity(betas.len());
        let mut e = m.clone();
        for b in &betas {
            if b.is_zero() || (b % &m).is_zero() {
                return Err(Error::Domain(format!("β = {b} is a multiple of m = {m}")));
            }
            let next = e.gcd(b);
            if next == e {
                return Err(Error::Domain(format!("β = {b} does not lower gcd {e}")));
            }
            e = next;
            e_chain.push(e.clone());
        }
        Ok(BranchCharacteristic { m, betas, e_chain })
    }

    /// Inverse of [`puiseux_pairs`]: `m = q₁⋯q_g`, `e_l = q_{l+1}⋯q_g`,
    /// `β_l = p_l·e_l`.
    pub fn from_pairs(pairs: &[PuiseuxPair]) -> Result<Self> {
        let mut e = BigUint::one();
        let mut betas = Vec::with_capacity(pairs.len());
        for pair in pairs.iter().rev() {
            betas.push(&pair.p * &e);
            e *= &pair.q;
        }
        betas.reverse();
        Self::new(e, betas)
    }

    pub fn m(&self) -> &BigUint {
        &self.m
    }

    pub fn betas(&self) -> &[BigUint] {
        &self.betas
    }

    pub fn e_chain(&self) -> &[BigUint] {
        &self.e_chain
    }

    /// Number of characteristic exponents `g`.
    pub fn genus(&self) -> usize {
        self.betas.len()
    }

    /// `e_g = 1`, or `m = 1` with no exponents.
    pub fn is_complete(&self) -> bool {
        self.e_chain.last().unwrap_or(&self.m).is_one()
    }
}

/// Characteristic `{m, β₁, …, β_g}` of a univariate series, obtained by
/// running the filtration with the natural order on ℕ. The series is first
/// rewritten over its minimal denominator.
pub fn characteristic_of_branch<C: Scalar>(zeta: &PuiseuxSeries<C>) -> Result<BranchCharacteristic> {
    if zeta.nvars() != 1 {
        return Err(Error::Domain(format!(
            "a plane branch has one variable, got {}",
            zeta.nvars()
        )));
    }
    let zeta = normalize_denominator(zeta)?;
    let support: Vec<ExponentVector> = zeta.support().into_iter().collect();
    let res = distinguished_exponents(&support, zeta.denominator(), MonomialOrdering::Lex)?;
    let betas = res
        .pairs
        .into_iter()
        .map(|v| v.into_entries().pop().expect("one entry"))
        .collect();
    BranchCharacteristic::new(zeta.denominator().clone(), betas)
}

/// Puiseux pairs `(p_l, q_l)` with `e_{l−1} = q_l·e_l`, `β_l = p_l·e_l`.
pub fn puiseux_pairs(c: &BranchCharacteristic) -> Result<Vec<PuiseuxPair>> {
    if !c.is_complete() {
        return Err(Error::IncompleteCharacteristic(format!(
            "last gcd is {}, expected 1",
            c.e_chain.last().unwrap_or(&c.m)
        )));
    }
    let mut prev = &c.m;
    Ok(c.betas
        .iter()
        .zip(&c.e_chain)
        .map(|(b, e)| {
            let pair = PuiseuxPair { p: b / e, q: prev / e };
            prev = e;
            pair
        })
        .collect())
}

/// Distinguished exponents under a graded ordering, together with the two
/// properties expected of quasi-ordinary characteristic monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiOrdinaryReport {
    pub result: DistinguishedResult,
    /// Per selected exponent: no other support element lies below it
    /// componentwise.
    pub minimal: Vec<bool>,
    /// Per selected exponent: dropping it lowers the extension degree.
    pub irredundant: Vec<bool>,
}

impl QuasiOrdinaryReport {
    pub fn all_minimal(&self) -> bool {
        self.minimal.iter().all(|&b| b)
    }

    pub fn all_irredundant(&self) -> bool {
        self.irredundant.iter().all(|&b| b)
    }
}

pub fn quasi_ordinary_monomials<C: Scalar>(
    zeta: &PuiseuxSeries<C>,
    ord: MonomialOrdering,
) -> Result<QuasiOrdinaryReport> {
    if !ord.is_graded() {
        return Err(Error::Argument(format!("ordering {ord} is not graded")));
    }
    let zeta = normalize_denominator(zeta)?;
    let support: Vec<ExponentVector> = zeta.support().into_iter().collect();
    let m = zeta.denominator();
    let result = distinguished_exponents(&support, m, ord)?;

    let minimal = result
        .pairs
        .iter()
        .map(|p| !support.iter().any(|w| w != p && w.le_componentwise(p)))
        .collect();

    let mut irredundant = Vec::with_capacity(result.pairs.len());
    for i in 0..result.pairs.len() {
        let mut rest = result.pairs.clone();
        rest.remove(i);
        irredundant.push(extension_degree(&rest, m)? < result.degree);
    }

    Ok(QuasiOrdinaryReport {
        result,
        minimal,
        irredundant,
    })
}
