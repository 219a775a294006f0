//! Selection of distinguished exponents by minor-gcd filtration.
//!
//! Starting from `M₀ = m·I_r`, each round discards every remaining exponent
//! `v` with `(r)gcd([M_l | v]) = (r)gcd(M_l)` and appends the smallest
//! survivor (under the chosen monomial ordering) as a new column. The
//! maximal-minor gcd strictly decreases along the way, so the loop ends after
//! at most `Ω(m^r)` rounds.

use std::cmp::Ordering;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exponent::{ExponentVector, MonomialOrdering};
use crate::intlattice::{gcd_minors, span, IntMatrix};
use crate::scalar::Scalar;
use crate::series::PuiseuxSeries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedResult {
    /// Denominator the computation ran over.
    pub m: BigUint,
    /// Distinguished exponents in selection order.
    pub pairs: Vec<ExponentVector>,
    /// `(r)gcd(M₀), (r)gcd(M₁), …`; one longer than `pairs`.
    pub gcd_chain: Vec<BigUint>,
    /// `m^r / (r)gcd(M_s)`.
    pub degree: BigUint,
}

/// Rewrites `ζ` over its minimal denominator by cancelling
/// `g = gcd(m, all exponent entries)`.
pub fn normalize_denominator<C: Scalar>(zeta: &PuiseuxSeries<C>) -> Result<PuiseuxSeries<C>> {
    if zeta.is_zero() {
        return Err(Error::Domain("cannot normalize the zero series".into()));
    }
    let g = zeta
        .terms()
        .flat_map(|(e, _)| e.entries())
        .fold(zeta.denominator().clone(), |g, x| g.gcd(x));
    Ok(zeta.divide_denominator(&g))
}

fn common_rank(vectors: &[ExponentVector]) -> Result<Option<usize>> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    for v in vectors {
        v.check_len(first.len())?;
    }
    Ok(Some(first.len()))
}

fn to_column(v: &ExponentVector) -> Vec<BigInt> {
    v.to_bigints()
}

fn top_gcd(a: &IntMatrix<BigInt>, r: usize) -> BigUint {
    gcd_minors(a, r)
        .expect("r never exceeds min(rows, cols) for [m·I_r | …]")
        .to_biguint()
        .expect("minor gcd is nonnegative")
}

/// The augmented matrix `[m·I_r | v₁ … v_t]`.
pub fn augmented_matrix(r: usize, m: &BigUint, columns: &[ExponentVector]) -> Result<IntMatrix<BigInt>> {
    let mut a = IntMatrix::scalar_identity(r, BigInt::from(m.clone()))?;
    for v in columns {
        a = a.append_column(&to_column(v))?;
    }
    Ok(a)
}

/// Runs the filtration on the support `support` over denominator `m`.
///
/// The caller is expected to pass the minimal denominator (see
/// [`normalize_denominator`]); the engine does not renormalize.
pub fn distinguished_exponents(
    support: &[ExponentVector],
    m: &BigUint,
    ord: MonomialOrdering,
) -> Result<DistinguishedResult> {
    if m.is_zero() {
        return Err(Error::Argument("denominator must be positive".into()));
    }
    let Some(r) = common_rank(support)? else {
        return Err(Error::Domain("empty support".into()));
    };

    let mut remaining: Vec<ExponentVector> = support.to_vec();
    remaining.sort();
    remaining.dedup();

    let mut current = augmented_matrix(r, m, &[])?;
    let mut current_gcd = top_gcd(&current, r);
    assert_eq!(current_gcd, Pow::pow(m, r), "(r)gcd(m·I_r) must be m^r");

    let mut pairs = Vec::new();
    let mut gcd_chain = vec![current_gcd.clone()];

    loop {
        remaining.retain(|v| {
            let widened = current.append_column(&to_column(v)).expect("rank checked");
            top_gcd(&widened, r) != current_gcd
        });
        let Some(next) = remaining
            .iter()
            .min_by(|a, b| ord.cmp_unchecked(a, b))
            .cloned()
        else {
            break;
        };
        current = current.append_column(&to_column(&next))?;
        let g = top_gcd(&current, r);
        assert!(
            !g.is_zero() && g < current_gcd && (&current_gcd % &g).is_zero(),
            "minor gcd must strictly descend along divisors"
        );
        current_gcd = g;
        gcd_chain.push(current_gcd.clone());
        pairs.push(next);
    }

    let degree = Pow::pow(m, r) / &current_gcd;
    Ok(DistinguishedResult {
        m: m.clone(),
        pairs,
        gcd_chain,
        degree,
    })
}

/// Degree of the extension generated by the monomials with exponents `pairs`
/// over denominator `m`: `m^r / (r)gcd([m·I_r | pairs])`.
pub fn extension_degree(pairs: &[ExponentVector], m: &BigUint) -> Result<BigUint> {
    if m.is_zero() {
        return Err(Error::Argument("denominator must be positive".into()));
    }
    let Some(r) = common_rank(pairs)? else {
        return Ok(BigUint::one());
    };
    let a = augmented_matrix(r, m, pairs)?;
    Ok(Pow::pow(m, r) / top_gcd(&a, r))
}

/// Checks that every exponent of `support` lies in the subgroup of
/// `(ℤ/mℤ)^r` generated by `pairs`, by explicit enumeration.
pub fn verify_corollary(support: &[ExponentVector], pairs: &[ExponentVector], m: u64) -> Result<bool> {
    let mut all = support.to_vec();
    all.extend_from_slice(pairs);
    let Some(r) = common_rank(&all)? else {
        return Ok(true);
    };
    let generated = span(r, pairs, m)?;
    Ok(support.iter().all(|v| generated.contains(v)))
}

impl DistinguishedResult {
    pub fn nvars(&self) -> Option<usize> {
        self.pairs.first().map(ExponentVector::len)
    }

    /// `m` as a machine integer, when it fits.
    pub fn m_u64(&self) -> Option<u64> {
        self.m.to_u64()
    }

    /// Whether the selected exponents are sorted under `ord`.
    pub fn is_sorted(&self, ord: MonomialOrdering) -> bool {
        self.pairs
            .windows(2)
            .all(|w| ord.cmp_unchecked(&w[0], &w[1]) == Ordering::Less)
    }
}
