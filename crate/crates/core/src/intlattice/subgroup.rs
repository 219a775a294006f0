use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::exponent::ExponentVector;

/// Upper bound on `m^r` for explicit enumeration.
pub const MAX_ENUMERATION: u64 = 1 << 22;

/// A subgroup of `(ℤ/mℤ)^r` stored as its full element set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModSubgroup {
    modulus: u64,
    rank: usize,
    elements: BTreeSet<Vec<u64>>,
}

impl ModSubgroup {
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &BTreeSet<Vec<u64>> {
        &self.elements
    }

    /// Membership of `v` reduced mod `m`.
    pub fn contains(&self, v: &ExponentVector) -> bool {
        v.len() == self.rank && self.elements.contains(&v.residues(self.modulus))
    }

    pub fn contains_residues(&self, v: &[u64]) -> bool {
        self.elements.contains(v)
    }

    /// Exhaustive check of the subgroup axioms (zero present, closed under
    /// addition, order divides `m^r`).
    pub fn is_subgroup(&self) -> bool {
        let zero = vec![0; self.rank];
        if !self.elements.contains(&zero) {
            return false;
        }
        let total = (self.modulus as u128).pow(self.rank as u32);
        if !total.is_multiple_of(self.elements.len() as u128) {
            return false;
        }
        self.elements.iter().all(|a| {
            self.elements
                .iter()
                .all(|b| self.elements.contains(&add_mod(a, b, self.modulus)))
        })
    }
}

fn add_mod(a: &[u64], b: &[u64], m: u64) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| (x + y) % m).collect()
}

fn check_args(rank: usize, vectors: &[ExponentVector], m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::Argument("modulus must be positive".into()));
    }
    if rank == 0 {
        return Err(Error::Argument("rank must be positive".into()));
    }
    for v in vectors {
        v.check_len(rank)?;
    }
    let size = (m as u128).checked_pow(rank as u32);
    if size.is_none_or(|s| s > MAX_ENUMERATION as u128) {
        return Err(Error::Argument(format!(
            "(Z/{m}Z)^{rank} is too large for explicit enumeration"
        )));
    }
    Ok(())
}

/// Subgroup of `(ℤ/mℤ)^rank` generated by `vectors` mod `m`, by closure.
pub fn span(rank: usize, vectors: &[ExponentVector], m: u64) -> Result<ModSubgroup> {
    check_args(rank, vectors, m)?;
    let gens: Vec<Vec<u64>> = vectors.iter().map(|v| v.residues(m)).collect();
    let mut elements = BTreeSet::new();
    let zero = vec![0; rank];
    elements.insert(zero.clone());
    let mut frontier = vec![zero];
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = add_mod(&x, g, m);
            if elements.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    Ok(ModSubgroup {
        modulus: m,
        rank,
        elements,
    })
}

/// All `a ∈ (ℤ/mℤ)^rank` with `Σ a_l·v_l ≡ 0 (mod m)` for every input `v`,
/// found by testing every candidate.
pub fn stabilizer(rank: usize, vectors: &[ExponentVector], m: u64) -> Result<ModSubgroup> {
    check_args(rank, vectors, m)?;
    let gens: Vec<Vec<u64>> = vectors.iter().map(|v| v.residues(m)).collect();
    let mut elements = BTreeSet::new();
    let mut a = vec![0u64; rank];
    loop {
        let fixes_all = gens.iter().all(|v| {
            a.iter()
                .zip(v)
                .fold(0u64, |acc, (x, y)| (acc + x * y % m) % m)
                == 0
        });
        if fixes_all {
            elements.insert(a.clone());
        }
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == rank {
                return Ok(ModSubgroup {
                    modulus: m,
                    rank,
                    elements,
                });
            }
            a[pos] += 1;
            if a[pos] < m {
                break;
            }
            a[pos] = 0;
            pos += 1;
        }
    }
}
