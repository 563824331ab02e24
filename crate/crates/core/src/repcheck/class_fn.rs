use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use super::character::mn_character;
use super::partition::{partitions, Partition};
use crate::birkhoff::perm::orbit_lengths;
use crate::birkhoff::PermSet;
use crate::error::{Error, Result};

/// Pair scans over `A × A` are refused above this many pairs.
pub const PAIR_SCAN_BUDGET: u128 = 100_000_000;

/// A class function on S_n stored by cycle type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigRational>,
}

impl ClassFunction {
    /// The zero function on S_n.
    pub fn zero(n: usize) -> Self {
        let values = partitions(n)
            .into_iter()
            .map(|p| (p, BigRational::zero()))
            .collect();
        ClassFunction { n, values }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn value(&self, mu: &Partition) -> &BigRational {
        &self.values[mu]
    }

    pub fn set(&mut self, mu: &Partition, value: BigRational) -> Result<()> {
        match self.values.get_mut(mu) {
            Some(slot) => {
                *slot = value;
                Ok(())
            }
            None => Err(Error::SizeMismatch {
                expected: self.n,
                actual: mu.n(),
            }),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigRational)> {
        self.values.iter()
    }
}

impl fmt::Display for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (mu, v) in &self.values {
            writeln!(f, "phi[{mu}]={v}")?;
        }
        Ok(())
    }
}

fn check_pairs(set: &PermSet) -> Result<u128> {
    if set.is_empty() {
        return Err(Error::invalid("permutation set is empty"));
    }
    let pairs = (set.len() as u128).pow(2);
    if pairs > PAIR_SCAN_BUDGET {
        return Err(Error::budget("pair scan", pairs, PAIR_SCAN_BUDGET));
    }
    Ok(pairs)
}

/// The distribution of the cycle type of `π π'⁻¹` over uniform pairs from `A`.
pub fn phi_from_set(set: &PermSet) -> Result<ClassFunction> {
    let pairs = check_pairs(set)?;
    let n = set.n();
    let inverses: Vec<_> = set.members().iter().map(|p| p.inverse()).collect();
    let counts = set
        .members()
        .par_iter()
        .fold(BTreeMap::<Vec<usize>, u64>::new, |mut acc, a| {
            let a = a.raw();
            let mut tau = vec![0u8; n];
            for b_inv in &inverses {
                for (t, &j) in tau.iter_mut().zip(b_inv.raw()) {
                    *t = a[j as usize];
                }
                let mut lens = orbit_lengths(&tau);
                lens.sort_unstable_by(|x, y| y.cmp(x));
                *acc.entry(lens).or_default() += 1;
            }
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    let mut phi = ClassFunction::zero(n);
    let denom = BigInt::from(pairs);
    for (lens, count) in counts {
        let mu = Partition::new(lens)?;
        phi.set(&mu, BigRational::new(BigInt::from(count), denom.clone()))?;
    }
    Ok(phi)
}

/// `χ^λ(φ) = Σ_μ φ(μ) χ^λ(μ)`.
pub fn chi_on_phi(lambda: &Partition, phi: &ClassFunction) -> Result<BigRational> {
    if lambda.n() != phi.n() {
        return Err(Error::SizeMismatch {
            expected: phi.n(),
            actual: lambda.n(),
        });
    }
    let mut total = BigRational::zero();
    for (mu, v) in phi.iter() {
        if v.is_zero() {
            continue;
        }
        let chi = mn_character(lambda, mu)?;
        total += v * BigRational::from_integer(chi.into());
    }
    Ok(total)
}

/// `χ^{h_m}(φ)` for `m = 0..n−1`.
pub fn hook_values(phi: &ClassFunction) -> Vec<BigRational> {
    (0..phi.n())
        .map(|m| chi_on_phi(&Partition::hook(phi.n(), m).unwrap(), phi).unwrap())
        .collect()
}

/// `⟨φ, ψ⟩` through the hook expansion `Σ_m (−1)^m χ^{h_m}(φ)`.
pub fn ip_characters(phi: &ClassFunction) -> BigRational {
    hook_values(phi)
        .into_iter()
        .enumerate()
        .fold(BigRational::zero(), |acc, (m, v)| {
            if m % 2 == 0 {
                acc + v
            } else {
                acc - v
            }
        })
}

/// `n · Pr_{π,π' ∈ A}[π π'⁻¹ is an n-cycle]`, by direct count.
pub fn ip_direct(set: &PermSet) -> Result<BigRational> {
    let pairs = check_pairs(set)?;
    let n = set.n();
    let inverses: Vec<_> = set.members().iter().map(|p| p.inverse()).collect();
    let hits: u64 = set
        .members()
        .par_iter()
        .map(|a| {
            let a = a.raw();
            inverses
                .iter()
                .filter(|b_inv| is_full_cycle(a, b_inv.raw()))
                .count() as u64
        })
        .sum();
    Ok(BigRational::new(
        BigInt::from(hits) * BigInt::from(n),
        BigInt::from(pairs),
    ))
}

fn is_full_cycle(a: &[u8], b_inv: &[u8]) -> bool {
    let n = a.len();
    let mut i = 0usize;
    for step in 1..=n {
        i = a[b_inv[i] as usize] as usize;
        if i == 0 {
            return step == n;
        }
    }
    false
}

/// Whether `χ^λ(φ) ≥ 0` for every `λ ⊢ n`.
pub fn all_characters_nonnegative(phi: &ClassFunction) -> bool {
    partitions(phi.n())
        .iter()
        .all(|l| !chi_on_phi(l, phi).unwrap().is_negative())
}

/// Whether `χ^{h_m}(φ_A) = χ^{h_{n−1−m}}(φ_A)` for every `1 ≤ m ≤ n−1`.
///
/// Requires every element of `A` to have the same sign.
pub fn duality_check(set: &PermSet) -> Result<bool> {
    if set.common_sign().is_none() {
        return Err(Error::MixedSign);
    }
    let hooks = hook_values(&phi_from_set(set)?);
    let n = set.n();
    Ok((1..n).all(|m| hooks[m] == hooks[n - 1 - m]))
}

/// `dim S^λ`, read off as the character at the identity.
pub fn dimension(lambda: &Partition) -> BigUint {
    let chi = mn_character(lambda, &Partition::identity_type(lambda.n())).unwrap();
    BigUint::try_from(chi).unwrap_or_else(|_| BigUint::one())
}
