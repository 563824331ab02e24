//! The action of a permutation set on ordered k-tuples of distinct points,
//! i.e. the Young permutation module `M^{h_k}`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::birkhoff::PermSet;
use crate::cycles::binomial;
use crate::error::{Error, Result};

/// Tuple tables with more than this many `(I, J)` entries are refused.
pub const TUPLE_TABLE_BUDGET: u128 = 100_000_000;

struct TupleStats {
    sum_sq: u128,
    max_count: u64,
}

fn falling_u128(n: usize, k: usize) -> u128 {
    (0..k).map(|i| (n - i) as u128).product()
}

fn arrangements(n: usize, k: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    let mut used = vec![false; n];
    fn rec(n: usize, k: usize, cur: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v as u8);
                rec(n, k, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    rec(n, k, &mut cur, &mut used, &mut out);
    out
}

fn tuple_stats(set: &PermSet, k: usize) -> Result<TupleStats> {
    let n = set.n();
    if set.is_empty() {
        return Err(Error::invalid("permutation set is empty"));
    }
    if k > n {
        return Err(Error::invalid(format!("tuple length {k} exceeds n = {n}")));
    }
    let rows = falling_u128(n, k);
    if rows * rows > TUPLE_TABLE_BUDGET {
        return Err(Error::budget(
            "tuple table",
            rows * rows,
            TUPLE_TABLE_BUDGET,
        ));
    }
    let stats = arrangements(n, k)
        .par_iter()
        .map(|tuple| {
            let mut images: Vec<u64> = set
                .members()
                .iter()
                .map(|p| {
                    let raw = p.raw();
                    tuple
                        .iter()
                        .fold(0u64, |acc, &i| acc * n as u64 + raw[i as usize] as u64)
                })
                .collect();
            images.sort_unstable();
            let mut sum_sq = 0u128;
            let mut max_count = 0u64;
            for run in images.chunk_by(|a, b| a == b) {
                let c = run.len() as u64;
                sum_sq += (c as u128).pow(2);
                max_count = max_count.max(c);
            }
            TupleStats { sum_sq, max_count }
        })
        .reduce(
            || TupleStats {
                sum_sq: 0,
                max_count: 0,
            },
            |a, b| TupleStats {
                sum_sq: a.sum_sq + b.sum_sq,
                max_count: a.max_count.max(b.max_count),
            },
        );
    Ok(stats)
}

/// `Σ_{I,J ∈ [n]_k} Pr_{π∈A}[π(I) = J]²`, the squared Frobenius norm of
/// `M^{h_k}` applied to the uniform average of `A`.
pub fn young_trace(set: &PermSet, k: usize) -> Result<BigRational> {
    let stats = tuple_stats(set, k)?;
    let size = BigInt::from(set.len());
    Ok(BigRational::new(BigInt::from(stats.sum_sq), &size * &size))
}

/// Largest tuple-transition probability at tuple length `m`, together with
/// `c_emp = (max_prob · (n)_m)^{1/m}`.
pub fn uniformity(set: &PermSet, m: usize) -> Result<(BigRational, f64)> {
    let n = set.n();
    if m == 0 || m >= n {
        return Err(Error::invalid(format!(
            "uniformity needs 1 <= m < n, got m = {m}, n = {n}"
        )));
    }
    let stats = tuple_stats(set, m)?;
    let max_prob = BigRational::new(BigInt::from(stats.max_count), BigInt::from(set.len()));
    let scaled = &max_prob * BigRational::from_integer(BigInt::from(falling_u128(n, m)));
    let c_emp = scaled
        .to_f64()
        .unwrap_or(f64::INFINITY)
        .powf(1.0 / m as f64);
    Ok((max_prob, c_emp))
}

/// `(c^k − 1)/C(k, m)` with `c^k = max_prob · (n)_k` held exactly.
pub fn lemma_bound(max_prob: &BigRational, n: usize, k: usize, m: usize) -> Result<BigRational> {
    if m == 0 || m > k || k >= n {
        return Err(Error::invalid(format!(
            "lemma bound needs 1 <= m <= k < n, got m = {m}, k = {k}, n = {n}"
        )));
    }
    let ck = max_prob * BigRational::from_integer(BigInt::from(falling_u128(n, k)));
    let choose = BigRational::from_integer(BigInt::from(binomial(k, m)));
    let one = BigRational::from_integer(1.into());
    Ok((ck - one) / choose)
}
