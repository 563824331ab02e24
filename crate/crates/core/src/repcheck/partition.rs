use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

/// An integer partition `λ_1 ≥ λ_2 ≥ ... ≥ λ_k ≥ 1`.
///
/// Serves as a tableau shape, as the cycle type of a permutation, and (through
/// [`Partition::hook`]) as the hook `h_m = (n−m, 1^m)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        Ok(Partition { parts })
    }

    /// Sorts the parts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `h_m = (n−m, 1, ..., 1)` with `m` ones, `0 ≤ m ≤ n−1`.
    pub fn hook(n: usize, m: usize) -> Result<Self> {
        if n == 0 || m >= n {
            return Err(Error::invalid(format!("hook h_{m} needs 0 <= m < n = {n}")));
        }
        let mut parts = vec![n - m];
        parts.resize(m + 1, 1);
        Ok(Partition { parts })
    }

    /// The single-row partition `(n)`, the cycle type of an n-cycle.
    pub fn full_cycle(n: usize) -> Self {
        Partition { parts: vec![n] }
    }

    /// `(1^n)`, the cycle type of the identity.
    pub fn identity_type(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `Some(m)` if this is the hook `h_m`.
    pub fn hook_index(&self) -> Option<usize> {
        (!self.parts.is_empty() && self.parts[1..].iter().all(|&p| p == 1))
            .then(|| self.parts.len() - 1)
    }

    pub fn transpose(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    /// Dominance order: every prefix sum of `self` is at least that of `other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        let (mut a, mut b) = (0, 0);
        for i in 0..self.parts.len().max(other.parts.len()) {
            a += self.parts.get(i).copied().unwrap_or(0);
            b += other.parts.get(i).copied().unwrap_or(0);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Sign of any permutation with this cycle type.
    pub fn sign(&self) -> i32 {
        if (self.n() - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Centralizer order `z_μ = Π k^{m_k} m_k!`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        let mut i = 0;
        while i < self.parts.len() {
            let k = self.parts[i];
            let mult = self.parts[i..].iter().take_while(|&&p| p == k).count();
            for j in 1..=mult {
                z *= k;
                z *= j;
            }
            i += mult;
        }
        z
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// All partitions of `n`, in reverse lexicographic order starting from `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            cur.push(p);
            rec(remaining - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Number of permutations of cycle type `mu`: `n!/z_μ`.
pub fn class_size(mu: &Partition) -> BigUint {
    let fact = (1..=mu.n()).fold(BigUint::one(), |acc, i| acc * i);
    fact / mu.centralizer_order()
}
