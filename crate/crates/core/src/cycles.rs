//! Simple cycles of the complete bipartite graph K_{n,n}.
//!
//! A simple cycle on `2k` vertices is written as the closed walk
//! `(x_1, y_1, x_2, y_2, ..., x_k, y_k, x_1)` with left vertices `xs` and right
//! vertices `ys`, all 1-based. Every cycle has exactly one canonical traversal:
//! `x_1` is the smallest left vertex and `y_1 < y_k`. Rotations are fixed by the
//! first condition and the reflection by the second, so enumeration needs no
//! deduplication memory.
//!
//! Cycles are ordered by `k` ascending, then lexicographically on `(xs, ys)`.
//! [`cycle_index`] and [`cycle_at`] give the position of a cycle in that order
//! and its inverse; uniform sampling draws a position.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigUint, RandBigInt};
use num_traits::{One, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SimpleCycle {
    // Field order gives the derived Ord the canonical enumeration order.
    k: usize,
    xs: Vec<usize>,
    ys: Vec<usize>,
}

impl SimpleCycle {
    /// Validates an already-canonical traversal.
    pub fn new(xs: Vec<usize>, ys: Vec<usize>) -> Result<Self> {
        check_walk(&xs, &ys)?;
        if xs[0] != *xs.iter().min().unwrap() {
            return Err(Error::MalformedCycle(
                "x_1 is not the smallest left vertex".into(),
            ));
        }
        if ys[0] > ys[ys.len() - 1] {
            return Err(Error::MalformedCycle("y_1 > y_k".into()));
        }
        Ok(SimpleCycle {
            k: xs.len(),
            xs,
            ys,
        })
    }

    /// Canonicalizes an arbitrary traversal `(x_1, y_1, ..., x_k, y_k)`.
    pub fn from_walk(xs: &[usize], ys: &[usize]) -> Result<Self> {
        check_walk(xs, ys)?;
        let k = xs.len();
        let start = (0..k).min_by_key(|&i| xs[i]).unwrap();
        let mut cx: Vec<usize> = (0..k).map(|i| xs[(start + i) % k]).collect();
        let mut cy: Vec<usize> = (0..k).map(|i| ys[(start + i) % k]).collect();
        if cy[0] > cy[k - 1] {
            // x_1, y_k, x_k, y_{k-1}, ..., x_2, y_1
            cx[1..].reverse();
            cy.reverse();
        }
        Ok(SimpleCycle { k, xs: cx, ys: cy })
    }

    /// Parses the flat traversal form `x1 y1 x2 y2 ... xk yk`.
    pub fn from_traversal(vertices: &[usize]) -> Result<Self> {
        if !vertices.len().is_multiple_of(2) {
            return Err(Error::MalformedCycle(format!(
                "odd number of vertices ({})",
                vertices.len()
            )));
        }
        let xs: Vec<usize> = vertices.iter().step_by(2).copied().collect();
        let ys: Vec<usize> = vertices.iter().skip(1).step_by(2).copied().collect();
        SimpleCycle::from_walk(&xs, &ys)
    }

    pub fn half_len(&self) -> usize {
        self.k
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    pub fn ys(&self) -> &[usize] {
        &self.ys
    }

    /// Largest vertex label used on either side.
    pub fn max_vertex(&self) -> usize {
        self.xs.iter().chain(&self.ys).copied().max().unwrap_or(0)
    }

    /// The edges `(x, y)` in traversal order, starting with `(x_1, y_1)`.
    /// Even positions carry sign +1, odd positions −1.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..2 * self.k).map(move |e| {
            let i = e / 2;
            if e % 2 == 0 {
                (self.xs[i], self.ys[i])
            } else {
                (self.xs[(i + 1) % self.k], self.ys[i])
            }
        })
    }

    /// `x1 y1 x2 y2 ... xk yk`.
    pub fn traversal_string(&self) -> String {
        let parts: Vec<String> = self
            .xs
            .iter()
            .zip(&self.ys)
            .flat_map(|(x, y)| [x.to_string(), y.to_string()])
            .collect();
        parts.join(" ")
    }
}

fn check_walk(xs: &[usize], ys: &[usize]) -> Result<()> {
    if xs.len() != ys.len() {
        return Err(Error::MalformedCycle(format!(
            "{} left vertices but {} right vertices",
            xs.len(),
            ys.len()
        )));
    }
    if xs.len() < 2 {
        return Err(Error::MalformedCycle("a simple cycle needs k >= 2".into()));
    }
    for side in [xs, ys] {
        if side.contains(&0) {
            return Err(Error::MalformedCycle("vertices are 1-based".into()));
        }
        let mut sorted = side.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::MalformedCycle("repeated vertex".into()));
        }
    }
    Ok(())
}

/// Text form `k x1 ... xk y1 ... yk`.
impl fmt::Display for SimpleCycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.k)?;
        for v in self.xs.iter().chain(&self.ys) {
            write!(f, " {v}")?;
        }
        Ok(())
    }
}

impl FromStr for SimpleCycle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums = s
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Error::MalformedCycle(e.to_string()))?;
        let (&k, rest) = nums
            .split_first()
            .ok_or_else(|| Error::MalformedCycle("empty".into()))?;
        if rest.len() != 2 * k {
            return Err(Error::MalformedCycle(format!(
                "expected {} vertices for k={k}, got {}",
                2 * k,
                rest.len()
            )));
        }
        SimpleCycle::new(rest[..k].to_vec(), rest[k..].to_vec())
    }
}

pub(crate) fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `a (a-1) ... (a-b+1)`, zero when `b > a`.
pub(crate) fn falling(a: usize, b: usize) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    (0..b).fold(BigUint::one(), |acc, i| acc * (a - i))
}

fn factorial(n: usize) -> BigUint {
    falling(n, n)
}

/// Number of simple cycles on `2k` vertices: `C(n,k)^2 k! (k-1)! / 2`.
pub fn stratum_count(n: usize, k: usize) -> BigUint {
    if k < 2 || k > n {
        return BigUint::zero();
    }
    let c = binomial(n, k);
    &c * &c * factorial(k) * factorial(k - 1) / 2u32
}

/// Exact number of simple cycles in K_{n,n}.
pub fn count_simple_cycles(n: usize) -> BigUint {
    (2..=n).map(|k| stratum_count(n, k)).sum()
}

/// Number of canonical `ys` sequences per `xs` sequence: `(n)_k / 2`.
pub(crate) fn ys_per_xs(n: usize, k: usize) -> BigUint {
    falling(n, k) / 2u32
}

/// Advances `seq` to the next injective sequence over `lo..=hi` in
/// lexicographic order. Returns `false` after the last one.
fn next_arrangement(seq: &mut [usize], lo: usize, hi: usize) -> bool {
    let len = seq.len();
    for i in (0..len).rev() {
        let used = |v: usize, upto: usize, seq: &[usize]| seq[..upto].contains(&v);
        if let Some(v) = (seq[i] + 1..=hi).find(|&v| !used(v, i, seq)) {
            seq[i] = v;
            let mut next = lo;
            for j in i + 1..len {
                while used(next, j, seq) {
                    next += 1;
                }
                seq[j] = next;
                next += 1;
            }
            return true;
        }
    }
    false
}

fn first_arrangement(len: usize, lo: usize, hi: usize) -> Option<Vec<usize>> {
    (len <= hi + 1 - lo).then(|| (lo..lo + len).collect())
}

/// All canonical `xs` sequences for half-length `k`, in lexicographic order.
pub fn xs_sequences(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k < 2 || k > n {
        return out;
    }
    for x1 in 1..=n + 1 - k {
        let Some(mut tail) = first_arrangement(k - 1, x1 + 1, n) else {
            continue;
        };
        loop {
            let mut xs = Vec::with_capacity(k);
            xs.push(x1);
            xs.extend_from_slice(&tail);
            out.push(xs);
            if !next_arrangement(&mut tail, x1 + 1, n) {
                break;
            }
        }
    }
    out
}

/// Streaming enumeration of the simple cycles of K_{n,n} in canonical order.
pub struct SimpleCycles {
    n: usize,
    k: usize,
    k_max: usize,
    xs_list: Vec<Vec<usize>>,
    xs_pos: usize,
    ys: Option<Vec<usize>>,
}

impl SimpleCycles {
    pub fn new(n: usize) -> Self {
        Self::with_half_lengths(n, 2, n)
    }

    /// Only cycles with `k_min <= k <= k_max`.
    pub fn with_half_lengths(n: usize, k_min: usize, k_max: usize) -> Self {
        let k = k_min.max(2);
        SimpleCycles {
            n,
            k,
            k_max: k_max.min(n),
            xs_list: xs_sequences(n, k),
            xs_pos: 0,
            ys: None,
        }
    }

    fn advance_ys(&mut self) -> bool {
        let n = self.n;
        loop {
            let ok = match &mut self.ys {
                None => {
                    self.ys = first_arrangement(self.k, 1, n);
                    self.ys.is_some()
                }
                Some(ys) => next_arrangement(ys, 1, n),
            };
            if !ok {
                self.ys = None;
                return false;
            }
            let ys = self.ys.as_ref().unwrap();
            if ys[0] < ys[self.k - 1] {
                return true;
            }
        }
    }
}

impl Iterator for SimpleCycles {
    type Item = SimpleCycle;

    fn next(&mut self) -> Option<SimpleCycle> {
        loop {
            if self.k > self.k_max {
                return None;
            }
            if self.xs_pos >= self.xs_list.len() {
                self.k += 1;
                self.xs_list = xs_sequences(self.n, self.k);
                self.xs_pos = 0;
                self.ys = None;
                continue;
            }
            if self.advance_ys() {
                return Some(SimpleCycle {
                    k: self.k,
                    xs: self.xs_list[self.xs_pos].clone(),
                    ys: self.ys.clone().unwrap(),
                });
            }
            self.xs_pos += 1;
        }
    }
}

pub fn enumerate_simple_cycles(n: usize) -> SimpleCycles {
    SimpleCycles::new(n)
}

/// Lexicographic rank of an injective sequence over the sorted pool.
fn arrangement_rank(seq: &[usize], pool: &[usize]) -> BigUint {
    let mut rank = BigUint::zero();
    let mut avail: Vec<usize> = pool.to_vec();
    for (p, v) in seq.iter().enumerate() {
        let pos = avail.binary_search(v).expect("value drawn from pool");
        rank += falling(avail.len() - 1, seq.len() - p - 1) * pos;
        avail.remove(pos);
    }
    rank
}

fn arrangement_unrank(len: usize, pool: &[usize], mut rank: BigUint) -> Vec<usize> {
    let mut avail = pool.to_vec();
    let mut out = Vec::with_capacity(len);
    for p in 0..len {
        let block = falling(avail.len() - 1, len - p - 1);
        let pos = (&rank / &block).to_usize().unwrap();
        rank -= &block * pos;
        out.push(avail.remove(pos));
    }
    out
}

/// Number of canonical completions of a `ys` prefix: the last entry must exceed `y1`.
fn ys_completions(y1: usize, avail: &[usize], remaining: usize) -> BigUint {
    debug_assert!(remaining >= 1);
    let bigger = avail.iter().filter(|&&w| w > y1).count();
    falling(avail.len() - 1, remaining - 1) * bigger
}

fn ys_rank(n: usize, ys: &[usize]) -> BigUint {
    let k = ys.len();
    let mut rank = BigUint::zero();
    let mut avail: Vec<usize> = (1..=n).collect();
    let y1 = ys[0];
    for (p, &v) in ys.iter().enumerate() {
        for &u in avail.iter().filter(|&&u| u < v) {
            if p == k - 1 {
                if u > y1 {
                    rank += 1u32;
                }
            } else {
                let rest: Vec<usize> = avail.iter().copied().filter(|&w| w != u).collect();
                let first = if p == 0 { u } else { y1 };
                rank += ys_completions(first, &rest, k - 1 - p);
            }
        }
        avail.retain(|&w| w != v);
    }
    rank
}

fn ys_unrank(n: usize, k: usize, mut rank: BigUint) -> Vec<usize> {
    let mut avail: Vec<usize> = (1..=n).collect();
    let mut out: Vec<usize> = Vec::with_capacity(k);
    for p in 0..k {
        let mut chosen = None;
        for &u in &avail {
            let block = if p == k - 1 {
                if u > out[0] {
                    BigUint::one()
                } else {
                    BigUint::zero()
                }
            } else {
                let rest: Vec<usize> = avail.iter().copied().filter(|&w| w != u).collect();
                let first = if p == 0 { u } else { out[0] };
                ys_completions(first, &rest, k - 1 - p)
            };
            if rank < block {
                chosen = Some(u);
                break;
            }
            rank -= block;
        }
        let u = chosen.expect("rank within range");
        out.push(u);
        avail.retain(|&w| w != u);
    }
    out
}

fn xs_rank(n: usize, xs: &[usize]) -> BigUint {
    let k = xs.len();
    let x1 = xs[0];
    let mut rank: BigUint = (1..x1).map(|a| falling(n - a, k - 1)).sum();
    let pool: Vec<usize> = (x1 + 1..=n).collect();
    rank += arrangement_rank(&xs[1..], &pool);
    rank
}

fn xs_unrank(n: usize, k: usize, mut rank: BigUint) -> Vec<usize> {
    for x1 in 1..=n + 1 - k {
        let block = falling(n - x1, k - 1);
        if rank < block {
            let pool: Vec<usize> = (x1 + 1..=n).collect();
            let mut xs = vec![x1];
            xs.extend(arrangement_unrank(k - 1, &pool, rank));
            return xs;
        }
        rank -= block;
    }
    unreachable!("xs rank within range")
}

/// Position of `cycle` in the canonical enumeration of K_{n,n}'s cycles.
pub fn cycle_index(n: usize, cycle: &SimpleCycle) -> Result<BigUint> {
    if cycle.max_vertex() > n {
        return Err(Error::MalformedCycle(format!("vertex outside [1, {n}]")));
    }
    let k = cycle.k;
    let offset: BigUint = (2..k).map(|j| stratum_count(n, j)).sum();
    Ok(offset + xs_rank(n, &cycle.xs) * ys_per_xs(n, k) + ys_rank(n, &cycle.ys))
}

/// Inverse of [`cycle_index`].
pub fn cycle_at(n: usize, index: &BigUint) -> Result<SimpleCycle> {
    let mut rest = index.clone();
    for k in 2..=n {
        let block = stratum_count(n, k);
        if rest < block {
            let per = ys_per_xs(n, k);
            let xs = xs_unrank(n, k, &rest / &per);
            let ys = ys_unrank(n, k, &rest % &per);
            return Ok(SimpleCycle { k, xs, ys });
        }
        rest -= block;
    }
    Err(Error::invalid(format!(
        "index {index} out of range for n={n}"
    )))
}

/// Uniformly random simple cycle drawn by an existing generator.
pub fn sample_with<R: rand::Rng + ?Sized>(n: usize, rng: &mut R) -> Result<SimpleCycle> {
    if n < 2 {
        return Err(Error::invalid(format!("K_{{n,n}} has no cycles for n={n}")));
    }
    let total = count_simple_cycles(n);
    let idx = rng.gen_biguint_below(&total);
    cycle_at(n, &idx)
}

/// Uniformly random simple cycle of K_{n,n}, deterministic in `seed`.
pub fn sample_simple_cycle(n: usize, seed: u64) -> Result<SimpleCycle> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_with(n, &mut rng)
}
