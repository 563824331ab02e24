use std::fmt;

use crate::error::{Error, Result};
use crate::repcheck::Partition;

/// A permutation of `[n]`, stored as 0-based images.
///
/// The public API is 1-based: `image(i)` returns `π(i)` for `i ∈ [n]`.
/// Composition follows `(π ∘ σ)(i) = π(σ(i))`. Ordering is lexicographic on the
/// one-line form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// From 1-based one-line images `π(1), ..., π(n)`.
    pub fn new(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::invalid(format!("n={n} exceeds 255")));
        }
        let mut seen = vec![false; n];
        for &v in images {
            if v == 0 || v > n || std::mem::replace(&mut seen[v - 1], true) {
                return Err(Error::invalid(format!(
                    "{images:?} is not a permutation of [1, {n}]"
                )));
            }
        }
        Ok(Permutation {
            images: images.iter().map(|&v| (v - 1) as u8).collect(),
        })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Product of the given (disjoint or not) cycles, rightmost applied first.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut p = Permutation::identity(n);
        for cyc in cycles.iter().rev() {
            let mut c: Vec<usize> = (1..=n).collect();
            for (i, &a) in cyc.iter().enumerate() {
                let b = cyc[(i + 1) % cyc.len()];
                if a == 0 || a > n || b == 0 || b > n {
                    return Err(Error::invalid(format!("cycle {cyc:?} outside [1, {n}]")));
                }
                c[a - 1] = b;
            }
            p = Permutation::new(&c)?.compose(&p);
        }
        Ok(p)
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Permutation { images }
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.images
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// One-line form, 1-based.
    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&v| v as usize + 1)
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "composing permutations of different size"
        );
        Permutation {
            images: other
                .images
                .iter()
                .map(|&j| self.images[j as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (i, &v) in self.images.iter().enumerate() {
            inv[v as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    /// Orbit lengths, largest first.
    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(orbit_lengths(&self.images))
    }

    pub fn sign(&self) -> i32 {
        self.cycle_type().sign()
    }

    /// Exactly one orbit of size at least two; the identity is not a cycle.
    pub fn is_cycle(&self) -> bool {
        is_cycle_raw(&self.images)
    }

    /// Cycle notation with fixed points omitted, `()` for the identity.
    pub fn cycle_notation(&self) -> String {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] as usize == start {
                continue;
            }
            let mut orbit = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                orbit.push((i + 1).to_string());
                i = self.images[i] as usize;
            }
            out.push('(');
            out.push_str(&orbit.join(" "));
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

/// Space-separated one-line form.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

pub(crate) fn orbit_lengths(images: &[u8]) -> Vec<usize> {
    let mut seen = vec![false; images.len()];
    let mut lens = Vec::new();
    for start in 0..images.len() {
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            len += 1;
            i = images[i] as usize;
        }
        if len > 0 {
            lens.push(len);
        }
    }
    lens
}

pub(crate) fn is_cycle_raw(images: &[u8]) -> bool {
    let nontrivial = orbit_lengths(images)
        .into_iter()
        .filter(|&l| l >= 2)
        .count();
    nontrivial == 1
}

/// Whether `a ∘ b_inv` is a cycle, given `b_inv = b⁻¹` as raw images.
pub(crate) fn differ_by_cycle(a: &[u8], b_inv: &[u8]) -> bool {
    let n = a.len();
    // τ(i) = a(b⁻¹(i)); count nontrivial orbits of τ without allocating
    let mut seen = 0u128;
    let mut nontrivial = 0;
    if n > 128 {
        let tau: Vec<u8> = b_inv.iter().map(|&j| a[j as usize]).collect();
        return is_cycle_raw(&tau);
    }
    for start in 0..n {
        if seen >> start & 1 == 1 {
            continue;
        }
        let mut i = start;
        let mut len = 0;
        while seen >> i & 1 == 0 {
            seen |= 1 << i;
            len += 1;
            i = a[b_inv[i] as usize] as usize;
        }
        if len >= 2 {
            nontrivial += 1;
            if nontrivial > 1 {
                return false;
            }
        }
    }
    nontrivial == 1
}

/// `π` and `π'` are adjacent in the Birkhoff polytope graph when `π ∘ π'⁻¹` is a cycle.
pub fn adjacent(a: &Permutation, b: &Permutation) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            expected: a.n(),
            actual: b.n(),
        });
    }
    Ok(differ_by_cycle(&a.images, &b.inverse().images))
}

/// All permutations of `[n]` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut cur: Option<Vec<u8>> = Some((0..n as u8).collect());
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let p = cur.as_mut().unwrap();
        if !next_permutation(p) {
            cur = None;
        }
        Some(Permutation { images: out })
    })
}

fn next_permutation(p: &mut [u8]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}

/// A set of distinct permutations of a common `[n]`, kept sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermSet {
    n: usize,
    members: Vec<Permutation>,
}

impl PermSet {
    /// Sorts and deduplicates. All members must act on `[n]`.
    pub fn new(n: usize, members: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let mut members: Vec<Permutation> = members.into_iter().collect();
        if let Some(p) = members.iter().find(|p| p.n() != n) {
            return Err(Error::SizeMismatch {
                expected: n,
                actual: p.n(),
            });
        }
        members.sort_unstable();
        members.dedup();
        Ok(PermSet { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    /// `Some(sign)` when all members share it.
    pub fn common_sign(&self) -> Option<i32> {
        let first = self.members.first()?.sign();
        self.members
            .iter()
            .all(|p| p.sign() == first)
            .then_some(first)
    }

    pub fn encode(&self) -> String {
        self.to_string()
    }

    pub fn decode(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
        match lines.next() {
            Some((_, l)) if l.trim_end() == "PERMSET v1" => {}
            _ => return Err(Error::parse(1, "expected header \"PERMSET v1\"")),
        }
        let (lno, params) = lines
            .next()
            .ok_or_else(|| Error::parse(2, "missing parameter line"))?;
        let f = crate::labeling::parse_fields(lno, params, &["n", "count"])?;
        let (n, count) = (f[0], f[1]);
        let mut members = Vec::with_capacity(count);
        for i in 0..count {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| Error::parse(3 + i, format!("expected {count} permutations")))?;
            let images = line
                .split_whitespace()
                .map(|t| t.parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Error::parse(lno, e.to_string()))?;
            if images.len() != n {
                return Err(Error::parse(lno, format!("expected {n} images")));
            }
            members.push(Permutation::new(&images).map_err(|e| Error::parse(lno, e.to_string()))?);
        }
        if let Some((lno, l)) = lines.find(|(_, l)| !l.trim().is_empty()) {
            return Err(Error::parse(lno, format!("trailing content {l:?}")));
        }
        let set = PermSet::new(n, members)?;
        if set.len() != count {
            return Err(Error::parse(2, "duplicate permutations"));
        }
        Ok(set)
    }
}

/// `PERMSET v1` text format.
impl fmt::Display for PermSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PERMSET v1")?;
        writeln!(f, "n={} count={}", self.n, self.members.len())?;
        for p in &self.members {
            writeln!(f, "{p}")?;
        }
        Ok(())
    }
}
