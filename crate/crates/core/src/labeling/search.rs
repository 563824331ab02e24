//! Brute-force search for the smallest label length `d(n)` admitting a binary
//! simple-cycle-free labeling.
//!
//! Adding a vertex potential `a_x + b_y` to every `γ(x, y)` leaves all
//! alternating cycle sums unchanged, so every labeling is equivalent to one
//! with `γ(1, ·) = γ(·, 1) = 0`. The search only ranges over the remaining
//! `(n−1)²` edges, checking each cycle as soon as its last free edge is set.

use super::{Label, Labeling};
use crate::cycles::enumerate_simple_cycles;
use crate::error::{Error, Result};

const MAX_SEARCH_N: usize = 3;

struct Problem {
    /// Free edge `(x, y)` with `x, y ≥ 2`, in lexicographic order.
    free: Vec<(usize, usize)>,
    /// Cycles grouped by the free edge that completes them, as free-edge indices.
    closing: Vec<Vec<Vec<usize>>>,
}

impl Problem {
    fn new(n: usize) -> Self {
        let free: Vec<(usize, usize)> =
            (2..=n).flat_map(|x| (2..=n).map(move |y| (x, y))).collect();
        let index = |x: usize, y: usize| free.iter().position(|&e| e == (x, y));
        let mut closing = vec![Vec::new(); free.len()];
        for c in enumerate_simple_cycles(n) {
            let edges: Vec<usize> = c.edges().filter_map(|(x, y)| index(x, y)).collect();
            let last = *edges.iter().max().expect("every cycle meets a free edge");
            closing[last].push(edges);
        }
        Problem { free, closing }
    }

    fn fill(&self, values: &mut Vec<u64>, d: usize) -> bool {
        let pos = values.len();
        if pos == self.free.len() {
            return true;
        }
        for v in 0..1u64 << d {
            values.push(v);
            let ok = self.closing[pos]
                .iter()
                .all(|cyc| cyc.iter().fold(0, |acc, &e| acc ^ values[e]) != 0);
            if ok && self.fill(values, d) {
                return true;
            }
            values.pop();
        }
        false
    }
}

fn check_n(n: usize) -> Result<()> {
    if !(2..=MAX_SEARCH_N).contains(&n) {
        return Err(Error::invalid(format!(
            "exhaustive d-search supports n in 2..={MAX_SEARCH_N}, got {n}"
        )));
    }
    Ok(())
}

/// Some simple-cycle-free labeling `[n]×[n] → F_2^d`, if one exists.
pub fn find_cycle_free(n: usize, d: usize) -> Result<Option<Labeling>> {
    check_n(n)?;
    let problem = Problem::new(n);
    let mut values = Vec::with_capacity(problem.free.len());
    if !problem.fill(&mut values, d) {
        return Ok(None);
    }
    let labeling = Labeling::from_fn(n, d, 2, |x, y| {
        let mut l = Label::zero(d, 2);
        if let Some(i) = problem.free.iter().position(|&e| e == (x, y)) {
            for bit in 0..d {
                l.set(bit, (values[i] >> bit & 1) as u32);
            }
        }
        l
    })?;
    Ok(Some(labeling))
}

/// Smallest `d` for which a binary simple-cycle-free labeling of K_{n,n} exists.
pub fn search_min_d(n: usize) -> Result<usize> {
    check_n(n)?;
    (0..=3 * n)
        .find(|&d| matches!(find_cycle_free(n, d), Ok(Some(_))))
        .ok_or_else(|| Error::invalid(format!("no cycle-free labeling with d <= {}", 3 * n)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{verify_cycle_free, Mode};

    /// Exhaustive over every labeling, no gauge fixing: edge labels are the
    /// base-2^d digits of a counter.
    fn brute_force_exists(n: usize, d: usize) -> bool {
        let cycles: Vec<Vec<usize>> = enumerate_simple_cycles(n)
            .map(|c| c.edges().map(|(x, y)| (x - 1) * n + y - 1).collect())
            .collect();
        let edges = n * n;
        let total = 1u64 << (edges * d);
        let mask = (1u64 << d) - 1;
        (0..total).any(|code| {
            cycles
                .iter()
                .all(|cyc| cyc.iter().fold(0, |acc, &e| acc ^ (code >> (e * d) & mask)) != 0)
        })
    }

    #[test]
    fn n2_needs_one_bit() {
        assert_eq!(search_min_d(2).unwrap(), 1);
        assert!(find_cycle_free(2, 0).unwrap().is_none());
        assert!(brute_force_exists(2, 1));
        assert!(!brute_force_exists(2, 0));
    }

    #[test]
    fn n3_matches_unfixed_brute_force() {
        let d = search_min_d(3).unwrap();
        // independent oracle over all 2^(9d) labelings
        assert!(!brute_force_exists(3, d - 1));
        assert!(brute_force_exists(3, d));
        assert_eq!(d, 4);
        // consistent with α(B_3) = 1: 2^d ≥ 3!/1
        assert!(1usize << d >= 6);
    }

    #[test]
    fn witnesses_verify() {
        for n in 2..=3 {
            let d = search_min_d(n).unwrap();
            let l = find_cycle_free(n, d).unwrap().unwrap();
            assert!(verify_cycle_free(&l, Mode::Exhaustive).unwrap().passed);
        }
    }

    #[test]
    fn out_of_range() {
        assert!(search_min_d(1).is_err());
        assert!(search_min_d(4).is_err());
    }
}
