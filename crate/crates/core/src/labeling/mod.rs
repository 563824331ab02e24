//! Edge labelings `γ: [n] × [n] → Z_q^d` of K_{n,n} and the simple-cycle-free property.
//!
//! Vertices are 1-based on both sides. Along a traversal
//! `(x_1, y_1, ..., x_k, y_k, x_1)` the edge signs alternate starting with +1 on
//! `(x_1, y_1)`; for q = 2 the signs are immaterial.

mod construct;
mod format;
pub(crate) use format::parse_fields;
mod label;
mod search;
mod verify;

pub use construct::{construct_random, construct_recursive};
pub use label::Label;
pub use search::{find_cycle_free, search_min_d};
pub use verify::{
    verify_cycle_free, verify_with_budget, Mode, VerificationReport, DEFAULT_CYCLE_BUDGET,
};

use crate::cycles::SimpleCycle;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Labeling {
    n: usize,
    d: usize,
    q: u32,
    entries: Vec<Label>,
}

impl Labeling {
    /// The labeling with every edge labelled zero.
    pub fn zero(n: usize, d: usize, q: u32) -> Result<Self> {
        check_params(n, q)?;
        Ok(Labeling {
            n,
            d,
            q,
            entries: vec![Label::zero(d, q); n * n],
        })
    }

    /// Builds a labeling from a closure over 1-based edges.
    pub fn from_fn(
        n: usize,
        d: usize,
        q: u32,
        mut f: impl FnMut(usize, usize) -> Label,
    ) -> Result<Self> {
        check_params(n, q)?;
        let mut entries = Vec::with_capacity(n * n);
        for x in 1..=n {
            for y in 1..=n {
                let l = f(x, y);
                if l.len() != d || l.modulus() != q {
                    return Err(Error::invalid(format!(
                        "label for edge ({x},{y}) has d={} q={}, expected d={d} q={q}",
                        l.len(),
                        l.modulus()
                    )));
                }
                entries.push(l);
            }
        }
        Ok(Labeling { n, d, q, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn get(&self, x: usize, y: usize) -> &Label {
        assert!(
            (1..=self.n).contains(&x) && (1..=self.n).contains(&y),
            "edge ({x},{y}) outside [1,{}]^2",
            self.n
        );
        &self.entries[(x - 1) * self.n + (y - 1)]
    }

    pub fn set(&mut self, x: usize, y: usize, label: Label) {
        assert_eq!((label.len(), label.modulus()), (self.d, self.q));
        let n = self.n;
        self.entries[(x - 1) * n + (y - 1)] = label;
    }

    /// Signed sum along the traversal `(x_1, y_1, ..., x_k, y_k, x_1)`.
    ///
    /// Unlike [`cycle_sum`] the traversal need not be canonical, so rotation and
    /// reversal behaviour can be observed directly.
    pub fn walk_sum(&self, xs: &[usize], ys: &[usize]) -> Result<Label> {
        // Validation only; the walk itself is summed as given.
        let cycle = SimpleCycle::from_walk(xs, ys)?;
        if cycle.max_vertex() > self.n {
            return Err(Error::MalformedCycle(format!(
                "vertex outside [1, {}]",
                self.n
            )));
        }
        let k = xs.len();
        let mut sum = Label::zero(self.d, self.q);
        for i in 0..k {
            sum.add_assign(self.get(xs[i], ys[i]));
            sum.sub_assign(self.get(xs[(i + 1) % k], ys[i]));
        }
        Ok(sum)
    }

    /// `Σ_i γ(i, π(i))` for a permutation given by 1-based images.
    pub fn matching_sum(&self, images: &[usize]) -> Label {
        let mut sum = Label::zero(self.d, self.q);
        for (i, &y) in images.iter().enumerate() {
            sum.add_assign(self.get(i + 1, y));
        }
        sum
    }

    pub(crate) fn entries(&self) -> &[Label] {
        &self.entries
    }
}

fn check_params(n: usize, q: u32) -> Result<()> {
    if n < 1 {
        return Err(Error::invalid("n must be at least 1"));
    }
    if q < 2 {
        return Err(Error::invalid(format!("modulus q={q} must be at least 2")));
    }
    Ok(())
}

/// Alternating-sign sum of the labels on `cycle`, first edge positive.
pub fn cycle_sum(labeling: &Labeling, cycle: &SimpleCycle) -> Result<Label> {
    labeling.walk_sum(cycle.xs(), cycle.ys())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_labeling_sums_to_zero() {
        let z = Labeling::zero(4, 5, 3).unwrap();
        for c in crate::cycles::enumerate_simple_cycles(4).take(50) {
            assert!(cycle_sum(&z, &c).unwrap().is_zero());
        }
    }

    #[test]
    fn alternating_signs_mod_three() {
        // traversal edges (1,1),(2,1),(2,2),(1,2) carry labels a,b,c,d
        let vals = [[1u32, 2], [2, 0]]; // vals[x-1][y-1]
        let l = Labeling::from_fn(2, 1, 3, |x, y| {
            Label::from_coords(&[vals[x - 1][y - 1]], 3).unwrap()
        })
        .unwrap();
        let c = SimpleCycle::new(vec![1, 2], vec![1, 2]).unwrap();
        let (a, b, cc, d) = (1i64, 2, 0, 2);
        let expect = (a - b + cc - d).rem_euclid(3) as u32;
        assert_eq!(cycle_sum(&l, &c).unwrap().get(0), expect);
    }

    #[test]
    fn rejects_out_of_range_cycle() {
        let z = Labeling::zero(2, 1, 2).unwrap();
        assert!(z.walk_sum(&[1, 3], &[1, 2]).is_err());
        assert!(z.walk_sum(&[1, 1], &[1, 2]).is_err());
    }
}
