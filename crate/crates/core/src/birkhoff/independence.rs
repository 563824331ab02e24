use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::perm::{all_permutations, differ_by_cycle, PermSet, Permutation};
use crate::error::{Error, Result};
use crate::labeling::Mode;

/// Exhaustive pair checks are refused above `|A|² = 10⁹`.
pub const DEFAULT_PAIR_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceReport {
    pub passed: bool,
    pub pairs_checked: u64,
    pub size: usize,
    /// `(π, π')` with `π' = τπ` for the cycle `τ`.
    pub certificate: Option<(Permutation, Permutation)>,
}

impl IndependenceReport {
    /// The cycle `τ = π' ∘ π⁻¹` separating the certificate pair.
    pub fn tau(&self) -> Option<Permutation> {
        self.certificate
            .as_ref()
            .map(|(a, b)| b.compose(&a.inverse()))
    }
}

/// `verdict=<pass|fail> pairs=<k> size=<|A|> [tau=<cycle> certificate=<π> / <π'>]`
impl fmt::Display for IndependenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.passed { "pass" } else { "fail" };
        write!(
            f,
            "verdict={verdict} pairs={} size={}",
            self.pairs_checked, self.size
        )?;
        if let (Some(tau), Some((a, b))) = (self.tau(), &self.certificate) {
            write!(f, " tau={} certificate={a} / {b}", tau.cycle_notation())?;
        }
        Ok(())
    }
}

pub fn verify_independent(set: &PermSet, mode: Mode) -> Result<IndependenceReport> {
    verify_independent_with_budget(set, mode, DEFAULT_PAIR_BUDGET)
}

pub fn verify_independent_with_budget(
    set: &PermSet,
    mode: Mode,
    max_pairs: u64,
) -> Result<IndependenceReport> {
    let members = set.members();
    let len = members.len();
    let inverses: Vec<Permutation> = members.iter().map(Permutation::inverse).collect();
    let adjacent = |i: usize, j: usize| differ_by_cycle(members[i].raw(), inverses[j].raw());
    let report = |pairs_checked, hit: Option<(usize, usize)>| IndependenceReport {
        passed: hit.is_none(),
        pairs_checked,
        size: len,
        certificate: hit.map(|(i, j)| (members[i].clone(), members[j].clone())),
    };

    match mode {
        Mode::Exhaustive => {
            let squared = (len as u128) * (len as u128);
            if squared > max_pairs as u128 {
                return Err(Error::budget(
                    "exhaustive pairwise independence",
                    squared,
                    max_pairs,
                ));
            }
            let hit = (0..len)
                .into_par_iter()
                .find_map_first(|i| (i + 1..len).find(|&j| adjacent(j, i)).map(|j| (i, j)));
            let total = (len * len.saturating_sub(1) / 2) as u64;
            let checked = match hit {
                // pairs (i', j') preceding (i, j) lexicographically, plus the hit
                Some((i, j)) => ((0..i).map(|r| len - 1 - r).sum::<usize>() + (j - i)) as u64,
                None => total,
            };
            Ok(report(checked, hit))
        }
        Mode::Sampled { count, seed } => {
            if len < 2 {
                return Ok(report(0, None));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for s in 0..count {
                let i = rng.gen_range(0..len);
                let mut j = rng.gen_range(0..len - 1);
                if j >= i {
                    j += 1;
                }
                if adjacent(j, i) {
                    return Ok(report(s + 1, Some((i, j))));
                }
            }
            Ok(report(count, None))
        }
    }
}

/// Whether `size ≤ n!/2^{(n−4)/2}`, compared exactly by squaring both sides.
pub fn bound_check(size: &BigUint, n: usize) -> bool {
    let fact = (1..=n).fold(BigUint::one(), |acc, i| acc * i);
    let (lhs_exp, rhs_exp) = if n >= 4 { (n - 4, 0) } else { (0, 4 - n) };
    let lhs = (size * size) << lhs_exp;
    let rhs = (&fact * &fact) << rhs_exp;
    lhs <= rhs
}

const MAX_EXACT_N: usize = 4;

/// Maximum independent set of the Birkhoff polytope graph B_n for `n ≤ 4`,
/// by branch and bound over vertex bitmasks.
pub fn max_independent_exact(n: usize) -> Result<(usize, PermSet)> {
    if n > MAX_EXACT_N {
        return Err(Error::budget(
            "exact maximum independent set",
            format!("n={n}"),
            format!("n<={MAX_EXACT_N}"),
        ));
    }
    let verts: Vec<Permutation> = all_permutations(n).collect();
    let inverses: Vec<Permutation> = verts.iter().map(Permutation::inverse).collect();
    let adj: Vec<u32> = (0..verts.len())
        .map(|i| {
            (0..verts.len())
                .filter(|&j| differ_by_cycle(verts[j].raw(), inverses[i].raw()))
                .fold(0u32, |m, j| m | 1 << j)
        })
        .collect();

    fn search(cand: u32, cur: u32, best: &mut u32, adj: &[u32]) {
        if cand == 0 {
            if cur.count_ones() > best.count_ones() {
                *best = cur;
            }
            return;
        }
        if cur.count_ones() + cand.count_ones() <= best.count_ones() {
            return;
        }
        let v = cand.trailing_zeros();
        search(cand & !adj[v as usize] & !(1 << v), cur | 1 << v, best, adj);
        search(cand & !(1 << v), cur, best, adj);
    }

    let all = if verts.len() == 32 {
        u32::MAX
    } else {
        (1u32 << verts.len()) - 1
    };
    let mut best = 0u32;
    search(all, 0, &mut best, &adj);
    let witness = (0..verts.len())
        .filter(|&i| best >> i & 1 == 1)
        .map(|i| verts[i].clone());
    Ok((best.count_ones() as usize, PermSet::new(n, witness)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn klein_coset(shift: &Permutation) -> PermSet {
        let k: Vec<Permutation> = [
            vec![],
            vec![vec![1, 2], vec![3, 4]],
            vec![vec![1, 3], vec![2, 4]],
            vec![vec![1, 4], vec![2, 3]],
        ]
        .iter()
        .map(|cs| {
            let refs: Vec<&[usize]> = cs.iter().map(|c| c.as_slice()).collect();
            Permutation::from_cycles(4, &refs).unwrap().compose(shift)
        })
        .collect();
        PermSet::new(4, k).unwrap()
    }

    #[test]
    fn singleton_passes() {
        let s = PermSet::new(5, [Permutation::identity(5)]).unwrap();
        let r = verify_independent(&s, Mode::Exhaustive).unwrap();
        assert!(r.passed);
        assert_eq!(r.pairs_checked, 0);
    }

    #[test]
    fn three_cycle_fails_with_certificate() {
        let c = Permutation::from_cycles(3, &[&[1, 2, 3]]).unwrap();
        let s = PermSet::new(3, [Permutation::identity(3), c.clone()]).unwrap();
        let r = verify_independent(&s, Mode::Exhaustive).unwrap();
        assert!(!r.passed);
        assert_eq!(r.tau().unwrap(), c);
        assert_eq!(
            r.to_string(),
            "verdict=fail pairs=1 size=2 tau=(1 2 3) certificate=1 2 3 / 2 3 1"
        );
    }

    #[test]
    fn klein_cosets_are_independent() {
        for shift in all_permutations(4) {
            let s = klein_coset(&shift);
            assert_eq!(s.len(), 4);
            let r = verify_independent(&s, Mode::Exhaustive).unwrap();
            assert!(r.passed && r.pairs_checked == 6);
        }
    }

    #[test]
    fn pair_count_on_failure_is_positional() {
        // members sorted: id, (3 4), (1 2)(3 4); first adjacent pair is (id, (3 4))
        let s = PermSet::new(
            4,
            [
                Permutation::identity(4),
                Permutation::from_cycles(4, &[&[1, 2], &[3, 4]]).unwrap(),
                Permutation::from_cycles(4, &[&[3, 4]]).unwrap(),
            ],
        )
        .unwrap();
        let r = verify_independent(&s, Mode::Exhaustive).unwrap();
        assert_eq!((r.passed, r.pairs_checked), (false, 1));
        let r = verify_independent(
            &s,
            Mode::Sampled {
                count: 100,
                seed: 1,
            },
        )
        .unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn budget_refusal() {
        let s = PermSet::new(4, all_permutations(4)).unwrap();
        assert!(matches!(
            verify_independent_with_budget(&s, Mode::Exhaustive, 100),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn exact_maxima() {
        let expect = [(2, 1), (3, 1), (4, 4)];
        for (n, size) in expect {
            let (got, witness) = max_independent_exact(n).unwrap();
            assert_eq!(got, size, "n={n}");
            assert_eq!(witness.len(), size);
            assert!(
                verify_independent(&witness, Mode::Exhaustive)
                    .unwrap()
                    .passed
            );
            assert!(bound_check(&BigUint::from(got), n));
        }
        assert!(max_independent_exact(5).is_err());
    }

    #[test]
    fn bound_values() {
        assert!(bound_check(&BigUint::from(48u32), 8));
        assert!(bound_check(&BigUint::from(10080u32), 8));
        assert!(!bound_check(&BigUint::from(10081u32), 8));
        assert!(bound_check(&BigUint::from(24u32), 4));
        assert!(!bound_check(&BigUint::from(25u32), 4));
        // n = 5: 120/√2 ≈ 84.85
        assert!(bound_check(&BigUint::from(84u32), 5));
        assert!(!bound_check(&BigUint::from(85u32), 5));
        // n = 3: 6·√2 ≈ 8.49 exceeds |S_3|
        assert!(bound_check(&BigUint::from(1u32), 3));
    }
}
