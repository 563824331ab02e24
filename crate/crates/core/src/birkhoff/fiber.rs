//! Fibers of the matching-sum map `π ↦ Σ_i γ(i, π(i))`.
//!
//! If γ is simple-cycle-free, two permutations in one fiber never differ by a
//! cycle: their matchings' symmetric difference would be a simple cycle whose
//! alternating sum is `h − h = 0`. The largest fiber therefore gives an
//! independent set of size at least `n!/q^d`.

use std::collections::{BTreeMap, HashMap};

use super::perm::{all_permutations, PermSet, Permutation};
use crate::error::{Error, Result};
use crate::labeling::{Label, Labeling};

/// Largest `n` for which all of S_n is enumerated.
pub const MAX_FIBER_N: usize = 10;

fn check_budget(labeling: &Labeling) -> Result<()> {
    if labeling.n() > MAX_FIBER_N {
        return Err(Error::budget(
            "permutation enumeration",
            format!("n={}", labeling.n()),
            format!("n<={MAX_FIBER_N}"),
        ));
    }
    Ok(())
}

fn matching_sum(labeling: &Labeling, p: &Permutation) -> Label {
    let images: Vec<usize> = p.images().collect();
    labeling.matching_sum(&images)
}

/// Single-word fast path for binary labels with `d ≤ 64`.
fn word_table(labeling: &Labeling) -> Option<Vec<u64>> {
    let n = labeling.n();
    let mut words = Vec::with_capacity(n * n);
    for x in 1..=n {
        for y in 1..=n {
            words.push(labeling.get(x, y).as_u64()?);
        }
    }
    Some(words)
}

fn word_sum(words: &[u64], n: usize, p: &Permutation) -> u64 {
    p.raw()
        .iter()
        .enumerate()
        .fold(0, |acc, (i, &y)| acc ^ words[i * n + y as usize])
}

/// Every nonempty fiber, keyed by its sum.
pub fn fibers(labeling: &Labeling) -> Result<BTreeMap<Label, PermSet>> {
    check_budget(labeling)?;
    let n = labeling.n();
    let mut groups: BTreeMap<Label, Vec<Permutation>> = BTreeMap::new();
    for p in all_permutations(n) {
        groups
            .entry(matching_sum(labeling, &p))
            .or_default()
            .push(p);
    }
    groups
        .into_iter()
        .map(|(h, ps)| Ok((h, PermSet::new(n, ps)?)))
        .collect()
}

/// The largest fiber and its sum; ties go to the lexicographically smallest sum.
pub fn best_fiber(labeling: &Labeling) -> Result<(Label, PermSet)> {
    check_budget(labeling)?;
    let n = labeling.n();

    let (h, members) = if let Some(words) = word_table(labeling) {
        let mut counts: HashMap<u64, u64> = HashMap::new();
        for p in all_permutations(n) {
            *counts.entry(word_sum(&words, n, &p)).or_default() += 1;
        }
        let to_label = |w: u64| {
            let mut l = Label::zero(labeling.d(), 2);
            for i in 0..labeling.d() {
                l.set(i, (w >> i & 1) as u32);
            }
            l
        };
        let (h, target, _) = counts
            .into_iter()
            .map(|(w, c)| (to_label(w), w, c))
            .max_by(|(ha, _, ca), (hb, _, cb)| ca.cmp(cb).then_with(|| hb.cmp(ha)))
            .expect("S_n is nonempty");
        let members: Vec<Permutation> = all_permutations(n)
            .filter(|p| word_sum(&words, n, p) == target)
            .collect();
        (h, members)
    } else {
        let mut counts: HashMap<Label, u64> = HashMap::new();
        for p in all_permutations(n) {
            *counts.entry(matching_sum(labeling, &p)).or_default() += 1;
        }
        let (h, _) = counts
            .into_iter()
            .max_by(|(ha, ca), (hb, cb)| ca.cmp(cb).then_with(|| hb.cmp(ha)))
            .expect("S_n is nonempty");
        let members: Vec<Permutation> = all_permutations(n)
            .filter(|p| matching_sum(labeling, p) == h)
            .collect();
        (h, members)
    };
    Ok((h, PermSet::new(n, members)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::birkhoff::verify_independent;
    use crate::labeling::{construct_random, construct_recursive, verify_cycle_free, Mode};

    #[test]
    fn zero_labeling_has_one_dependent_fiber() {
        let z = Labeling::zero(3, 4, 2).unwrap();
        let (h, a) = best_fiber(&z).unwrap();
        assert!(h.is_zero());
        assert_eq!(a.len(), 6);
        assert!(!verify_independent(&a, Mode::Exhaustive).unwrap().passed);
    }

    #[test]
    fn gamma4_fibers_are_independent() {
        let g = construct_recursive(4).unwrap();
        let all = fibers(&g).unwrap();
        assert_eq!(all.values().map(PermSet::len).sum::<usize>(), 24);
        for a in all.values() {
            assert!(verify_independent(a, Mode::Exhaustive).unwrap().passed);
        }
        let (h, best) = best_fiber(&g).unwrap();
        assert_eq!(all[&h], best);
    }

    #[test]
    fn fast_path_matches_generic_grouping() {
        for (n, d, q) in [(4, 3, 2), (5, 4, 2), (4, 2, 3), (5, 70, 2)] {
            for seed in 0..4 {
                let l = construct_random(n, d, q, seed).unwrap();
                let all = fibers(&l).unwrap();
                let max = all.values().map(PermSet::len).max().unwrap();
                let (h, best) = best_fiber(&l).unwrap();
                assert_eq!(best.len(), max);
                let first_max = all.iter().find(|(_, a)| a.len() == max).unwrap().0;
                assert_eq!(&h, first_max, "tie-break n={n} d={d} q={q} seed={seed}");
                assert_eq!(all[&h], best);
            }
        }
    }

    #[test]
    fn planted_zero_cycle_yields_adjacent_pair() {
        // π = id and π' = (1 2 3) on n = 4; force equal matching sums over Z_5
        let n = 4;
        let mut l = construct_random(n, 3, 5, 11).unwrap();
        let pi = Permutation::identity(n);
        let pi2 = Permutation::from_cycles(n, &[&[1, 2, 3]]).unwrap();
        let sum = |l: &Labeling, p: &Permutation| l.matching_sum(&p.images().collect::<Vec<_>>());
        let mut fix = l.get(1, 2).clone();
        fix.add_assign(&sum(&l, &pi));
        fix.sub_assign(&sum(&l, &pi2));
        l.set(1, 2, fix);
        assert_eq!(sum(&l, &pi), sum(&l, &pi2));
        assert!(!verify_cycle_free(&l, Mode::Exhaustive).unwrap().passed);
        let fiber = fibers(&l).unwrap().remove(&sum(&l, &pi)).unwrap();
        assert!(fiber.contains(&pi) && fiber.contains(&pi2));
        let r = verify_independent(&fiber, Mode::Exhaustive).unwrap();
        assert!(!r.passed);
    }

    #[test]
    fn budget() {
        let z = Labeling::zero(11, 1, 2).unwrap();
        assert!(matches!(best_fiber(&z), Err(Error::BudgetExceeded { .. })));
    }
}
