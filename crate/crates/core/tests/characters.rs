mod common;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use cyclefree::birkhoff::{all_permutations, PermSet, Permutation};
use cyclefree::repcheck::{
    chi_on_phi, class_size, duality_check, hook_values, ip_characters, ip_direct, kostka,
    lemma_bound, mn_character, partitions, phi_from_set, uniformity, young_trace, CharacterTable,
    Partition,
};

use common::random_set;

fn binomial(n: u64, k: u64) -> BigUint {
    (0..k).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

#[test]
fn hook_rule_on_the_full_cycle() {
    for n in 1..=9 {
        let cycle = Partition::full_cycle(n);
        for l in partitions(n) {
            let expect = match l.hook_index() {
                Some(m) if m % 2 == 0 => 1,
                Some(_) => -1,
                None => 0,
            };
            assert_eq!(mn_character(&l, &cycle).unwrap(), expect, "{l}");
        }
    }
}

#[test]
fn trivial_character_everywhere() {
    for n in 1..=8 {
        let h0 = Partition::hook(n, 0).unwrap();
        for mu in partitions(n) {
            assert_eq!(mn_character(&h0, &mu).unwrap(), 1);
        }
    }
}

#[test]
fn row_and_column_orthogonality() {
    for n in 1..=7 {
        let t = CharacterTable::new(n);
        let parts = t.partitions();
        for a in parts {
            for b in parts {
                let rows: BigInt = parts
                    .iter()
                    .map(|mu| BigInt::from(class_size(mu)) * t.get(a, mu) * t.get(b, mu))
                    .sum();
                let cols: i64 = parts.iter().map(|l| t.get(l, a) * t.get(l, b)).sum();
                if a == b {
                    assert_eq!(rows, factorial(n));
                    assert_eq!(
                        BigInt::from(cols) * BigInt::from(class_size(a)),
                        factorial(n)
                    );
                } else {
                    assert!(rows.is_zero());
                    assert_eq!(cols, 0);
                }
            }
        }
    }
}

#[test]
fn transpose_twists_by_sign() {
    for n in 1..=6 {
        for l in partitions(n) {
            for mu in partitions(n) {
                let twisted = mn_character(&l, &mu).unwrap() * i64::from(mu.sign());
                assert_eq!(mn_character(&l.transpose(), &mu).unwrap(), twisted);
            }
        }
    }
}

/// Dimensions against the hook-length formula.
#[test]
fn dimensions_match_hook_lengths() {
    for n in 1..=9 {
        for l in partitions(n) {
            let conj = l.transpose();
            let mut hooks = BigInt::from(1);
            for (i, &row) in l.parts().iter().enumerate() {
                for j in 0..row {
                    hooks *= (row - j) + (conj.parts()[j] - i) - 1;
                }
            }
            let dim = mn_character(&l, &Partition::identity_type(n)).unwrap();
            assert_eq!(BigInt::from(dim) * hooks, factorial(n), "{l}");
        }
    }
}

/// Characters against a direct count: the permutation character of the
/// action on k-subsets decomposes as `Σ_{j≤k} χ^{(n−j, j)}`.
#[test]
fn two_row_characters_from_fixed_subsets() {
    let n = 7;
    for p in all_permutations(n).step_by(37) {
        let mu = p.cycle_type();
        let fixed = |k: usize| -> i64 {
            (0u32..1 << n)
                .filter(|s| s.count_ones() as usize == k)
                .filter(|&s| (0..n).all(|i| (s >> i & 1) == (s >> (p.image(i + 1) - 1) & 1)))
                .count() as i64
        };
        let mut acc = 0;
        for k in 0..=n / 2 {
            let two_row = Partition::from_unsorted(vec![n - k, k]);
            acc += mn_character(&two_row, &mu).unwrap();
            assert_eq!(acc, fixed(k), "{p} k={k}");
        }
    }
}

#[test]
fn kostka_on_hooks() {
    for n in 1..=8 {
        for k in 0..n {
            let hk = Partition::hook(n, k).unwrap();
            for m in 0..n {
                let hm = Partition::hook(n, m).unwrap();
                let expect = if m <= k {
                    binomial(k as u64, m as u64)
                } else {
                    BigUint::zero()
                };
                assert_eq!(kostka(&hm, &hk).unwrap(), expect, "n={n} m={m} k={k}");
            }
        }
    }
}

/// `Σ_λ K_{λ,μ} dim S^λ` counts words of content μ: the multinomial.
#[test]
fn kostka_sums_to_multinomial() {
    for n in 1..=7 {
        let id = Partition::identity_type(n);
        for mu in partitions(n) {
            let total: BigInt = partitions(n)
                .iter()
                .map(|l| BigInt::from(kostka(l, &mu).unwrap()) * mn_character(l, &id).unwrap())
                .sum();
            let denom: BigInt = mu.parts().iter().map(|&p| factorial(p)).product();
            assert_eq!(total, factorial(n) / denom, "{mu}");
        }
    }
}

#[test]
fn class_equation() {
    for n in 1..=10 {
        let total: BigUint = partitions(n).iter().map(class_size).sum();
        assert_eq!(BigInt::from(total), factorial(n));
        assert_eq!(
            BigInt::from(class_size(&Partition::full_cycle(n))),
            factorial(n - 1)
        );
    }
}

fn one() -> BigRational {
    BigRational::from_integer(1.into())
}

#[test]
fn class_function_identities_on_random_sets() {
    for n in 3..=6 {
        for seed in 0..25 {
            let a = random_set(n, 30, false, seed);
            let phi = phi_from_set(&a).unwrap();
            assert_eq!(
                chi_on_phi(&Partition::hook(n, 0).unwrap(), &phi).unwrap(),
                one()
            );
            for l in partitions(n) {
                assert!(!chi_on_phi(&l, &phi).unwrap().is_negative());
            }
            let direct = ip_direct(&a).unwrap();
            assert_eq!(ip_characters(&phi), direct);

            let witness = a.members().iter().any(|p| {
                a.members()
                    .iter()
                    .any(|q| p.compose(&q.inverse()).cycle_type() == Partition::full_cycle(n))
            });
            assert_eq!(direct.is_positive(), witness);

            for k in 0..=3.min(n) {
                let expected: BigRational = partitions(n)
                    .iter()
                    .map(|l| {
                        let hk = Partition::hook(n, k.min(n - 1)).unwrap();
                        BigRational::from_integer(kostka(l, &hk).unwrap().into())
                            * chi_on_phi(l, &phi).unwrap()
                    })
                    .sum();
                assert_eq!(young_trace(&a, k).unwrap(), expected, "n={n} k={k}");
            }
        }
    }
}

#[test]
fn ip_direct_matches_characters_on_full_groups() {
    for n in 2..=6 {
        let a = PermSet::new(n, all_permutations(n)).unwrap();
        let phi = phi_from_set(&a).unwrap();
        // every π' has (n−1)! partners at n-cycle difference
        let expect = BigRational::new(BigInt::from(n) * factorial(n - 1), factorial(n));
        assert_eq!(ip_direct(&a).unwrap(), expect);
        assert_eq!(ip_characters(&phi), expect);
    }
}

#[test]
fn duality_and_lemma_on_even_sets() {
    for n in [5, 6] {
        for seed in 100..130 {
            let a = random_set(n, 25, true, seed);
            assert!(duality_check(&a).unwrap());
            let hooks = hook_values(&phi_from_set(&a).unwrap());
            for k in (2..n).step_by(2) {
                let (max_prob, _) = uniformity(&a, k).unwrap();
                for (m, chi) in hooks.iter().enumerate().take(k + 1).skip(1) {
                    assert!(*chi <= lemma_bound(&max_prob, n, k, m).unwrap());
                }
            }
        }
    }
}

#[test]
fn odd_sets_are_dual_too() {
    let odd = Permutation::from_cycles(5, &[&[1, 2]]).unwrap();
    let a = PermSet::new(
        5,
        [
            odd.clone(),
            odd.compose(&Permutation::from_cycles(5, &[&[1, 2, 3]]).unwrap()),
        ],
    )
    .unwrap();
    assert!(duality_check(&a).unwrap());
}
