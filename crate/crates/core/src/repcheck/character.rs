//! Irreducible characters of S_n by the Murnaghan–Nakayama rule.
//!
//! A partition `λ` of length `ℓ` is encoded by its beta-set
//! `{λ_i + ℓ − i}`. Removing a border strip of length `r` moves one bead from
//! `b` to an empty position `b − r`; the strip's height parity equals the
//! number of beads strictly between the two positions.

use std::cell::RefCell;
use std::collections::HashMap;

use super::partition::{partitions, Partition};
use crate::error::{Error, Result};

type Memo = HashMap<(Vec<usize>, Vec<usize>), i64>;

thread_local! {
    static MEMO: RefCell<Memo> = RefCell::new(HashMap::new());
}

fn strip_removals(shape: &[usize], r: usize) -> Vec<(Vec<usize>, i64)> {
    let len = shape.len();
    let beta: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&c| c > target && c < b).count();
        let mut moved = beta.clone();
        moved[idx] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &c)| c - (len - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((parts, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

fn mn(shape: &[usize], class: &[usize], memo: &mut Memo) -> i64 {
    let Some((&r, rest)) = class.split_first() else {
        return i64::from(shape.is_empty());
    };
    let key = (shape.to_vec(), class.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let value = strip_removals(shape, r)
        .into_iter()
        .map(|(smaller, sign)| sign * mn(&smaller, rest, memo))
        .sum();
    memo.insert(key, value);
    value
}

/// `χ^λ(μ)`: the character of the Specht module `S^λ` on the class of cycle type `μ`.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            actual: mu.n(),
        });
    }
    Ok(MEMO.with(|m| mn(lambda.parts(), mu.parts(), &mut m.borrow_mut())))
}

/// The full character table of S_n, rows and columns in [`partitions`] order.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    index: HashMap<Partition, usize>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn new(n: usize) -> Self {
        let partitions = partitions(n);
        let index = partitions
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let values = partitions
            .iter()
            .map(|l| {
                partitions
                    .iter()
                    .map(|m| mn_character(l, m).unwrap())
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            partitions,
            index,
            values,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn get(&self, lambda: &Partition, mu: &Partition) -> i64 {
        self.values[self.index[lambda]][self.index[mu]]
    }

    pub fn row(&self, lambda: &Partition) -> &[i64] {
        &self.values[self.index[lambda]]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repcheck::class_size;
    use num_bigint::BigInt;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::new(3);
        // rows (3), (2,1), (1,1,1); columns (3), (2,1), (1,1,1)
        let expect = [[1, 1, 1], [-1, 0, 2], [1, -1, 1]];
        for (l, row) in t.partitions().iter().zip(expect) {
            assert_eq!(t.row(l), row, "row {l}");
        }
    }

    #[test]
    fn s4_standard_and_22() {
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[1, 1, 1, 1])).unwrap(), 3);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[3, 1])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[4])).unwrap(), 0);
        assert!(mn_character(&p(&[2, 2]), &p(&[3])).is_err());
    }

    #[test]
    fn standard_representation_dimension() {
        for n in 2..=10 {
            let std_rep = Partition::hook(n, 1).unwrap();
            assert_eq!(
                mn_character(&std_rep, &Partition::identity_type(n)).unwrap(),
                n as i64 - 1
            );
        }
    }

    #[test]
    fn row_orthogonality_small() {
        for n in 1..=6 {
            let t = CharacterTable::new(n);
            let fact: BigInt = (1..=n).map(BigInt::from).product();
            for a in t.partitions() {
                for b in t.partitions() {
                    let s: BigInt = t
                        .partitions()
                        .iter()
                        .map(|mu| BigInt::from(class_size(mu)) * t.get(a, mu) * t.get(b, mu))
                        .sum();
                    let expect = if a == b {
                        fact.clone()
                    } else {
                        BigInt::from(0)
                    };
                    assert_eq!(s, expect, "n={n} {a} {b}");
                }
            }
        }
    }
}
