use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::partition::Partition;
use crate::error::{Error, Result};

/// Number of semistandard tableaux of shape `lambda` and content `mu`.
///
/// The cells holding the largest entry form a horizontal strip; peeling strips
/// off recursively gives the count. Shapes not dominating the remaining
/// content are cut immediately.
pub fn kostka(lambda: &Partition, mu: &Partition) -> Result<BigUint> {
    if lambda.n() != mu.n() {
        return Err(Error::SizeMismatch {
            expected: lambda.n(),
            actual: mu.n(),
        });
    }
    let mut memo = HashMap::new();
    Ok(count(lambda.parts(), mu.parts(), &mut memo))
}

fn count(
    shape: &[usize],
    content: &[usize],
    memo: &mut HashMap<(Vec<usize>, usize), BigUint>,
) -> BigUint {
    let Some((&strip, rest)) = content.split_last() else {
        return if shape.is_empty() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    };
    if !dominates(shape, content) {
        return BigUint::zero();
    }
    let key = (shape.to_vec(), content.len());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let mut total = BigUint::zero();
    let mut inner = shape.to_vec();
    strips(shape, 0, strip, &mut inner, &mut |nu| {
        let trimmed: Vec<usize> = nu.iter().copied().filter(|&p| p > 0).collect();
        total += count(&trimmed, rest, memo);
    });
    memo.insert(key, total.clone());
    total
}

/// Enumerates `ν ⊂ λ` with `λ/ν` a horizontal strip of the given size:
/// `λ_{i+1} ≤ ν_i ≤ λ_i`.
fn strips(
    shape: &[usize],
    row: usize,
    left: usize,
    nu: &mut Vec<usize>,
    f: &mut dyn FnMut(&[usize]),
) {
    if row == shape.len() {
        if left == 0 {
            f(nu);
        }
        return;
    }
    let floor = shape.get(row + 1).copied().unwrap_or(0);
    let max_take = (shape[row] - floor).min(left);
    for take in 0..=max_take {
        nu[row] = shape[row] - take;
        strips(shape, row + 1, left - take, nu, f);
    }
    nu[row] = shape[row];
}

fn dominates(a: &[usize], b: &[usize]) -> bool {
    let (mut sa, mut sb) = (0, 0);
    for i in 0..a.len().max(b.len()) {
        sa += a.get(i).copied().unwrap_or(0);
        sb += b.get(i).copied().unwrap_or(0);
        if sa < sb {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(
            kostka(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            kostka(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(kostka(&p(&[2, 2]), &p(&[3, 1])).unwrap(), BigUint::zero());
        assert_eq!(
            kostka(&p(&[3, 2, 1]), &p(&[1; 6])).unwrap(),
            BigUint::from(16u32)
        );
        assert!(kostka(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn diagonal_and_trivial_row() {
        for n in 1..=7 {
            for l in crate::repcheck::partitions(n) {
                assert_eq!(kostka(&l, &l).unwrap(), BigUint::one());
                assert_eq!(
                    kostka(&Partition::full_cycle(n), &l).unwrap(),
                    BigUint::one()
                );
            }
        }
    }
}
