use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Label, Labeling};
use crate::error::{Error, Result};

/// The recursive labeling `γ_n` for `n = 2^m ≥ 2`, with `q = 2` and `d = 3n`.
///
/// Coordinates `1..=n` hold `e_x` when `y ≤ n/2`; coordinates `n+1..=3n/2`
/// hold `e_{y'}` when `x ≤ n/2`; the last `3n/2` coordinates hold
/// `γ_{n/2}(x', y')` with `x' = ((x−1) mod n/2) + 1`. The base case assigns the
/// unit vectors `e_1..e_4` of F_2^6 to `(1,1), (1,2), (2,1), (2,2)`.
pub fn construct_recursive(n: usize) -> Result<Labeling> {
    if n < 2 || !n.is_power_of_two() {
        return Err(Error::invalid(format!(
            "recursive construction needs n a power of two >= 2, got {n}"
        )));
    }
    let d = 3 * n;
    Labeling::from_fn(n, d, 2, |x, y| {
        let mut label = Label::zero(d, 2);
        for i in recursive_support(n, x, y) {
            label.set(i, 1);
        }
        label
    })
}

/// 0-based coordinates set to one in `γ_n(x, y)`.
fn recursive_support(n: usize, x: usize, y: usize) -> Vec<usize> {
    if n == 2 {
        return vec![2 * (x - 1) + (y - 1)];
    }
    let half = n / 2;
    let mut bits = Vec::new();
    if y <= half {
        bits.push(x - 1);
    }
    let (xp, yp) = ((x - 1) % half + 1, (y - 1) % half + 1);
    if x <= half {
        bits.push(n + yp - 1);
    }
    let offset = n + half;
    bits.extend(
        recursive_support(half, xp, yp)
            .into_iter()
            .map(|i| i + offset),
    );
    bits
}

/// Independent uniform labels from Z_q^d, deterministic in `seed`.
pub fn construct_random(n: usize, d: usize, q: u32, seed: u64) -> Result<Labeling> {
    if n < 2 {
        return Err(Error::invalid(format!("n must be at least 2, got {n}")));
    }
    if d < 1 {
        return Err(Error::invalid("d must be at least 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![0u32; d];
    Labeling::from_fn(n, d, q, |_, _| {
        coords.iter_mut().for_each(|c| *c = rng.gen_range(0..q));
        Label::from_coords(&coords, q).expect("residues below q")
    })
}
