#![allow(dead_code)]

use cyclefree::birkhoff::{PermSet, Permutation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random permutation set of the given size bound; `even` keeps only even draws.
pub fn random_set(n: usize, max_size: usize, even: bool, seed: u64) -> PermSet {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let target = rng.gen_range(1..=max_size);
    let mut members = Vec::new();
    let mut images: Vec<usize> = (1..=n).collect();
    while members.len() < target {
        images.shuffle(&mut rng);
        let p = Permutation::new(&images).unwrap();
        if !even || p.sign() == 1 {
            members.push(p);
        }
    }
    PermSet::new(n, members).unwrap()
}
