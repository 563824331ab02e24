//! An explicit independent set of size `n!/Π M_i ≥ n!/4^n` for `n = 2^m`.
//!
//! The dyadic blocks `T(i, j) = {2^{m−i}(j−1)+1, ..., 2^{m−i} j}` split `[n]`
//! into halves, quarters, and so on. At level `i` every block `T(i−1, j)` has
//! an image set `R = π(T(i−1, j))` and a distinguished half `π(T(i, 2j−1)) ⊂ R`.
//! The half is ranked in `Z_{M_i}` with `M_i = C(2^{m−i+1}, 2^{m−i})`, and `π`
//! survives level `i` when the ranks over all `j` sum to zero mod `M_i`.
//!
//! Ranks use the colexicographic order on index positions within sorted `R`,
//! so the lower half of any `R` has rank zero and the identity is always a
//! member.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::{all_permutations, PermSet, Permutation};
use crate::error::{Error, Result};

fn choose(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let c = (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128);
    u64::try_from(c).expect("binomial fits in u64 for n <= 64")
}

/// Colex rank of the half-size subset `subset` of the sorted set `set`.
pub fn subset_rank(set: &[usize], subset: &[usize]) -> Result<u64> {
    if !set.len().is_multiple_of(2) || subset.len() * 2 != set.len() {
        return Err(Error::invalid(format!(
            "need |R| even and |S| = |R|/2, got |R|={} |S|={}",
            set.len(),
            subset.len()
        )));
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::invalid("R must be sorted and duplicate-free"));
    }
    let mut positions = subset
        .iter()
        .map(|v| {
            set.binary_search(v)
                .map_err(|_| Error::invalid(format!("{v} is not in R")))
        })
        .collect::<Result<Vec<_>>>()?;
    positions.sort_unstable();
    if positions.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::invalid("S has repeated elements"));
    }
    Ok(positions
        .iter()
        .enumerate()
        .map(|(i, &p)| choose(p, i + 1))
        .sum())
}

/// Inverse of [`subset_rank`]; the result is sorted.
pub fn subset_unrank(set: &[usize], rank: u64) -> Result<Vec<usize>> {
    if !set.len().is_multiple_of(2) {
        return Err(Error::invalid(format!("|R|={} is odd", set.len())));
    }
    let half = set.len() / 2;
    let total = choose(set.len(), half);
    if rank >= total {
        return Err(Error::invalid(format!(
            "rank {rank} not below C({}, {half}) = {total}",
            set.len()
        )));
    }
    let mut rank = rank;
    let mut out = vec![0; half];
    let mut upper = set.len();
    for i in (1..=half).rev() {
        // largest p < upper with C(p, i) <= rank
        let p = (i - 1..upper)
            .rev()
            .find(|&p| choose(p, i) <= rank)
            .unwrap();
        rank -= choose(p, i);
        out[i - 1] = set[p];
        upper = p;
    }
    Ok(out)
}

/// The dyadic block structure on `[2^m]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockSystem {
    m: u32,
}

impl BlockSystem {
    pub fn new(n: usize) -> Result<Self> {
        if n < 2 || !n.is_power_of_two() || n > 64 {
            return Err(Error::invalid(format!(
                "block system needs n a power of two in [2, 64], got {n}"
            )));
        }
        Ok(BlockSystem {
            m: n.trailing_zeros(),
        })
    }

    pub fn n(&self) -> usize {
        1 << self.m
    }

    pub fn levels(&self) -> usize {
        self.m as usize
    }

    /// `T(i, j)` as a 1-based inclusive range, `0 ≤ i ≤ m`, `1 ≤ j ≤ 2^i`.
    pub fn block(&self, i: usize, j: usize) -> std::ops::RangeInclusive<usize> {
        assert!(i <= self.levels() && (1..=1 << i).contains(&j));
        let size = 1usize << (self.levels() - i);
        size * (j - 1) + 1..=size * j
    }

    /// `M_i = C(2^{m−i+1}, 2^{m−i})` for `1 ≤ i ≤ m`.
    pub fn modulus(&self, i: usize) -> u64 {
        assert!((1..=self.levels()).contains(&i));
        let half = 1usize << (self.levels() - i);
        choose(2 * half, half)
    }

    /// `Π_i M_i`, the index of the constructed set in S_n.
    pub fn modulus_product(&self) -> u128 {
        (1..=self.levels())
            .map(|i| self.modulus(i) as u128)
            .product()
    }

    /// The level-`i` checksum `Σ_j ind_i(π(T(i−1, j)), π(T(i, 2j−1))) mod M_i`.
    pub fn checksum(&self, p: &Permutation, i: usize) -> u64 {
        let modulus = self.modulus(i);
        let mut total = 0u64;
        for j in 1..=1usize << (i - 1) {
            let mut parent: Vec<usize> = self.block(i - 1, j).map(|x| p.image(x)).collect();
            parent.sort_unstable();
            let half: Vec<usize> = self.block(i, 2 * j - 1).map(|x| p.image(x)).collect();
            total += subset_rank(&parent, &half).expect("image of a half block");
        }
        total % modulus
    }

    /// Number of leading levels whose checksum vanishes, i.e. the largest
    /// `i` with `π ∈ A_i`.
    pub fn depth(&self, p: &Permutation) -> usize {
        (1..=self.levels())
            .take_while(|&i| self.checksum(p, i) == 0)
            .count()
    }
}

fn check_size(p: &Permutation, sys: &BlockSystem) -> Result<()> {
    if p.n() != sys.n() {
        return Err(Error::SizeMismatch {
            expected: sys.n(),
            actual: p.n(),
        });
    }
    Ok(())
}

/// Whether every level checksum of `p` vanishes.
pub fn appendix_member(p: &Permutation, sys: &BlockSystem) -> Result<bool> {
    check_size(p, sys)?;
    Ok(sys.depth(p) == sys.levels())
}

/// Largest `n` for which the construction is enumerated by filtering S_n.
pub const MAX_APPENDIX_ENUMERATION_N: usize = 8;

fn check_enumeration(sys: &BlockSystem) -> Result<()> {
    if sys.n() > MAX_APPENDIX_ENUMERATION_N {
        return Err(Error::budget(
            "filtered enumeration of S_n",
            format!("n={}", sys.n()),
            format!("n<={MAX_APPENDIX_ENUMERATION_N}"),
        ));
    }
    Ok(())
}

/// The full set `A = A_m`.
pub fn appendix_enumerate(sys: &BlockSystem) -> Result<PermSet> {
    check_enumeration(sys)?;
    let members = all_permutations(sys.n()).filter(|p| sys.depth(p) == sys.levels());
    PermSet::new(sys.n(), members)
}

/// `[|A_0|, |A_1|, ..., |A_m|]` counted during one pass over S_n.
pub fn appendix_level_sizes(sys: &BlockSystem) -> Result<Vec<u64>> {
    check_enumeration(sys)?;
    let mut sizes = vec![0u64; sys.levels() + 1];
    for p in all_permutations(sys.n()) {
        for s in sizes.iter_mut().take(sys.depth(&p) + 1) {
            *s += 1;
        }
    }
    Ok(sizes)
}

/// Uniform member of `A`, drawn from an existing generator.
///
/// Level by level, every block but the last picks its half uniformly; the last
/// block's rank is forced so the checksum vanishes. Each prefix has the same
/// number of completions, so the result is uniform over `A`.
pub fn appendix_sample_with<R: Rng + ?Sized>(sys: &BlockSystem, rng: &mut R) -> Permutation {
    let n = sys.n();
    // images[j-1] = π(T(i, j)) for the current level i, sorted
    let mut images: Vec<Vec<usize>> = vec![(1..=n).collect()];
    for i in 1..=sys.levels() {
        let modulus = sys.modulus(i);
        let blocks = images.len();
        let mut next = Vec::with_capacity(2 * blocks);
        let mut total = 0u64;
        for (j, parent) in images.iter().enumerate() {
            let rank = if j + 1 < blocks {
                rng.gen_range(0..modulus)
            } else {
                (modulus - total % modulus) % modulus
            };
            total += rank;
            let half = subset_unrank(parent, rank).expect("rank below M_i");
            let rest: Vec<usize> = parent
                .iter()
                .copied()
                .filter(|v| !half.contains(v))
                .collect();
            next.push(half);
            next.push(rest);
        }
        images = next;
    }
    // singleton blocks: π(j) is the unique element of π(T(m, j))
    let raw: Vec<u8> = images.iter().map(|s| (s[0] - 1) as u8).collect();
    Permutation::from_zero_based(raw)
}

pub fn appendix_sample(sys: &BlockSystem, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    appendix_sample_with(sys, &mut rng)
}

/// `count` independent uniform members from one seeded stream.
pub fn appendix_samples(sys: &BlockSystem, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| appendix_sample_with(sys, &mut rng))
        .collect()
}
