//! Permutations, the Birkhoff polytope graph `B_n = Cay(S_n, C_n)`, and
//! independent sets in it.
//!
//! `π` and `π'` are adjacent when `π ∘ π'⁻¹` is a cycle: a permutation with
//! exactly one nontrivial orbit. The graph is never materialized.

mod appendix;
mod fiber;
mod independence;
pub(crate) mod perm;

pub use appendix::{
    appendix_enumerate, appendix_level_sizes, appendix_member, appendix_sample,
    appendix_sample_with, appendix_samples, subset_rank, subset_unrank, BlockSystem,
    MAX_APPENDIX_ENUMERATION_N,
};
pub use fiber::{best_fiber, fibers, MAX_FIBER_N};
pub use independence::{
    bound_check, max_independent_exact, verify_independent, verify_independent_with_budget,
    IndependenceReport, DEFAULT_PAIR_BUDGET,
};
pub use perm::{adjacent, all_permutations, PermSet, Permutation};

/// Whether `tau` is a cycle in the graph-theoretic sense used here.
pub fn is_cycle(tau: &Permutation) -> bool {
    tau.is_cycle()
}
