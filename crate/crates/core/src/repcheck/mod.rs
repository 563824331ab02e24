//! Exact character computations for S_n and the quantities built on them:
//! the class function `φ_A` of a permutation set, hook characters, the inner
//! product with the n-cycle indicator, and tuple-action statistics.

mod character;
mod class_fn;
mod kostka;
mod partition;
mod series;
mod tuples;

pub use character::{mn_character, CharacterTable};
pub use class_fn::{
    all_characters_nonnegative, chi_on_phi, dimension, duality_check, hook_values, ip_characters,
    ip_direct, phi_from_set, ClassFunction, PAIR_SCAN_BUDGET,
};
pub use kostka::kostka;
pub use partition::{class_size, partitions, Partition};
pub use series::series_bound;
pub use tuples::{lemma_bound, uniformity, young_trace, TUPLE_TABLE_BUDGET};
