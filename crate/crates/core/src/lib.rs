//! Simple-cycle-free edge labelings of K_{n,n}, independent sets in the
//! Birkhoff polytope graph, and exact character computations for S_n.

pub mod birkhoff;
pub mod cycles;
pub mod error;
pub mod labeling;
pub mod repcheck;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/cycles.md")]
    mod cycles {}
    #[doc = include_str!("../../../book/src/labelings.md")]
    mod labelings {}
    #[doc = include_str!("../../../book/src/birkhoff.md")]
    mod birkhoff {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    mod blocks {}
    #[doc = include_str!("../../../book/src/characters.md")]
    mod characters {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
