//! Loopless generators: each step from one object to the next takes a
//! bounded number of operations, independent of the object's size.
//!
//! - [`JohnsonTrotter`]: permutations by adjacent transpositions.
//! - [`CombinationServer`]: in-place combinations, reversible in O(1).
//! - [`MultisetPermutations`]: permutations of a multiset, one swap per step.
//! - [`parking::ParkingFunctions`]: parking functions, block by block.
//!
//! [`oracle`] holds brute-force references and [`check`] the transition rules
//! the tests hold the generators to.
//!
//! ```
//! use loopless::{DeltaSource, MultisetPermutations, MultisetSpec};
//!
//! let spec = MultisetSpec::new(&[2, 1]).unwrap();
//! let all: Vec<_> = MultisetPermutations::new(&spec).objects().collect();
//! assert_eq!(all, [[1, 1, 2], [1, 2, 1], [2, 1, 1]]);
//! ```

pub mod check;
pub mod combgen;
pub mod count;
pub mod delta;
pub mod error;
pub mod jt;
pub mod meter;
pub mod multiperm;
pub mod multiset;
pub mod oracle;
pub mod parking;
pub mod source;

pub use combgen::{CombinationServer, ValueChange};
pub use delta::{apply_delta, format_labels, DeltaEvent, Permutation};
pub use error::{Error, Result};
pub use jt::JohnsonTrotter;
pub use meter::{Meter, OpCounter, StepStats, Unmetered};
pub use multiperm::{mp_count, MultisetPermutations};
pub use multiset::MultisetSpec;
pub use source::{DeltaSource, Objects};

// The guide's snippets run as doctests so they cannot drift from the code.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/permutations.md")]
    mod permutations {}
    #[doc = include_str!("../../../book/src/combinations.md")]
    mod combinations {}
    #[doc = include_str!("../../../book/src/multiset.md")]
    mod multiset {}
    #[doc = include_str!("../../../book/src/parking.md")]
    mod parking {}
    #[doc = include_str!("../../../book/src/instrumentation.md")]
    mod instrumentation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
