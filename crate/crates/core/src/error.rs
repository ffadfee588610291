use thiserror::Error;

/// Errors raised while building specs or driving generators.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("multiplicity vector is empty")]
    EmptySpec,

    #[error("multiplicity at index {index} is {value}; every class needs at least one item")]
    ZeroMultiplicity { index: usize, value: usize },

    #[error("total size {total} exceeds the configured maximum of {max}")]
    TooLarge { total: usize, max: usize },

    #[error("size must be at least 1")]
    ZeroSize,

    #[error("combination size {n} is not within 1..={r}")]
    BadCombination { n: usize, r: usize },

    #[error("position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },

    #[error("positions {from} and {to} hold the same value {value}")]
    EqualValues {
        from: usize,
        to: usize,
        value: usize,
    },

    #[error("event swaps position {0} with itself")]
    SelfSwap(usize),

    #[error("entry {value} at index {index} is outside 1..={n}")]
    EntryOutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },

    #[error("reverse re-initialization requested while a run is still in progress")]
    RunInProgress,

    #[error("count does not fit in 64 bits")]
    CountOverflow,

    #[error("{what} size {size} exceeds the oracle guard of {max}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        max: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
