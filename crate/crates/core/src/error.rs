use thiserror::Error;

/// Errors produced across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("ambient dimension {0} is outside 1..=32")]
    DimensionOutOfRange(usize),

    #[error("coordinate {index} is outside 1..={dim}")]
    CoordinateOutOfRange { index: usize, dim: usize },

    #[error("cannot parse {0:?}")]
    Parse(String),

    /// A size guard rejected the request before any work was done.
    #[error("guard `{guard}` violated: {value} is outside {min}..={max}")]
    Guard {
        guard: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },

    #[error("{0:?} is not a valid restricted-growth word")]
    InvalidWord(String),

    /// Erasing a letter produced a word that breaks the growth rule.
    #[error("erasing letter {index} of {word} breaks the growth rule")]
    InvalidResult { word: String, index: usize },

    #[error("subspace [{0}] is not a member of the family N")]
    NotInFamily(String),

    #[error("case {0} is outside 1..=7")]
    InvalidCase(u8),

    #[error("unknown format {0:?}")]
    UnknownFormat(String),

    #[error("index {index} is out of range for {len} items")]
    IndexOutOfRange { index: usize, len: usize },

    /// An internal invariant failed. Always a defect.
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn guard(guard: &'static str, value: usize, min: usize, max: usize) -> Result<()> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(Error::Guard {
            guard,
            value,
            min,
            max,
        })
    }
}
