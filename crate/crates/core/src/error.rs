use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} at position {position} is outside the alphabet of size {alphabet}")]
    LetterOutOfRange {
        letter: u32,
        position: usize,
        alphabet: u32,
    },

    #[error("alphabet size must be at least {min}, got {got}")]
    AlphabetTooSmall { min: u32, got: u32 },

    #[error("operation is undefined on the empty word")]
    EmptyWord,

    #[error("invalid period set: {0}")]
    InvalidPeriods(String),

    #[error("enumerating {alphabet}^{length} words exceeds the budget of {budget} words")]
    BudgetExceeded {
        alphabet: u32,
        length: u32,
        budget: u64,
    },

    #[error("{digits} digits need length {required}, above the budget of {budget}")]
    InfeasiblePrecision {
        digits: u32,
        required: u64,
        budget: u32,
    },

    #[error("error radius too large to render {digits} digits")]
    InsufficientPrecision { digits: u32 },

    #[error("series check failed: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
