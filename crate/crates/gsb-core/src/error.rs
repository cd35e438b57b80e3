use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("alphabet supports at most 255 generators, got {0}")]
    AlphabetTooLarge(usize),

    #[error("duplicate generator name `{0}`")]
    DuplicateGenerator(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("generator id {0} is out of range for this alphabet")]
    SymbolOutOfRange(u8),

    #[error("precedence must be a permutation of 0..{expected}")]
    BadPrecedence { expected: usize },

    #[error("zero polynomial has no leading term")]
    ZeroLeading,

    #[error("polynomial is not a binomial with unit coefficients")]
    NotBinomial,

    #[error("basis elements must be nonzero")]
    ZeroElement,

    #[error("leading word may not be empty")]
    EmptyLeadingWord,

    #[error("invalid index range: {0}")]
    BadIndexRange(String),

    #[error("unknown diagram preset `{0}`")]
    UnknownPreset(String),

    #[error("invalid Coxeter matrix: {0}")]
    BadMatrix(String),

    #[error("no curated variant of the claimed basis for `{0}`")]
    NoCuratedVariant(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("basis is not verified as closed; pass force to proceed")]
    UnverifiedBasis,

    #[error("matrix entries must be 1 on the diagonal and >= 2 (or infinite) off it")]
    BadCoxeterEntry,

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
