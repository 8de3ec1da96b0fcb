use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("invalid leg set {legs:?} for n = {n}, m = {m}")]
    InvalidLegSet { legs: Vec<usize>, n: usize, m: usize },

    #[error("generator index {index} out of range 1..={max}")]
    GeneratorOutOfRange { index: usize, max: usize },

    #[error("tableau is not a bijection onto the diagram: {0}")]
    InvalidTableau(String),

    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),

    #[error("word {0:?} is not reduced")]
    NotReduced(Vec<usize>),

    #[error("congruence condition violated: {0}")]
    Congruence(String),

    #[error("unknown generator label: {0}")]
    UnknownGenerator(String),

    #[error("vector lies outside {0}")]
    OutsideSubspace(String),

    #[error("no separating element found for {s:?} and {t:?}")]
    NoSeparator { s: Vec<usize>, t: Vec<usize> },
}

pub type Result<T> = std::result::Result<T, Error>;
