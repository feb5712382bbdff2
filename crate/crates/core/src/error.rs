use thiserror::Error;

/// Errors produced by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter index {index} is outside an alphabet of {size} letters")]
    AlphabetMismatch { index: usize, size: usize },
    #[error("duplicate letter `{0}` in alphabet")]
    DuplicateLetter(String),
    #[error("word `{0}` is not an associative Lyndon-Shirshov word")]
    NotAlsw(String),
    #[error("occurrence {start}..{end} is out of bounds for a word of length {len}")]
    OccurrenceOutOfBounds { start: usize, end: usize, len: usize },
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("polynomial is not a Lie element: remainder has non-Lyndon leading word `{0}`")]
    NotLieElement(String),
    #[error("composition shape error: {0}")]
    CompositionShape(String),
    #[error("rules {0} and {1} have the same leading word")]
    DuplicateLeadingWord(usize, usize),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("relation is not in the dotted subspace V: {0}")]
    NotInV(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operator is not an averaging operator: {0}")]
    NotAveraging(String),
    #[error("arity mismatch: {0}")]
    ArityMismatch(String),
    #[error("invalid Lie table: {0}")]
    InvalidLieTable(String),
    #[error("subalgebra generators are linearly dependent")]
    DependentGenerators,
    #[error("invalid HNN input: {0}")]
    InvalidHnnInput(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
