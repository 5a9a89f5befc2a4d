use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable x{index} out of range 1..={nvars}")]
    VariableOutOfRange { index: usize, nvars: usize },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    #[error("arity mismatch: expected {expected} variables, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("monomial order is not global (all weights must be positive)")]
    NonGlobalOrder,

    #[error("weights must be positive, got {0:?}")]
    NonPositiveWeight(Vec<i64>),

    #[error("ideal is not zero-dimensional: no pure power of x{witness} is a leading monomial")]
    NotZeroDimensional { witness: usize },

    #[error("ideal is the unit ideal (empty subscheme)")]
    UnitIdeal,

    #[error("degree changed under degeneration: {before} -> {after}")]
    DegreeMismatch { before: usize, after: usize },

    #[error("no monomial limit found for c <= {cap}")]
    SearchExhausted { cap: u64 },

    #[error("undetermined valuation in coordinate {coordinate}: no stored terms below truncation order {truncation}")]
    UndeterminedValuation { coordinate: usize, truncation: i64 },

    #[error("series term u^{exponent} is at or beyond truncation order {truncation}")]
    TermBeyondTruncation { exponent: i64, truncation: i64 },

    #[error("point has no nonzero coordinate")]
    ZeroPoint,

    #[error("not a monomial ideal: generator {0} has more than one term")]
    NotMonomial(String),

    #[error("need {needed} distraction parameters, got {given}")]
    InsufficientParameters { needed: usize, given: usize },

    #[error("distraction parameters are not pairwise distinct")]
    NonDistinctParameters,

    #[error("configuration is invalid: {0}")]
    InvalidConfiguration(String),

    #[error("polynomial is not monic of degree {degree}: {poly}")]
    NotMonic { poly: String, degree: usize },

    #[error("empty weight vector")]
    EmptyWeights,

    #[error("r_cut {r_cut} out of range 1..={components}")]
    CutOutOfRange { r_cut: usize, components: usize },

    #[error("verification failed: {check}: {detail}")]
    VerificationFailed { check: String, detail: String },

    #[error("malformed document: {0}")]
    Document(String),
}

pub type Result<T> = std::result::Result<T, Error>;
