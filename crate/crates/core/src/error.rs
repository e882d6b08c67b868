use thiserror::Error;

/// Domain errors. Every variant names the violated precondition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not an O-sequence: {0}")]
    NotOSequence(String),
    #[error("not an SI-sequence: {0}")]
    NotSISequence(String),
    #[error("codimension too small: {0}")]
    CodimTooSmall(String),
    #[error("not an Artinian lex-segment ideal: {0}")]
    NotLexSegment(String),
    #[error("monomial degree {degree} exceeds t = {t}")]
    DegreeExceedsT { degree: usize, t: usize },
    #[error("socle degree too small: s = {s} < 2t = {twot}")]
    SocleTooSmall { s: usize, twot: usize },
    #[error("not a subconfiguration: {0}")]
    NotSubconfiguration(String),
    #[error("linking h-vector does not dominate: {0}")]
    NotDominated(String),
    #[error("h-vector is not symmetric: {0}")]
    NotSymmetric(String),
    #[error("liaison formula produced a negative entry: {0}")]
    NegativeEntry(String),
    #[error("regularity hypothesis violated: reg(X ∪ Y) = {reg_union} < 2 reg(X) = {twice_reg_x}")]
    RegularityHypothesisViolated { reg_union: usize, twice_reg_x: usize },
    #[error("closed form is undefined for s = 2t+1 (s = {s}, t = {t})")]
    SocleParity { s: usize, t: usize },
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
    #[error("variable context mismatch: {0} vs {1} variables")]
    ContextMismatch(usize, usize),
    #[error("scale exceeded: {0}")]
    ScaleExceeded(String),
    #[error("complex is not pure: {0}")]
    NotPure(String),
    #[error("64-bit integer overflow in {0}")]
    Overflow(&'static str),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
