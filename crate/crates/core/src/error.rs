use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed element: {0}")]
    MalformedElement(String),
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("leading coefficient of the divisor is not a unit")]
    NonUnitLeadingCoeff,
    #[error("element is not in the Rees-like algebra: coefficient of t^{degree} is not in the ideal")]
    NotInAlgebra { degree: usize },
    #[error("closure violation (internal bug): {0}")]
    ClosureViolation(String),
    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),
    #[error("images disagree{} at degree {degree}", index.map(|i| format!(" in entry {}", i + 1)).unwrap_or_default())]
    ImageMismatch { index: Option<usize>, degree: usize },
    #[error("length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("supplied inverse does not verify: {0}")]
    NotAUnit(String),
    #[error("patched dual does not pair to 1: {0}")]
    DualMismatch(String),
    #[error("determinant is not 1: {0}")]
    DeterminantMismatch(String),
    #[error("row is not unimodular")]
    NotUnimodular,
    #[error("bound violation: {0}")]
    BoundViolation(String),
    #[error("no corner solver for {0}")]
    NoCornerSolver(String),
    #[error("no row solver for {0}")]
    NoRowSolver(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}
