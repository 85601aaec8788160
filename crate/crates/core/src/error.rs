//! Shared error type for the exact-arithmetic modules.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    /// Two values built over different metric spaces were combined.
    #[error("space mismatch: {0}")]
    SpaceMismatch(String),
    /// A degree precondition was violated.
    #[error("degree error: {0}")]
    DegreeError(String),
    /// `form_from_bracket` found the induced tensor not totally
    /// antisymmetric, i.e. the metric is not invariant.
    #[error("metric not invariant: {0}")]
    NotMetricInvariant(String),
    /// The map passed to `double_extension` is not a skew derivation.
    #[error("invalid action: {0}")]
    InvalidAction(String),
    /// Requested configuration is outside what this toolkit supports.
    #[error("unsupported: {0}")]
    Unsupported(String),
    /// `decompose` refuses inputs that violate the orthogonal relation.
    #[error("relation violated: decompose requires [i_Xi F, F] = 0")]
    RelationViolated,
    /// A constraint sampler failed to produce a point after bounded retries.
    #[error("sampling exhausted: {0}")]
    SamplingExhausted(String),
    /// Malformed input file or expression.
    #[error("parse error: {0}")]
    ParseError(String),
    /// Case classification matched more than one label within tolerance.
    #[error("ambiguous case, candidates: {0}")]
    AmbiguousCase(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
