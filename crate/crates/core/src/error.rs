use thiserror::Error;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    #[error("relation ideal is not admissible below path-length cap {cap}")]
    NotAdmissible { cap: usize },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("modules live over different algebras")]
    AlgebraMismatch,

    #[error("search cap exceeded: {0}")]
    SearchCapExceeded(String),

    #[error("enumeration cap exceeded: {0}")]
    EnumerationCapExceeded(String),

    #[error("sequence is not almost split: {0}")]
    NotAlmostSplit(String),

    #[error("left approximation is not a monomorphism")]
    ApproximationNotMono,

    #[error("right approximation is not an epimorphism")]
    ApproximationNotEpi,

    #[error("last term of the completion is not in add(M)")]
    LastTermNotInM,

    #[error("base algebra is not self-injective")]
    NotSelfInjective,

    #[error("presentation is not minimal")]
    NotMinimal,

    #[error("no generator represents the functor: {0}")]
    RepresentabilityFailure(String),

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error("invalid input: {0}")]
    Input(String),

    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
