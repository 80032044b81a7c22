use thiserror::Error;

pub type Result<T, E = CategoryError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CategoryError {
    #[error("cannot compose: first morphism lands in {first_dst}, second starts at {second_src}")]
    CompositionMismatch { first_dst: String, second_src: String },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("backend mismatch: {0}")]
    BackendMismatch(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("morphism is not monic: {0}")]
    NotMonic(String),

    #[error("morphism is not epi: {0}")]
    NotEpi(String),

    #[error("object is not injective: {0}")]
    NotInjective(String),

    #[error("no factorization exists: {0}")]
    NoFactorization(String),

    #[error("composite is not zero at degree {degree}")]
    NonzeroComposite { degree: i64 },

    #[error("homotopy residual does not vanish at degree {degree}: {detail}")]
    HomotopyResidual { degree: i64, detail: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
