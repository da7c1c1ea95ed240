use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires a counit but the coalgebra is noncounitary")]
    Noncounitary,

    #[error("element is not group-like")]
    NotGroupLike,

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("weight must be -1, found {0}")]
    WeightNotMinusOne(String),

    #[error("operator not idempotent")]
    NotIdempotent,

    #[error("Rota-Baxter axiom fails: {0}")]
    AxiomFailed(String),

    #[error("subspaces do not form a direct sum decomposition of the ambient space")]
    NotDirectSum,

    #[error("{0} is not a noncounitary coideal")]
    NotCoideal(String),

    #[error("invalid Hopf algebra: {0}")]
    InvalidHopf(String),

    #[error("q^{0} = 1, so q is a root of unity in the requested degree range")]
    RootOfUnity(usize),

    #[error("operator does not preserve the grading")]
    GradingNotPreserved,

    #[error("multiplication is not graded")]
    NotGraded,

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("invalid scalar {0:?}")]
    InvalidScalar(String),

    #[error("quotient is not well defined: {0}")]
    IllDefinedQuotient(String),
}
