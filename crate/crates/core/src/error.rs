use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("subspace is not contained in the ambient space: {0}")]
    NotContained(String),

    #[error("group closure exceeded {bound} elements")]
    GroupBoundExceeded { bound: usize },

    #[error("Jacobi identity fails on basis triple ({}, {}, {})", .triple.0 + 1, .triple.1 + 1, .triple.2 + 1)]
    JacobiFailure { triple: (usize, usize, usize) },

    #[error("not a subalgebra: {0}")]
    NotSubalgebra(String),

    #[error("not a Lie algebra automorphism: {0}")]
    NotAutomorphism(String),

    #[error("contraction of a degree 0 form")]
    DegreeZeroContraction,

    #[error("d^2 != 0 in degree {degree}")]
    NotAComplex { degree: usize },

    #[error("invalid filtered complex: {0}")]
    InvalidFiltration(String),

    #[error("invalid group action: {0}")]
    InvalidAction(String),

    #[error("convergence audit failed in total degree {degree}: E_inf sums to {einf}, cohomology has dimension {cohomology}")]
    AuditFailure {
        degree: usize,
        einf: usize,
        cohomology: usize,
    },

    #[error("solver bound exceeded: {0}")]
    SolverBound(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),

    #[error("inconsistent cup product data: {0}")]
    InconsistentCup(String),

    #[error("unresolved reference: {0}")]
    Unresolved(String),
}

pub type Result<T> = std::result::Result<T, Error>;
