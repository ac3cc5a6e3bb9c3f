use thiserror::Error;

/// Errors raised by the ring, base and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScrollError {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: total codimension {found}, expected {expected}")]
    Dimension { expected: usize, found: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("conditions={conditions}, required {required}")]
    NotIncidence { conditions: u32, required: u32 },

    #[error("pair (P^{0}, P^{1}) has no common subspace inside a hyperplane of P^{2}")]
    NoSpecialization(u32, u32, u32),

    #[error("incidence is empty: P^{dim} does not meet the span P^{span}")]
    EmptyIncidence { dim: u32, span: u32 },

    #[error("no admissible degeneration for {0}")]
    UnresolvedDegeneration(String),

    #[error("value {0} does not fit a machine integer")]
    Overflow(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = ScrollError> = std::result::Result<T, E>;
