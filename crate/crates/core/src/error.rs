//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("gram matrix is not symmetric")]
    NotSymmetric,

    #[error("gram matrix is singular")]
    SingularGram,

    #[error("lattice is not even")]
    NotEven,

    #[error("lattice is not positive definite")]
    NotPositiveDefinite,

    #[error("vector does not lie in the lattice")]
    NotInLattice,

    #[error("zero vector not allowed here")]
    ZeroVector,

    #[error("orthogonal complement is degenerate (h is isotropic)")]
    DegenerateComplement,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quadratic form entry is not an integer: {0}")]
    NonIntegralEntry(String),

    #[error("evenness congruence fails: p*s + (r-s) = {0} mod 8 (need 0)")]
    VenkovCongruence(u64),

    #[error("unsupported root lattice kind: {0}")]
    UnsupportedKind(String),

    #[error("root component with rank {rank} and {count} roots matches no ADE type")]
    UnclassifiableComponent { rank: usize, count: usize },

    #[error("the coset conditions do not decouple per variable")]
    ZConditionNotDecoupled,

    #[error("no lattice vector satisfies the half-integer slice condition")]
    ZConditionInconsistent,

    #[error("no vector u with u.h = -1 exists (gcd of h pairings is {0})")]
    ParticularSolutionFailed(String),

    #[error("emptiness verification found a counterexample point: {0}")]
    TheoremViolation(String),

    #[error("independent computations disagree: {0}")]
    CrossCheckMismatch(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
