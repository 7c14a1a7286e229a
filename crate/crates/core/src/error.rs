use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("integrand not finite on the contour at {0}")]
    SingularOnContour(String),
    #[error("bilateral sum terms are not decreasing at the cutoff")]
    TailDiverging,
    #[error("non-integrable singularity near {0}")]
    NonIntegrableSingularity(String),
    #[error("at least {needed} samples required, got {got}")]
    InsufficientSamples { needed: usize, got: usize },
    #[error("pole of the gamma function at a non-positive integer")]
    PoleAtNonPositiveInteger,
    #[error("division by zero in the Pochhammer symbol")]
    DivisionByZero,
    #[error("pole of the complex-field gamma function")]
    PoleAtLatticePoint,
    #[error("base modulus must be below one")]
    ModulusNotLessThanOne,
    #[error("q^x hits the pole lattice q^-k")]
    PoleAtQLattice,
    #[error("argument not in the upper half plane")]
    NotInUpperHalfPlane,
    #[error("zero base with non-positive effective exponent")]
    ZeroBase,
    #[error("infinite product does not converge (|q| >= 1)")]
    ProductNotConvergent,
    #[error("argument within guard distance of a pole")]
    PoleHit,
    #[error("argument outside the convergence strip of the integral representation")]
    OutsideConvergenceStrip,
    #[error("argument outside the asymptotic cone")]
    OutsideCone,
    #[error("balancing condition violated: {0}")]
    BalancingViolated(String),
    #[error("pole sequences pinch the contour: {0}")]
    ContourPinch(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
}

pub type Result<T> = std::result::Result<T, Error>;
