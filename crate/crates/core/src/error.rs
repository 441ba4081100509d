use thiserror::Error;

use crate::roots::solver::ComplexRootSet;

#[derive(Debug, Clone, Error)]
pub enum CdError {
    #[error("gamma parameter at position {0} is zero")]
    ZeroGamma(usize),
    #[error("4*mu + 1 must be nonzero")]
    DegenerateMu,
    #[error("expected {expected} entries, got {got}")]
    BadLength { expected: usize, got: usize },
    #[error("operands belong to different algebras")]
    ParamsMismatch,
    #[error("element has zero (isotropic) norm and is not invertible")]
    NotInvertible,
    #[error("operation requires a locally-complex (main sequence) algebra")]
    NotLocallyComplex,
    #[error("companion coefficient of x^{degree} is not central")]
    NonCentralResult { degree: usize },
    #[error("root solver did not converge after {iterations} iterations")]
    NoConvergence {
        iterations: usize,
        partial: Box<ComplexRootSet>,
    },
    #[error("operation requires a division algebra (main sequence, level <= 3)")]
    NotDivisionAlgebra,
    #[error("polynomial must have degree at least 1")]
    DegreeZero,
    #[error("non-monic root bounds are only valid up to the octonions (level <= 3)")]
    NonMonicHighLevel,
    #[error("polynomial has non-real coefficients")]
    NonRealCoefficients,
    #[error("slice direction must have trace 0 and norm 1")]
    BadDirection,
}

pub type Result<T> = std::result::Result<T, CdError>;
