use core::fmt;

/// Errors from construction, evaluation, and convergence control.
#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// Basis truncation below the minimum a construction needs.
    DimensionTooSmall { required: usize, got: usize },
    /// Mismatched truncation sizes between operands.
    DimensionMismatch { left: usize, right: usize },
    /// Invalid physical parameters (omega <= 0, g < 0, delta < 0).
    InvalidParams { reason: &'static str },
    /// Tridiagonal QL failed to isolate an eigenvalue.
    EigenNonConvergence { level: usize, iterations: usize },
    /// Truncation doubling hit the hard cap before eigenvalues stabilized.
    TruncationCapExceeded { cap: usize, last_delta: f64 },
    /// G-function evaluated too close to a pole at x = m*omega.
    PoleProximity { x_over_omega: f64, pole_index: usize },
    /// G-function series tail failed the convergence test at the term cap.
    SeriesNonConvergence { x_over_omega: f64, terms: usize },
    /// G-function machinery needs g > 0 (use the chain Hamiltonian at g = 0).
    CouplingRequired,
    /// Number of bracketed roots disagrees with the diagonalization oracle.
    RootCountMismatch { interval: usize, found: usize, expected: usize },
    /// Eigenstate assembled from a root fails the oracle-overlap gate.
    RepresentationMismatch { level: usize, fidelity: f64 },
    /// Selection threshold produced an empty set.
    EmptySelection { threshold: f64 },
    /// Requested level outside the decomposition.
    LevelOutOfRange { level: usize, dim: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionTooSmall { required, got } => {
                write!(f, "truncation size {got} below required minimum {required}")
            }
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            Error::InvalidParams { reason } => write!(f, "invalid model parameters: {reason}"),
            Error::EigenNonConvergence { level, iterations } => write!(
                f,
                "eigensolver failed to converge at level {level} after {iterations} iterations"
            ),
            Error::TruncationCapExceeded { cap, last_delta } => write!(
                f,
                "eigenvalues not stable at truncation cap {cap} (last change {last_delta:.3e})"
            ),
            Error::PoleProximity { x_over_omega, pole_index } => write!(
                f,
                "x = {x_over_omega} omega too close to the G-function pole at {pole_index} omega"
            ),
            Error::SeriesNonConvergence { x_over_omega, terms } => write!(
                f,
                "G-function series tail not converged at x = {x_over_omega} omega after {terms} terms"
            ),
            Error::CouplingRequired => {
                write!(f, "G-function requires g > 0; diagonalize the chain directly at g = 0")
            }
            Error::RootCountMismatch { interval, found, expected } => write!(
                f,
                "interval {interval}: found {found} roots but oracle expects {expected}"
            ),
            Error::RepresentationMismatch { level, fidelity } => write!(
                f,
                "assembled eigenstate for level {level} has oracle fidelity {fidelity:.6} < 0.999"
            ),
            Error::EmptySelection { threshold } => {
                write!(f, "no components at or above threshold {threshold}")
            }
            Error::LevelOutOfRange { level, dim } => {
                write!(f, "level {level} outside decomposition of size {dim}")
            }
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
