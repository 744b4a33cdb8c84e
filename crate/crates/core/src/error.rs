use thiserror::Error;

use crate::entanglement::EntanglementReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// Mean-field iteration hit its cap. Often a sign of optical bistability.
    #[error("steady-state iteration did not converge after {iterations} iterations (last step {last_step:e})")]
    NonConvergence { iterations: usize, last_step: f64 },

    #[error("eigenvalue computation did not converge")]
    EigenFailure,

    #[error("drift matrix is unstable (spectral abscissa {abscissa:e})")]
    UnstableSystem { abscissa: f64 },

    #[error("Lyapunov solver failed: {0}")]
    SolverFailure(String),

    #[error("step size {dt:e} exceeds the resolvable limit {max_dt:e}")]
    StepSizeTooLarge { dt: f64, max_dt: f64 },

    #[error("covariance matrix is not physical: {0}")]
    NonPhysicalCm(String),

    #[error("monogamy violated: residuals {:?}", report.residuals)]
    MonogamyViolation { report: Box<EntanglementReport> },

    #[error("bright/dark transform undefined for G1 = G2 = 0")]
    DegenerateCouplings,

    #[error("unknown preset `{0}`")]
    UnknownPreset(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
