//! Steady-state Gaussian entanglement in a cavity coupled to two molecular
//! ensembles whose collective vibrations hop into each other with a
//! synthetic phase θ.
//!
//! The pipeline is
//! [`solve_steady_state`] → [`build_linearized_system`] →
//! [`check_stability`] → [`solve_lyapunov`] → [`entanglement_measures`],
//! with [`hybrid_couplings`] describing the bright/dark structure of the
//! same parameter point and [`sweep::run_sweep`] mapping the whole chain
//! over a parameter grid.
//!
//! Rates and frequencies are dimensionless, in units of ω_m.

pub mod darkmode;
pub mod entanglement;
pub mod error;
pub mod linearize;
pub mod lyapunov;
pub mod params;
pub mod selfcheck;
pub mod stability;
pub mod steady_state;
pub mod sweep;
pub mod symplectic;
pub mod thermal;

pub use darkmode::{hybrid_couplings, HybridModeData, Regime};
pub use entanglement::{
    entanglement_measures, residual_contangle, BipartitionView, EntanglementReport, Mode, Pair,
};
pub use error::{Error, Result};
pub use linearize::{build_linearized_system, LinearizedSystem};
pub use lyapunov::{solve_lyapunov, CovarianceMatrix};
pub use params::{Drive, SystemParams};
pub use stability::{check_stability, StabilityVerdict};
pub use steady_state::{solve_steady_state, MeanFields, C64};
pub use thermal::{nth_to_temperature, temperature_to_nth};
