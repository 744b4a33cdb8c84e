//! Grid sweeps over the model parameters with deterministic, index-ordered
//! output.

mod csv;
pub mod presets;
mod spec;

use std::time::{Duration, Instant, SystemTime};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::darkmode::{hybrid_couplings, HybridModeData};
use crate::entanglement::{entanglement_measures, EntanglementReport, MONOGAMY_TOL};
use crate::error::{Error, Result};
use crate::linearize::{build_linearized_system, effective_couplings};
use crate::lyapunov::{solve_continuous_lyapunov, CovarianceMatrix};
use crate::params::SystemParams;
use crate::stability::check_stability;
use crate::steady_state::solve_steady_state;

pub use csv::{sidecar_path, write_csv, write_run_sidecar, CSV_VERSION};
pub use presets::{figure_preset, preset_names};
pub use spec::{apply_axis, Axis, Quantity, Scale, SweepSpec, AXIS_NAMES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PointStatus {
    Ok,
    Unstable,
    Nonconverged,
    /// Lyapunov solve failed its residual check or hit a singular operator.
    SolverFailure,
    /// The covariance matrix violates the uncertainty principle.
    Nonphysical,
    /// Some residual contangle is below −1e−9; values are still reported.
    MonogamyViolation,
    /// Parameters at this grid point failed validation.
    Invalid,
}

impl PointStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PointStatus::Ok => "ok",
            PointStatus::Unstable => "unstable",
            PointStatus::Nonconverged => "nonconverged",
            PointStatus::SolverFailure => "solver_failure",
            PointStatus::Nonphysical => "nonphysical",
            PointStatus::MonogamyViolation => "monogamy_violation",
            PointStatus::Invalid => "invalid",
        }
    }

    pub fn is_flagged(self) -> bool {
        self != PointStatus::Ok
    }
}

/// Everything computed at one parameter point.
#[derive(Debug, Clone)]
pub struct PointOutcome {
    pub status: PointStatus,
    /// Spectral abscissa of the drift matrix (NaN if never built).
    pub abscissa: f64,
    pub hybrid: Option<HybridModeData>,
    pub covariance: Option<CovarianceMatrix>,
    pub symplectic_min: f64,
    /// Raw report; residuals are not clamped.
    pub report: Option<EntanglementReport>,
    pub message: Option<String>,
}

impl PointOutcome {
    fn failed(status: PointStatus, err: &Error) -> Self {
        Self {
            status,
            abscissa: f64::NAN,
            hybrid: None,
            covariance: None,
            symplectic_min: f64::NAN,
            report: None,
            message: Some(err.to_string()),
        }
    }

    pub fn value(&self, q: Quantity) -> f64 {
        let rep = |f: fn(&EntanglementReport) -> f64| self.report.as_ref().map_or(f64::NAN, f);
        let hyb = |f: fn(&HybridModeData) -> f64| self.hybrid.as_ref().map_or(f64::NAN, f);
        match q {
            Quantity::EaB1 => rep(|r| r.e_a_b1),
            Quantity::EaB2 => rep(|r| r.e_a_b2),
            Quantity::EB1B2 => rep(|r| r.e_b1_b2),
            Quantity::RMin => rep(|r| r.r_min),
            Quantity::Stability => self.abscissa,
            Quantity::GMinus => hyb(|h| h.g_minus),
            Quantity::GtPlus => hyb(|h| h.gt_plus.norm()),
            Quantity::GtMinus => hyb(|h| h.gt_minus.norm()),
            Quantity::SymplecticMin => self.symplectic_min,
        }
    }
}

/// Runs the full pipeline at one point: steady state, linearization,
/// stability, Lyapunov solve and entanglement measures. Never panics on
/// bad parameters; failures become a flagged status.
pub fn evaluate_point(params: &SystemParams) -> PointOutcome {
    if let Err(e) = params.validate() {
        return PointOutcome::failed(PointStatus::Invalid, &e);
    }
    let mf = match solve_steady_state(params) {
        Ok(mf) => mf,
        Err(e @ Error::NonConvergence { .. }) => {
            return PointOutcome::failed(PointStatus::Nonconverged, &e)
        }
        Err(e) => return PointOutcome::failed(PointStatus::Invalid, &e),
    };
    let sys = match build_linearized_system(params, &mf) {
        Ok(s) => s,
        Err(e) => return PointOutcome::failed(PointStatus::Invalid, &e),
    };
    let (c1, c2, _) = effective_couplings(params, &mf);
    let hybrid = hybrid_couplings(params, c1.norm(), c2.norm()).ok();
    let verdict = match check_stability(&sys) {
        Ok(v) => v,
        Err(e) => return PointOutcome::failed(PointStatus::SolverFailure, &e),
    };
    let mut out = PointOutcome {
        status: PointStatus::Unstable,
        abscissa: verdict.abscissa,
        hybrid,
        covariance: None,
        symplectic_min: f64::NAN,
        report: None,
        message: None,
    };
    if !verdict.stable {
        return out;
    }
    let cm = match solve_continuous_lyapunov(&sys.drift, &sys.diffusion) {
        Ok(v) => CovarianceMatrix::new(v),
        Err(e) => {
            out.status = PointStatus::SolverFailure;
            out.message = Some(e.to_string());
            return out;
        }
    };
    out.symplectic_min = cm.min_symplectic().unwrap_or(f64::NAN);
    let measured = entanglement_measures(&cm);
    out.covariance = Some(cm);
    match measured {
        Ok(report) => {
            out.status = if report.r_min >= -MONOGAMY_TOL {
                PointStatus::Ok
            } else {
                PointStatus::MonogamyViolation
            };
            out.report = Some(report);
        }
        Err(e) => {
            out.status = PointStatus::Nonphysical;
            out.message = Some(e.to_string());
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub coords: Vec<f64>,
    /// One value per requested output, in `spec.outputs` order.
    pub values: Vec<f64>,
    pub status: PointStatus,
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub spec: SweepSpec,
    /// Row-major over the axes, last axis fastest.
    pub rows: Vec<SweepRow>,
    pub started_at: SystemTime,
    pub wall_time: Duration,
}

impl SweepResult {
    pub fn flagged(&self) -> usize {
        self.rows.iter().filter(|r| r.status.is_flagged()).count()
    }

    /// Column of one requested output.
    pub fn column(&self, q: Quantity) -> Option<Vec<f64>> {
        let k = self.spec.outputs.iter().position(|&o| o == q)?;
        Some(self.rows.iter().map(|r| r.values[k]).collect())
    }
}

fn row_for(spec: &SweepSpec, coords: Vec<f64>) -> SweepRow {
    let outcome = match spec.params_at(&coords) {
        Ok(p) => evaluate_point(&p),
        Err(e) => PointOutcome::failed(PointStatus::Invalid, &e),
    };
    SweepRow {
        values: spec.outputs.iter().map(|&q| outcome.value(q)).collect(),
        status: outcome.status,
        coords,
    }
}

/// Evaluates every grid point. `spec.threads == Some(1)` runs serially;
/// any other value sizes a dedicated rayon pool (0 or `None` = default).
pub fn run_sweep(spec: &SweepSpec) -> Result<SweepResult> {
    spec.validate()?;
    let started_at = SystemTime::now();
    let clock = Instant::now();
    let grid = spec.grid();
    let rows: Vec<SweepRow> = match spec.threads {
        Some(1) => grid.into_iter().map(|c| row_for(spec, c)).collect(),
        threads => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.unwrap_or(0))
                .build()
                .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
            // indexed collect keeps grid order
            pool.install(|| grid.into_par_iter().map(|c| row_for(spec, c)).collect())
        }
    };
    let result = SweepResult {
        spec: spec.clone(),
        rows,
        started_at,
        wall_time: clock.elapsed(),
    };
    log::info!(
        "sweep `{}`: {} points, {} flagged, {:.2?}",
        spec.name,
        result.rows.len(),
        result.flagged(),
        result.wall_time
    );
    Ok(result)
}
