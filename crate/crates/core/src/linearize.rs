//! Drift and diffusion matrices of the linearized quadrature fluctuations.
//!
//! Quadrature order is (δx, δy, δQ₁, δP₁, δQ₂, δP₂) with
//! δx = (δa + δa†)/√2 and δy = (δa − δa†)/(i√2), likewise for each
//! collective mode.

use nalgebra::Matrix6;

use crate::error::{Error, Result};
use crate::params::{Drive, SystemParams};
use crate::steady_state::{MeanFields, C64};

#[derive(Debug, Clone, PartialEq)]
pub struct LinearizedSystem {
    pub drift: Matrix6<f64>,
    pub diffusion: Matrix6<f64>,
    pub coupling_1: C64,
    pub coupling_2: C64,
}

/// Scalars that fully determine the drift matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DriftInputs {
    pub delta_tilde: f64,
    pub kappa: f64,
    pub gamma_1: f64,
    pub gamma_2: f64,
    pub omega_1: f64,
    pub omega_2: f64,
    pub lambda: f64,
    pub theta: f64,
    pub coupling_1: C64,
    pub coupling_2: C64,
}

pub fn drift_matrix(p: &DriftInputs) -> Matrix6<f64> {
    let (s, c) = (p.lambda * p.theta.sin(), p.lambda * p.theta.cos());
    let (g1r, g1i) = (2.0 * p.coupling_1.re, 2.0 * p.coupling_1.im);
    let (g2r, g2i) = (2.0 * p.coupling_2.re, 2.0 * p.coupling_2.im);
    let (k, d) = (p.kappa, p.delta_tilde);
    #[rustfmt::skip]
    let a = Matrix6::new(
        -k,   d,    g1i,          0.0,         g2i,          0.0,
        -d,   -k,   -g1r,         0.0,         -g2r,         0.0,
        0.0,  0.0,  -p.gamma_1,   p.omega_1,   s,            c,
        -g1r, -g1i, -p.omega_1,   -p.gamma_1,  -c,           s,
        0.0,  0.0,  -s,           c,           -p.gamma_2,   p.omega_2,
        -g2r, -g2i, -c,           -s,          -p.omega_2,   -p.gamma_2,
    );
    a
}

/// diag[κ, κ, γ₁(2n+1), γ₁(2n+1), γ₂(2n+1), γ₂(2n+1)]
pub fn diffusion_matrix(kappa: f64, gamma_1: f64, gamma_2: f64, n_th: f64) -> Matrix6<f64> {
    let t = 2.0 * n_th + 1.0;
    Matrix6::from_diagonal(&nalgebra::Vector6::new(
        kappa,
        kappa,
        gamma_1 * t,
        gamma_1 * t,
        gamma_2 * t,
        gamma_2 * t,
    ))
}

impl LinearizedSystem {
    pub fn from_inputs(inputs: &DriftInputs, n_th: f64) -> Self {
        Self {
            drift: drift_matrix(inputs),
            diffusion: diffusion_matrix(inputs.kappa, inputs.gamma_1, inputs.gamma_2, n_th),
            coupling_1: inputs.coupling_1,
            coupling_2: inputs.coupling_2,
        }
    }

    /// Builds directly from a drift and diffusion pair, e.g. for test
    /// systems that do not come from a parameter set.
    pub fn from_matrices(drift: Matrix6<f64>, diffusion: Matrix6<f64>) -> Self {
        Self {
            drift,
            diffusion,
            coupling_1: C64::new(0.0, 0.0),
            coupling_2: C64::new(0.0, 0.0),
        }
    }
}

/// Effective couplings G₁ = √M g_m α, G₂ = √(N−M) g_m α in physical mode,
/// or the given real couplings in direct mode.
pub fn effective_couplings(params: &SystemParams, mf: &MeanFields) -> (C64, C64, f64) {
    match params.direct_couplings() {
        Some((g1, g2, delta)) => (C64::new(g1, 0.0), C64::new(g2, 0.0), delta),
        None => {
            let (g1, g2) = params.collective_couplings();
            (mf.alpha * g1, mf.alpha * g2, mf.delta_tilde)
        }
    }
}

pub fn build_linearized_system(params: &SystemParams, mf: &MeanFields) -> Result<LinearizedSystem> {
    params.validate()?;
    if matches!(params.drive, Drive::Physical { .. }) && !mf.converged {
        return Err(Error::InvalidParams(
            "mean fields have not converged".into(),
        ));
    }
    let (coupling_1, coupling_2, delta_tilde) = effective_couplings(params, mf);
    let inputs = DriftInputs {
        delta_tilde,
        kappa: params.kappa,
        gamma_1: params.gamma_1,
        gamma_2: params.gamma_2,
        omega_1: params.omega_1,
        omega_2: params.omega_2,
        lambda: params.lambda(),
        theta: params.theta,
        coupling_1,
        coupling_2,
    };
    Ok(LinearizedSystem::from_inputs(&inputs, params.n_th))
}
