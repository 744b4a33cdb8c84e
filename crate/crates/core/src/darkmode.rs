//! Bright/dark and hybrid collective modes of the linearized Hamiltonian.
//!
//! Without hopping, the cavity sees the bright combination B₊ and the dark
//! combination B₋ couples only through the frequency mismatch. With hopping
//! λ e^{iθ}, the hybrid modes B̃± = f δβ₁₍₂₎ ∓ e^{±iθ} h δβ₂₍₁₎ couple to the
//! cavity with strengths G̃± = f G₁₍₂₎ ∓ e^{∓iθ} h G₂₍₁₎.

use std::f64::consts::{FRAC_1_SQRT_2, TAU};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::SystemParams;
use crate::steady_state::C64;

/// Relative coupling below which a hybrid mode counts as dark.
pub const DARK_THRESHOLD: f64 = 1e-3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrightDark {
    pub g_plus: f64,
    pub g_minus: f64,
    pub omega_plus: f64,
    pub omega_minus: f64,
}

/// G₊ = √(G₁² + G₂²), G₋ = G₁G₂(ω₁′ − ω₂′)/G and the bright/dark
/// frequencies ω± = (ω₁′G₁₍₂₎² + ω₂′G₂₍₁₎²)/G².
pub fn bright_dark_couplings(
    coupling_1: f64,
    coupling_2: f64,
    omega_1p: f64,
    omega_2p: f64,
) -> Result<BrightDark> {
    let g_sq = coupling_1 * coupling_1 + coupling_2 * coupling_2;
    if !(g_sq > 0.0) {
        return Err(Error::DegenerateCouplings);
    }
    let g = g_sq.sqrt();
    let (c1, c2) = (coupling_1 * coupling_1, coupling_2 * coupling_2);
    Ok(BrightDark {
        g_plus: g,
        g_minus: coupling_1 * coupling_2 * (omega_1p - omega_2p) / g,
        omega_plus: (omega_1p * c1 + omega_2p * c2) / g_sq,
        omega_minus: (omega_1p * c2 + omega_2p * c1) / g_sq,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    /// Dark mode unbroken: one hybrid mode is (nearly) decoupled.
    #[serde(rename = "DMU")]
    DarkModeUnbroken,
    #[serde(rename = "DMB")]
    DarkModeBroken,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HybridModeData {
    pub g_plus: f64,
    pub g_minus: f64,
    pub gt_plus: C64,
    pub gt_minus: C64,
    pub omega_plus: f64,
    pub omega_minus: f64,
    pub f: f64,
    pub h: f64,
    pub regime: Regime,
}

/// Hybrid frequencies (ω₁′ + ω₂′ ± √((ω₁′ − ω₂′)² + 4λ²))/2.
pub fn hybrid_frequencies(omega_1p: f64, omega_2p: f64, lambda: f64) -> (f64, f64) {
    let mean = 0.5 * (omega_1p + omega_2p);
    let half_split = 0.5 * ((omega_1p - omega_2p).powi(2) + 4.0 * lambda * lambda).sqrt();
    (mean + half_split, mean - half_split)
}

/// Mixing coefficients (f, h) with f² + h² = 1.
///
/// At λ = 0 the formulas are 0/0 whenever ω̃₋ = ω₁′; the λ → 0⁺ limit is
/// used instead.
pub fn mixing_coefficients(omega_1p: f64, omega_2p: f64, lambda: f64) -> (f64, f64) {
    let (_, omega_minus) = hybrid_frequencies(omega_1p, omega_2p, lambda);
    let offset = omega_minus - omega_1p;
    if lambda == 0.0 {
        return if offset != 0.0 {
            (1.0, 0.0)
        } else if omega_1p < omega_2p {
            (0.0, -1.0)
        } else {
            (FRAC_1_SQRT_2, -FRAC_1_SQRT_2)
        };
    }
    let f = offset.abs() / offset.hypot(lambda);
    (f, f * lambda / offset)
}

fn classify(gt_plus: C64, gt_minus: C64) -> Regime {
    let (a, b) = (gt_plus.norm(), gt_minus.norm());
    let (lo, hi) = (a.min(b), a.max(b));
    if hi == 0.0 || lo < DARK_THRESHOLD * hi {
        Regime::DarkModeUnbroken
    } else {
        Regime::DarkModeBroken
    }
}

/// Hybrid-mode couplings for real effective couplings `coupling_1`,
/// `coupling_2`, using the bare ω₁, ω₂ as the primed frequencies.
pub fn hybrid_couplings(
    params: &SystemParams,
    coupling_1: f64,
    coupling_2: f64,
) -> Result<HybridModeData> {
    params.validate()?;
    if !(coupling_1.is_finite() && coupling_2.is_finite()) {
        return Err(Error::InvalidParams("couplings must be finite".into()));
    }
    let (w1, w2) = (params.omega_1, params.omega_2);
    let lambda = params.lambda();
    let (g_plus, g_minus) = match bright_dark_couplings(coupling_1, coupling_2, w1, w2) {
        Ok(bd) => (bd.g_plus, bd.g_minus),
        Err(Error::DegenerateCouplings) => (0.0, 0.0),
        Err(e) => return Err(e),
    };
    let (omega_plus, omega_minus) = hybrid_frequencies(w1, w2, lambda);
    let (f, h) = mixing_coefficients(w1, w2, lambda);
    let phase = C64::from_polar(1.0, params.theta);
    let gt_plus = coupling_1 * f - phase.conj() * (h * coupling_2);
    let gt_minus = coupling_2 * f + phase * (h * coupling_1);
    Ok(HybridModeData {
        g_plus,
        g_minus,
        gt_plus,
        gt_minus,
        omega_plus,
        omega_minus,
        f,
        h,
        regime: classify(gt_plus, gt_minus),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarRow {
    pub theta: f64,
    pub gt_plus: f64,
    pub gt_minus: f64,
}

/// |G̃±| on a uniform θ grid over [0, 2π).
pub fn polar_coupling_profile(
    params: &SystemParams,
    coupling_1: f64,
    coupling_2: f64,
    n_theta: usize,
) -> Result<Vec<PolarRow>> {
    if n_theta < 8 {
        return Err(Error::InvalidParams(format!(
            "polar profile needs at least 8 angles, got {n_theta}"
        )));
    }
    (0..n_theta)
        .map(|k| {
            let theta = TAU * k as f64 / n_theta as f64;
            let p = SystemParams {
                theta,
                ..params.clone()
            };
            let data = hybrid_couplings(&p, coupling_1, coupling_2)?;
            Ok(PolarRow {
                theta,
                gt_plus: data.gt_plus.norm(),
                gt_minus: data.gt_minus.norm(),
            })
        })
        .collect()
}
