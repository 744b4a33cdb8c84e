//! Physical parameters of the two-collective-mode model.
//!
//! All rates and frequencies are in units of the bare vibrational frequency
//! ω_m. The physical value of ω_m (rad/s) is kept only to convert bath
//! temperatures into thermal occupations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::thermal::{self, OMEGA_30_THZ};

/// How the effective optomechanical couplings are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Drive {
    /// Effective couplings and detuning are given directly; the mean-field
    /// solve is skipped. The intracavity amplitude is taken real and
    /// positive, so both couplings are real.
    Direct {
        #[serde(rename = "G_1")]
        coupling_1: f64,
        #[serde(rename = "G_2")]
        coupling_2: f64,
        delta_tilde: f64,
    },
    /// The cavity is pumped with amplitude `E` and the steady state is
    /// solved self-consistently.
    Physical {
        #[serde(rename = "E_amplitude")]
        amplitude: f64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemParams {
    /// Bare vibrational angular frequency in rad/s.
    pub omega_m: f64,
    pub omega_1: f64,
    pub omega_2: f64,
    /// Bare cavity detuning Δ_a = ω_a − ω_l.
    pub delta_a: f64,
    pub kappa: f64,
    pub gamma_1: f64,
    pub gamma_2: f64,
    /// Single-molecule optomechanical coupling.
    pub g_m: f64,
    /// Intermolecular hopping rate.
    #[serde(rename = "J_m")]
    pub j_m: f64,
    /// Synthetic-gauge phase on the hopping term.
    pub theta: f64,
    #[serde(rename = "N_total")]
    pub n_total: u32,
    #[serde(rename = "M_split")]
    pub m_split: u32,
    pub n_th: f64,
    pub drive: Drive,
}

impl Default for SystemParams {
    fn default() -> Self {
        Self {
            omega_m: OMEGA_30_THZ,
            omega_1: 1.0,
            omega_2: 1.0,
            delta_a: 1.5,
            kappa: 1.0 / 3.0,
            gamma_1: 0.3,
            gamma_2: 0.3,
            g_m: 1.0e-3,
            j_m: 0.0,
            theta: 0.0,
            n_total: 100,
            m_split: 50,
            n_th: 1.0e-3,
            drive: Drive::Direct {
                coupling_1: 0.2,
                coupling_2: 0.2,
                delta_tilde: 1.5,
            },
        }
    }
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParams(msg()))
    }
}

impl SystemParams {
    pub fn validate(&self) -> Result<()> {
        let nonneg = [
            ("omega_1", self.omega_1),
            ("omega_2", self.omega_2),
            ("g_m", self.g_m),
            ("J_m", self.j_m),
            ("n_th", self.n_th),
        ];
        for (name, v) in nonneg {
            check(v.is_finite() && v >= 0.0, || {
                format!("{name} must be finite and non-negative, got {v}")
            })?;
        }
        for (name, v) in [
            ("omega_m", self.omega_m),
            ("kappa", self.kappa),
            ("gamma_1", self.gamma_1),
            ("gamma_2", self.gamma_2),
        ] {
            check(v.is_finite() && v > 0.0, || {
                format!("{name} must be finite and positive, got {v}")
            })?;
        }
        check(self.delta_a.is_finite(), || "delta_a must be finite".into())?;
        check(self.theta.is_finite(), || "theta must be finite".into())?;
        check(self.n_total > 0, || "N_total must be positive".into())?;
        check(self.m_split <= self.n_total, || {
            format!("M_split = {} exceeds N_total = {}", self.m_split, self.n_total)
        })?;
        match self.drive {
            Drive::Direct {
                coupling_1,
                coupling_2,
                delta_tilde,
            } => {
                check(coupling_1.is_finite() && coupling_1 >= 0.0, || {
                    format!("G_1 must be finite and non-negative, got {coupling_1}")
                })?;
                check(coupling_2.is_finite() && coupling_2 >= 0.0, || {
                    format!("G_2 must be finite and non-negative, got {coupling_2}")
                })?;
                check(delta_tilde.is_finite(), || "delta_tilde must be finite".into())?;
            }
            Drive::Physical { amplitude } => {
                check(amplitude.is_finite(), || "E_amplitude must be finite".into())?;
            }
        }
        Ok(())
    }

    /// Inter-mode coupling λ = J_m √(M (N − M)).
    pub fn lambda(&self) -> f64 {
        let m = f64::from(self.m_split);
        let rest = f64::from(self.n_total - self.m_split);
        self.j_m * (m * rest).sqrt()
    }

    /// Collective single-photon couplings (g_m √M, g_m √(N − M)).
    pub fn collective_couplings(&self) -> (f64, f64) {
        let m = f64::from(self.m_split);
        let rest = f64::from(self.n_total - self.m_split);
        (self.g_m * m.sqrt(), self.g_m * rest.sqrt())
    }

    /// Real effective couplings in direct mode. An empty sub-ensemble
    /// (M = 0 or M = N) carries no coupling, matching the physical-mode
    /// formula G = g_m √M α.
    pub fn direct_couplings(&self) -> Option<(f64, f64, f64)> {
        match self.drive {
            Drive::Direct {
                coupling_1,
                coupling_2,
                delta_tilde,
            } => {
                let g1 = if self.m_split == 0 { 0.0 } else { coupling_1 };
                let g2 = if self.m_split == self.n_total { 0.0 } else { coupling_2 };
                Some((g1, g2, delta_tilde))
            }
            Drive::Physical { .. } => None,
        }
    }

    /// Sets `n_th` from a bath temperature using the physical ω_m.
    pub fn set_temperature(&mut self, t_kelvin: f64) {
        self.n_th = thermal::temperature_to_nth(t_kelvin, self.omega_m);
    }

    pub fn temperature(&self) -> f64 {
        thermal::nth_to_temperature(self.n_th, self.omega_m)
    }

    /// Same damping on both collective modes.
    pub fn with_gamma(mut self, gamma: f64) -> Self {
        self.gamma_1 = gamma;
        self.gamma_2 = gamma;
        self
    }

    /// Direct drive with G_1 = G_2 = `coupling`.
    pub fn with_direct(mut self, coupling: f64, delta_tilde: f64) -> Self {
        self.drive = Drive::Direct {
            coupling_1: coupling,
            coupling_2: coupling,
            delta_tilde,
        };
        self
    }
}
