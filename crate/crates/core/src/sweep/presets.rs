//! Named sweeps reproducing each published figure panel.
//!
//! Every number here comes from the corresponding figure caption; where a
//! caption leaves a range or a resolution open, the choice is stated in the
//! preset notes.

use std::f64::consts::{FRAC_PI_2, TAU};

use crate::error::{Error, Result};
use crate::params::SystemParams;

use super::spec::{Axis, Quantity, SweepSpec};

const RES: usize = 101;

fn spec(name: &str, caption: &str, base: SystemParams, axes: Vec<Axis>, outputs: Vec<Quantity>) -> SweepSpec {
    SweepSpec {
        name: name.to_string(),
        caption: Some(caption.to_string()),
        notes: Vec::new(),
        base,
        axes,
        outputs,
        output_path: None,
        threads: None,
        split_fraction: None,
    }
}

fn note(mut s: SweepSpec, text: &str) -> SweepSpec {
    s.notes.push(text.to_string());
    s
}

/// γ = 1e-4, g_m = 1e-4, κ = 1/3, T = 312 K.
fn polar_base() -> SystemParams {
    let mut p = SystemParams {
        kappa: 1.0 / 3.0,
        g_m: 1e-4,
        j_m: 0.1,
        ..SystemParams::default().with_gamma(1e-4).with_direct(0.1, 1.5)
    };
    p.set_temperature(312.0);
    p
}

/// Cavity–ensemble entanglement with the first ensemble empty.
fn cavity_base(theta: f64, delta_tilde: f64) -> SystemParams {
    let mut p = SystemParams {
        kappa: 1.0 / 3.0,
        g_m: 1e-3,
        j_m: 0.0,
        theta,
        n_total: 100,
        m_split: 0,
        delta_a: delta_tilde,
        ..SystemParams::default().with_gamma(1e-4).with_direct(0.2, delta_tilde)
    };
    p.set_temperature(312.0);
    p
}

/// N = 100, M = 50, κ = 1/3, γ = 0.3, n_th = 0.001.
fn ensemble_base(j_m: f64, theta: f64) -> SystemParams {
    SystemParams {
        kappa: 1.0 / 3.0,
        j_m,
        theta,
        n_total: 100,
        m_split: 50,
        n_th: 1e-3,
        ..SystemParams::default().with_gamma(0.3).with_direct(0.2, 1.5)
    }
}

/// N = 200, M = 100, κ = 0.2, Δ̃ = 1.5, θ = π/2, n_th = 0.001.
fn tripartite_base(gamma: f64, g_m: f64, j_m: f64) -> SystemParams {
    SystemParams {
        kappa: 0.2,
        g_m,
        j_m,
        theta: FRAC_PI_2,
        n_total: 200,
        m_split: 100,
        n_th: 1e-3,
        ..SystemParams::default().with_gamma(gamma).with_direct(0.2, 1.5)
    }
}

fn fig2b() -> SweepSpec {
    note(
        spec(
            "fig2b",
            "|Gt_+-| vs theta; G_1=G_2=0.1, J_m=0.1, kappa=1/3, gamma=1e-4, g_m=1e-4, T=312 K",
            polar_base(),
            vec![Axis::linear("theta", 0.0, TAU, RES)],
            vec![Quantity::GtPlus, Quantity::GtMinus, Quantity::GMinus],
        ),
        "N and M are not fixed by the caption; N=100, M=50 used",
    )
}

fn fig3(panel: char) -> SweepSpec {
    let outputs = vec![Quantity::EaB2];
    match panel {
        'a' => spec(
            "fig3a",
            "E_aB2 vs delta_tilde and G_j; J_m=0, theta=0, M=0, N=100, kappa=1/3, gamma=1e-4, g_m=1e-3, T=312 K",
            cavity_base(0.0, 1.5),
            vec![
                Axis::linear("delta_tilde", 0.0, 3.0, RES),
                Axis::linear("G_j", 0.0, 0.3, RES),
            ],
            outputs,
        ),
        _ => note(
            spec(
                "fig3b",
                "E_aB2 vs G_j and J_m; delta_tilde=0.7, theta=pi/2, M=0, N=100, kappa=1/3, gamma=1e-4, g_m=1e-3, T=312 K",
                cavity_base(FRAC_PI_2, 0.7),
                vec![
                    Axis::linear("G_j", 0.0, 0.3, RES),
                    Axis::linear("J_m", 0.0, 0.05, RES),
                ],
                outputs,
            ),
            "with M=0 the hopping rate J_m sqrt(M(N-M)) vanishes",
        ),
    }
}

fn fig4(panel: char) -> SweepSpec {
    let outputs = vec![Quantity::EB1B2];
    let common = "N=100, M=N/2, kappa=1/3, gamma_m=0.3, n_th=0.001";
    match panel {
        'a' => spec(
            "fig4a",
            &format!("E_B1B2 vs delta_tilde and G_j; J_m=0, theta=0, {common}"),
            ensemble_base(0.0, 0.0),
            vec![
                Axis::linear("delta_tilde", 0.0, 3.0, RES),
                Axis::linear("G_j", 0.0, 0.3, RES),
            ],
            outputs,
        ),
        'b' => spec(
            "fig4b",
            &format!("E_B1B2 vs delta_tilde and G_j; J_m=0.02, theta=pi/2, {common}"),
            ensemble_base(0.02, FRAC_PI_2),
            vec![
                Axis::linear("delta_tilde", 0.0, 3.0, RES),
                Axis::linear("G_j", 0.0, 0.3, RES),
            ],
            outputs,
        ),
        'c' => spec(
            "fig4c",
            &format!("E_B1B2 vs G_j and J_m; delta_tilde=1.5, theta=pi/2, {common}"),
            ensemble_base(0.0, FRAC_PI_2),
            vec![
                Axis::linear("G_j", 0.0, 0.3, RES),
                Axis::linear("J_m", 0.0, 0.04, RES),
            ],
            outputs,
        ),
        _ => note(
            spec(
                "fig4d",
                &format!("E_B1B2 vs G_j for several J_m; delta_tilde=1.5, theta=pi/2, {common}"),
                ensemble_base(0.0, FRAC_PI_2),
                vec![
                    Axis::linear("G_j", 0.0, 0.3, RES),
                    Axis::linear("J_m", 0.0, 0.03, 4),
                ],
                outputs,
            ),
            "J_m family 0, 0.01, 0.02, 0.03 chosen; the caption does not list it",
        ),
    }
}

fn fig5(panel: char) -> SweepSpec {
    let (j_m, theta, regime) = if panel == 'a' || panel == 'b' {
        (0.0, 0.0, "J_m=0, theta=0")
    } else {
        (0.02, FRAC_PI_2, "J_m=0.02, theta=pi/2")
    };
    let mut base = ensemble_base(j_m, theta);
    base.set_temperature(210.0);
    let kappa = Axis::linear("kappa", 0.05, 2.0, RES);
    let common = "gamma_m=0.3, delta_tilde=1.5, G_j=0.2, T=210 K";
    let s = if panel == 'a' || panel == 'c' {
        spec(
            &format!("fig5{panel}"),
            &format!("E_B1B2 vs M and kappa; N=100, {regime}, {common}"),
            base,
            vec![Axis::linear("M_split", 0.0, 100.0, RES), kappa],
            vec![Quantity::EB1B2],
        )
    } else {
        let mut s = spec(
            &format!("fig5{panel}"),
            &format!("E_B1B2 vs N and kappa; M=N/2, {regime}, {common}"),
            base,
            vec![Axis::linear("N_total", 2.0, 202.0, RES), kappa],
            vec![Quantity::EB1B2],
        );
        s.split_fraction = Some(0.5);
        s
    };
    note(
        s,
        "axis ranges are not printed in the caption; kappa in [0.05, 2] chosen",
    )
}

fn fig6(panel: char) -> SweepSpec {
    let output = if panel == 'a' || panel == 'c' {
        Quantity::EaB2
    } else {
        Quantity::EB1B2
    };
    let base = SystemParams {
        g_m: 1e-3,
        ..ensemble_base(0.02, FRAC_PI_2)
    };
    let common = "kappa=1/3, G_j=0.2, gamma_m=0.3, N=100, M=N/2, theta=pi/2";
    let temperature = Axis::linear("temperature", 0.0, 600.0, RES);
    let s = if panel == 'a' || panel == 'b' {
        spec(
            &format!("fig6{panel}"),
            &format!("{} vs delta_tilde and T; J_m=0.02, {common}", output.name()),
            base,
            vec![Axis::linear("delta_tilde", 0.0, 3.0, RES), temperature],
            vec![output],
        )
    } else {
        note(
            spec(
                &format!("fig6{panel}"),
                &format!("{} vs T for several J_m; delta_tilde=1.5, {common}", output.name()),
                base,
                vec![temperature, Axis::linear("J_m", 0.0, 0.02, 3)],
                vec![output],
            ),
            "J_m family 0, 0.01, 0.02 chosen; the caption does not list it",
        )
    };
    note(s, "temperature range [0, 600] K chosen")
}

fn fig7(panel: char) -> SweepSpec {
    let gamma = if panel == 'a' { 1e-3 } else { 0.3 };
    spec(
        &format!("fig7{panel}"),
        &format!(
            "R_min vs G_j and J_m; gamma_m={gamma}, kappa=0.2, delta_tilde=1.5, N=200, M=N/2, theta=pi/2, n_th=0.001, g_m=1e-4"
        ),
        tripartite_base(gamma, 1e-4, 0.0),
        vec![
            Axis::linear("G_j", 0.0, 0.3, RES),
            Axis::linear("J_m", 0.0, 0.03, RES),
        ],
        vec![Quantity::RMin],
    )
}

fn fig8(panel: char) -> SweepSpec {
    let base = tripartite_base(0.3, 1e-3, 0.01);
    let common = "kappa=0.2, G_j=0.2, delta_tilde=1.5, N=200, M=N/2, theta=pi/2, n_th=0.001";
    let s = if panel == 'a' {
        spec(
            "fig8a",
            &format!("R_min vs gamma_1 and gamma_2; J_m=0.01, {common}"),
            base,
            vec![
                Axis::linear("gamma_1", 0.001, 0.6, RES),
                Axis::linear("gamma_2", 0.001, 0.6, RES),
            ],
            vec![Quantity::RMin],
        )
    } else {
        note(
            spec(
                "fig8b",
                &format!("R_min vs gamma_m; J_m in (0, 0.01), {common}"),
                base,
                vec![
                    Axis::linear("gamma_m", 0.001, 0.6, RES),
                    Axis::linear("J_m", 0.0, 0.01, 2),
                ],
                vec![Quantity::RMin],
            ),
            "J_m=0 included as the dark-mode reference",
        )
    };
    note(s, "damping range [0.001, 0.6] chosen")
}

fn fig9(panel: char) -> SweepSpec {
    let base = SystemParams {
        kappa: 1.0 / 3.0,
        ..tripartite_base(0.3, 1e-3, 0.02)
    };
    let common = "gamma_m=0.3, delta_tilde=1.5, N=200, M=N/2, theta=pi/2, n_th=0.001, kappa=1/3";
    if panel == 'a' {
        note(
            spec(
                "fig9a",
                &format!("R_min vs G_1 and G_2; J_m=0.02, {common}"),
                base,
                vec![
                    Axis::linear("G_1", 0.0, 0.3, RES),
                    Axis::linear("G_2", 0.0, 0.3, RES),
                ],
                vec![Quantity::RMin],
            ),
            "the DMB hopping rate J_m=0.02 is assumed",
        )
    } else {
        spec(
            "fig9b",
            &format!("R_min vs G_j for J_m in (0, 0.01, 0.02); {common}"),
            base,
            vec![
                Axis::linear("G_j", 0.0, 0.3, RES),
                Axis::linear("J_m", 0.0, 0.02, 3),
            ],
            vec![Quantity::RMin],
        )
    }
}

fn fig10(panel: char) -> SweepSpec {
    let gamma = if panel == 'a' { 1e-3 } else { 0.3 };
    note(
        spec(
            &format!("fig10{panel}"),
            &format!(
                "R_min vs n_th, DMU (J_m=0) and DMB (J_m=0.02); gamma_m={gamma}, kappa=0.2, G_j=0.2, delta_tilde=1.5, N=200, M=N/2, theta=pi/2"
            ),
            tripartite_base(gamma, 1e-3, 0.0),
            vec![
                Axis::log("n_th", 1e-3, 10.0, RES),
                Axis::linear("J_m", 0.0, 0.02, 2),
            ],
            vec![Quantity::RMin, Quantity::Stability],
        ),
        "n_th range [0.001, 10] on a log grid chosen",
    )
}

const NAMES: [&str; 23] = [
    "fig2b", "fig3a", "fig3b", "fig4a", "fig4b", "fig4c", "fig4d", "fig5a", "fig5b", "fig5c",
    "fig5d", "fig6a", "fig6b", "fig6c", "fig6d", "fig7a", "fig7b", "fig8a", "fig8b", "fig9a",
    "fig9b", "fig10a", "fig10b",
];

/// All preset names in figure order.
pub fn preset_names() -> Vec<&'static str> {
    NAMES.to_vec()
}

/// Sweep spec for a named figure panel.
pub fn figure_preset(name: &str) -> Result<SweepSpec> {
    let unknown = || Error::UnknownPreset(name.to_string());
    let rest = name.strip_prefix("fig").ok_or_else(unknown)?;
    let split = rest.len().checked_sub(1).ok_or_else(unknown)?;
    if !rest.is_char_boundary(split) {
        return Err(unknown());
    }
    let (fig, panel) = rest.split_at(split);
    let panel = panel.chars().next().ok_or_else(unknown)?;
    let s = match (fig, panel) {
        ("2", 'b') => fig2b(),
        ("3", 'a' | 'b') => fig3(panel),
        ("4", 'a'..='d') => fig4(panel),
        ("5", 'a'..='d') => fig5(panel),
        ("6", 'a'..='d') => fig6(panel),
        ("7", 'a' | 'b') => fig7(panel),
        ("8", 'a' | 'b') => fig8(panel),
        ("9", 'a' | 'b') => fig9(panel),
        ("10", 'a' | 'b') => fig10(panel),
        _ => return Err(unknown()),
    };
    Ok(s)
}
