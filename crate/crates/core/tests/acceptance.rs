//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when
//! any criterion fails.

mod common;

use std::f64::consts::{PI, TAU};
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use darkmode_optomech::darkmode::{bright_dark_couplings, hybrid_couplings};
use darkmode_optomech::entanglement::{
    log_negativity_2mode, residual_contangle, BipartitionView,
};
use darkmode_optomech::lyapunov::{
    integrate_lyapunov_ode, lyapunov_residual, solve_lyapunov, SYMPLECTIC_FLOOR,
};
use darkmode_optomech::symplectic::{min_symplectic_eigenvalue, partial_transpose};
use darkmode_optomech::sweep::{
    figure_preset, preset_names, run_sweep, write_csv, Axis, Quantity, SweepResult, SweepSpec,
};
use darkmode_optomech::{
    build_linearized_system, check_stability, solve_steady_state, CovarianceMatrix, SystemParams,
};
use nalgebra::Matrix4;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict {
        pass,
        detail: detail.into(),
    }
}

/// Every preset, with symplectic_min and R_min forced into the outputs.
fn preset_scan() -> &'static Vec<SweepResult> {
    static SCAN: OnceLock<Vec<SweepResult>> = OnceLock::new();
    SCAN.get_or_init(|| {
        preset_names()
            .into_iter()
            .map(|name| {
                let mut spec = figure_preset(name).unwrap();
                spec.outputs = vec![Quantity::SymplecticMin, Quantity::RMin];
                run_sweep(&spec).unwrap()
            })
            .collect()
    })
}

fn lyapunov_correctness() -> Verdict {
    let clock = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1A9);
    let (mut systems, mut worst_gap, mut worst_res) = (0, 0.0f64, 0.0f64);
    while systems < 100 {
        let n_total = rng.gen_range(2..=200);
        let p = SystemParams {
            omega_1: rng.gen_range(0.8..1.2),
            omega_2: rng.gen_range(0.8..1.2),
            kappa: rng.gen_range(0.3..1.0),
            gamma_1: rng.gen_range(0.3..1.0),
            gamma_2: rng.gen_range(0.3..1.0),
            j_m: rng.gen_range(0.0..0.05),
            theta: rng.gen_range(0.0..TAU),
            n_total,
            m_split: rng.gen_range(1..n_total),
            n_th: rng.gen_range(0.0..2.0),
            ..SystemParams::default().with_direct(rng.gen_range(0.0..0.3), rng.gen_range(0.0..3.0))
        };
        let sys = build_linearized_system(&p, &solve_steady_state(&p).unwrap()).unwrap();
        let v = check_stability(&sys).unwrap();
        if !v.stable {
            continue;
        }
        systems += 1;
        let direct = solve_lyapunov(&sys).unwrap();
        let t_final = 50.0 / v.abscissa.abs();
        let dt = 0.01 / v.spectral_radius;
        let ode = integrate_lyapunov_ode(&sys, t_final, dt).unwrap();
        worst_gap = worst_gap.max((direct.matrix() - ode.matrix()).amax());
        worst_res = worst_res.max(lyapunov_residual(&sys.drift, direct.matrix(), &sys.diffusion));
    }
    let elapsed = clock.elapsed();
    verdict(
        worst_gap < 1e-8 && worst_res < 1e-10 && elapsed < Duration::from_secs(10),
        format!(
            "100 systems: max |V_direct - V_ode| = {worst_gap:.2e} (< 1e-8), max residual = {worst_res:.2e} (< 1e-10), {elapsed:.2?} (< 10 s)"
        ),
    )
}

fn vacuum_baseline() -> Verdict {
    let p = SystemParams {
        j_m: 0.0,
        n_th: 0.0,
        ..SystemParams::default().with_direct(0.0, 1.5)
    };
    let sys = build_linearized_system(&p, &solve_steady_state(&p).unwrap()).unwrap();
    let cm = solve_lyapunov(&sys).unwrap();
    let dev = (cm.matrix() - CovarianceMatrix::vacuum().matrix()).amax();
    let report = residual_contangle(&cm).unwrap();
    let measures = [
        report.e_a_b1,
        report.e_a_b2,
        report.e_b1_b2,
        report.one_vs_two[0],
        report.one_vs_two[1],
        report.one_vs_two[2],
    ];
    let worst_e = measures.iter().fold(0.0f64, |m, e| m.max(e.abs()));
    verdict(
        dev < 1e-10 && worst_e < 1e-10 && report.r_min.abs() < 1e-10,
        format!(
            "|V - I/2| = {dev:.1e}, max E_N = {worst_e:.1e}, R_min = {:.1e} (all < 1e-10)",
            report.r_min
        ),
    )
}

fn symplectic_floor() -> Verdict {
    let mut accepted = 0;
    let mut lowest = f64::INFINITY;
    for result in preset_scan() {
        for v in result.column(Quantity::SymplecticMin).unwrap() {
            if v.is_finite() {
                accepted += 1;
                lowest = lowest.min(v);
            }
        }
    }
    verdict(
        accepted > 0 && lowest >= SYMPLECTIC_FLOOR,
        format!("{accepted} accepted points over 23 presets, min nu = {lowest:.12} (>= 1/2 - 1e-8)"),
    )
}

fn dual_path_identity() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let cm: Matrix4<f64> = common::random_physical_cm(&mut rng, 0.6);
        let formula = BipartitionView::from_matrix(&cm).partial_transpose_nu().unwrap();
        let direct = min_symplectic_eigenvalue(&partial_transpose(&cm, 1)).unwrap();
        worst = worst.max((formula - direct).abs());
    }
    verdict(worst < 1e-10, format!("1000 random CMs: max |nu_det - nu_direct| = {worst:.2e} (< 1e-10)"))
}

fn tmsv_benchmark() -> Verdict {
    let mut worst = 0.0f64;
    for r in [0.5, 1.0, 2.0] {
        let e = log_negativity_2mode(&BipartitionView::from_matrix(&common::tmsv(r))).unwrap();
        worst = worst.max((e - 2.0 * r).abs());
    }
    verdict(worst < 1e-9, format!("r in {{0.5, 1, 2}}: max |E_N - 2r| = {worst:.2e} (< 1e-9)"))
}

fn dark_mode_nulls() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut g_minus_exact = true;
    for _ in 0..1000 {
        let w = rng.gen_range(0.5..1.5);
        let bd = bright_dark_couplings(rng.gen_range(1e-4..0.5), rng.gen_range(1e-4..0.5), w, w).unwrap();
        g_minus_exact &= bd.g_minus == 0.0;
    }
    let base = figure_preset("fig2b").unwrap().base;
    let (g1, g2, _) = base.direct_couplings().unwrap();
    let at = |theta: f64| hybrid_couplings(&SystemParams { theta, ..base.clone() }, g1, g2).unwrap();
    let null_0 = at(0.0).gt_minus.norm();
    let null_pi = at(PI).gt_plus.norm();
    let mut norm_dev = 0.0f64;
    for k in 0..=360 {
        let h = at(TAU * k as f64 / 360.0);
        norm_dev = norm_dev.max((h.gt_plus.norm_sqr() + h.gt_minus.norm_sqr() - g1 * g1 - g2 * g2).abs());
    }
    verdict(
        g_minus_exact && null_0 < 1e-12 && null_pi < 1e-12 && norm_dev < 1e-12,
        format!(
            "G_- == 0 exactly: {g_minus_exact}; |Gt_-|(0) = {null_0:.1e}, |Gt_+|(pi) = {null_pi:.1e}, norm dev = {norm_dev:.1e} (< 1e-12)"
        ),
    )
}

fn grid_max(result: &SweepResult, q: Quantity) -> f64 {
    result
        .column(q)
        .unwrap()
        .into_iter()
        .filter(|v| v.is_finite())
        .fold(f64::NEG_INFINITY, f64::max)
}

fn dmb_enhancement() -> Verdict {
    let clock = Instant::now();
    let dmu = run_sweep(&figure_preset("fig4a").unwrap()).unwrap();
    let dmb = run_sweep(&figure_preset("fig4b").unwrap()).unwrap();
    let elapsed = clock.elapsed();
    let (a, b) = (grid_max(&dmu, Quantity::EB1B2), grid_max(&dmb, Quantity::EB1B2));
    let ratio = b / a;
    verdict(
        ratio >= 2.0 && elapsed < Duration::from_secs(120),
        format!("max E_B1B2: J=0 {a:.4}, J=0.02 {b:.4}, ratio {ratio:.2} (>= 2), {elapsed:.2?} (< 2 min)"),
    )
}

fn g_line(preset: &str, j_m: f64) -> SweepResult {
    let mut spec: SweepSpec = figure_preset(preset).unwrap();
    spec.base.j_m = j_m;
    spec.axes = vec![Axis::linear("G_j", 0.0, 0.3, 101)];
    spec.outputs = vec![Quantity::RMin];
    run_sweep(&spec).unwrap()
}

fn tripartite_switch_on() -> Verdict {
    let dmu = grid_max(&g_line("fig7a", 0.0), Quantity::RMin);
    let dmb_line = g_line("fig7a", 0.02);
    let dmb = grid_max(&dmb_line, Quantity::RMin);
    let stable = dmb_line.rows.iter().filter(|r| r.values[0].is_finite()).count();
    let larger = if dmu > 0.0 { dmb >= 10.0 * dmu } else { dmb > 0.0 };
    let info = format!(
        "[gamma_m=0.3 panel: J=0 {:.3e}, J=0.02 {:.3e}]",
        grid_max(&g_line("fig7b", 0.0), Quantity::RMin),
        grid_max(&g_line("fig7b", 0.02), Quantity::RMin)
    );
    verdict(
        dmu < 1e-4 && larger,
        format!(
            "max R_min over G_j: J=0 {dmu:.3e} (< 1e-4), J=0.02 {dmb:.3e} over {stable}/101 stable points (>= 10x) {info}"
        ),
    )
}

fn monogamy() -> Verdict {
    let (mut stable, mut violations, mut worst) = (0, 0, f64::INFINITY);
    let mut offenders = Vec::new();
    for result in preset_scan() {
        let mut here = 0;
        for r in result.column(Quantity::RMin).unwrap().into_iter().filter(|v| v.is_finite()) {
            stable += 1;
            worst = worst.min(r);
            if r < -1e-9 {
                here += 1;
            }
        }
        if here > 0 {
            offenders.push(format!("{}:{here}", result.spec.name));
        }
        violations += here;
    }
    verdict(
        violations == 0,
        format!(
            "{violations}/{stable} stable points with a residual < -1e-9 (min {worst:.3e}) [{}]",
            offenders.join(" ")
        ),
    )
}

/// First n_th at which R_min drops below 10% of its value at the first
/// grid point; `None` if it never does.
fn decay_point(n_th: &[f64], r_min: &[f64]) -> Option<f64> {
    let reference = r_min[0];
    n_th.iter()
        .zip(r_min)
        .find(|(_, &r)| !(r >= 0.1 * reference))
        .map(|(&n, _)| n)
}

fn thermal_robustness() -> Verdict {
    let spec = figure_preset("fig10a").unwrap();
    let n_axis = spec.axes[0].values();
    let series = |j_m: f64| -> Vec<f64> {
        let mut s = spec.clone();
        s.base.j_m = j_m;
        s.axes.truncate(1);
        s.outputs = vec![Quantity::RMin];
        // negative residuals carry no tripartite entanglement
        run_sweep(&s).unwrap().column(Quantity::RMin).unwrap().into_iter().map(|r| if r < 0.0 { 0.0 } else { r }).collect()
    };
    let dmu = series(0.0);
    let dmb = series(0.02);
    let describe = |r: &[f64]| {
        if r[0].is_nan() {
            "unstable at n_th=0.001".to_string()
        } else if r[0] <= 1e-9 {
            "no tripartite entanglement at n_th=0.001".to_string()
        } else {
            format!(
                "R_min(0.001)={:.3e}, 10% point {}",
                r[0],
                decay_point(&n_axis, r).map_or("beyond 10".into(), |n| format!("{n:.4}"))
            )
        }
    };
    let pass = if dmu[0] > 1e-9 {
        let n_dmu = decay_point(&n_axis, &dmu).unwrap_or(f64::INFINITY);
        let n_dmb = if dmb[0] > 0.0 { decay_point(&n_axis, &dmb).unwrap_or(f64::INFINITY) } else { 0.0 };
        n_dmb >= 2.0 * n_dmu
    } else {
        // persistence over one decade of n_th
        dmb[0] > 0.0 && decay_point(&n_axis, &dmb).map_or(true, |n| n > 10.0 * n_axis[0])
    };
    verdict(
        pass,
        format!("DMU (J=0): {}; DMB (J=0.02): {}", describe(&dmu), describe(&dmb)),
    )
}

fn determinism() -> Verdict {
    let render = |threads: usize| {
        let mut spec = figure_preset("fig7a").unwrap();
        spec.threads = Some(threads);
        spec.outputs = vec![Quantity::RMin, Quantity::EB1B2, Quantity::Stability, Quantity::GtMinus];
        let mut buf = Vec::new();
        write_csv(&run_sweep(&spec).unwrap(), &mut buf).unwrap();
        buf
    };
    let serial = render(1);
    let parallel = render(4);
    verdict(
        serial == parallel,
        format!("fig7a serial vs 4 threads: {} bytes, identical = {}", serial.len(), serial == parallel),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Verdict); 11] = [
        ("Lyapunov correctness", lyapunov_correctness),
        ("Vacuum baseline", vacuum_baseline),
        ("Symplectic floor", symplectic_floor),
        ("Two-mode E_N dual-path identity", dual_path_identity),
        ("TMSV benchmark", tmsv_benchmark),
        ("Dark-mode nulls", dark_mode_nulls),
        ("DMB enhancement", dmb_enhancement),
        ("Tripartite switch-on", tripartite_switch_on),
        ("Monogamy", monogamy),
        ("Thermal robustness ordering", thermal_robustness),
        ("Determinism", determinism),
    ];
    let mut failed = 0;
    println!("acceptance: {} criteria", criteria.len());
    for (name, check) in criteria {
        let clock = Instant::now();
        let v = check();
        if !v.pass {
            failed += 1;
        }
        println!(
            "{} {name}: {} ({:.2?})",
            if v.pass { "PASS" } else { "FAIL" },
            v.detail,
            clock.elapsed()
        );
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
