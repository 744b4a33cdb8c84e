mod common;

use std::f64::consts::TAU;

use darkmode_optomech::darkmode::hybrid_couplings;
use darkmode_optomech::entanglement::{
    log_negativity_2mode, log_negativity_2mode_direct, BipartitionView,
};
use darkmode_optomech::lyapunov::{CovarianceMatrix, SYMPLECTIC_FLOOR};
use darkmode_optomech::selfcheck::random_params;
use darkmode_optomech::symplectic::min_symplectic_eigenvalue;
use darkmode_optomech::sweep::{evaluate_point, PointStatus};
use darkmode_optomech::{
    build_linearized_system, check_stability, entanglement_measures, solve_lyapunov,
    solve_steady_state, Drive, SystemParams,
};
use nalgebra::{Matrix4, Matrix6};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn params_from_seed(seed: u64) -> SystemParams {
    random_params(&mut ChaCha8Rng::seed_from_u64(seed))
}

fn stable_covariance(p: &SystemParams) -> Option<(Matrix6<f64>, f64)> {
    let mf = solve_steady_state(p).ok()?;
    let sys = build_linearized_system(p, &mf).ok()?;
    let verdict = check_stability(&sys).ok()?;
    if !verdict.stable {
        return None;
    }
    let cm = solve_lyapunov(&sys).ok()?;
    Some((*cm.matrix(), cm.residual(&sys)))
}

fn swapped(p: &SystemParams) -> SystemParams {
    let (g1, g2, delta) = p.direct_couplings().unwrap();
    SystemParams {
        omega_1: p.omega_2,
        omega_2: p.omega_1,
        gamma_1: p.gamma_2,
        gamma_2: p.gamma_1,
        m_split: p.n_total - p.m_split,
        theta: -p.theta,
        drive: Drive::Direct {
            coupling_1: g2,
            coupling_2: g1,
            delta_tilde: delta,
        },
        ..p.clone()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_covariances_respect_uncertainty(seed in any::<u64>(), scale in 0.05f64..0.6) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v = common::random_physical_cm::<6>(&mut rng, scale);
        let nu = min_symplectic_eigenvalue(&v).unwrap();
        prop_assert!(nu >= SYMPLECTIC_FLOOR, "nu = {nu}");
    }

    #[test]
    fn two_mode_paths_agree(seed in any::<u64>(), scale in 0.05f64..0.8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let v: Matrix4<f64> = common::random_physical_cm::<4>(&mut rng, scale);
        let view = BipartitionView::from_matrix(&v);
        let a = log_negativity_2mode(&view).unwrap();
        let b = log_negativity_2mode_direct(&view).unwrap();
        prop_assert!((a - b).abs() <= 1e-10 * a.max(1.0), "{a} vs {b}");
        prop_assert!(a >= 0.0);
    }

    #[test]
    fn stable_points_give_physical_states(seed in any::<u64>()) {
        let p = params_from_seed(seed);
        if let Some((v, residual)) = stable_covariance(&p) {
            prop_assert!(residual < 1e-10, "residual {residual}");
            prop_assert!(v.cholesky().is_some(), "covariance is not positive definite");
            prop_assert!((v - v.transpose()).amax() == 0.0);
            let nu = min_symplectic_eigenvalue(&v).unwrap();
            prop_assert!(nu >= SYMPLECTIC_FLOOR, "nu = {nu}");
            let report = entanglement_measures(&CovarianceMatrix::new(v)).unwrap();
            for e in [report.e_a_b1, report.e_a_b2, report.e_b1_b2] {
                prop_assert!(e >= 0.0);
            }
            for e in report.one_vs_two {
                prop_assert!(e >= 0.0);
            }
        }
    }

    #[test]
    fn variances_grow_with_bath_occupation(seed in any::<u64>(), extra in 0.01f64..3.0) {
        let p = params_from_seed(seed);
        let hot = SystemParams { n_th: p.n_th + extra, ..p.clone() };
        if let (Some((cold, _)), Some((warm, _))) = (stable_covariance(&p), stable_covariance(&hot)) {
            for k in 0..6 {
                prop_assert!(warm[(k, k)] >= cold[(k, k)] - 1e-12, "diag {k}");
            }
        }
    }

    #[test]
    fn hybrid_couplings_conserve_norm(seed in any::<u64>()) {
        let p = params_from_seed(seed);
        let (g1, g2, _) = p.direct_couplings().unwrap();
        if let Ok(h) = hybrid_couplings(&p, g1, g2) {
            let lhs = h.gt_plus.norm_sqr() + h.gt_minus.norm_sqr();
            prop_assert!((lhs - (g1 * g1 + g2 * g2)).abs() <= 1e-12);
            prop_assert!((h.f * h.f + h.h * h.h - 1.0).abs() <= 1e-12);
        }
    }

    #[test]
    fn rescaling_time_scales_abscissa(seed in any::<u64>(), s in 0.1f64..10.0) {
        let p = params_from_seed(seed);
        let (g1, g2, delta) = p.direct_couplings().unwrap();
        let q = SystemParams {
            omega_1: p.omega_1 * s,
            omega_2: p.omega_2 * s,
            kappa: p.kappa * s,
            gamma_1: p.gamma_1 * s,
            gamma_2: p.gamma_2 * s,
            j_m: p.j_m * s,
            drive: Drive::Direct { coupling_1: g1 * s, coupling_2: g2 * s, delta_tilde: delta * s },
            ..p.clone()
        };
        let a = evaluate_point(&p);
        let b = evaluate_point(&q);
        prop_assume!(a.abscissa.is_finite() && b.abscissa.is_finite());
        prop_assert!((b.abscissa - s * a.abscissa).abs() <= 1e-8 * s.max(1.0));
        if a.status == PointStatus::Ok && b.status == PointStatus::Ok {
            let (ra, rb) = (a.report.unwrap(), b.report.unwrap());
            prop_assert!((ra.e_a_b1 - rb.e_a_b1).abs() < 1e-7);
            prop_assert!((ra.e_b1_b2 - rb.e_b1_b2).abs() < 1e-7);
        }
    }

    #[test]
    fn relabelling_ensembles_swaps_their_entanglement(seed in any::<u64>()) {
        let p = params_from_seed(seed);
        let a = evaluate_point(&p);
        let b = evaluate_point(&swapped(&p));
        prop_assert_eq!(a.status, b.status);
        if let (Some(ra), Some(rb)) = (a.report, b.report) {
            prop_assert!((ra.e_a_b1 - rb.e_a_b2).abs() < 1e-9);
            prop_assert!((ra.e_a_b2 - rb.e_a_b1).abs() < 1e-9);
            prop_assert!((ra.e_b1_b2 - rb.e_b1_b2).abs() < 1e-9);
        }
    }

    #[test]
    fn phase_is_periodic(seed in any::<u64>(), turns in -3i32..=3) {
        let p = params_from_seed(seed);
        let q = SystemParams { theta: p.theta + f64::from(turns) * TAU, ..p.clone() };
        let a = evaluate_point(&p);
        let b = evaluate_point(&q);
        prop_assert_eq!(a.status, b.status);
        if let (Some(ra), Some(rb)) = (a.report, b.report) {
            prop_assert!((ra.e_a_b1 - rb.e_a_b1).abs() < 1e-9);
            prop_assert!((ra.e_a_b2 - rb.e_a_b2).abs() < 1e-9);
            prop_assert!((ra.r_min - rb.r_min).abs() < 1e-9);
        }
    }
}
