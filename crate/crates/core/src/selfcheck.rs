//! Invariant checks on randomly drawn parameter points, run by
//! `dmsweep check`.

use std::f64::consts::TAU;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::darkmode::hybrid_couplings;
use crate::entanglement::{log_negativity_2mode, log_negativity_2mode_direct, BipartitionView, Pair};
use crate::linearize::build_linearized_system;
use crate::lyapunov::{solve_lyapunov, SYMPLECTIC_FLOOR};
use crate::params::{Drive, SystemParams};
use crate::stability::check_stability;
use crate::steady_state::solve_steady_state;
use crate::sweep::evaluate_point;

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub trials: usize,
    pub failures: usize,
    /// Largest observed deviation from the invariant.
    pub worst: f64,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SelfCheckReport {
    pub seed: u64,
    pub samples: usize,
    pub stable_samples: usize,
    pub checks: Vec<CheckOutcome>,
}

impl SelfCheckReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }
}

/// A random direct-drive parameter point spanning the figure regimes.
pub fn random_params(rng: &mut impl Rng) -> SystemParams {
    let n_total = rng.gen_range(2..=300);
    let coupling = rng.gen_range(0.0..0.4);
    SystemParams {
        omega_1: rng.gen_range(0.8..1.2),
        omega_2: rng.gen_range(0.8..1.2),
        kappa: rng.gen_range(0.05..1.0),
        gamma_1: rng.gen_range(1e-3..0.5),
        gamma_2: rng.gen_range(1e-3..0.5),
        j_m: rng.gen_range(0.0..0.05),
        theta: rng.gen_range(0.0..TAU),
        n_total,
        m_split: rng.gen_range(1..n_total),
        n_th: rng.gen_range(0.0..2.0),
        ..SystemParams::default().with_direct(coupling, rng.gen_range(0.0..3.0))
    }
}

struct Tally {
    name: &'static str,
    trials: usize,
    failures: usize,
    worst: f64,
}

impl Tally {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            trials: 0,
            failures: 0,
            worst: 0.0,
        }
    }

    fn record(&mut self, deviation: f64, ok: bool) {
        self.trials += 1;
        if !ok {
            self.failures += 1;
        }
        if deviation.is_nan() || deviation > self.worst {
            self.worst = deviation;
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name,
            trials: self.trials,
            failures: self.failures,
            worst: self.worst,
        }
    }
}

fn scaled(p: &SystemParams, s: f64) -> SystemParams {
    let (g1, g2, delta) = p.direct_couplings().expect("direct drive");
    let mut q = p.clone();
    q.omega_1 *= s;
    q.omega_2 *= s;
    q.kappa *= s;
    q.gamma_1 *= s;
    q.gamma_2 *= s;
    q.j_m *= s;
    q.drive = Drive::Direct {
        coupling_1: g1 * s,
        coupling_2: g2 * s,
        delta_tilde: delta * s,
    };
    q
}

/// Draws `samples` random points from a seeded generator and checks:
/// Lyapunov residual, symplectic floor, the two E_N paths, hybrid-coupling
/// norm conservation, stability under time rescaling and repeatability.
pub fn run_self_check(seed: u64, samples: usize) -> SelfCheckReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut residual = Tally::new("lyapunov residual < 1e-10");
    let mut floor = Tally::new("symplectic eigenvalues >= 1/2 - 1e-8");
    let mut dual = Tally::new("two-mode E_N paths agree to 1e-10");
    let mut norm = Tally::new("|Gt+|^2 + |Gt-|^2 = G1^2 + G2^2 to 1e-12");
    let mut rescale = Tally::new("stability invariant under time rescaling");
    let mut repeat = Tally::new("evaluation is repeatable bit for bit");
    let mut stable_samples = 0;

    for _ in 0..samples {
        let p = random_params(&mut rng);
        let (g1, g2, _) = p.direct_couplings().expect("direct drive");

        if let Ok(h) = hybrid_couplings(&p, g1, g2) {
            let lhs = h.gt_plus.norm_sqr() + h.gt_minus.norm_sqr();
            let dev = (lhs - (g1 * g1 + g2 * g2)).abs();
            norm.record(dev, dev <= 1e-12);
        }

        let sys = solve_steady_state(&p).and_then(|mf| build_linearized_system(&p, &mf));
        let Ok(sys) = sys else { continue };
        let Ok(verdict) = check_stability(&sys) else { continue };

        let s = rng.gen_range(0.1..10.0);
        let q = scaled(&p, s);
        let scaled_verdict = solve_steady_state(&q)
            .and_then(|mf| build_linearized_system(&q, &mf))
            .and_then(|sys| check_stability(&sys));
        // points on the margin can legitimately flip
        if let (Ok(v2), true) = (scaled_verdict, verdict.abscissa.abs() > 1e-6) {
            let dev = (v2.abscissa - s * verdict.abscissa).abs() / (s * verdict.abscissa.abs());
            rescale.record(dev, v2.stable == verdict.stable);
        }

        if !verdict.stable {
            continue;
        }
        stable_samples += 1;
        let Ok(cm) = solve_lyapunov(&sys) else {
            residual.record(f64::NAN, false);
            continue;
        };
        let r = cm.residual(&sys);
        residual.record(r, r < 1e-10);
        match cm.min_symplectic() {
            Ok(nu) => floor.record((0.5 - nu).max(0.0), nu >= SYMPLECTIC_FLOOR),
            Err(_) => floor.record(f64::NAN, false),
        }
        for pair in [Pair::CavityB1, Pair::CavityB2, Pair::B1B2] {
            let view = BipartitionView::from_covariance(&cm, pair);
            match (log_negativity_2mode(&view), log_negativity_2mode_direct(&view)) {
                (Ok(a), Ok(b)) => {
                    let dev = (a - b).abs();
                    dual.record(dev, dev <= 1e-10);
                }
                _ => dual.record(f64::NAN, false),
            }
        }

        let first = evaluate_point(&p);
        let second = evaluate_point(&p);
        let same = first.status == second.status
            && first.covariance == second.covariance
            && first.report == second.report;
        repeat.record(if same { 0.0 } else { 1.0 }, same);
    }

    SelfCheckReport {
        seed,
        samples,
        stable_samples,
        checks: [residual, floor, dual, norm, rescale, repeat]
            .into_iter()
            .map(Tally::finish)
            .collect(),
    }
}
