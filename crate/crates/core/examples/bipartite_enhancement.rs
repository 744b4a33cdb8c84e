//! Cavity-ensemble entanglement with and without hopping, in the
//! dark-mode-unbroken (θ = 0) and broken (θ = π/2) regimes.

use std::f64::consts::FRAC_PI_2;

use darkmode_optomech::sweep::{evaluate_point, PointStatus};
use darkmode_optomech::SystemParams;

fn main() {
    println!("{:>6} {:>6} {:>6} {:>10} {:>10} {:>10}", "J_m", "theta", "G", "E_aB1", "E_aB2", "E_B1B2");
    for (j_m, theta) in [(0.0, 0.0), (0.02, 0.0), (0.02, FRAC_PI_2)] {
        for g in [0.05, 0.1, 0.15, 0.2] {
            let p = SystemParams {
                j_m,
                theta,
                ..SystemParams::default().with_direct(g, 1.5)
            };
            let out = evaluate_point(&p);
            match (out.status, out.report) {
                (PointStatus::Ok, Some(r)) => println!(
                    "{j_m:>6} {theta:>6.3} {g:>6} {:>10.6} {:>10.6} {:>10.6}",
                    r.e_a_b1, r.e_a_b2, r.e_b1_b2
                ),
                (status, _) => println!("{j_m:>6} {theta:>6.3} {g:>6} {}", status.as_str()),
            }
        }
    }
}
