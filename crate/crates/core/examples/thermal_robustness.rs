//! Entanglement against bath temperature for a 30 THz vibration.

use darkmode_optomech::sweep::evaluate_point;
use darkmode_optomech::SystemParams;

fn main() {
    for t in [0.0, 100.0, 200.0, 300.0, 400.0, 500.0, 600.0] {
        let mut p = SystemParams {
            j_m: 0.02,
            theta: std::f64::consts::FRAC_PI_2,
            ..SystemParams::default().with_direct(0.2, 1.5)
        };
        p.set_temperature(t);
        let out = evaluate_point(&p);
        let e = out.report.map(|r| r.e_a_b1).unwrap_or(f64::NAN);
        println!("T = {t:>5} K  n_th = {:.4e}  E_aB1 = {e:.6}  ({})", p.n_th, out.status.as_str());
    }
}
