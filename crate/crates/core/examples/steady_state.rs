//! Self-consistent mean fields of a pumped cavity and the effective
//! couplings they produce.

use darkmode_optomech::linearize::effective_couplings;
use darkmode_optomech::{solve_steady_state, Drive, SystemParams};

fn main() -> darkmode_optomech::Result<()> {
    for amplitude in [5.0, 10.0, 20.0, 40.0] {
        let p = SystemParams {
            j_m: 0.004,
            theta: 0.9,
            omega_2: 1.05,
            gamma_2: 0.25,
            m_split: 40,
            drive: Drive::Physical { amplitude },
            ..Default::default()
        };
        let mf = solve_steady_state(&p)?;
        let (g1, g2, delta) = effective_couplings(&p, &mf);
        let worst = mf.residuals(&p).iter().map(|r| r.norm()).fold(0.0, f64::max);
        println!(
            "E = {amplitude:>5}: |alpha|^2 = {:>8.2}, delta_tilde = {delta:.6}, |G1| = {:.4}, |G2| = {:.4}, {} iterations, residual {worst:.1e}",
            mf.alpha.norm_sqr(),
            g1.norm(),
            g2.norm(),
            mf.iterations
        );
    }
    Ok(())
}
