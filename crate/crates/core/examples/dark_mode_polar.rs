//! Hybrid-mode couplings |G̃±| around the synthetic phase circle. At
//! θ = ±π/2 one of the hybrid modes decouples from the cavity.

use darkmode_optomech::darkmode::polar_coupling_profile;
use darkmode_optomech::{hybrid_couplings, SystemParams};

fn main() -> darkmode_optomech::Result<()> {
    let p = SystemParams {
        j_m: 0.1,
        g_m: 1e-4,
        ..SystemParams::default().with_gamma(1e-4).with_direct(0.1, 1.0)
    };
    for row in polar_coupling_profile(&p, 0.1, 0.1, 16)? {
        println!(
            "theta = {:>6.3}  |Gt+| = {:.6}  |Gt-| = {:.6}",
            row.theta, row.gt_plus, row.gt_minus
        );
    }
    for theta in [0.0, std::f64::consts::FRAC_PI_2] {
        let h = hybrid_couplings(&SystemParams { theta, ..p.clone() }, 0.1, 0.1)?;
        println!("theta = {theta:.4}: {:?}", h.regime);
    }
    Ok(())
}
