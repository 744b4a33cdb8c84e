//! One-vs-two log-negativities and the residual contangle of the three
//! modes.

use std::f64::consts::FRAC_PI_2;

use darkmode_optomech::{
    build_linearized_system, entanglement_measures, solve_lyapunov, solve_steady_state, Mode,
    SystemParams,
};

fn main() -> darkmode_optomech::Result<()> {
    let p = SystemParams {
        kappa: 0.2,
        theta: FRAC_PI_2,
        n_total: 200,
        m_split: 100,
        ..SystemParams::default().with_gamma(0.3).with_direct(0.2, 1.0)
    };
    let sys = build_linearized_system(&p, &solve_steady_state(&p)?)?;
    let report = entanglement_measures(&solve_lyapunov(&sys)?)?;
    for (k, mode) in [Mode::Cavity, Mode::B1, Mode::B2].into_iter().enumerate() {
        println!(
            "{mode:?}: E_N(one|two) = {:.6}, residual contangle = {:+.3e}",
            report.one_vs_two[k],
            report.residual(mode)
        );
    }
    println!("R_min = {:+.3e}, monogamous: {}", report.r_min, report.monogamy_ok);
    Ok(())
}
