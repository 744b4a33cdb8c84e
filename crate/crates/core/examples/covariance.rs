//! Drift, stability and the steady-state covariance matrix of one point,
//! cross-checked against direct time integration.

use darkmode_optomech::lyapunov::integrate_lyapunov_ode;
use darkmode_optomech::{build_linearized_system, check_stability, solve_lyapunov, solve_steady_state, SystemParams};

fn main() -> darkmode_optomech::Result<()> {
    let p = SystemParams {
        j_m: 0.02,
        theta: std::f64::consts::FRAC_PI_2,
        ..Default::default()
    };
    let sys = build_linearized_system(&p, &solve_steady_state(&p)?)?;
    let verdict = check_stability(&sys)?;
    println!("stable: {}, abscissa {:.6}", verdict.stable, verdict.abscissa);

    let cm = solve_lyapunov(&sys)?;
    println!("V = {:.5}", cm.matrix());
    println!("residual {:.2e}", cm.residual(&sys));
    println!("symplectic eigenvalues {:?}", cm.symplectic_eigenvalues()?);

    let relaxed = integrate_lyapunov_ode(&sys, 200.0, 0.002)?;
    println!("max |V_ode - V| = {:.2e}", (relaxed.matrix() - cm.matrix()).amax());
    Ok(())
}
