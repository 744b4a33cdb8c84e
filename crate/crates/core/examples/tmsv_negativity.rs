//! Logarithmic negativity of a two-mode squeezed vacuum equals 2r.

use darkmode_optomech::entanglement::{log_negativity_2mode, log_negativity_2mode_direct, BipartitionView};
use nalgebra::Matrix4;

fn tmsv(r: f64) -> Matrix4<f64> {
    let c = 0.5 * (2.0 * r).cosh();
    let s = 0.5 * (2.0 * r).sinh();
    Matrix4::new(c, 0.0, s, 0.0, 0.0, c, 0.0, -s, s, 0.0, c, 0.0, 0.0, -s, 0.0, c)
}

fn main() -> darkmode_optomech::Result<()> {
    println!("{:>6} {:>12} {:>12} {:>12}", "r", "E_N", "E_N direct", "2r");
    for k in 0..=8 {
        let r = 0.25 * k as f64;
        let view = BipartitionView::from_matrix(&tmsv(r));
        println!(
            "{r:>6.2} {:>12.9} {:>12.9} {:>12.9}",
            log_negativity_2mode(&view)?,
            log_negativity_2mode_direct(&view)?,
            2.0 * r
        );
    }
    Ok(())
}
