//! Builds a sweep spec in code, runs it in parallel and writes the CSV
//! to stdout.

use darkmode_optomech::sweep::{run_sweep, write_csv, Axis, Quantity, SweepSpec};
use darkmode_optomech::SystemParams;

fn main() -> darkmode_optomech::Result<()> {
    let spec = SweepSpec {
        name: "custom".into(),
        caption: Some("E_aB1 against phase and hopping".into()),
        notes: vec![],
        base: SystemParams::default(),
        axes: vec![Axis::linear("theta", 0.0, std::f64::consts::PI, 5), Axis::linear("J_m", 0.0, 0.02, 3)],
        outputs: vec![Quantity::EaB1, Quantity::EB1B2, Quantity::Stability],
        output_path: None,
        threads: None,
        split_fraction: None,
    };
    let result = run_sweep(&spec)?;
    write_csv(&result, &mut std::io::stdout().lock())?;
    eprintln!("{} points, {} flagged", result.rows.len(), result.flagged());
    Ok(())
}
