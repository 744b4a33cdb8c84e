//! Command-line front end: figure presets, config-driven sweeps and the
//! invariant self-check.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use darkmode_optomech::selfcheck::run_self_check;
use darkmode_optomech::sweep::{
    figure_preset, preset_names, run_sweep, write_csv, write_run_sidecar, SweepSpec,
};
use darkmode_optomech::{Error, Result};

/// Overrides the directory that relative output paths are written into.
const OUT_DIR_ENV: &str = "DMSWEEP_OUT_DIR";

#[derive(Parser)]
#[command(name = "dmsweep", version, about = "Dark-mode entanglement parameter sweeps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a sweep and write it as CSV.
    Sweep {
        /// TOML sweep spec; layered over the preset when both are given.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        preset: Option<String>,
        /// Output file; `-` writes to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads (1 = serial).
        #[arg(long)]
        threads: Option<usize>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Inspect the built-in figure presets.
    Presets {
        #[command(subcommand)]
        action: PresetAction,
    },
    /// Check core invariants on random parameter points.
    Check {
        #[arg(long, default_value_t = 2024)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum PresetAction {
    /// Print preset names with their captions.
    List,
    /// Print one preset as a TOML config.
    Show { name: String },
}

fn load_spec(config: Option<&Path>, preset: Option<&str>) -> Result<SweepSpec> {
    let base = preset.map(figure_preset).transpose()?;
    match (config, base) {
        (Some(path), base) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
            SweepSpec::from_toml(&text, base.as_ref())
        }
        (None, Some(spec)) => Ok(spec),
        (None, None) => Err(Error::Config("give --config and/or --preset".into())),
    }
}

fn resolve_out(spec: &SweepSpec, out: Option<PathBuf>) -> PathBuf {
    let path = out
        .or_else(|| spec.output_path.clone())
        .unwrap_or_else(|| {
            let name = if spec.name.is_empty() { "sweep" } else { &spec.name };
            PathBuf::from(format!("{name}.csv"))
        });
    match std::env::var_os(OUT_DIR_ENV) {
        Some(dir) if path.is_relative() && path != Path::new("-") => PathBuf::from(dir).join(path),
        _ => path,
    }
}

fn sweep(
    config: Option<PathBuf>,
    preset: Option<String>,
    out: Option<PathBuf>,
    threads: Option<usize>,
) -> Result<usize> {
    let mut spec = load_spec(config.as_deref(), preset.as_deref())?;
    if threads.is_some() {
        spec.threads = threads;
    }
    let out = resolve_out(&spec, out);
    let result = run_sweep(&spec)?;
    if out == Path::new("-") {
        let stdout = std::io::stdout();
        let mut w = stdout.lock();
        write_csv(&result, &mut w)?;
        w.flush()?;
    } else {
        if let Some(dir) = out.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let mut w = BufWriter::new(File::create(&out)?);
        write_csv(&result, &mut w)?;
        w.flush()?;
        write_run_sidecar(&result, &out)?;
        eprintln!(
            "wrote {} ({} points, {} flagged, {:.2?})",
            out.display(),
            result.rows.len(),
            result.flagged(),
            result.wall_time
        );
    }
    Ok(result.flagged())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Sweep {
            config,
            preset,
            out,
            threads,
            format: Format::Csv,
        } => sweep(config, preset, out, threads).map(|flagged| flagged > 0),
        Command::Presets { action } => match action {
            PresetAction::List => {
                for name in preset_names() {
                    let spec = figure_preset(name).expect("listed preset");
                    println!("{name:<7} {}", spec.caption.unwrap_or_default());
                }
                Ok(false)
            }
            PresetAction::Show { name } => figure_preset(&name)
                .and_then(|s| s.to_toml())
                .map(|t| {
                    print!("{t}");
                    false
                }),
        },
        Command::Check { seed, samples } => {
            let report = run_self_check(seed, samples);
            println!(
                "seed {} | {} samples, {} stable",
                report.seed, report.samples, report.stable_samples
            );
            for c in &report.checks {
                println!(
                    "[{}] {:<44} trials {:>5}  failures {:>3}  worst {:.3e}",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.name,
                    c.trials,
                    c.failures,
                    c.worst
                );
            }
            Ok(!report.passed())
        }
    };
    match outcome {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
