use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::UNIX_EPOCH;

use crate::error::{Error, Result};

use super::SweepResult;

/// Schema version written to the metadata block.
pub const CSV_VERSION: &str = "1";

fn float(x: f64) -> String {
    if x.is_nan() {
        "NaN".to_string()
    } else {
        // 17 significant digits round-trip every f64
        format!("{x:.16e}")
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String> {
    serde_json::to_string(v).map_err(|e| Error::Config(e.to_string()))
}

fn meta_line(out: &mut impl Write, key: &str, value: &str) -> std::io::Result<()> {
    // keep each entry on one line
    let value = value.replace(['\n', '\r'], " ");
    writeln!(out, "# meta: {key}={value}")
}

/// Writes the result as CSV: `# meta:` lines, a header
/// `axis1[,axis2],quantity...,status`, then one row per grid point.
///
/// Only run-invariant data goes into the file, so identical specs give
/// byte-identical output. Timing lives in [`write_run_sidecar`].
pub fn write_csv(result: &SweepResult, out: &mut impl Write) -> Result<()> {
    let spec = &result.spec;
    meta_line(out, "name", &spec.name)?;
    if let Some(c) = &spec.caption {
        meta_line(out, "caption", c)?;
    }
    for note in &spec.notes {
        meta_line(out, "note", note)?;
    }
    meta_line(out, "schema_version", CSV_VERSION)?;
    meta_line(out, "crate_version", env!("CARGO_PKG_VERSION"))?;
    meta_line(out, "base", &json(&spec.base)?)?;
    meta_line(out, "axes", &json(&spec.axes)?)?;
    if let Some(f) = spec.split_fraction {
        meta_line(out, "split_fraction", &f.to_string())?;
    }
    meta_line(
        out,
        "units",
        "rates in units of omega_m; temperatures use omega_m/2pi = 30 THz",
    )?;
    meta_line(out, "points", &result.rows.len().to_string())?;
    meta_line(out, "flagged", &result.flagged().to_string())?;

    let header: Vec<&str> = spec
        .axes
        .iter()
        .map(|a| a.name.as_str())
        .chain(spec.outputs.iter().map(|q| q.name()))
        .chain(std::iter::once("status"))
        .collect();
    writeln!(out, "{}", header.join(","))?;
    for row in &result.rows {
        let fields: Vec<String> = row
            .coords
            .iter()
            .chain(&row.values)
            .map(|&x| float(x))
            .chain(std::iter::once(row.status.as_str().to_string()))
            .collect();
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

/// Path of the timing sidecar for a CSV at `csv_path`.
pub fn sidecar_path(csv_path: &Path) -> PathBuf {
    let mut s = csv_path.as_os_str().to_owned();
    s.push(".run.json");
    PathBuf::from(s)
}

/// Writes `<csv>.run.json` with the timestamp and wall time of the run.
pub fn write_run_sidecar(result: &SweepResult, csv_path: &Path) -> Result<PathBuf> {
    let started = result
        .started_at
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs_f64())
        .unwrap_or(0.0);
    let body = serde_json::json!({
        "name": result.spec.name,
        "csv": csv_path.file_name().map(|s| s.to_string_lossy().into_owned()),
        "started_unix_s": started,
        "wall_time_s": result.wall_time.as_secs_f64(),
        "points": result.rows.len(),
        "flagged": result.flagged(),
        "crate_version": env!("CARGO_PKG_VERSION"),
    });
    let path = sidecar_path(csv_path);
    let text = serde_json::to_string_pretty(&body).map_err(|e| Error::Config(e.to_string()))?;
    std::fs::write(&path, text + "\n")?;
    Ok(path)
}
