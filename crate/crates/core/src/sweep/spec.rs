use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{Drive, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Axis {
    pub name: String,
    pub min: f64,
    pub max: f64,
    pub count: usize,
    #[serde(default)]
    pub scale: Scale,
}

impl Axis {
    pub fn linear(name: &str, min: f64, max: f64, count: usize) -> Self {
        Self {
            name: name.to_string(),
            min,
            max,
            count,
            scale: Scale::Linear,
        }
    }

    pub fn log(name: &str, min: f64, max: f64, count: usize) -> Self {
        Self {
            scale: Scale::Log,
            ..Self::linear(name, min, max, count)
        }
    }

    /// Grid values; both endpoints are hit exactly.
    pub fn values(&self) -> Vec<f64> {
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|k| {
                if k == 0 {
                    return self.min;
                }
                if k + 1 == self.count {
                    return self.max;
                }
                let t = k as f64 / last;
                match self.scale {
                    Scale::Linear => self.min + (self.max - self.min) * t,
                    Scale::Log => (self.min.ln() + (self.max.ln() - self.min.ln()) * t).exp(),
                }
            })
            .collect()
    }
}

/// Quantities a sweep can report per grid point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Quantity {
    #[serde(rename = "E_aB1")]
    EaB1,
    #[serde(rename = "E_aB2")]
    EaB2,
    #[serde(rename = "E_B1B2")]
    EB1B2,
    #[serde(rename = "R_min")]
    RMin,
    /// Spectral abscissa of the drift matrix.
    #[serde(rename = "stability")]
    Stability,
    #[serde(rename = "G_minus")]
    GMinus,
    #[serde(rename = "Gt_plus")]
    GtPlus,
    #[serde(rename = "Gt_minus")]
    GtMinus,
    #[serde(rename = "symplectic_min")]
    SymplecticMin,
}

impl Quantity {
    pub const ALL: [Quantity; 9] = [
        Quantity::EaB1,
        Quantity::EaB2,
        Quantity::EB1B2,
        Quantity::RMin,
        Quantity::Stability,
        Quantity::GMinus,
        Quantity::GtPlus,
        Quantity::GtMinus,
        Quantity::SymplecticMin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Quantity::EaB1 => "E_aB1",
            Quantity::EaB2 => "E_aB2",
            Quantity::EB1B2 => "E_B1B2",
            Quantity::RMin => "R_min",
            Quantity::Stability => "stability",
            Quantity::GMinus => "G_minus",
            Quantity::GtPlus => "Gt_plus",
            Quantity::GtMinus => "Gt_minus",
            Quantity::SymplecticMin => "symplectic_min",
        }
    }

    pub fn needs_covariance(self) -> bool {
        matches!(
            self,
            Quantity::EaB1 | Quantity::EaB2 | Quantity::EB1B2 | Quantity::RMin | Quantity::SymplecticMin
        )
    }
}

/// Parameter names accepted as sweep axes.
pub const AXIS_NAMES: &[&str] = &[
    "omega_1",
    "omega_2",
    "delta_a",
    "kappa",
    "gamma_1",
    "gamma_2",
    "gamma_m",
    "g_m",
    "J_m",
    "theta",
    "N_total",
    "M_split",
    "n_th",
    "temperature",
    "G_1",
    "G_2",
    "G_j",
    "delta_tilde",
    "E_amplitude",
];

fn round_count(name: &str, value: f64) -> Result<u32> {
    let r = value.round();
    if !(r >= 0.0 && r <= f64::from(u32::MAX)) {
        return Err(Error::InvalidParams(format!("{name} = {value} is not a valid count")));
    }
    Ok(r as u32)
}

/// Writes `value` into the parameter called `name`.
///
/// `G_j` sets both couplings, `gamma_m` both damping rates and
/// `temperature` (kelvin) sets `n_th` through the Bose factor.
pub fn apply_axis(params: &mut SystemParams, name: &str, value: f64) -> Result<()> {
    let direct_only = |p: &mut SystemParams, f: &dyn Fn(&mut f64, &mut f64, &mut f64)| match &mut p.drive {
        Drive::Direct {
            coupling_1,
            coupling_2,
            delta_tilde,
        } => {
            f(coupling_1, coupling_2, delta_tilde);
            Ok(())
        }
        Drive::Physical { .. } => Err(Error::Config(format!(
            "axis `{name}` requires a direct drive"
        ))),
    };
    match name {
        "omega_1" => params.omega_1 = value,
        "omega_2" => params.omega_2 = value,
        "delta_a" => params.delta_a = value,
        "kappa" => params.kappa = value,
        "gamma_1" => params.gamma_1 = value,
        "gamma_2" => params.gamma_2 = value,
        "gamma_m" => {
            params.gamma_1 = value;
            params.gamma_2 = value;
        }
        "g_m" => params.g_m = value,
        "J_m" => params.j_m = value,
        "theta" => params.theta = value,
        "N_total" => params.n_total = round_count(name, value)?,
        "M_split" => params.m_split = round_count(name, value)?,
        "n_th" => params.n_th = value,
        "temperature" => params.set_temperature(value),
        "G_1" => direct_only(params, &|g1, _, _| *g1 = value)?,
        "G_2" => direct_only(params, &|_, g2, _| *g2 = value)?,
        "G_j" => direct_only(params, &|g1, g2, _| {
            *g1 = value;
            *g2 = value;
        })?,
        "delta_tilde" => direct_only(params, &|_, _, d| *d = value)?,
        "E_amplitude" => match &mut params.drive {
            Drive::Physical { amplitude } => *amplitude = value,
            Drive::Direct { .. } => {
                return Err(Error::Config(
                    "axis `E_amplitude` requires a physical drive".into(),
                ))
            }
        },
        other => return Err(Error::Config(format!("unknown axis parameter `{other}`"))),
    }
    Ok(())
}

/// A one- or two-axis parameter sweep.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    /// Preset or user label, echoed into the CSV metadata.
    #[serde(default)]
    pub name: String,
    /// Figure caption the parameters were taken from, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub caption: Option<String>,
    /// Free-form notes carried into the metadata.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    pub base: SystemParams,
    pub axes: Vec<Axis>,
    pub outputs: Vec<Quantity>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    /// Worker threads; `None` or 0 uses the rayon default, 1 runs serially.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub threads: Option<usize>,
    /// When set, M_split is recomputed as round(fraction · N_total) at
    /// every grid point.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_fraction: Option<f64>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        let cfg = |m: String| Err(Error::Config(m));
        if self.axes.is_empty() || self.axes.len() > 2 {
            return cfg(format!("expected 1 or 2 axes, got {}", self.axes.len()));
        }
        if self.axes.len() == 2 && self.axes[0].name == self.axes[1].name {
            return cfg(format!("axis `{}` given twice", self.axes[0].name));
        }
        for axis in &self.axes {
            if !AXIS_NAMES.contains(&axis.name.as_str()) {
                return cfg(format!("unknown axis parameter `{}`", axis.name));
            }
            if axis.count < 2 {
                return cfg(format!("axis `{}` needs count >= 2", axis.name));
            }
            if !(axis.min.is_finite() && axis.max.is_finite() && axis.min < axis.max) {
                return cfg(format!("axis `{}` needs finite min < max", axis.name));
            }
            if axis.scale == Scale::Log && axis.min <= 0.0 {
                return cfg(format!("log axis `{}` needs min > 0", axis.name));
            }
            // rejects drive-incompatible axes up front
            apply_axis(&mut self.base.clone(), &axis.name, axis.min)?;
        }
        if self.outputs.is_empty() {
            return cfg("no outputs requested".into());
        }
        for (i, q) in self.outputs.iter().enumerate() {
            if self.outputs[..i].contains(q) {
                return cfg(format!("output `{}` listed twice", q.name()));
            }
        }
        if let Some(f) = self.split_fraction {
            if !(0.0..=1.0).contains(&f) {
                return cfg(format!("split_fraction {f} outside [0, 1]"));
            }
        }
        self.base.validate()
    }

    pub fn len(&self) -> usize {
        self.axes.iter().map(|a| a.count).product()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Grid coordinates in row-major order (last axis fastest).
    pub fn grid(&self) -> Vec<Vec<f64>> {
        let values: Vec<Vec<f64>> = self.axes.iter().map(Axis::values).collect();
        let mut out = vec![Vec::new()];
        for vals in &values {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    vals.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect();
        }
        out
    }

    /// Parameters at one grid point.
    pub fn params_at(&self, coords: &[f64]) -> Result<SystemParams> {
        let mut p = self.base.clone();
        for (axis, &v) in self.axes.iter().zip(coords) {
            apply_axis(&mut p, &axis.name, v)?;
        }
        if let Some(f) = self.split_fraction {
            p.m_split = (f * f64::from(p.n_total)).round() as u32;
        }
        Ok(p)
    }

    /// Loads a TOML spec, optionally layered over `base` (e.g. a preset):
    /// tables are merged key by key, everything else is replaced.
    pub fn from_toml(text: &str, base: Option<&SweepSpec>) -> Result<Self> {
        let overlay: toml::Value =
            toml::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        let merged = match base {
            Some(b) => {
                let mut v = toml::Value::try_from(b).map_err(|e| Error::Config(e.to_string()))?;
                merge(&mut v, overlay);
                v
            }
            None => overlay,
        };
        let spec: SweepSpec = merged
            .try_into()
            .map_err(|e: toml::de::Error| Error::Config(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_toml(&self) -> Result<String> {
        toml::to_string_pretty(self).map_err(|e| Error::Config(e.to_string()))
    }
}

fn merge(base: &mut toml::Value, overlay: toml::Value) {
    match (base, overlay) {
        (toml::Value::Table(b), toml::Value::Table(o)) => {
            for (k, v) in o {
                match b.get_mut(&k) {
                    // a drive with a different mode replaces the whole table
                    Some(existing)
                        if k != "drive"
                            || existing.get("mode") == v.get("mode")
                            || v.get("mode").is_none() =>
                    {
                        merge(existing, v)
                    }
                    _ => {
                        b.insert(k, v);
                    }
                }
            }
        }
        (b, o) => *b = o,
    }
}
