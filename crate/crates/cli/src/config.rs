//! Flat `section.key = value` run configuration.
//!
//! Lines are `section.key = value`; `#` starts a comment; blank lines are
//! ignored. A `[section]` header lets following lines omit the prefix.
//! Lists are comma separated, and `dot.eta_override = none` clears the
//! override.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use lgdot_core::{DotParameters, SweepAxis};
use serde::Serialize;

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Csv,
    Json,
    Svg,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Svg => "svg",
        }
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "svg" => Ok(Format::Svg),
            _ => Err(format!("unknown format {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    pub axis: SweepAxis,
    pub values: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub dot: DotParameters,
    pub t_max: f64,
    pub t_steps: usize,
    pub output_dir: PathBuf,
    pub formats: BTreeSet<Format>,
    pub sweep: Option<SweepSpec>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            dot: DotParameters::default(),
            t_max: 3000.0,
            t_steps: 601,
            output_dir: PathBuf::from("out"),
            formats: [Format::Csv, Format::Json, Format::Svg].into_iter().collect(),
            sweep: None,
        }
    }
}

impl RunConfig {
    /// Equispaced delays 0..=t_max.
    pub fn t_grid(&self) -> Vec<f64> {
        let last = (self.t_steps - 1) as f64;
        (0..self.t_steps).map(|i| self.t_max * i as f64 / last).collect()
    }

    pub fn wants(&self, f: Format) -> bool {
        self.formats.contains(&f)
    }
}

/// A parsed configuration and the keys that fell back to defaults.
#[derive(Debug, Clone)]
pub struct ParsedConfig {
    pub config: RunConfig,
    pub defaults: Vec<(String, String)>,
}

pub const KEYS: [&str; 15] = [
    "dot.s_fss",
    "dot.level_energies",
    "dot.gamma_x",
    "dot.gamma_dephase0",
    "dot.gamma_phonon",
    "dot.temperature",
    "dot.g_noise",
    "dot.gate_width",
    "dot.eta_override",
    "run.t_max",
    "run.t_steps",
    "run.output_dir",
    "run.formats",
    "run.sweep_axis",
    "run.sweep_values",
];

pub fn parse_config(text: &str) -> CliResult<ParsedConfig> {
    let mut cfg = RunConfig::default();
    let mut seen: BTreeSet<&'static str> = BTreeSet::new();
    let mut axis: Option<(SweepAxis, usize)> = None;
    let mut values: Option<(Vec<f64>, usize)> = None;
    let mut section: Option<String> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| CliError::Config { line: line_no, message };
        if let Some(name) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
            let name = name.trim();
            if name != "dot" && name != "run" {
                return Err(err(format!("unknown section [{name}]")));
            }
            section = Some(name.to_string());
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(err(format!("expected `section.key = value`, got {line:?}")));
        };
        let (key, value) = (key.trim(), value.trim());
        let full = match (&section, key.contains('.')) {
            (Some(s), false) => format!("{s}.{key}"),
            _ => key.to_string(),
        };
        let Some(&known) = KEYS.iter().find(|k| **k == full) else {
            return Err(err(format!("unknown key {full:?}")));
        };
        if !seen.insert(known) {
            return Err(err(format!("duplicate key {known:?}")));
        }
        let d = &mut cfg.dot;
        match known {
            "dot.s_fss" => d.s_fss = number(known, value, Bound::NonNegative)?,
            "dot.level_energies" => {
                let list = number_list(known, value, Bound::Finite)?;
                d.level_energies = list.try_into().map_err(|l: Vec<f64>| CliError::Range {
                    key: known.into(),
                    value: value.into(),
                    range: format!("exactly 4 comma-separated energies, got {}", l.len()),
                })?;
            }
            "dot.gamma_x" => d.gamma_x = number(known, value, Bound::Positive)?,
            "dot.gamma_dephase0" => d.gamma_dephase0 = number(known, value, Bound::NonNegative)?,
            "dot.gamma_phonon" => d.gamma_phonon = number(known, value, Bound::NonNegative)?,
            "dot.temperature" => d.temperature = number(known, value, Bound::Positive)?,
            "dot.g_noise" => d.g_noise = number(known, value, Bound::NonNegative)?,
            "dot.gate_width" => d.gate_width = number(known, value, Bound::NonNegative)?,
            "dot.eta_override" => {
                d.eta_override = if value == "none" {
                    None
                } else {
                    Some(number(known, value, Bound::Unit)?)
                }
            }
            "run.t_max" => cfg.t_max = number(known, value, Bound::Positive)?,
            "run.t_steps" => {
                cfg.t_steps = value
                    .parse::<usize>()
                    .ok()
                    .filter(|n| *n >= 2)
                    .ok_or_else(|| range_error(known, value, "an integer >= 2"))?
            }
            "run.output_dir" => {
                if value.is_empty() {
                    return Err(range_error(known, value, "a non-empty path"));
                }
                cfg.output_dir = PathBuf::from(value);
            }
            "run.formats" => {
                let formats: BTreeSet<Format> = split_list(value)
                    .map(|f| f.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|_| range_error(known, value, "a non-empty subset of csv, json, svg"))?;
                if formats.is_empty() {
                    return Err(range_error(known, value, "a non-empty subset of csv, json, svg"));
                }
                cfg.formats = formats;
            }
            "run.sweep_axis" => {
                let a = value
                    .parse::<SweepAxis>()
                    .map_err(|_| range_error(known, value, "one of s_fss, g_noise, temperature, gate_width"))?;
                axis = Some((a, line_no));
            }
            "run.sweep_values" => values = Some((number_list(known, value, Bound::Finite)?, line_no)),
            _ => unreachable!("every key in KEYS is handled"),
        }
    }

    cfg.sweep = match (axis, values) {
        (None, None) => None,
        (Some((axis, line)), None) => {
            return Err(CliError::Config {
                line,
                message: format!("run.sweep_axis = {axis} needs run.sweep_values"),
            })
        }
        (None, Some((_, line))) => {
            return Err(CliError::Config {
                line,
                message: "run.sweep_values needs run.sweep_axis".into(),
            })
        }
        (Some((axis, _)), Some((values, _))) => {
            let bound = match axis {
                SweepAxis::Temperature => Bound::Positive,
                _ => Bound::NonNegative,
            };
            for v in &values {
                bound.check("run.sweep_values", *v, &v.to_string())?;
            }
            Some(SweepSpec { axis, values })
        }
    };

    let defaults = KEYS
        .iter()
        .filter(|k| !seen.contains(*k))
        .filter(|k| !matches!(**k, "run.sweep_axis" | "run.sweep_values"))
        .map(|k| (k.to_string(), value_of(&cfg, k)))
        .collect();
    Ok(ParsedConfig { config: cfg, defaults })
}

/// Writes every key; `parse_config(&serialize_config(c))` reproduces `c`.
pub fn serialize_config(cfg: &RunConfig) -> String {
    let mut out = String::new();
    for key in KEYS {
        if key.starts_with("run.sweep") && cfg.sweep.is_none() {
            continue;
        }
        let _ = writeln!(out, "{key} = {}", value_of(cfg, key));
    }
    out
}

fn value_of(cfg: &RunConfig, key: &str) -> String {
    let d = &cfg.dot;
    let join = |xs: &[f64]| xs.iter().map(|x| format!("{x:?}")).collect::<Vec<_>>().join(", ");
    match key {
        "dot.s_fss" => format!("{:?}", d.s_fss),
        "dot.level_energies" => join(&d.level_energies),
        "dot.gamma_x" => format!("{:?}", d.gamma_x),
        "dot.gamma_dephase0" => format!("{:?}", d.gamma_dephase0),
        "dot.gamma_phonon" => format!("{:?}", d.gamma_phonon),
        "dot.temperature" => format!("{:?}", d.temperature),
        "dot.g_noise" => format!("{:?}", d.g_noise),
        "dot.gate_width" => format!("{:?}", d.gate_width),
        "dot.eta_override" => d.eta_override.map_or("none".into(), |e| format!("{e:?}")),
        "run.t_max" => format!("{:?}", cfg.t_max),
        "run.t_steps" => cfg.t_steps.to_string(),
        "run.output_dir" => cfg.output_dir.display().to_string(),
        "run.formats" => cfg.formats.iter().map(|f| f.name()).collect::<Vec<_>>().join(", "),
        "run.sweep_axis" => cfg.sweep.as_ref().map_or(String::new(), |s| s.axis.to_string()),
        "run.sweep_values" => cfg.sweep.as_ref().map_or(String::new(), |s| join(&s.values)),
        _ => unreachable!("unknown key {key}"),
    }
}

#[derive(Clone, Copy)]
enum Bound {
    Finite,
    NonNegative,
    Positive,
    Unit,
}

impl Bound {
    fn describe(self) -> &'static str {
        match self {
            Bound::Finite => "a finite number",
            Bound::NonNegative => "a finite number >= 0",
            Bound::Positive => "a finite number > 0",
            Bound::Unit => "a number in [0, 1] or none",
        }
    }

    fn check(self, key: &str, x: f64, raw: &str) -> CliResult<f64> {
        let ok = x.is_finite()
            && match self {
                Bound::Finite => true,
                Bound::NonNegative => x >= 0.0,
                Bound::Positive => x > 0.0,
                Bound::Unit => (0.0..=1.0).contains(&x),
            };
        if ok {
            Ok(x)
        } else {
            Err(range_error(key, raw, self.describe()))
        }
    }
}

fn range_error(key: &str, value: &str, range: &str) -> CliError {
    CliError::Range {
        key: key.into(),
        value: value.into(),
        range: range.into(),
    }
}

fn number(key: &str, raw: &str, bound: Bound) -> CliResult<f64> {
    let x: f64 = raw.parse().map_err(|_| range_error(key, raw, bound.describe()))?;
    bound.check(key, x, raw)
}

fn split_list(raw: &str) -> impl Iterator<Item = &str> {
    raw.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn number_list(key: &str, raw: &str, bound: Bound) -> CliResult<Vec<f64>> {
    let list: Vec<f64> = split_list(raw).map(|s| number(key, s, bound)).collect::<CliResult<_>>()?;
    if list.is_empty() {
        return Err(range_error(key, raw, "a non-empty comma-separated list"));
    }
    Ok(list)
}
