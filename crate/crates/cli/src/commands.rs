//! The `evolve`, `sweep` and `figure` commands.

use std::fs;
use std::path::{Path, PathBuf};

use lgdot_core::constants::HBAR;
use lgdot_core::lganalysis::{sweep, LgEvaluator};
use lgdot_core::{LGPoint, SweepResult};
use rayon::prelude::*;

use crate::config::{Format, RunConfig};
use crate::error::{CliError, CliResult};
use crate::figures::{resolve, FigureId};
use crate::output;

/// Warnings worth showing before a run starts.
pub fn diagnostics(cfg: &RunConfig) -> Vec<String> {
    let mut notes = Vec::new();
    let s_max = match &cfg.sweep {
        Some(sw) if sw.axis == lgdot_core::SweepAxis::SFss => sw.values.iter().copied().fold(0.0, f64::max),
        _ => cfg.dot.s_fss,
    };
    if s_max > 0.0 {
        let period = 2.0 * std::f64::consts::PI * HBAR / s_max;
        let step = cfg.t_max / (cfg.t_steps - 1) as f64;
        if step > period / 40.0 {
            notes.push(format!(
                "time step {step} ps exceeds 1/40 of the {period:.1} ps oscillation period; crossings may be missed"
            ));
        }
    }
    if cfg.dot.gamma_phonon > 0.0 && cfg.dot.s_fss == 0.0 {
        notes.push("s_fss = 0 with gamma_phonon > 0: phonon flips are omitted".into());
    }
    notes
}

pub fn compute_evolve(cfg: &RunConfig) -> CliResult<Vec<LGPoint>> {
    let ev = LgEvaluator::new(&cfg.dot)?;
    let points = cfg
        .t_grid()
        .into_par_iter()
        .map(|t| ev.lg_point(t).map_err(|e| e.context(format!("t = {t} ps"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(points)
}

pub fn compute_sweep(cfg: &RunConfig) -> CliResult<SweepResult> {
    let spec = cfg
        .sweep
        .as_ref()
        .ok_or_else(|| CliError::Usage("sweep needs run.sweep_axis and run.sweep_values in the config".into()))?;
    Ok(sweep(&cfg.dot, spec.axis, &spec.values, &cfg.t_grid())?)
}

fn write(dir: &Path, name: String, body: &str, written: &mut Vec<PathBuf>) -> CliResult<()> {
    let path = dir.join(name);
    fs::write(&path, body).map_err(|e| CliError::io(&path, e))?;
    written.push(path);
    Ok(())
}

fn ensure_dir(dir: &Path) -> CliResult<()> {
    fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))
}

/// Computes the LG time series and writes `<stem>.{csv,json,svg}`.
pub fn run_evolve(cfg: &RunConfig, stem: &str, title: &str) -> CliResult<Vec<PathBuf>> {
    let points = compute_evolve(cfg)?;
    ensure_dir(&cfg.output_dir)?;
    let mut written = Vec::new();
    let dir = &cfg.output_dir;
    if cfg.wants(Format::Csv) {
        write(dir, format!("{stem}.csv"), &output::evolve_csv(&points), &mut written)?;
    }
    if cfg.wants(Format::Json) {
        write(dir, format!("{stem}.json"), &output::evolve_json(cfg, &points), &mut written)?;
    }
    if cfg.wants(Format::Svg) {
        write(dir, format!("{stem}.svg"), &output::evolve_svg(&points, title)?, &mut written)?;
    }
    Ok(written)
}

/// Runs the sweep and writes `<stem>.csv` (all curves),
/// `<stem>_summary.csv`, `<stem>.json` and `<stem>.svg`.
pub fn run_sweep(cfg: &RunConfig, stem: &str, title: &str) -> CliResult<Vec<PathBuf>> {
    let result = compute_sweep(cfg)?;
    ensure_dir(&cfg.output_dir)?;
    let mut written = Vec::new();
    let dir = &cfg.output_dir;
    if cfg.wants(Format::Csv) {
        write(dir, format!("{stem}.csv"), &output::sweep_curves_csv(&result), &mut written)?;
        write(dir, format!("{stem}_summary.csv"), &output::sweep_summary_csv(&result), &mut written)?;
    }
    if cfg.wants(Format::Json) {
        write(dir, format!("{stem}.json"), &output::sweep_json(cfg, &result), &mut written)?;
    }
    if cfg.wants(Format::Svg) {
        write(dir, format!("{stem}.svg"), &output::sweep_svg(&result, title)?, &mut written)?;
    }
    Ok(written)
}

pub fn run_figure(id: FigureId, output_dir: &Path) -> CliResult<Vec<PathBuf>> {
    let spec = resolve(id, output_dir);
    match spec.config.sweep {
        None => run_evolve(&spec.config, id.name(), id.title()),
        Some(_) => run_sweep(&spec.config, id.name(), id.title()),
    }
}
