//! CSV, JSON and SVG renderings of evolve and sweep results.

use std::fmt::Write as _;

use lgdot_core::{DotParameters, LGPoint, SweepResult};
use serde::Serialize;

use crate::config::{RunConfig, SweepSpec};
use crate::error::CliResult;
use crate::svg::{emit_svg, PlotStyle, Series};

pub const CSV_HEADER: &str = "t_ps,k_t,k_2t,k_plus,k_minus";

/// Shortest representation that parses back to the same f64.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:?}")
}

fn push_point(out: &mut String, p: &LGPoint) {
    let _ = write!(
        out,
        "{},{},{},{},{}",
        fmt_f64(p.t),
        fmt_f64(p.k_t),
        fmt_f64(p.k_2t),
        fmt_f64(p.k_plus),
        fmt_f64(p.k_minus)
    );
}

pub fn evolve_csv(points: &[LGPoint]) -> String {
    let mut out = format!("{CSV_HEADER}\n");
    for p in points {
        push_point(&mut out, p);
        out.push('\n');
    }
    out
}

/// Config fields that determine the numbers; the output location is left out.
#[derive(Serialize)]
struct ConfigEcho<'a> {
    dot: &'a DotParameters,
    t_max: f64,
    t_steps: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    sweep: Option<&'a SweepSpec>,
}

impl<'a> From<&'a RunConfig> for ConfigEcho<'a> {
    fn from(c: &'a RunConfig) -> Self {
        Self {
            dot: &c.dot,
            t_max: c.t_max,
            t_steps: c.t_steps,
            sweep: c.sweep.as_ref(),
        }
    }
}

pub fn evolve_json(cfg: &RunConfig, points: &[LGPoint]) -> String {
    #[derive(Serialize)]
    struct Doc<'a> {
        config: ConfigEcho<'a>,
        points: &'a [LGPoint],
    }
    let doc = Doc {
        config: cfg.into(),
        points,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

pub fn evolve_svg(points: &[LGPoint], title: &str) -> CliResult<String> {
    let series = [
        Series {
            label: "K+".into(),
            points: points.iter().map(|p| (p.t, p.k_plus)).collect(),
        },
        Series {
            label: "K−".into(),
            points: points.iter().map(|p| (p.t, p.k_minus)).collect(),
        },
    ];
    emit_svg(
        &series,
        &PlotStyle {
            title: title.into(),
            x_label: "t (ps)".into(),
            y_label: "K±".into(),
        },
    )
}

/// One row per (axis value, t), axis value first.
pub fn sweep_curves_csv(r: &SweepResult) -> String {
    let mut out = format!("{},{CSV_HEADER}\n", r.axis_name());
    for (v, curve) in r.axis_values.iter().zip(&r.curves) {
        for p in curve {
            let _ = write!(out, "{},", fmt_f64(*v));
            push_point(&mut out, p);
            out.push('\n');
        }
    }
    out
}

pub fn sweep_summary_csv(r: &SweepResult) -> String {
    let mut out = format!("{},min_k_minus,first_violation_t_ps\n", r.axis_name());
    for ((v, m), first) in r.axis_values.iter().zip(&r.min_kminus).zip(&r.first_violation_t) {
        let first = first.map_or("none".to_string(), fmt_f64);
        let _ = writeln!(out, "{},{},{first}", fmt_f64(*v), fmt_f64(*m));
    }
    out
}

pub fn sweep_json(cfg: &RunConfig, r: &SweepResult) -> String {
    #[derive(Serialize)]
    struct Summary {
        value: f64,
        min_k_minus: f64,
        first_violation_t: Option<f64>,
    }
    #[derive(Serialize)]
    struct Point {
        value: f64,
        #[serde(flatten)]
        point: LGPoint,
    }
    #[derive(Serialize)]
    struct Doc<'a> {
        config: ConfigEcho<'a>,
        axis: &'static str,
        summary: Vec<Summary>,
        points: Vec<Point>,
    }
    let summary = r
        .axis_values
        .iter()
        .zip(&r.min_kminus)
        .zip(&r.first_violation_t)
        .map(|((&value, &min_k_minus), &first_violation_t)| Summary {
            value,
            min_k_minus,
            first_violation_t,
        })
        .collect();
    let points = r
        .axis_values
        .iter()
        .zip(&r.curves)
        .flat_map(|(&value, c)| c.iter().map(move |&point| Point { value, point }))
        .collect();
    let doc = Doc {
        config: cfg.into(),
        axis: r.axis_name(),
        summary,
        points,
    };
    serde_json::to_string_pretty(&doc).expect("plain data serializes") + "\n"
}

pub fn sweep_svg(r: &SweepResult, title: &str) -> CliResult<String> {
    let series: Vec<Series> = r
        .axis_values
        .iter()
        .zip(&r.curves)
        .map(|(v, c)| Series {
            label: format!("{} = {}", r.axis_name(), fmt_f64(*v)),
            points: c.iter().map(|p| (p.t, p.k_minus)).collect(),
        })
        .collect();
    emit_svg(
        &series,
        &PlotStyle {
            title: title.into(),
            x_label: "t (ps)".into(),
            y_label: "K−".into(),
        },
    )
}
