//! Minimal single-panel SVG line charts.

use std::fmt::Write as _;

use crate::error::{CliError, CliResult};

pub const WIDTH: f64 = 800.0;
pub const HEIGHT: f64 = 500.0;
const LEFT: f64 = 70.0;
const RIGHT: f64 = 170.0;
const TOP: f64 = 40.0;
const BOTTOM: f64 = 60.0;
const PALETTE: [&str; 8] = ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
const CLASSICAL_LIMIT: f64 = -1.0;

#[derive(Debug, Clone, PartialEq)]
pub struct Series {
    pub label: String,
    pub points: Vec<(f64, f64)>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct PlotStyle {
    pub title: String,
    pub x_label: String,
    pub y_label: String,
}

/// Renders the series as an 800×500 SVG 1.1 document with a dashed
/// reference line at y = −1.
pub fn emit_svg(series: &[Series], style: &PlotStyle) -> CliResult<String> {
    if series.is_empty() {
        return Err(CliError::Plot("no series to plot".into()));
    }
    if let Some(s) = series.iter().find(|s| s.points.is_empty()) {
        return Err(CliError::Plot(format!("series {:?} is empty", s.label)));
    }
    let all = series.iter().flat_map(|s| s.points.iter());
    if all.clone().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(CliError::Plot("series contain non-finite values".into()));
    }
    let (x_lo, x_hi) = extent(all.clone().map(|p| p.0));
    let (y_lo, y_hi) = extent(all.map(|p| p.1).chain([CLASSICAL_LIMIT]));
    let x_axis = Axis::new(x_lo, x_hi);
    let y_axis = Axis::new(y_lo, y_hi);
    let plot_w = WIDTH - LEFT - RIGHT;
    let plot_h = HEIGHT - TOP - BOTTOM;
    let px = |x: f64| LEFT + (x - x_axis.lo) / (x_axis.hi - x_axis.lo) * plot_w;
    let py = |y: f64| TOP + (y_axis.hi - y) / (y_axis.hi - y_axis.lo) * plot_h;

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}" font-family="sans-serif" font-size="12">"#
    );
    let _ = writeln!(s, r#"<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>"#);
    if !style.title.is_empty() {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="24" text-anchor="middle" font-size="15">{}</text>"#,
            LEFT + plot_w / 2.0,
            escape(&style.title)
        );
    }

    // axes and ticks
    let (x0, y0) = (LEFT, TOP + plot_h);
    let _ = writeln!(
        s,
        r#"<path d="M{x0:.2},{TOP:.2} L{x0:.2},{y0:.2} L{:.2},{y0:.2}" fill="none" stroke="black"/>"#,
        LEFT + plot_w
    );
    for t in x_axis.ticks() {
        let x = px(t);
        let _ = writeln!(s, r#"<line x1="{x:.2}" y1="{y0:.2}" x2="{x:.2}" y2="{:.2}" stroke="black"/>"#, y0 + 5.0);
        let _ = writeln!(
            s,
            r#"<text x="{x:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            y0 + 19.0,
            x_axis.label(t)
        );
    }
    for t in y_axis.ticks() {
        let y = py(t);
        let _ = writeln!(s, r#"<line x1="{:.2}" y1="{y:.2}" x2="{x0:.2}" y2="{y:.2}" stroke="black"/>"#, x0 - 5.0);
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="end">{}</text>"#,
            x0 - 8.0,
            y + 4.0,
            y_axis.label(t)
        );
    }
    if !style.x_label.is_empty() {
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}" text-anchor="middle">{}</text>"#,
            LEFT + plot_w / 2.0,
            HEIGHT - 15.0,
            escape(&style.x_label)
        );
    }
    if !style.y_label.is_empty() {
        let (cx, cy) = (18.0, TOP + plot_h / 2.0);
        let _ = writeln!(
            s,
            r#"<text x="{cx:.2}" y="{cy:.2}" text-anchor="middle" transform="rotate(-90 {cx:.2} {cy:.2})">{}</text>"#,
            escape(&style.y_label)
        );
    }

    let yl = py(CLASSICAL_LIMIT);
    let _ = writeln!(
        s,
        r#"<line x1="{x0:.2}" y1="{yl:.2}" x2="{:.2}" y2="{yl:.2}" stroke="gray" stroke-dasharray="6,4"/>"#,
        LEFT + plot_w
    );
    let _ = writeln!(
        s,
        r#"<text x="{:.2}" y="{:.2}" text-anchor="end" fill="gray">classical limit</text>"#,
        LEFT + plot_w - 4.0,
        yl - 5.0
    );

    for (k, ser) in series.iter().enumerate() {
        let colour = PALETTE[k % PALETTE.len()];
        let pts: Vec<String> = ser.points.iter().map(|&(x, y)| format!("{:.2},{:.2}", px(x), py(y))).collect();
        let _ = writeln!(
            s,
            r#"<polyline points="{}" fill="none" stroke="{colour}" stroke-width="1.5"/>"#,
            pts.join(" ")
        );
        let ly = TOP + 10.0 + 18.0 * k as f64;
        let lx = LEFT + plot_w + 15.0;
        let _ = writeln!(
            s,
            r#"<line x1="{lx:.2}" y1="{ly:.2}" x2="{:.2}" y2="{ly:.2}" stroke="{colour}" stroke-width="2"/>"#,
            lx + 20.0
        );
        let _ = writeln!(
            s,
            r#"<text x="{:.2}" y="{:.2}">{}</text>"#,
            lx + 26.0,
            ly + 4.0,
            escape(&ser.label)
        );
    }
    s.push_str("</svg>\n");
    Ok(s)
}

fn extent(values: impl Iterator<Item = f64>) -> (f64, f64) {
    let (lo, hi) = values.fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| (lo.min(v), hi.max(v)));
    if hi > lo {
        (lo, hi)
    } else {
        (lo - 1.0, hi + 1.0)
    }
}

/// Axis range widened to whole multiples of a 1/2/5 tick step.
struct Axis {
    lo: f64,
    hi: f64,
    step: f64,
}

impl Axis {
    fn new(lo: f64, hi: f64) -> Self {
        let raw = (hi - lo) / 6.0;
        let mag = 10f64.powf(raw.log10().floor());
        let step = [1.0, 2.0, 5.0, 10.0]
            .into_iter()
            .map(|m| m * mag)
            .find(|s| *s >= raw)
            .unwrap_or(10.0 * mag);
        Self {
            lo: (lo / step).floor() * step,
            hi: (hi / step).ceil() * step,
            step,
        }
    }

    fn ticks(&self) -> Vec<f64> {
        let n = ((self.hi - self.lo) / self.step).round() as i64;
        (0..=n).map(|i| self.lo + i as f64 * self.step).collect()
    }

    fn label(&self, v: f64) -> String {
        let decimals = (-self.step.log10().floor()).max(0.0) as usize;
        let s = format!("{v:.decimals$}");
        // avoid "-0"
        if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
            s.trim_start_matches('-').to_string()
        } else {
            s
        }
    }
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}
