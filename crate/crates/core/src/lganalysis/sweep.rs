use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{Branch, LGPoint, LgEvaluator, VIOLATION_THRESHOLD};
use crate::cascade::DotParameters;
use crate::error::{Error, Result};

/// The parameter varied across a sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SweepAxis {
    SFss,
    GNoise,
    Temperature,
    GateWidth,
}

impl SweepAxis {
    pub const ALL: [SweepAxis; 4] = [SweepAxis::SFss, SweepAxis::GNoise, SweepAxis::Temperature, SweepAxis::GateWidth];

    pub fn name(self) -> &'static str {
        match self {
            SweepAxis::SFss => "s_fss",
            SweepAxis::GNoise => "g_noise",
            SweepAxis::Temperature => "temperature",
            SweepAxis::GateWidth => "gate_width",
        }
    }

    pub fn apply(self, base: &DotParameters, value: f64) -> DotParameters {
        let mut p = *base;
        match self {
            SweepAxis::SFss => p.s_fss = value,
            SweepAxis::GNoise => p.g_noise = value,
            SweepAxis::Temperature => p.temperature = value,
            SweepAxis::GateWidth => p.gate_width = value,
        }
        p
    }
}

impl fmt::Display for SweepAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepAxis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SweepAxis::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown sweep axis {s:?}")))
    }
}

/// LG curves over a common time grid, one per axis value.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepResult {
    pub axis: SweepAxis,
    pub axis_values: Vec<f64>,
    pub t_grid: Vec<f64>,
    pub curves: Vec<Vec<LGPoint>>,
    pub min_kminus: Vec<f64>,
    pub first_violation_t: Vec<Option<f64>>,
}

impl SweepResult {
    pub fn axis_name(&self) -> &'static str {
        self.axis.name()
    }
}

/// Evaluates [`LgEvaluator::lg_point`] for every (axis value, t) pair.
///
/// Grid points run in parallel; results are assembled in axis-then-time
/// order. The first violation of K₋ per curve is located on the grid and
/// refined by bisection to 1e-3 of the local grid spacing.
pub fn sweep(base: &DotParameters, axis: SweepAxis, values: &[f64], t_grid: &[f64]) -> Result<SweepResult> {
    if values.is_empty() || t_grid.is_empty() {
        return Err(Error::InvalidInput("sweep needs at least one axis value and one time".into()));
    }
    if t_grid.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::InvalidInput("sweep time grid must be strictly increasing".into()));
    }
    let evaluators: Vec<LgEvaluator> = values
        .iter()
        .map(|&v| LgEvaluator::new(&axis.apply(base, v)).map_err(|e| e.context(format!("{axis} = {v}"))))
        .collect::<Result<_>>()?;

    let n_t = t_grid.len();
    let points: Vec<LGPoint> = (0..values.len() * n_t)
        .into_par_iter()
        .map(|k| {
            let (i, j) = (k / n_t, k % n_t);
            evaluators[i]
                .lg_point(t_grid[j])
                .map_err(|e| e.context(format!("{axis} = {}, t = {} ps", values[i], t_grid[j])))
        })
        .collect::<Result<_>>()?;
    let curves: Vec<Vec<LGPoint>> = points.chunks(n_t).map(<[LGPoint]>::to_vec).collect();

    let min_kminus = curves
        .iter()
        .map(|c| c.iter().map(|p| p.k_minus).fold(f64::INFINITY, f64::min))
        .collect();
    let first_violation_t = curves
        .par_iter()
        .zip(&evaluators)
        .zip(values)
        .map(|((curve, ev), v)| {
            first_crossing_on_curve(ev, curve).map_err(|e| e.context(format!("{axis} = {v}: violation search")))
        })
        .collect::<Result<_>>()?;

    Ok(SweepResult {
        axis,
        axis_values: values.to_vec(),
        t_grid: t_grid.to_vec(),
        curves,
        min_kminus,
        first_violation_t,
    })
}

fn first_crossing_on_curve(ev: &LgEvaluator, curve: &[LGPoint]) -> Result<Option<f64>> {
    let Some(k) = curve.iter().position(|p| p.k_minus < VIOLATION_THRESHOLD) else {
        return Ok(None);
    };
    if k == 0 {
        return Ok(Some(curve[0].t));
    }
    let (lo, hi) = (curve[k - 1].t, curve[k].t);
    ev.refine_crossing(Branch::Minus, lo, hi, (hi - lo) * 1e-3).map(Some)
}
