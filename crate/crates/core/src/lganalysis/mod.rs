//! Leggett-Garg analysis: correlators, the stationary combinations
//! K± = K(2t) ± 2K(t), timing-gate averaging, violation search and sweeps.
//!
//! Under stationarity the correlator of the dichotomic ± polarization
//! observable depends only on the delay, and a macrorealistic description
//! requires K₊ ≥ −1 and K₋ ≥ −1. Quantum mechanics allows both to reach −1.5.

mod quadrature;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cascade::{CascadeModel, DotParameters, PairState, HH, VV};
use crate::constants::{HBAR, TOL};
use crate::densmat::ComplexMatrix;
use crate::error::{Error, Result};

pub use quadrature::adaptive_simpson;
pub use sweep::{sweep, SweepAxis, SweepResult};

/// The classical bound shared by both branches.
pub const CLASSICAL_LIMIT: f64 = -1.0;
/// A point violates when its branch value is below this.
pub const VIOLATION_THRESHOLD: f64 = CLASSICAL_LIMIT - 1e-12;
/// Minimum quadrature subdivisions per oscillation period inside a gate.
const PANELS_PER_PERIOD: f64 = 16.0;

/// One evaluated time point.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LGPoint {
    pub t: f64,
    pub k_t: f64,
    pub k_2t: f64,
    pub k_plus: f64,
    pub k_minus: f64,
}

impl LGPoint {
    pub fn from_correlators(t: f64, k_t: f64, k_2t: f64) -> Self {
        Self {
            t,
            k_t,
            k_2t,
            k_plus: k_2t + 2.0 * k_t,
            k_minus: k_2t - 2.0 * k_t,
        }
    }

    pub fn branch(&self, which: Branch) -> f64 {
        match which {
            Branch::Plus => self.k_plus,
            Branch::Minus => self.k_minus,
        }
    }
}

/// K₊ or K₋.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Branch {
    Plus,
    Minus,
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Branch::Plus => "plus",
            Branch::Minus => "minus",
        })
    }
}

impl FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" => Ok(Branch::Plus),
            "minus" => Ok(Branch::Minus),
            other => Err(Error::InvalidInput(format!("unknown branch {other:?}, expected plus or minus"))),
        }
    }
}

/// Joint probabilities (P₊₊, P₊₋) of the second photon given the first was
/// found in |+⟩, from the full quadratic forms ⟨±±|ρ|±±⟩.
pub fn joint_probabilities(ps: &PairState) -> Result<(f64, f64)> {
    joint_probabilities_of(ps.rho())
}

/// [`joint_probabilities`] for any 4×4 two-photon density matrix, without
/// the pair-state zero pattern.
pub fn joint_probabilities_of(rho: &ComplexMatrix) -> Result<(f64, f64)> {
    if rho.rows() != 4 || rho.cols() != 4 {
        return Err(Error::Dimension(format!("two-photon state must be 4x4, got {}x{}", rho.rows(), rho.cols())));
    }
    let h = 0.5;
    let pp = [h, h, h, h].map(|x| Complex64::new(x, 0.0));
    let pm = [h, -h, h, -h].map(|x| Complex64::new(x, 0.0));
    let weight = |v: &[Complex64; 4]| -> f64 {
        let rv = rho.apply(v);
        v.iter().zip(&rv).map(|(a, b)| a.conj() * b).sum::<Complex64>().re
    };
    let (w_pp, w_pm) = (weight(&pp), weight(&pm));
    let denom = w_pp + w_pm;
    if !(denom >= TOL.degenerate) {
        return Err(Error::Degenerate(format!(
            "probability of the first photon in |+> is {denom:e}"
        )));
    }
    Ok((w_pp / denom, w_pm / denom))
}

/// K = (ρ₁₄ + ρ₄₁) / Tr ρ.
pub fn correlator(ps: &PairState) -> Result<f64> {
    let rho = ps.rho();
    let tr = rho.trace().re;
    if !(tr >= TOL.degenerate) {
        return Err(Error::Degenerate(format!("pair state trace {tr:e}")));
    }
    let sum = rho.get(HH, VV) + rho.get(VV, HH);
    if sum.im.abs() / tr >= TOL.algebraic {
        return Err(Error::Invariant(format!("correlator has imaginary residue {:e}", sum.im / tr)));
    }
    Ok(sum.re / tr)
}

/// Correlators and LG combinations for one parameter set, sharing a single
/// cascade model across time points.
#[derive(Debug, Clone)]
pub struct LgEvaluator {
    model: CascadeModel,
}

impl LgEvaluator {
    pub fn new(p: &DotParameters) -> Result<Self> {
        Ok(Self {
            model: CascadeModel::new(p)?,
        })
    }

    pub fn model(&self) -> &CascadeModel {
        &self.model
    }

    pub fn params(&self) -> &DotParameters {
        self.model.params()
    }

    /// Instantaneous correlator of the normalized total pair state.
    pub fn correlator_at(&self, tau: f64) -> Result<f64> {
        correlator(&self.model.total(tau)?)
    }

    /// Coincidence-weighted correlator over delays τ ∈ [t, t+ω].
    ///
    /// Numerator and denominator are the window integrals of
    /// w(τ)·(ρ₁₄+ρ₄₁) and w(τ)·Tr ρ over the unnormalized mixture, where
    /// w = γ_x turns exciton population into second-photon emission density.
    /// The mixture's coherence is η times that of ρ_pol and its trace is
    /// (1+g)·Tr ρ_pol, so the quadrature runs on the ρ_pol pair and the
    /// weights are applied afterwards; this keeps the refinement path, and
    /// hence K, exactly linear in η/(1+g).
    pub fn gated_correlator(&self, t: f64) -> Result<f64> {
        if !t.is_finite() || t < 0.0 {
            return Err(Error::InvalidInput(format!("gate start must be finite and >= 0, got {t}")));
        }
        let p = self.params();
        let width = p.gate_width;
        if width == 0.0 {
            return self.correlator_at(t);
        }
        let gamma_x = p.gamma_x;
        let mut integrand = |tau: f64| -> Result<[f64; 2]> {
            let pol = PairState::new(self.model.pol_matrix(tau)?, false)?;
            PairState::new(self.model.mix(pol.rho()).rho, false)?;
            let coh = pol.rho().get(HH, VV) + pol.rho().get(VV, HH);
            Ok([gamma_x * coh.re, gamma_x * pol.trace()])
        };
        let panels = if p.s_fss > 0.0 {
            let period = 2.0 * std::f64::consts::PI * HBAR / p.s_fss;
            (PANELS_PER_PERIOD * width / period).ceil().max(1.0) as usize
        } else {
            1
        };
        // absolute tolerance from a coarse estimate of the coincidence count
        let [_, d0] = integrand(t)?;
        let [_, d1] = integrand(t + width)?;
        let scale = 0.5 * (d0 + d1) * width;
        let abs_tol = TOL.quadrature_rel * scale;
        let [num, den] = adaptive_simpson(&mut integrand, t, t + width, panels, abs_tol)?;
        if !(den > 0.0) {
            return Err(Error::Degenerate(format!("no coincidences in gate [{t}, {}]", t + width)));
        }
        Ok(self.model.eta() * num / ((1.0 + p.g_noise) * den))
    }

    /// K(t), K(2t) from two independent evolutions, combined into K±.
    pub fn lg_point(&self, t: f64) -> Result<LGPoint> {
        let k_t = self.gated_correlator(t)?;
        let k_2t = self.gated_correlator(2.0 * t)?;
        Ok(LGPoint::from_correlators(t, k_t, k_2t))
    }

    /// Bisects `[lo, hi]`, where `hi` violates and `lo` does not, down to a
    /// bracket of width `tol`; returns the bracket midpoint.
    pub fn refine_crossing(&self, which: Branch, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
        while hi - lo > tol {
            let mid = 0.5 * (lo + hi);
            if self.lg_point(mid)?.branch(which) < VIOLATION_THRESHOLD {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Ok(0.5 * (lo + hi))
    }

    /// First time the branch drops below −1 on `[0, t_max]`, scanning with
    /// step `dt` and refining by bisection to `dt·1e-3`.
    pub fn first_violation(&self, which: Branch, t_max: f64, dt: f64) -> Result<Option<f64>> {
        if !(dt > 0.0) || !(t_max > 0.0) {
            return Err(Error::InvalidInput(format!("need dt > 0 and t_max > 0, got dt={dt}, t_max={t_max}")));
        }
        let steps = (t_max / dt).floor() as usize;
        let mut grid: Vec<f64> = (0..=steps).map(|i| i as f64 * dt).collect();
        if t_max - grid[steps] > 1e-9 * dt {
            grid.push(t_max);
        }
        let mut prev = None;
        for &t in &grid {
            if self.lg_point(t)?.branch(which) < VIOLATION_THRESHOLD {
                return match prev {
                    None => Ok(Some(t)),
                    Some(lo) => Ok(Some(self.refine_crossing(which, lo, t, dt * 1e-3)?)),
                };
            }
            prev = Some(t);
        }
        Ok(None)
    }
}

pub fn gated_correlator(p: &DotParameters, t: f64) -> Result<f64> {
    LgEvaluator::new(p)?.gated_correlator(t)
}

pub fn lg_point(p: &DotParameters, t: f64) -> Result<LGPoint> {
    LgEvaluator::new(p)?.lg_point(t)
}

pub fn find_first_violation(p: &DotParameters, which: Branch, t_max: f64, dt: f64) -> Result<Option<f64>> {
    LgEvaluator::new(p)?.first_violation(which, t_max, dt)
}
