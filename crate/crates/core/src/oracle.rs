//! Independent verification machinery.
//!
//! Closed forms hold for the flip-free model, where the exciton coherence
//! obeys dρ₂₁/dt = −(iS/ħ + γ_x + γ_d)ρ₂₁ while both exciton populations
//! decay at γ_x. Radiative decay therefore cancels in the normalized
//! correlator, leaving K(t) = (η/(1+g))·e^{−γt}·cos(St/ħ) with γ the
//! coherence decay in excess of population decay.
//!
//! [`rk4_reference`] integrates the master equation stepwise from
//! [`lindblad_rhs`] directly, sharing no code with the matrix-exponential
//! propagator it certifies.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::constants::HBAR;
use crate::densmat::{lindblad_rhs, ComplexMatrix, LindbladChannel};
use crate::error::{Error, Result};
use crate::lganalysis::Branch;

/// Parameters of the flip-free closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalyticParams {
    /// Fine-structure splitting (μeV).
    pub s_fss: f64,
    /// Coherence decay rate in excess of population decay (1/ps).
    pub gamma_total: f64,
    pub eta: f64,
    pub g: f64,
}

impl AnalyticParams {
    pub fn new(s_fss: f64, gamma_total: f64, eta: f64, g: f64) -> Result<Self> {
        if !(gamma_total >= 0.0) {
            return Err(Error::InvalidInput(format!("gamma_total must be >= 0, got {gamma_total}")));
        }
        Ok(Self { s_fss, gamma_total, eta, g })
    }

    fn amplitude(&self) -> f64 {
        self.eta / (1.0 + self.g)
    }
}

pub fn analytic_correlator(a: &AnalyticParams, t: f64) -> f64 {
    a.amplitude() * (-a.gamma_total * t).exp() * (a.s_fss * t / HBAR).cos()
}

/// Closed-form gated correlator: the flip-free correlator averaged over
/// [t, t+ω] with the emission weight e^{−γ_x τ}.
pub fn analytic_gated_correlator(a: &AnalyticParams, gamma_x: f64, t: f64, width: f64) -> f64 {
    if width == 0.0 {
        return analytic_correlator(a, t);
    }
    // ∫ e^{zτ} dτ over the window
    let window = |z: Complex64| -> Complex64 {
        if z.norm() * width < 1e-8 {
            // series for small |z|ω avoids cancellation
            (z * t).exp() * width * (1.0 + z * width / 2.0 + z * z * width * width / 6.0)
        } else {
            ((z * (t + width)).exp() - (z * t).exp()) / z
        }
    };
    let s = a.s_fss / HBAR;
    let num = window(Complex64::new(-gamma_x - a.gamma_total, s)).re;
    let den = window(Complex64::new(-gamma_x, 0.0)).re;
    a.amplitude() * num / den
}

/// Fixed-step classical Runge-Kutta integration of the master equation.
///
/// Requires `steps ≥ 1000` and a step no larger than `0.01/max_rate` or a
/// hundredth of the fastest coherent period. Global error is O(h⁴).
pub fn rk4_reference(
    rho0: &ComplexMatrix,
    h0: &ComplexMatrix,
    channels: &[LindbladChannel],
    t: f64,
    steps: usize,
) -> Result<ComplexMatrix> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("integration time must be finite and >= 0, got {t}")));
    }
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    if steps < 1000 {
        return Err(Error::InvalidInput(format!("rk4_reference needs at least 1000 steps, got {steps}")));
    }
    let h = t / steps as f64;
    let max_h = max_step(h0, channels);
    if h > max_h {
        return Err(Error::InvalidInput(format!(
            "step {h} ps exceeds the admissible {max_h} ps; use at least {} steps",
            (t / max_h).ceil()
        )));
    }
    // validates dimensions once
    lindblad_rhs(rho0, h0, channels)?;
    let rhs = |rho: &ComplexMatrix| lindblad_rhs(rho, h0, channels).expect("dimensions checked");
    let mut rho = rho0.clone();
    for _ in 0..steps {
        let k1 = rhs(&rho);
        let k2 = rhs(&(&rho + &k1.scale(0.5 * h)));
        let k3 = rhs(&(&rho + &k2.scale(0.5 * h)));
        let k4 = rhs(&(&rho + &k3.scale(h)));
        let mut incr = &k1 + &k4;
        incr += &(&k2 + &k3).scale(2.0);
        rho += &incr.scale(h / 6.0);
    }
    Ok(rho)
}

/// Largest step admitted by [`rk4_reference`].
pub fn max_step(h0: &ComplexMatrix, channels: &[LindbladChannel]) -> f64 {
    let max_rate = channels.iter().map(LindbladChannel::rate).fold(0.0, f64::max);
    let mut limit = f64::INFINITY;
    if max_rate > 0.0 {
        limit = limit.min(0.01 / max_rate);
    }
    if h0.is_square() && h0.rows() > 0 {
        let ev = h0.hermitian_eigenvalues();
        let spread = ev[ev.len() - 1] - ev[0];
        if spread > 0.0 {
            limit = limit.min(2.0 * PI / spread / 100.0);
        }
    }
    limit
}

/// Extremum of the ideal-model branch f(θ) = cos2θ ∓ 2cosθ.
///
/// With x = cosθ, f = 2x² ∓ 2x − 1, minimized at x = ±½ with value −3/2:
/// θ = π/3 for the minus branch, θ = 2π/3 for the plus branch.
pub fn analytic_lg_minimum(which: Branch) -> (f64, f64) {
    match which {
        Branch::Minus => (PI / 3.0, -1.5),
        Branch::Plus => (2.0 * PI / 3.0, -1.5),
    }
}

/// Ideal-model branch value at rotation angle θ = St/ħ.
pub fn ideal_branch(which: Branch, theta: f64) -> f64 {
    let sign = match which {
        Branch::Plus => 1.0,
        Branch::Minus => -1.0,
    };
    (2.0 * theta).cos() + sign * 2.0 * theta.cos()
}

/// Brute-force minimum of [`ideal_branch`] over `n` equispaced θ ∈ [0, 2π).
pub fn dense_scan_minimum(which: Branch, n: usize) -> (f64, f64) {
    (0..n)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n as f64;
            (theta, ideal_branch(which, theta))
        })
        .fold((0.0, f64::INFINITY), |best, cur| if cur.1 < best.1 { cur } else { best })
}
