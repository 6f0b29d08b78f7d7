//! Self-checks run by `lgdot validate`.
//!
//! Each check compares the production pipeline against an independent
//! reference (closed forms, the RK4 integrator, brute-force scans) at a
//! fixed tolerance. States produced along the way are fed to a validity
//! tracker that forms the last check.

use std::f64::consts::PI;
use std::path::Path;

use lgdot_core::cascade::CascadeModel;
use lgdot_core::constants::HBAR;
use lgdot_core::densmat::{propagate, ComplexMatrix, LindbladChannel, Liouvillian};
use lgdot_core::lganalysis::{correlator, joint_probabilities, LgEvaluator, VIOLATION_THRESHOLD};
use lgdot_core::oracle::{
    analytic_correlator, analytic_gated_correlator, analytic_lg_minimum, max_step, rk4_reference, AnalyticParams,
};
use lgdot_core::{Branch, DotParameters, PairState};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::commands::{compute_evolve, compute_sweep};
use crate::figures::{resolve, FigureId};

pub const IDEAL_MIN_TOL: f64 = 1e-6;
pub const CLASSICAL_TOL: f64 = 1e-12;
pub const ROUTE_TOL: f64 = 1e-12;
pub const PROPAGATOR_TOL: f64 = 1e-8;
pub const ORDER_RATIO: f64 = 16.0;
pub const ORDER_RATIO_TOL: f64 = 0.2;
pub const ANALYTIC_TOL: f64 = 1e-9;
pub const SCALING_TOL: f64 = 1e-10;
pub const THRESHOLD_TOL: f64 = 1e-3;
pub const TRACE_TOL: f64 = 1e-9;
pub const HERMITICITY_TOL: f64 = 1e-10;
pub const PSD_TOL: f64 = 1e-9;
pub const SPARSITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, Default)]
pub struct SuiteOptions {
    /// Test hook: perturbs every propagated state so the suite must fail.
    pub corrupt_propagator: bool,
}

#[derive(Debug, Clone)]
pub struct CheckOutcome {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// Worst-case validity measures over every state the suite produced.
#[derive(Debug, Clone, Default)]
pub struct ValidityTracker {
    pub states: usize,
    pub trace_error: f64,
    pub hermiticity: f64,
    pub min_eigenvalue: f64,
    pub sparsity: f64,
}

impl ValidityTracker {
    pub fn new() -> Self {
        Self {
            min_eigenvalue: f64::INFINITY,
            ..Self::default()
        }
    }

    pub fn density(&mut self, rho: &ComplexMatrix) {
        self.states += 1;
        self.trace_error = self.trace_error.max((rho.trace() - Complex64::new(1.0, 0.0)).norm());
        self.hermiticity = self.hermiticity.max(rho.hermiticity_defect());
        self.min_eigenvalue = self.min_eigenvalue.min(rho.min_eigenvalue());
    }

    pub fn pair(&mut self, ps: &PairState) {
        if ps.is_normalized() {
            self.density(ps.rho());
        } else {
            self.states += 1;
            self.hermiticity = self.hermiticity.max(ps.rho().hermiticity_defect());
            self.min_eigenvalue = self.min_eigenvalue.min(ps.rho().min_eigenvalue());
        }
        self.sparsity = self.sparsity.max(ps.sparsity_defect());
    }

    /// Records ρ_pol and the normalized mixture at τ.
    pub fn model_at(&mut self, model: &CascadeModel, tau: f64) -> lgdot_core::Result<()> {
        self.pair(&model.pol(tau)?);
        self.pair(&model.total(tau)?);
        Ok(())
    }

    pub fn passed(&self) -> bool {
        self.states > 0
            && self.trace_error < TRACE_TOL
            && self.hermiticity < HERMITICITY_TOL
            && self.min_eigenvalue >= -PSD_TOL
            && self.sparsity < SPARSITY_TOL
    }
}

fn outcome(id: &'static str, name: &'static str, result: lgdot_core::Result<(bool, String)>) -> CheckOutcome {
    match result {
        Ok((passed, detail)) => CheckOutcome { id, name, passed, detail },
        Err(e) => CheckOutcome {
            id,
            name,
            passed: false,
            detail: format!("error: {e}"),
        },
    }
}

fn propagate_with(opts: SuiteOptions, rho0: &ComplexMatrix, gen: &Liouvillian, t: f64) -> lgdot_core::Result<ComplexMatrix> {
    let rho = propagate(rho0, gen, t)?;
    Ok(if opts.corrupt_propagator { rho.scale(1.0 + 1e-6) } else { rho })
}

/// Golden-section minimum of `f` on `[a, b]`, to abscissa tolerance `tol`.
pub fn golden_min(mut f: impl FnMut(f64) -> lgdot_core::Result<f64>, mut a: f64, mut b: f64, tol: f64) -> lgdot_core::Result<(f64, f64)> {
    let r = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let (mut fc, mut fd) = (f(c)?, f(d)?);
    while b - a > tol {
        if fc < fd {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = f(c)?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = f(d)?;
        }
    }
    let t = 0.5 * (a + b);
    Ok((t, f(t)?))
}

/// Minimum of K₋ over a grid of step `dt` on `[0, t_max]`, polished by
/// golden section around the best grid point.
pub fn refined_min_kminus(ev: &LgEvaluator, t_max: f64, dt: f64, tol: f64) -> lgdot_core::Result<(f64, f64)> {
    let n = (t_max / dt).round() as usize;
    let mut best = (0.0, f64::INFINITY);
    for i in 0..=n {
        let t = i as f64 * dt;
        let k = ev.lg_point(t)?.k_minus;
        if k < best.1 {
            best = (t, k);
        }
    }
    let lo = (best.0 - dt).max(0.0);
    golden_min(|t| Ok(ev.lg_point(t)?.k_minus), lo, best.0 + dt, tol)
}

fn random_params(rng: &mut ChaCha8Rng) -> DotParameters {
    DotParameters {
        s_fss: rng.gen_range(0.2..8.0),
        gamma_x: rng.gen_range(1e-4..1e-2),
        gamma_dephase0: rng.gen_range(0.0..1e-3),
        gamma_phonon: rng.gen_range(0.0..1e-6),
        temperature: rng.gen_range(1.0..80.0),
        g_noise: rng.gen_range(0.0..1.0),
        gate_width: rng.gen_range(0.0..100.0),
        eta_override: None,
        ..DotParameters::default()
    }
}

fn complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

fn random_pair_state(rng: &mut ChaCha8Rng) -> lgdot_core::Result<PairState> {
    let d: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
    let tr: f64 = d.iter().sum();
    let d = d.map(|x| x / tr);
    let z = Complex64::from_polar(rng.gen_range(0.0..=1.0) * (d[0] * d[3]).sqrt(), rng.gen_range(0.0..2.0 * PI));
    let rho = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 3) => z,
        (3, 0) => z.conj(),
        _ if i == j => Complex64::new(d[i], 0.0),
        _ => Complex64::new(0.0, 0.0),
    })?;
    PairState::new(rho, true)
}

struct Problem {
    h0: ComplexMatrix,
    channels: Vec<LindbladChannel>,
    rho0: ComplexMatrix,
}

fn random_problem(rng: &mut ChaCha8Rng) -> lgdot_core::Result<Problem> {
    let h0 = ComplexMatrix::from_fn(4, 4, |_, _| complex(rng, 0.01))?.hermitian_part();
    let count = rng.gen_range(1..=3);
    let mut channels = Vec::with_capacity(count);
    for _ in 0..count {
        let c = ComplexMatrix::from_fn(4, 4, |_, _| complex(rng, 0.5))?;
        channels.push(LindbladChannel::new(c, rng.gen_range(0.0..1e-3))?);
    }
    let a = ComplexMatrix::from_fn(4, 4, |_, _| complex(rng, 1.0))?;
    let rho = (&a * &a.adjoint()).hermitian_part();
    let tr = rho.trace().re;
    Ok(Problem {
        h0,
        channels,
        rho0: rho.scale(1.0 / tr),
    })
}

pub fn check_ideal_minimum(tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "1",
        "ideal quantum minimum of K−",
        (|| {
            let s = 3.0;
            let ev = LgEvaluator::new(&DotParameters::ideal(s))?;
            let dt = 1.0;
            let (t, k) = refined_min_kminus(&ev, 1000.0, dt, 1e-4)?;
            let (theta, value) = analytic_lg_minimum(Branch::Minus);
            let t_expect = theta * HBAR / s;
            tracker.model_at(ev.model(), t)?;
            tracker.model_at(ev.model(), 2.0 * t)?;
            let passed = (k - value).abs() <= IDEAL_MIN_TOL && (t - t_expect).abs() <= dt;
            Ok((passed, format!("min K− = {k:.10} at t = {t:.4} ps (expected {value} at {t_expect:.4} ps)")))
        })(),
    )
}

pub fn check_classical_bound(tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "2",
        "no violation without coherence (η = 0)",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x2);
            let mut worst = f64::INFINITY;
            for _ in 0..20 {
                let p = DotParameters {
                    eta_override: Some(0.0),
                    ..random_params(&mut rng)
                };
                let ev = LgEvaluator::new(&p)?;
                for i in 0..=200 {
                    let t = 25.0 * i as f64;
                    let pt = ev.lg_point(t)?;
                    worst = worst.min(pt.k_plus).min(pt.k_minus);
                    if i % 50 == 0 {
                        tracker.model_at(ev.model(), t)?;
                    }
                }
            }
            Ok((worst >= -1.0 - CLASSICAL_TOL, format!("min K± = {worst:.3e} over 20 sets, t ∈ [0, 5000] ps")))
        })(),
    )
}

pub fn check_routes(tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "3",
        "correlator routes agree",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x3);
            let mut worst: f64 = 0.0;
            for _ in 0..500 {
                let ps = random_pair_state(&mut rng)?;
                let (p_pp, p_pm) = joint_probabilities(&ps)?;
                worst = worst.max((correlator(&ps)? - (p_pp - p_pm)).abs());
                tracker.pair(&ps);
            }
            Ok((worst < ROUTE_TOL, format!("max |K − (P++ − P+−)| = {worst:.2e} over 500 states")))
        })(),
    )
}

pub fn check_propagator(opts: SuiteOptions, tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "4",
        "propagator matches RK4 reference",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x4);
            let mut worst: f64 = 0.0;
            for _ in 0..50 {
                let p = random_problem(&mut rng)?;
                let t = rng.gen_range(1.0..5000.0);
                let gen = Liouvillian::new(&p.h0, &p.channels)?;
                let rho = propagate_with(opts, &p.rho0, &gen, t)?;
                tracker.density(&rho);
                let steps = ((t / (max_step(&p.h0, &p.channels) / 20.0)).ceil() as usize).max(1000);
                let reference = rk4_reference(&p.rho0, &p.h0, &p.channels, t, steps)?;
                worst = worst.max(rho.max_abs_diff(&reference));
            }
            let mut ratios = Vec::new();
            for _ in 0..5 {
                let p = random_problem(&mut rng)?;
                let t = 5000.0;
                let gen = Liouvillian::new(&p.h0, &p.channels)?;
                let exact = propagate_with(opts, &p.rho0, &gen, t)?;
                let coarse = ((t / max_step(&p.h0, &p.channels)).ceil() as usize).max(1000);
                let e1 = rk4_reference(&p.rho0, &p.h0, &p.channels, t, coarse)?.max_abs_diff(&exact);
                let e2 = rk4_reference(&p.rho0, &p.h0, &p.channels, t, 2 * coarse)?.max_abs_diff(&exact);
                ratios.push(e1 / e2);
            }
            let order_ok = ratios.iter().all(|r| (r - ORDER_RATIO).abs() <= ORDER_RATIO_TOL * ORDER_RATIO);
            let shown: Vec<String> = ratios.iter().map(|r| format!("{r:.2}")).collect();
            Ok((
                worst < PROPAGATOR_TOL && order_ok,
                format!("max entry error {worst:.2e} over 50 problems; halving ratios [{}]", shown.join(", ")),
            ))
        })(),
    )
}

pub fn check_analytic(tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "5",
        "flip-free pipeline matches closed form",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x5);
            let mut worst: f64 = 0.0;
            for _ in 0..50 {
                let p = DotParameters {
                    gamma_phonon: 0.0,
                    eta_override: Some(rng.gen_range(0.0..=1.0)),
                    gate_width: rng.gen_range(1.0..100.0),
                    ..random_params(&mut rng)
                };
                let t = rng.gen_range(0.0..3000.0);
                let a = AnalyticParams::new(p.s_fss, p.gamma_dephase0, p.eta_override.unwrap_or(1.0), p.g_noise)?;
                let ev = LgEvaluator::new(&p)?;
                let inst = (ev.correlator_at(t)? - analytic_correlator(&a, t)).abs();
                let gated = (ev.gated_correlator(t)? - analytic_gated_correlator(&a, p.gamma_x, t, p.gate_width)).abs();
                worst = worst.max(inst).max(gated);
                tracker.model_at(ev.model(), t)?;
            }
            Ok((worst < ANALYTIC_TOL, format!("max deviation {worst:.2e} over 50 samples")))
        })(),
    )
}

/// η at which the ideal model with noise `g` starts to violate, by bisection.
pub fn violation_threshold(g: f64, tol: f64) -> lgdot_core::Result<f64> {
    let violates = |eta: f64| -> lgdot_core::Result<bool> {
        let p = DotParameters {
            g_noise: g,
            eta_override: Some(eta),
            ..DotParameters::ideal(3.0)
        };
        let (_, k) = refined_min_kminus(&LgEvaluator::new(&p)?, 1000.0, 5.0, 1e-3)?;
        Ok(k < VIOLATION_THRESHOLD)
    };
    let (mut lo, mut hi) = (0.0, 1.0);
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if violates(mid)? {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

pub fn check_mixture(tracker: &mut ValidityTracker) -> CheckOutcome {
    outcome(
        "6",
        "mixture scaling and violation threshold",
        (|| {
            let mut rng = ChaCha8Rng::seed_from_u64(0x6);
            let mut worst: f64 = 0.0;
            for _ in 0..30 {
                let base = random_params(&mut rng);
                let (eta, g, t) = (rng.gen_range(0.0..=1.0), rng.gen_range(0.0..2.0), rng.gen_range(0.0..3000.0));
                let pure = DotParameters {
                    eta_override: Some(1.0),
                    g_noise: 0.0,
                    ..base
                };
                let mixed = DotParameters {
                    eta_override: Some(eta),
                    g_noise: g,
                    ..base
                };
                let k_pure = LgEvaluator::new(&pure)?.gated_correlator(t)?;
                let ev = LgEvaluator::new(&mixed)?;
                worst = worst.max((ev.gated_correlator(t)? - eta / (1.0 + g) * k_pure).abs());
                tracker.model_at(ev.model(), t)?;
            }
            let mut details = vec![format!("scaling error {worst:.2e}")];
            let mut ok = worst < SCALING_TOL;
            for g in [0.0, 0.2] {
                let eta = violation_threshold(g, THRESHOLD_TOL)?;
                let expect = 2.0 / 3.0 * (1.0 + g);
                ok &= (eta - expect).abs() <= THRESHOLD_TOL;
                details.push(format!("g = {g}: η* = {eta:.4} (expected {expect:.4})"));
            }
            Ok((ok, details.join("; ")))
        })(),
    )
}

/// Shape claims of the four figures: K− violates before K+ in fig2, and the
/// deepest K− weakens along each swept axis.
pub fn check_figure_trends() -> CheckOutcome {
    outcome(
        "7",
        "figure trends",
        (|| {
            let out = Path::new(".");
            let fig2 = resolve(FigureId::Fig2, out).config;
            let points = compute_evolve(&fig2).map_err(|e| lgdot_core::Error::Invariant(e.to_string()))?;
            let first = |f: fn(&lgdot_core::LGPoint) -> f64| points.iter().find(|p| f(p) < VIOLATION_THRESHOLD).map(|p| p.t);
            let (minus, plus) = (first(|p| p.k_minus), first(|p| p.k_plus));
            let mut ok = matches!((minus, plus), (Some(m), Some(p)) if m < p);
            let mut details = vec![format!("fig2 first K− {minus:?}, first K+ {plus:?}")];
            for id in [FigureId::Fig3, FigureId::Fig4, FigureId::Fig5] {
                let cfg = resolve(id, out).config;
                let r = compute_sweep(&cfg).map_err(|e| lgdot_core::Error::Invariant(e.to_string()))?;
                let monotone = r.min_kminus.windows(2).all(|w| w[1] >= w[0]);
                ok &= monotone;
                let mins: Vec<String> = r.min_kminus.iter().map(|m| format!("{m:.3}")).collect();
                details.push(format!("{id} min K− [{}]", mins.join(", ")));
            }
            Ok((ok, details.join("; ")))
        })(),
    )
}

pub fn check_validity(tracker: &ValidityTracker) -> CheckOutcome {
    CheckOutcome {
        id: "8",
        name: "density-matrix validity",
        passed: tracker.passed(),
        detail: format!(
            "{} states: trace err {:.1e}, hermiticity {:.1e}, min eig {:.1e}, zero pattern {:.1e}",
            tracker.states, tracker.trace_error, tracker.hermiticity, tracker.min_eigenvalue, tracker.sparsity
        ),
    }
}

pub fn run_suite(opts: SuiteOptions) -> Vec<CheckOutcome> {
    let mut tracker = ValidityTracker::new();
    let mut results = vec![
        check_ideal_minimum(&mut tracker),
        check_classical_bound(&mut tracker),
        check_routes(&mut tracker),
        check_propagator(opts, &mut tracker),
        check_analytic(&mut tracker),
        check_mixture(&mut tracker),
    ];
    results.push(check_figure_trends());
    results.push(check_validity(&tracker));
    results
}

pub fn render_table(results: &[CheckOutcome]) -> String {
    let width = results.iter().map(|r| r.name.chars().count()).max().unwrap_or(0);
    let mut out = String::new();
    for r in results {
        let pad = width - r.name.chars().count();
        out.push_str(&format!(
            "[{}] {}{} {}  {}\n",
            r.id,
            r.name,
            " ".repeat(pad),
            if r.passed { "PASS" } else { "FAIL" },
            r.detail
        ));
    }
    out
}
