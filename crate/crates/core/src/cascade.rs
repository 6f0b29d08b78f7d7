//! Quantum-dot physics of the biexciton cascade.
//!
//! The dot has four levels: ground |0⟩, the two linearly polarized bright
//! excitons |1⟩ and |2⟩ split by the fine-structure splitting S, and the
//! biexciton |3⟩. Detecting the biexciton photon leaves the entangled
//! photon-exciton state (|H⟩|2⟩ + |V⟩|1⟩)/√2; the exciton then evolves under a
//! Lindblad generator until it emits the second photon, whose polarization
//! tracks the exciton level (|2⟩ → H₂, |1⟩ → V₂).
//!
//! Dissipation is modelled phenomenologically by four channel families:
//! radiative decay of each exciton at `gamma_x`, thermal phonon-assisted
//! flips between the excitons at `gamma_phonon·(n̄+1)` (down) and
//! `gamma_phonon·n̄` (up), and pure dephasing at `gamma_dephase0`.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::{HBAR, K_B, TOL};
use crate::densmat::{ComplexMatrix, LindbladChannel, Liouvillian, SectorGenerator};
use crate::error::{Error, Result};

/// Dot level indices.
pub const GROUND: usize = 0;
pub const EXCITON_V: usize = 1;
pub const EXCITON_H: usize = 2;
pub const BIEXCITON: usize = 3;
pub const DOT_DIM: usize = 4;

const EXCITON_LEVELS: [usize; 2] = [EXCITON_V, EXCITON_H];
const SECTOR_V: usize = 0;
const SECTOR_H: usize = 1;

/// Index of |H₁H₂⟩ in the pair basis {H₁H₂, H₁V₂, V₁H₂, V₁V₂}.
pub const HH: usize = 0;
pub const VV: usize = 3;

/// Physical configuration of one simulation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DotParameters {
    /// Fine-structure splitting S (μeV).
    pub s_fss: f64,
    /// Level energies of |0⟩..|3⟩ (μeV). The exciton pair is placed at the
    /// mean of entries 1 and 2, split by `s_fss`.
    pub level_energies: [f64; 4],
    /// Exciton radiative decay rate (1/ps).
    pub gamma_x: f64,
    /// Pure-dephasing rate between the excitons (1/ps).
    pub gamma_dephase0: f64,
    /// Phonon coupling scale of the thermal flips (1/ps).
    pub gamma_phonon: f64,
    /// Bath temperature (K).
    pub temperature: f64,
    /// Background-noise weight g.
    pub g_noise: f64,
    /// Timing-gate width ω (ps).
    pub gate_width: f64,
    /// Spectral-overlap weight η used instead of the Lorentzian overlap.
    pub eta_override: Option<f64>,
}

impl Default for DotParameters {
    /// S = 3 μeV, T = 5 K, g = 0, ω = 50 ps. The rates are not measured
    /// values; they are chosen so the splitting-driven oscillation survives
    /// many periods and the background/temperature/splitting trends are all
    /// visible on the same scale.
    fn default() -> Self {
        Self {
            s_fss: 3.0,
            level_energies: [0.0; 4],
            gamma_x: 1e-2,
            gamma_dephase0: 1e-5,
            gamma_phonon: 1e-8,
            temperature: 5.0,
            g_noise: 0.0,
            gate_width: 50.0,
            eta_override: None,
        }
    }
}

impl DotParameters {
    /// Closed dynamics up to radiative decay: no dephasing, no phonons, no
    /// noise, no gate and η = 1.
    pub fn ideal(s_fss: f64) -> Self {
        Self {
            s_fss,
            gamma_dephase0: 0.0,
            gamma_phonon: 0.0,
            g_noise: 0.0,
            gate_width: 0.0,
            eta_override: Some(1.0),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let non_negative = [
            ("s_fss", self.s_fss),
            ("gamma_dephase0", self.gamma_dephase0),
            ("gamma_phonon", self.gamma_phonon),
            ("g_noise", self.g_noise),
            ("gate_width", self.gate_width),
        ];
        for (name, v) in non_negative {
            if !v.is_finite() || v < 0.0 {
                return Err(Error::InvalidInput(format!("{name} must be finite and >= 0, got {v}")));
            }
        }
        for (name, v) in [("gamma_x", self.gamma_x), ("temperature", self.temperature)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::InvalidInput(format!("{name} must be finite and > 0, got {v}")));
            }
        }
        if let Some(k) = self.level_energies.iter().position(|e| !e.is_finite()) {
            return Err(Error::InvalidInput(format!("level_energies[{k}] is not finite")));
        }
        if let Some(eta) = self.eta_override {
            if !(0.0..=1.0).contains(&eta) {
                return Err(Error::InvalidInput(format!("eta_override must lie in [0, 1], got {eta}")));
            }
        }
        Ok(())
    }

    /// Angular frequency S/ħ of the exciton coherence (1/ps).
    pub fn splitting_frequency(&self) -> f64 {
        self.s_fss / HBAR
    }

    /// Dot Hamiltonian in angular-frequency units (1/ps).
    pub fn hamiltonian(&self) -> ComplexMatrix {
        let e = &self.level_energies;
        let centre = 0.5 * (e[EXCITON_V] + e[EXCITON_H]);
        let mut diag = [0.0; DOT_DIM];
        diag[GROUND] = e[GROUND];
        diag[EXCITON_V] = centre - 0.5 * self.s_fss;
        diag[EXCITON_H] = centre + 0.5 * self.s_fss;
        diag[BIEXCITON] = e[BIEXCITON];
        let omega: Vec<f64> = diag.iter().map(|x| x / HBAR).collect();
        ComplexMatrix::real_diag(&omega).expect("validated parameters give finite energies")
    }
}

/// Bose-Einstein occupation of the phonon mode bridging the splitting.
pub fn phonon_occupation(s_fss: f64, temperature: f64) -> Result<f64> {
    if !(s_fss > 0.0) || !s_fss.is_finite() {
        return Err(Error::InvalidInput(format!(
            "phonon occupation diverges for s_fss = {s_fss}; it needs s_fss > 0"
        )));
    }
    if !(temperature > 0.0) || !temperature.is_finite() {
        return Err(Error::InvalidInput(format!("temperature must be > 0, got {temperature}")));
    }
    Ok(1.0 / (s_fss / (K_B * temperature)).exp_m1())
}

/// Exciton dissipation channels on the 4-level dot.
#[derive(Debug, Clone)]
pub struct ExcitonChannels {
    pub channels: Vec<LindbladChannel>,
    /// Set when `gamma_phonon > 0` but S = 0, where the thermal occupation
    /// diverges and the flip channels are left out.
    pub flips_omitted: bool,
}

pub fn build_exciton_channels(p: &DotParameters) -> Result<ExcitonChannels> {
    p.validate()?;
    let n = DOT_DIM;
    let mut channels = vec![
        LindbladChannel::new(ComplexMatrix::unit(n, GROUND, EXCITON_H), p.gamma_x)?,
        LindbladChannel::new(ComplexMatrix::unit(n, GROUND, EXCITON_V), p.gamma_x)?,
    ];
    let mut flips_omitted = false;
    if p.gamma_phonon > 0.0 {
        if p.s_fss > 0.0 {
            let nbar = phonon_occupation(p.s_fss, p.temperature)?;
            channels.push(LindbladChannel::new(
                ComplexMatrix::unit(n, EXCITON_V, EXCITON_H),
                p.gamma_phonon * (nbar + 1.0),
            )?);
            channels.push(LindbladChannel::new(
                ComplexMatrix::unit(n, EXCITON_H, EXCITON_V),
                p.gamma_phonon * nbar,
            )?);
        } else {
            flips_omitted = true;
        }
    }
    if p.gamma_dephase0 > 0.0 {
        let mut d = [0.0; DOT_DIM];
        d[EXCITON_H] = std::f64::consts::FRAC_1_SQRT_2;
        d[EXCITON_V] = -std::f64::consts::FRAC_1_SQRT_2;
        channels.push(LindbladChannel::new(ComplexMatrix::real_diag(&d)?, p.gamma_dephase0)?);
    }
    Ok(ExcitonChannels { channels, flips_omitted })
}

/// |ψ⟩⟨ψ| for |ψ⟩ = (|H⟩|2⟩ + |V⟩|1⟩)/√2 in the ordered basis
/// {H⊗|2⟩, H⊗|1⟩, V⊗|2⟩, V⊗|1⟩}.
pub fn entangled_initial() -> ComplexMatrix {
    let a = std::f64::consts::FRAC_1_SQRT_2;
    let psi = [a, 0.0, 0.0, a].map(|x| Complex64::new(x, 0.0));
    ComplexMatrix::outer(&psi, &psi).expect("finite")
}

/// Spectral overlap η of the two decay paths.
///
/// Lorentzian overlap Γ_c²/(Γ_c² + (S/ħ)²) with the total coherence linewidth
/// Γ_c = γ_x + γ_d + γ_ph(2n̄+1), unless `eta_override` is set.
pub fn spectral_overlap(p: &DotParameters) -> f64 {
    if let Some(eta) = p.eta_override {
        return eta;
    }
    if p.s_fss == 0.0 {
        return 1.0;
    }
    let nbar = if p.gamma_phonon > 0.0 {
        phonon_occupation(p.s_fss, p.temperature).unwrap_or(0.0)
    } else {
        0.0
    };
    let linewidth = p.gamma_x + p.gamma_dephase0 + p.gamma_phonon * (2.0 * nbar + 1.0);
    let split = p.splitting_frequency();
    let lw2 = linewidth * linewidth;
    if lw2 == 0.0 {
        return 0.0;
    }
    lw2 / (lw2 + split * split)
}

/// 4×4 two-photon polarization density matrix in the basis
/// {|H₁H₂⟩, |H₁V₂⟩, |V₁H₂⟩, |V₁V₂⟩}.
///
/// Only the diagonal and the (1,4)/(4,1) coherence may be non-zero.
#[derive(Debug, Clone, PartialEq)]
pub struct PairState {
    rho: ComplexMatrix,
    normalized: bool,
}

const FORBIDDEN: [(usize, usize); 5] = [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)];

impl PairState {
    pub fn new(rho: ComplexMatrix, normalized: bool) -> Result<Self> {
        if rho.rows() != 4 || rho.cols() != 4 {
            return Err(Error::Dimension(format!("pair state must be 4x4, got {}x{}", rho.rows(), rho.cols())));
        }
        for &(i, j) in &FORBIDDEN {
            let worst = rho.get(i, j).norm().max(rho.get(j, i).norm());
            if worst >= TOL.algebraic {
                return Err(Error::InvalidState(format!(
                    "pair entry ({}, {}) has magnitude {worst:e}; only ρ11..ρ44, ρ14, ρ41 may be non-zero",
                    i + 1,
                    j + 1
                )));
            }
        }
        let defect = rho.hermiticity_defect();
        if defect > TOL.propagated {
            return Err(Error::InvalidState(format!("pair state hermiticity defect {defect:e}")));
        }
        if normalized {
            let tr_err = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
            if tr_err > TOL.propagated {
                return Err(Error::InvalidState(format!("normalized pair state has trace error {tr_err:e}")));
            }
        }
        let min_eig = pair_min_eigenvalue(&rho);
        if min_eig < -TOL.psd {
            return Err(Error::InvalidState(format!("pair state eigenvalue {min_eig:e} is negative")));
        }
        Ok(Self { rho, normalized })
    }

    pub fn rho(&self) -> &ComplexMatrix {
        &self.rho
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    /// ρ₁₄ = ⟨H₁H₂|ρ|V₁V₂⟩
    pub fn coherence(&self) -> Complex64 {
        self.rho.get(HH, VV)
    }

    pub fn normalized(&self) -> Result<Self> {
        let tr = self.trace();
        if !(tr.is_normal() && tr > 0.0) {
            return Err(Error::Degenerate(format!("cannot normalize a pair state with trace {tr:e}")));
        }
        Self::new(self.rho.scale(1.0 / tr), true)
    }

    /// Largest magnitude among the entries the zero pattern forbids.
    pub fn sparsity_defect(&self) -> f64 {
        FORBIDDEN
            .iter()
            .map(|&(i, j)| self.rho.get(i, j).norm().max(self.rho.get(j, i).norm()))
            .fold(0.0, f64::max)
    }
}

/// With the X-shaped zero pattern the spectrum is the two middle diagonal
/// entries plus the eigenvalues of the outer 2×2 block.
fn pair_min_eigenvalue(rho: &ComplexMatrix) -> f64 {
    let a = rho.get(HH, HH).re;
    let d = rho.get(VV, VV).re;
    let b = rho.get(HH, VV).norm();
    let outer_min = 0.5 * (a + d) - (0.25 * (a - d) * (a - d) + b * b).sqrt();
    outer_min.min(rho.get(1, 1).re).min(rho.get(2, 2).re)
}

/// The cascade model for one parameter set, with the generator and overlap
/// weight computed once.
#[derive(Debug, Clone)]
pub struct CascadeModel {
    params: DotParameters,
    generator: Liouvillian,
    exciton_sector: SectorGenerator,
    eta: f64,
    flips_omitted: bool,
}

/// Unnormalized mixture at one delay, before division by its trace.
#[derive(Debug, Clone)]
pub struct MixtureSample {
    pub rho: ComplexMatrix,
    /// Trace of ρ_pol, the coincidence weight at this delay.
    pub pol_trace: f64,
}

impl CascadeModel {
    pub fn new(params: &DotParameters) -> Result<Self> {
        params.validate()?;
        let channels = build_exciton_channels(params)?;
        let generator = Liouvillian::new(&params.hamiltonian(), &channels.channels)?;
        let exciton_sector = generator.sector(&EXCITON_LEVELS)?;
        Ok(Self {
            params: *params,
            generator,
            exciton_sector,
            eta: spectral_overlap(params),
            flips_omitted: channels.flips_omitted,
        })
    }

    pub fn params(&self) -> &DotParameters {
        &self.params
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn flips_omitted(&self) -> bool {
        self.flips_omitted
    }

    pub fn generator(&self) -> &Liouvillian {
        &self.generator
    }

    /// Unnormalized ρ_pol(τ).
    pub fn pol_matrix(&self, tau: f64) -> Result<ComplexMatrix> {
        if !tau.is_finite() || tau < 0.0 {
            return Err(Error::InvalidInput(format!("delay must be finite and >= 0, got {tau}")));
        }
        // Photon 1 is a spectator: the joint state is Σ |a⟩⟨b| ⊗ X_ab with
        // X_ab = ½|d(a)⟩⟨d(b)|, d(H) = |2⟩, d(V) = |1⟩, and each X_ab evolves
        // under the exciton-sector generator.
        let prop = self.exciton_sector.propagator(tau)?;
        let m = EXCITON_LEVELS.len();
        let (h, v) = (SECTOR_H, SECTOR_V);
        let x_hh = prop.apply(&ComplexMatrix::unit(m, h, h).scale(0.5))?;
        let x_hv = prop.apply(&ComplexMatrix::unit(m, h, v).scale(0.5))?;
        let x_vv = prop.apply(&ComplexMatrix::unit(m, v, v).scale(0.5))?;
        let x_vh = x_hv.adjoint();
        // second-photon polarization index → sector index
        let levels = [h, v];
        let blocks = [[&x_hh, &x_hv], [&x_vh, &x_vv]];
        ComplexMatrix::from_fn(4, 4, |row, col| {
            let (a, x) = (row / 2, row % 2);
            let (b, y) = (col / 2, col % 2);
            blocks[a][b].get(levels[x], levels[y])
        })
    }

    pub fn pol(&self, tau: f64) -> Result<PairState> {
        PairState::new(self.pol_matrix(tau)?, false)
    }

    pub fn noc(&self, tau: f64) -> Result<PairState> {
        PairState::new(strip_coherence(&self.pol_matrix(tau)?), false)
    }

    /// η·ρ_pol + (1−η)·ρ_noc + g·Tr(ρ_pol)·I/4, so the noise carries the
    /// fraction g/(1+g) of the normalized state at every delay.
    pub fn mixture(&self, tau: f64) -> Result<MixtureSample> {
        Ok(self.mix(&self.pol_matrix(tau)?))
    }

    /// The mixture built from a given ρ_pol.
    pub fn mix(&self, pol: &ComplexMatrix) -> MixtureSample {
        let noc = strip_coherence(pol);
        let pol_trace = pol.trace().re;
        let noise = ComplexMatrix::identity(4).scale(self.params.g_noise * pol_trace * 0.25);
        let mut rho = pol.scale(self.eta);
        rho += &noc.scale(1.0 - self.eta);
        rho += &noise;
        MixtureSample { rho, pol_trace }
    }

    pub fn total(&self, tau: f64) -> Result<PairState> {
        let sample = self.mixture(tau)?;
        let norm = sample.rho.trace().re;
        // the weight decays as e^{−γ_x τ} but keeps full relative precision
        if !(norm.is_normal() && norm > 0.0) {
            return Err(Error::Degenerate(format!("pair coincidence weight {norm:e} at delay {tau} ps")));
        }
        PairState::new(sample.rho.scale(1.0 / norm), true)
    }
}

fn strip_coherence(pol: &ComplexMatrix) -> ComplexMatrix {
    let zero = Complex64::default();
    let mut m = pol.with_entry(HH, VV, zero).expect("finite");
    m = m.with_entry(VV, HH, zero).expect("finite");
    m
}

pub fn pair_density_pol(p: &DotParameters, tau: f64) -> Result<PairState> {
    CascadeModel::new(p)?.pol(tau)
}

pub fn pair_density_noc(p: &DotParameters, tau: f64) -> Result<PairState> {
    CascadeModel::new(p)?.noc(tau)
}

pub fn pair_density_total(p: &DotParameters, tau: f64) -> Result<PairState> {
    CascadeModel::new(p)?.total(tau)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn entangled_initial_state() {
        let rho = entangled_initial();
        assert!((rho.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!(((&rho * &rho).trace().re - 1.0).abs() < 1e-15);
        assert!((rho.get(0, 3).re - 0.5).abs() < 1e-15);
        // partial trace over photon 1: blocks (H,H) + (V,V) on the exciton
        for (x, y) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let reduced = rho.get(x, y) + rho.get(2 + x, 2 + y);
            let expect = if x == y { 0.5 } else { 0.0 };
            assert!((reduced - Complex64::new(expect, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn occupation_values() {
        // independent evaluation: x = 3 / (86.17333 · 5), n̄ = 1/(eˣ − 1)
        let n = phonon_occupation(3.0, 5.0).unwrap();
        assert!((n - 143.122_796_892).abs() < 1e-8, "{n}");
        assert!(phonon_occupation(3.0, 1e-6).unwrap() == 0.0);
        let t = 7.0;
        let s = K_B * t * std::f64::consts::LN_2;
        assert!((phonon_occupation(s, t).unwrap() - 1.0).abs() < 1e-12);
        assert!(phonon_occupation(0.0, 5.0).is_err());
        assert!(phonon_occupation(1.0, 0.0).is_err());
    }

    #[test]
    fn channel_families() {
        let bare = DotParameters {
            gamma_phonon: 0.0,
            gamma_dephase0: 0.0,
            ..DotParameters::default()
        };
        assert_eq!(build_exciton_channels(&bare).unwrap().channels.len(), 2);

        let p = DotParameters {
            gamma_phonon: 1e-3,
            ..DotParameters::default()
        };
        let ch = build_exciton_channels(&p).unwrap();
        assert_eq!(ch.channels.len(), 5);
        assert!(ch.channels.iter().all(|c| c.rate() >= 0.0));
        let ratio = ch.channels[3].rate() / ch.channels[2].rate();
        let nbar = phonon_occupation(3.0, 5.0).unwrap();
        assert!((ratio - nbar / (nbar + 1.0)).abs() < 1e-14);
        assert!((ratio - 143.1228 / 144.1228).abs() < 1e-6);

        let degenerate = DotParameters { s_fss: 0.0, ..p };
        let ch = build_exciton_channels(&degenerate).unwrap();
        assert!(ch.flips_omitted);
        assert_eq!(ch.channels.len(), 3);
    }

    #[test]
    fn overlap_limits() {
        let p = DotParameters::default();
        assert_eq!(spectral_overlap(&DotParameters { s_fss: 0.0, ..p }), 1.0);
        assert!(spectral_overlap(&DotParameters { s_fss: 1e6, ..p }) < 1e-9);
        assert_eq!(spectral_overlap(&DotParameters { eta_override: Some(0.7), ..p }), 0.7);
        let eta = spectral_overlap(&p);
        assert!(eta > 0.0 && eta < 1.0);
    }

    #[test]
    fn pair_at_zero_delay() {
        let p = DotParameters::default();
        let pol = pair_density_pol(&p, 0.0).unwrap();
        let rho = pol.rho();
        assert_eq!(rho.get(0, 3), Complex64::new(0.5, 0.0));
        let diag: Vec<f64> = (0..4).map(|i| rho.get(i, i).re).collect();
        assert_eq!(diag, vec![0.5, 0.0, 0.0, 0.5]);
        let noc = pair_density_noc(&p, 0.0).unwrap();
        assert_eq!(noc.coherence(), Complex64::default());
        assert!((noc.trace() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn flip_free_coherence_closed_form() {
        let p = DotParameters {
            gamma_phonon: 0.0,
            gamma_dephase0: 3e-4,
            ..DotParameters::default()
        };
        let s = p.splitting_frequency();
        for &tau in &[0.0, 10.0, 229.75, 1500.0, 4000.0] {
            let pol = pair_density_pol(&p, tau).unwrap();
            let expect = Complex64::new(0.5, 0.0)
                * (Complex64::new(-(p.gamma_x + p.gamma_dephase0), -s) * tau).exp();
            assert!((pol.coherence() - expect).norm() < 1e-9, "tau {tau}");
        }
    }

    #[test]
    fn flips_populate_cross_polarized_entries() {
        let p = DotParameters {
            gamma_phonon: 1e-4,
            ..DotParameters::default()
        };
        let pol = pair_density_pol(&p, 300.0).unwrap();
        assert!(pol.rho().get(1, 1).re > 0.0);
        assert!(pol.rho().get(2, 2).re > 0.0);
    }

    #[test]
    fn total_mixture_limits() {
        let base = DotParameters::default();
        let tau = 417.0;

        let pure = DotParameters { g_noise: 0.0, eta_override: Some(1.0), ..base };
        let total = pair_density_total(&pure, tau).unwrap();
        let pol = pair_density_pol(&pure, tau).unwrap().normalized().unwrap();
        assert!(total.rho().max_abs_diff(pol.rho()) < 1e-15);

        let classical = DotParameters { g_noise: 0.0, eta_override: Some(0.0), ..base };
        assert_eq!(pair_density_total(&classical, tau).unwrap().coherence().norm(), 0.0);

        let noisy = DotParameters { g_noise: 1e9, ..base };
        let total = pair_density_total(&noisy, tau).unwrap();
        assert!(total.rho().max_abs_diff(&ComplexMatrix::identity(4).scale(0.25)) < 1e-9);
        assert!(total.coherence().norm() < 1e-9);
    }

    #[test]
    fn pair_state_rejects_forbidden_entries() {
        let bad = entangled_initial().with_entry(0, 1, Complex64::new(1e-6, 0.0)).unwrap();
        assert!(matches!(PairState::new(bad, true), Err(Error::InvalidState(_))));
        let not_psd = ComplexMatrix::from_real_rows(&[
            vec![0.5, 0.0, 0.0, 0.8],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.0, 0.0, 0.0, 0.0],
            vec![0.8, 0.0, 0.0, 0.5],
        ])
        .unwrap();
        assert!(PairState::new(not_psd, true).is_err());
    }

    #[test]
    fn rejects_invalid_parameters() {
        let p = DotParameters { s_fss: -1.0, ..DotParameters::default() };
        assert!(CascadeModel::new(&p).is_err());
        let p = DotParameters { eta_override: Some(1.5), ..DotParameters::default() };
        assert!(p.validate().is_err());
        assert!(pair_density_pol(&DotParameters::default(), -1.0).is_err());
    }
}
