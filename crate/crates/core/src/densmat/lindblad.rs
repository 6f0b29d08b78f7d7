use num_complex::Complex64;

use super::expm::expm;
use super::matrix::ComplexMatrix;
use crate::constants::TOL;
use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// One dissipation channel `rate · (C ρ C† − ½{C†C, ρ})`.
#[derive(Debug, Clone, PartialEq)]
pub struct LindbladChannel {
    collapse: ComplexMatrix,
    rate: f64,
}

impl LindbladChannel {
    pub fn new(collapse: ComplexMatrix, rate: f64) -> Result<Self> {
        if !collapse.is_square() {
            return Err(Error::Dimension(format!(
                "collapse operator is {}x{}, expected square",
                collapse.rows(),
                collapse.cols()
            )));
        }
        if !rate.is_finite() || rate < 0.0 {
            return Err(Error::InvalidInput(format!("channel rate must be finite and >= 0, got {rate}")));
        }
        Ok(Self { collapse, rate })
    }

    pub fn collapse(&self) -> &ComplexMatrix {
        &self.collapse
    }

    pub fn rate(&self) -> f64 {
        self.rate
    }

    pub fn dim(&self) -> usize {
        self.collapse.rows()
    }

    /// The dissipator applied to `rho`.
    pub fn dissipate(&self, rho: &ComplexMatrix) -> ComplexMatrix {
        if self.rate == 0.0 {
            return ComplexMatrix::zeros(rho.rows(), rho.cols());
        }
        let c = &self.collapse;
        let c_dag = c.adjoint();
        let jump = &(c * rho) * &c_dag;
        let cdc = &c_dag * c;
        let anti = cdc.anticommutator(rho).scale(0.5);
        (&jump - &anti).scale(self.rate)
    }
}

fn check_dims(h0: &ComplexMatrix, channels: &[LindbladChannel]) -> Result<usize> {
    if !h0.is_square() {
        return Err(Error::Dimension(format!("hamiltonian is {}x{}", h0.rows(), h0.cols())));
    }
    let n = h0.rows();
    for (k, ch) in channels.iter().enumerate() {
        if ch.dim() != n {
            return Err(Error::Dimension(format!(
                "channel {k} acts on dimension {}, hamiltonian on {n}",
                ch.dim()
            )));
        }
    }
    Ok(n)
}

/// Right-hand side of the master equation, −i[H₀, ρ] + Σₖ Dₖ(ρ).
///
/// `h0` is in angular-frequency units (1/ps), i.e. energy divided by ħ.
pub fn lindblad_rhs(rho: &ComplexMatrix, h0: &ComplexMatrix, channels: &[LindbladChannel]) -> Result<ComplexMatrix> {
    let n = check_dims(h0, channels)?;
    if !rho.is_square() || rho.rows() != n {
        return Err(Error::Dimension(format!(
            "density matrix is {}x{}, hamiltonian is {n}x{n}",
            rho.rows(),
            rho.cols()
        )));
    }
    let mut out = &h0.commutator(rho) * (-I);
    for ch in channels {
        out += &ch.dissipate(rho);
    }
    Ok(out)
}

/// Vectorized generator acting on column-stacked density matrices.
///
/// With vec(AXB) = (Bᵀ ⊗ A) vec(X):
/// `L = −i(I ⊗ H − Hᵀ ⊗ I) + Σ γ (C̄ ⊗ C − ½ I ⊗ C†C − ½ (C†C)ᵀ ⊗ I)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Liouvillian {
    dim: usize,
    matrix: ComplexMatrix,
}

impl Liouvillian {
    pub fn new(h0: &ComplexMatrix, channels: &[LindbladChannel]) -> Result<Self> {
        let n = check_dims(h0, channels)?;
        let id = ComplexMatrix::identity(n);
        let mut l = &(&id.kron(h0) - &h0.transpose().kron(&id)) * (-I);
        for ch in channels {
            if ch.rate == 0.0 {
                continue;
            }
            let c = &ch.collapse;
            let cdc = &c.adjoint() * c;
            let mut term = c.conj().kron(c);
            term = &term - &id.kron(&cdc).scale(0.5);
            term = &term - &cdc.transpose().kron(&id).scale(0.5);
            l += &term.scale(ch.rate);
        }
        Ok(Self { dim: n, matrix: l })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// L(ρ) via the vectorized generator.
    pub fn apply(&self, rho: &ComplexMatrix) -> Result<ComplexMatrix> {
        if !rho.is_square() || rho.rows() != self.dim {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, generator acts on dimension {}",
                rho.rows(),
                rho.cols(),
                self.dim
            )));
        }
        let v = self.matrix.apply(&rho.vectorize());
        ComplexMatrix::from_column_stacked(self.dim, &v)
    }

    /// The superoperator exp(L·t).
    pub fn propagator(&self, t: f64) -> Result<Propagator> {
        exp_generator(self.dim, &self.matrix, t)
    }

    /// Restriction of the generator to operators supported on `levels`.
    ///
    /// Fails unless the sector is invariant: no operator outside it may feed
    /// into it. The restricted generator need not preserve trace (population
    /// may leave the sector), so exponentiating it keeps full relative
    /// accuracy on a decaying sector whose entries sit far below those of the
    /// complement.
    pub fn sector(&self, levels: &[usize]) -> Result<SectorGenerator> {
        let n = self.dim;
        if levels.is_empty() || levels.iter().any(|&l| l >= n) {
            return Err(Error::InvalidInput(format!("sector levels {levels:?} out of range for dimension {n}")));
        }
        let m = levels.len();
        // column-stacked index of |i⟩⟨j| is j·n + i
        let idx: Vec<usize> = (0..m * m).map(|k| levels[k / m] * n + levels[k % m]).collect();
        let inside: std::collections::HashSet<usize> = idx.iter().copied().collect();
        for &p in &idx {
            for q in (0..n * n).filter(|q| !inside.contains(q)) {
                if self.matrix.get(p, q) != Complex64::default() {
                    return Err(Error::InvalidInput(format!("sector {levels:?} is fed from outside")));
                }
            }
        }
        let matrix = ComplexMatrix::from_fn(m * m, m * m, |a, b| self.matrix.get(idx[a], idx[b]))?;
        Ok(SectorGenerator { dim: m, matrix })
    }
}

/// Generator restricted to an invariant sector of operators; see
/// [`Liouvillian::sector`].
#[derive(Debug, Clone, PartialEq)]
pub struct SectorGenerator {
    dim: usize,
    matrix: ComplexMatrix,
}

impl SectorGenerator {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn propagator(&self, t: f64) -> Result<Propagator> {
        exp_generator(self.dim, &self.matrix, t)
    }
}

fn exp_generator(dim: usize, matrix: &ComplexMatrix, t: f64) -> Result<Propagator> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("propagation time must be finite and >= 0, got {t}")));
    }
    let matrix = if t == 0.0 {
        ComplexMatrix::identity(dim * dim)
    } else {
        expm(&matrix.scale(t))?
    };
    Ok(Propagator { dim, t, matrix })
}

/// exp(L·t) for a fixed `t`, applicable to any operator (not only states).
#[derive(Debug, Clone, PartialEq)]
pub struct Propagator {
    dim: usize,
    t: f64,
    matrix: ComplexMatrix,
}

impl Propagator {
    pub fn time(&self) -> f64 {
        self.t
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    pub fn apply(&self, op: &ComplexMatrix) -> Result<ComplexMatrix> {
        if !op.is_square() || op.rows() != self.dim {
            return Err(Error::Dimension(format!(
                "operator is {}x{}, propagator acts on dimension {}",
                op.rows(),
                op.cols(),
                self.dim
            )));
        }
        if self.t == 0.0 {
            return Ok(op.clone());
        }
        let v = self.matrix.apply(&op.vectorize());
        ComplexMatrix::from_column_stacked(self.dim, &v)
    }
}

/// Checks that `rho` is a density matrix: Hermitian, unit trace and positive
/// semidefinite, each to `tol`.
pub fn validate_density(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::InvalidState(format!("{}x{} is not square", rho.rows(), rho.cols())));
    }
    let defect = rho.hermiticity_defect();
    if defect > tol {
        return Err(Error::InvalidState(format!("hermiticity defect {defect:e} exceeds {tol:e}")));
    }
    let tr = rho.trace();
    if (tr - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::InvalidState(format!("trace {tr} differs from 1 by more than {tol:e}")));
    }
    let min_eig = rho.min_eigenvalue();
    if min_eig < -tol {
        return Err(Error::InvalidState(format!("minimum eigenvalue {min_eig:e} below -{tol:e}")));
    }
    Ok(())
}

/// Evolves a density matrix for time `t` (ps) as exp(L·t) ρ₀.
///
/// The result is checked against the post-conditions of a valid state
/// (hermiticity and trace to 1e-10, eigenvalues ≥ −1e-9); a violation is
/// reported as [`Error::Invariant`].
pub fn propagate(rho0: &ComplexMatrix, gen: &Liouvillian, t: f64) -> Result<ComplexMatrix> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::InvalidInput(format!("propagation time must be finite and >= 0, got {t}")));
    }
    if rho0.rows() != gen.dim() || !rho0.is_square() {
        return Err(Error::Dimension(format!(
            "state is {}x{}, generator acts on dimension {}",
            rho0.rows(),
            rho0.cols(),
            gen.dim()
        )));
    }
    validate_density(rho0, TOL.validity)?;
    if t == 0.0 {
        return Ok(rho0.clone());
    }
    let rho = gen.propagator(t)?.apply(rho0)?;
    check_propagated(&rho)?;
    Ok(rho)
}

fn check_propagated(rho: &ComplexMatrix) -> Result<()> {
    let defect = rho.hermiticity_defect();
    if defect > TOL.propagated {
        return Err(Error::Invariant(format!("propagated state hermiticity defect {defect:e}")));
    }
    let tr_err = (rho.trace() - Complex64::new(1.0, 0.0)).norm();
    if tr_err > TOL.propagated {
        return Err(Error::Invariant(format!("propagated state trace error {tr_err:e}")));
    }
    let min_eig = rho.min_eigenvalue();
    if min_eig < -TOL.psd {
        return Err(Error::Invariant(format!("propagated state eigenvalue {min_eig:e}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sigma_z() -> ComplexMatrix {
        ComplexMatrix::real_diag(&[1.0, -1.0]).unwrap()
    }

    #[test]
    fn maximally_mixed_is_stationary_without_dissipation() {
        let rho = ComplexMatrix::identity(4).scale(0.25);
        let h0 = ComplexMatrix::real_diag(&[0.0, 0.3, -1.2, 2.5]).unwrap();
        let rhs = lindblad_rhs(&rho, &h0, &[]).unwrap();
        assert_eq!(rhs.max_abs(), 0.0);
    }

    #[test]
    fn coherence_rotates_at_splitting_frequency() {
        let s = 3.0 / crate::constants::HBAR;
        let h0 = ComplexMatrix::real_diag(&[0.0, s]).unwrap();
        let rho = ComplexMatrix::from_real_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let rhs = lindblad_rhs(&rho, &h0, &[]).unwrap();
        // d/dt ρ₀₁ = −i(ω₀ − ω₁)ρ₀₁ = i·s·½
        assert!((rhs.get(0, 1) - c(0.0, s * 0.5)).norm() < 1e-16);
        assert!((rhs.get(1, 0) - c(0.0, -s * 0.5)).norm() < 1e-16);
    }

    #[test]
    fn pure_dephasing_rhs() {
        let gamma_d = 0.37;
        let ch = LindbladChannel::new(sigma_z().scale(std::f64::consts::FRAC_1_SQRT_2), gamma_d).unwrap();
        let rho = ComplexMatrix::from_real_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        let rhs = lindblad_rhs(&rho, &ComplexMatrix::zeros(2, 2), &[ch]).unwrap();
        let expect = ComplexMatrix::from_real_rows(&[vec![0.0, -gamma_d / 2.0], vec![-gamma_d / 2.0, 0.0]]).unwrap();
        assert!(rhs.max_abs_diff(&expect) < 1e-16);
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            LindbladChannel::new(sigma_z(), -1e-3),
            Err(Error::InvalidInput(_))
        ));
        let ch = LindbladChannel::new(sigma_z(), 1.0).unwrap();
        let h3 = ComplexMatrix::zeros(3, 3);
        assert!(matches!(Liouvillian::new(&h3, std::slice::from_ref(&ch)), Err(Error::Dimension(_))));
        let rho3 = ComplexMatrix::identity(3).scale(1.0 / 3.0);
        assert!(matches!(
            lindblad_rhs(&rho3, &ComplexMatrix::zeros(2, 2), &[ch]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn zero_generator() {
        let l = Liouvillian::new(&ComplexMatrix::zeros(3, 3), &[]).unwrap();
        assert_eq!(l.matrix().rows(), 9);
        assert_eq!(l.matrix().max_abs(), 0.0);
    }

    #[test]
    fn dephasing_spectrum() {
        let gamma_d = 0.25;
        let ch = LindbladChannel::new(sigma_z().scale(std::f64::consts::FRAC_1_SQRT_2), gamma_d).unwrap();
        let l = Liouvillian::new(&ComplexMatrix::zeros(2, 2), &[ch]).unwrap();
        let ev = l.matrix().eigenvalues();
        assert!(ev.iter().any(|z| z.norm() < 1e-14));
        assert_eq!(ev.iter().filter(|z| (*z - c(-gamma_d, 0.0)).norm() < 1e-14).count(), 2);
    }

    #[test]
    fn decaying_sector_keeps_relative_accuracy() {
        // |1⟩ decays into |0⟩ at rate γ; the {1} sector is invariant
        let gamma = 0.01;
        let ch = LindbladChannel::new(ComplexMatrix::unit(2, 0, 1), gamma).unwrap();
        let l = Liouvillian::new(&ComplexMatrix::zeros(2, 2), &[ch]).unwrap();
        let sector = l.sector(&[1]).unwrap();
        let t = 20_000.0;
        let p = sector.propagator(t).unwrap();
        let got = p.apply(&ComplexMatrix::identity(1)).unwrap().get(0, 0).re;
        let expect = (-gamma * t).exp();
        assert!(((got - expect) / expect).abs() < 1e-12, "{got:e} vs {expect:e}");
        // the ground level is fed by |1⟩, so it is not a closed sector
        assert!(l.sector(&[0]).is_err());
    }

    #[test]
    fn propagate_checks_inputs() {
        let l = Liouvillian::new(&ComplexMatrix::zeros(2, 2), &[]).unwrap();
        let rho = ComplexMatrix::real_diag(&[0.5, 0.5]).unwrap();
        assert!(matches!(propagate(&rho, &l, -1.0), Err(Error::InvalidInput(_))));
        let bad = ComplexMatrix::real_diag(&[1.2, -0.2]).unwrap();
        assert!(matches!(propagate(&bad, &l, 1.0), Err(Error::InvalidState(_))));
        assert_eq!(propagate(&rho, &l, 0.0).unwrap(), rho);
    }

    #[test]
    fn propagated_coherence_matches_closed_form() {
        let s = 3.0 / crate::constants::HBAR;
        let gamma_d = 2e-4;
        let h0 = ComplexMatrix::real_diag(&[s, 0.0]).unwrap();
        let ch = LindbladChannel::new(sigma_z().scale(std::f64::consts::FRAC_1_SQRT_2), gamma_d).unwrap();
        let l = Liouvillian::new(&h0, &[ch]).unwrap();
        let rho0 = ComplexMatrix::from_real_rows(&[vec![0.5, 0.5], vec![0.5, 0.5]]).unwrap();
        for &t in &[1.0, 229.75, 1000.0, 4999.0] {
            let rho = propagate(&rho0, &l, t).unwrap();
            let expect = c(0.5, 0.0) * (c(-gamma_d, -s) * t).exp();
            assert!((rho.get(0, 1) - expect).norm() < 1e-9, "t = {t}");
        }
    }
}
