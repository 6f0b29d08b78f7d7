//! Physical constants and numerical tolerances.

/// Reduced Planck constant in μeV·ps.
pub const HBAR: f64 = 658.211_956_9;

/// Boltzmann constant in μeV/K.
pub const K_B: f64 = 86.173_33;

/// Numerical tolerances shared by validation checks across the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Algebraic identities (generator consistency, route equality, sparsity).
    pub algebraic: f64,
    /// Density-matrix validity: trace and positivity of an input state.
    pub validity: f64,
    /// Hermiticity and trace of a propagated state.
    pub propagated: f64,
    /// Smallest admissible eigenvalue of a density matrix is `-psd`.
    pub psd: f64,
    /// Relative tolerance of the gate quadrature.
    pub quadrature_rel: f64,
    /// Denominators below this are treated as degenerate.
    pub degenerate: f64,
}

pub const TOL: Tolerances = Tolerances {
    algebraic: 1e-12,
    validity: 1e-9,
    propagated: 1e-10,
    psd: 1e-9,
    quadrature_rel: 1e-8,
    degenerate: 1e-15,
};
