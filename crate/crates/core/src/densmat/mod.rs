//! Dense complex-matrix algebra and Lindblad master-equation propagation.
//!
//! Propagation uses the dense matrix exponential of the n²×n² Liouvillian,
//! so semigroup and stationarity checks hold to rounding. A stepwise
//! integrator lives separately in [`crate::oracle`] as an independent check.

mod expm;
mod lindblad;
mod matrix;

use num_complex::Complex64;

pub use expm::expm;
pub use lindblad::{lindblad_rhs, propagate, validate_density, LindbladChannel, Liouvillian, Propagator, SectorGenerator};
pub use matrix::ComplexMatrix;

pub fn trace(m: &ComplexMatrix) -> Complex64 {
    m.trace()
}

pub fn hermiticity_defect(m: &ComplexMatrix) -> f64 {
    m.hermiticity_defect()
}

pub fn min_eigenvalue(m: &ComplexMatrix) -> f64 {
    m.min_eigenvalue()
}
