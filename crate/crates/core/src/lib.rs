//! Simulation of Leggett-Garg temporal correlations in the biexciton cascade
//! of a single semiconductor quantum dot.
//!
//! The crate is layered bottom-up:
//!
//! - [`densmat`]: dense complex matrices, Lindblad generators and their
//!   matrix-exponential propagation.
//! - [`cascade`]: the quantum-dot model. Exciton dissipation channels, the
//!   conditional two-photon polarization density matrix and its mixture with
//!   spectrally distinguishable and background-noise components.
//! - [`lganalysis`]: correlators K(t), the stationary LG combinations
//!   K± = K(2t) ± 2K(t), timing-gate averaging, violation search and sweeps.
//! - [`oracle`]: closed forms and a fixed-step reference integrator used to
//!   certify the numerics.
//!
//! Units throughout: time in ps, energies in μeV, rates in 1/ps.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cascade;
pub mod constants;
pub mod densmat;
pub mod error;
pub mod lganalysis;
pub mod oracle;

pub use cascade::{DotParameters, PairState};
pub use densmat::{ComplexMatrix, LindbladChannel, Liouvillian};
pub use error::{Error, Result};
pub use lganalysis::{Branch, LGPoint, SweepAxis, SweepResult};
