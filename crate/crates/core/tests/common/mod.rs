#![allow(dead_code)]

use lgdot_core::densmat::{ComplexMatrix, LindbladChannel};
use lgdot_core::DotParameters;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn complex(rng: &mut ChaCha8Rng, scale: f64) -> Complex64 {
    Complex64::new(rng.gen_range(-scale..scale), rng.gen_range(-scale..scale))
}

pub fn random_hermitian(rng: &mut ChaCha8Rng, n: usize, scale: f64) -> ComplexMatrix {
    let a = ComplexMatrix::from_fn(n, n, |_, _| complex(rng, scale)).unwrap();
    a.hermitian_part()
}

pub fn random_density(rng: &mut ChaCha8Rng, n: usize) -> ComplexMatrix {
    let a = ComplexMatrix::from_fn(n, n, |_, _| complex(rng, 1.0)).unwrap();
    let rho = (&a * &a.adjoint()).hermitian_part();
    let tr = rho.trace().re;
    rho.scale(1.0 / tr)
}

/// Random 4-level problem with frequencies up to ~0.02/ps and rates up to 1e-3/ps.
pub struct Problem {
    pub h0: ComplexMatrix,
    pub channels: Vec<LindbladChannel>,
    pub rho0: ComplexMatrix,
}

pub fn random_problem(rng: &mut ChaCha8Rng) -> Problem {
    let n = 4;
    let h0 = random_hermitian(rng, n, 0.01);
    let count = rng.gen_range(1..=3);
    let channels = (0..count)
        .map(|_| {
            let c = ComplexMatrix::from_fn(n, n, |_, _| complex(rng, 0.5)).unwrap();
            LindbladChannel::new(c, rng.gen_range(0.0..1e-3)).unwrap()
        })
        .collect();
    Problem {
        h0,
        channels,
        rho0: random_density(rng, n),
    }
}

/// Parameters spanning the physically sensible ranges, with an optional
/// override of η.
pub fn random_params(rng: &mut ChaCha8Rng) -> DotParameters {
    DotParameters {
        s_fss: rng.gen_range(0.2..8.0),
        gamma_x: rng.gen_range(1e-4..1e-2),
        gamma_dephase0: rng.gen_range(0.0..1e-3),
        gamma_phonon: rng.gen_range(0.0..1e-6),
        temperature: rng.gen_range(1.0..80.0),
        g_noise: rng.gen_range(0.0..1.0),
        gate_width: rng.gen_range(0.0..100.0),
        eta_override: if rng.gen_bool(0.5) { Some(rng.gen_range(0.0..=1.0)) } else { None },
        ..DotParameters::default()
    }
}

/// Random normalized pair state honoring the X pattern.
pub fn random_pair_state(rng: &mut ChaCha8Rng) -> lgdot_core::PairState {
    let d: [f64; 4] = std::array::from_fn(|_| rng.gen_range(0.0..1.0));
    let tr: f64 = d.iter().sum();
    let d = d.map(|x| x / tr);
    let r = rng.gen_range(0.0..=1.0) * (d[0] * d[3]).sqrt();
    let z = Complex64::from_polar(r, rng.gen_range(0.0..std::f64::consts::TAU));
    let rho = ComplexMatrix::from_fn(4, 4, |i, j| match (i, j) {
        (0, 3) => z,
        (3, 0) => z.conj(),
        _ if i == j => Complex64::new(d[i], 0.0),
        _ => Complex64::new(0.0, 0.0),
    })
    .unwrap();
    lgdot_core::PairState::new(rho, true).unwrap()
}
