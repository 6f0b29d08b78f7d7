//! Matrix exponential by scaling and squaring with diagonal Padé approximants
//! (Higham 2005, "The scaling and squaring method for the matrix exponential
//! revisited"). Degree 3, 5, 7, 9 or 13 is picked from the 1-norm; degree 13
//! additionally scales by 2^-s so that ‖A/2^s‖₁ ≤ θ₁₃.

use super::matrix::ComplexMatrix;
use crate::error::{Error, Result};

const THETA: [(usize, f64); 4] = [
    (3, 1.495_585_217_958_292e-2),
    (5, 2.539_398_330_063_23e-1),
    (7, 9.504_178_996_162_932e-1),
    (9, 2.097_847_961_257_068e0),
];
const THETA_13: f64 = 5.371_920_351_148_152;

const B3: [f64; 4] = [120.0, 60.0, 12.0, 1.0];
const B5: [f64; 6] = [30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0];
const B7: [f64; 8] = [17_297_280.0, 8_648_640.0, 1_995_840.0, 277_200.0, 25_200.0, 1512.0, 56.0, 1.0];
const B9: [f64; 10] = [
    17_643_225_600.0,
    8_821_612_800.0,
    2_075_673_600.0,
    302_702_400.0,
    30_270_240.0,
    2_162_160.0,
    110_880.0,
    3960.0,
    90.0,
    1.0,
];
const B13: [f64; 14] = [
    64_764_752_532_480_000.0,
    32_382_376_266_240_000.0,
    7_771_770_303_897_600.0,
    1_187_353_796_428_800.0,
    129_060_195_264_000.0,
    10_559_470_521_600.0,
    670_442_572_800.0,
    33_522_128_640.0,
    1_323_241_920.0,
    40_840_800.0,
    960_960.0,
    16_380.0,
    182.0,
    1.0,
];

pub fn expm(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if !a.is_square() {
        return Err(Error::Dimension(format!("expm of a {}x{} matrix", a.rows(), a.cols())));
    }
    let norm = a.norm_one();
    if !norm.is_finite() {
        return Err(Error::InvalidInput("expm of a non-finite matrix".into()));
    }
    if norm == 0.0 {
        return Ok(ComplexMatrix::identity(a.rows()));
    }
    for (degree, theta) in THETA {
        if norm <= theta {
            let coeffs: &[f64] = match degree {
                3 => &B3,
                5 => &B5,
                7 => &B7,
                _ => &B9,
            };
            return pade_low(a, coeffs);
        }
    }

    let s = (norm / THETA_13).log2().ceil().max(0.0) as i32;
    let scaled = a.scale(2f64.powi(-s));
    let mut x = pade13(&scaled)?;
    for _ in 0..s {
        x = &x * &x;
    }
    Ok(x)
}

fn scaled_identity(n: usize, c: f64) -> ComplexMatrix {
    ComplexMatrix::identity(n).scale(c)
}

fn axpy(acc: &mut ComplexMatrix, c: f64, m: &ComplexMatrix) {
    *acc += &m.scale(c);
}

fn pade_low(a: &ComplexMatrix, b: &[f64]) -> Result<ComplexMatrix> {
    let n = a.rows();
    let a2 = a * a;
    // even powers A^0, A^2, A^4, ...
    let mut powers = vec![ComplexMatrix::identity(n), a2.clone()];
    while 2 * powers.len() < b.len() {
        let next = powers.last().expect("non-empty") * &a2;
        powers.push(next);
    }
    let mut u_inner = ComplexMatrix::zeros(n, n);
    let mut v = ComplexMatrix::zeros(n, n);
    for (k, p) in powers.iter().enumerate() {
        if 2 * k + 1 < b.len() {
            axpy(&mut u_inner, b[2 * k + 1], p);
        }
        axpy(&mut v, b[2 * k], p);
    }
    let u = a * &u_inner;
    solve_pade(&u, &v)
}

fn pade13(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = a.rows();
    let b = &B13;
    let a2 = a * a;
    let a4 = &a2 * &a2;
    let a6 = &a4 * &a2;

    let mut u_hi = a6.scale(b[13]);
    axpy(&mut u_hi, b[11], &a4);
    axpy(&mut u_hi, b[9], &a2);
    let mut u_inner = &a6 * &u_hi;
    axpy(&mut u_inner, b[7], &a6);
    axpy(&mut u_inner, b[5], &a4);
    axpy(&mut u_inner, b[3], &a2);
    u_inner += &scaled_identity(n, b[1]);
    let u = a * &u_inner;

    let mut v_hi = a6.scale(b[12]);
    axpy(&mut v_hi, b[10], &a4);
    axpy(&mut v_hi, b[8], &a2);
    let mut v = &a6 * &v_hi;
    axpy(&mut v, b[6], &a6);
    axpy(&mut v, b[4], &a4);
    axpy(&mut v, b[2], &a2);
    v += &scaled_identity(n, b[0]);

    solve_pade(&u, &v)
}

/// r = (V − U)⁻¹ (V + U)
fn solve_pade(u: &ComplexMatrix, v: &ComplexMatrix) -> Result<ComplexMatrix> {
    let p = v + u;
    let q = v - u;
    q.solve(&p)
}

/// exp(A) applied through its power series, summed until terms vanish.
/// Only used to cross-check [`expm`] on small-norm inputs in tests.
#[cfg(test)]
pub(crate) fn expm_taylor(a: &ComplexMatrix) -> ComplexMatrix {
    let n = a.rows();
    let mut sum = ComplexMatrix::identity(n);
    let mut term = ComplexMatrix::identity(n);
    for k in 1..200 {
        term = (&term * a).scale(1.0 / k as f64);
        sum += &term;
        if term.max_abs() < 1e-20 {
            break;
        }
    }
    sum
}
