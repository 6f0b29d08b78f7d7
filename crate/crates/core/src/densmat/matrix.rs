use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Dense complex matrix stored row-major.
///
/// Public constructors reject non-finite entries. Arithmetic operators panic
/// on shape mismatch, the same way `ndarray` and `nalgebra` do; fallible
/// entry points validate shapes before calling into them.
#[derive(Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
}

impl ComplexMatrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(k) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite {
                row: k / cols.max(1),
                col: k % cols.max(1),
            });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from equal-length rows.
    pub fn from_rows(rows: &[Vec<Complex64>]) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n_cols) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(n_rows, n_cols, rows.concat())
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let rows: Vec<Vec<Complex64>> = rows
            .iter()
            .map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::new(rows, cols, data)
    }

    pub fn diag(values: &[Complex64]) -> Result<Self> {
        let n = values.len();
        Self::from_fn(n, n, |i, j| if i == j { values[i] } else { Complex64::default() })
    }

    pub fn real_diag(values: &[f64]) -> Result<Self> {
        let values: Vec<Complex64> = values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        Self::diag(&values)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Complex64::default(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Complex64::new(1.0, 0.0);
        }
        m
    }

    /// Outer product |u⟩⟨v|.
    pub fn outer(u: &[Complex64], v: &[Complex64]) -> Result<Self> {
        Self::from_fn(u.len(), v.len(), |i, j| u[i] * v[j].conj())
    }

    /// Matrix unit |i⟩⟨j| of dimension `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m.data[i * n + j] = Complex64::new(1.0, 0.0);
        m
    }

    /// Inverse of [`ComplexMatrix::vectorize`]: rebuilds an `n`×`n` matrix from
    /// its column-stacked entries.
    pub fn from_column_stacked(n: usize, v: &[Complex64]) -> Result<Self> {
        if v.len() != n * n {
            return Err(Error::Dimension(format!(
                "vector of length {} cannot be unstacked into {n}x{n}",
                v.len()
            )));
        }
        Self::from_fn(n, n, |i, j| v[j * n + i])
    }

    pub(crate) fn from_raw(rows: usize, cols: usize, data: Vec<Complex64>) -> Self {
        debug_assert_eq!(data.len(), rows * cols);
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub(crate) fn set(&mut self, i: usize, j: usize, z: Complex64) {
        self.data[i * self.cols + j] = z;
    }

    /// Returns a copy with entry (i, j) replaced.
    pub fn with_entry(&self, i: usize, j: usize, z: Complex64) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() {
            return Err(Error::NonFinite { row: i, col: j });
        }
        let mut m = self.clone();
        m.set(i, j, z);
        Ok(m)
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self::from_raw(self.rows, self.cols, self.data.iter().map(|&z| f(z)).collect())
    }

    pub fn scale(&self, s: f64) -> Self {
        self.map(|z| z * s)
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j));
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        self.map(|z| z.conj())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    /// (M + M†)/2
    pub fn hermitian_part(&self) -> Self {
        let adj = self.adjoint();
        (self + &adj).scale(0.5)
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (r1, c1, r2, c2) = (self.rows, self.cols, other.rows, other.cols);
        let mut out = Self::zeros(r1 * r2, c1 * c2);
        for i1 in 0..r1 {
            for j1 in 0..c1 {
                let a = self.get(i1, j1);
                if a == Complex64::default() {
                    continue;
                }
                for i2 in 0..r2 {
                    for j2 in 0..c2 {
                        out.set(i1 * r2 + i2, j1 * c2 + j2, a * other.get(i2, j2));
                    }
                }
            }
        }
        out
    }

    /// Column-stacked vectorization vec(M).
    pub fn vectorize(&self) -> Vec<Complex64> {
        let mut v = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                v.push(self.get(i, j));
            }
        }
        v
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        self.data
            .chunks_exact(self.cols)
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    /// Largest entry magnitude of `M − M†`.
    pub fn hermiticity_defect(&self) -> f64 {
        assert!(self.is_square(), "hermiticity_defect of a non-square matrix");
        let mut worst = 0.0_f64;
        for i in 0..self.rows {
            for j in i..self.cols {
                worst = worst.max((self.get(i, j) - self.get(j, i).conj()).norm());
            }
        }
        worst
    }

    /// Smallest eigenvalue of the Hermitian part, via nalgebra's Hermitian
    /// eigen-solver. It iterates to machine-epsilon relative convergence,
    /// comfortably inside the 1e-10 accuracy the validity checks rely on.
    pub fn min_eigenvalue(&self) -> f64 {
        self.hermitian_eigenvalues().into_iter().fold(f64::INFINITY, f64::min)
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn hermitian_eigenvalues(&self) -> Vec<f64> {
        assert!(self.is_square(), "eigenvalues of a non-square matrix");
        let h = self.hermitian_part();
        let m = DMatrix::from_row_slice(h.rows, h.cols, &h.data);
        let mut vals: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
        vals.sort_by(f64::total_cmp);
        vals
    }

    /// Eigenvalues of a general square matrix from its complex Schur form.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        assert!(self.is_square(), "eigenvalues of a non-square matrix");
        let m = DMatrix::from_row_slice(self.rows, self.cols, &self.data);
        let schur = nalgebra::Schur::new(m);
        let (_, t) = schur.unpack();
        (0..self.rows).map(|i| t[(i, i)]).collect()
    }

    /// Largest entry magnitude of `self − other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "shape mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Induced 1-norm (largest absolute column sum).
    pub fn norm_one(&self) -> f64 {
        (0..self.cols)
            .map(|j| (0..self.rows).map(|i| self.get(i, j).norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    /// Solves `self · X = rhs` by LU decomposition with partial pivoting.
    pub fn solve(&self, rhs: &Self) -> Result<Self> {
        if !self.is_square() || rhs.rows != self.rows {
            return Err(Error::Dimension(format!(
                "cannot solve {}x{} system against {}x{} right-hand side",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut b = rhs.clone();
        for k in 0..n {
            let pivot = (k..n)
                .max_by(|&p, &q| a.get(p, k).norm().total_cmp(&a.get(q, k).norm()))
                .unwrap_or(k);
            if a.get(pivot, k).norm() == 0.0 {
                return Err(Error::Singular);
            }
            if pivot != k {
                a.swap_rows(pivot, k);
                b.swap_rows(pivot, k);
            }
            let akk = a.get(k, k);
            for i in (k + 1)..n {
                let factor = a.get(i, k) / akk;
                if factor == Complex64::default() {
                    continue;
                }
                for j in k..n {
                    let v = a.get(i, j) - factor * a.get(k, j);
                    a.set(i, j, v);
                }
                for j in 0..b.cols {
                    let v = b.get(i, j) - factor * b.get(k, j);
                    b.set(i, j, v);
                }
            }
        }
        for k in (0..n).rev() {
            let akk = a.get(k, k);
            for j in 0..b.cols {
                let mut acc = b.get(k, j);
                for i in (k + 1)..n {
                    acc -= a.get(k, i) * b.get(i, j);
                }
                b.set(k, j, acc / akk);
            }
        }
        Ok(b)
    }

    fn swap_rows(&mut self, p: usize, q: usize) {
        for j in 0..self.cols {
            self.data.swap(p * self.cols + j, q * self.cols + j);
        }
    }

    pub fn is_finite(&self) -> bool {
        self.data.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }
}

impl fmt::Debug for ComplexMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ComplexMatrix {}x{} [", self.rows, self.cols)?;
        for row in self.data.chunks(self.cols.max(1)) {
            let cells: Vec<String> = row.iter().map(|z| format!("{:+.6e}{:+.6e}i", z.re, z.im)).collect();
            writeln!(f, "  {}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Add for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn add(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect();
        ComplexMatrix::from_raw(self.rows, self.cols, data)
    }
}

impl AddAssign<&ComplexMatrix> for ComplexMatrix {
    fn add_assign(&mut self, rhs: &ComplexMatrix) {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape mismatch");
        for (a, b) in self.data.iter_mut().zip(&rhs.data) {
            *a += b;
        }
    }
}

impl Sub for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn sub(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape mismatch");
        let data = self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect();
        ComplexMatrix::from_raw(self.rows, self.cols, data)
    }
}

impl Neg for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn neg(self) -> ComplexMatrix {
        self.map(|z| -z)
    }
}

impl Mul for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: &ComplexMatrix) -> ComplexMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let (n, m, p) = (self.rows, self.cols, rhs.cols);
        let mut out = vec![Complex64::default(); n * p];
        for i in 0..n {
            let out_row = &mut out[i * p..(i + 1) * p];
            for k in 0..m {
                let a = self.data[i * m + k];
                if a == Complex64::default() {
                    continue;
                }
                let rhs_row = &rhs.data[k * p..(k + 1) * p];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        ComplexMatrix::from_raw(n, p, out)
    }
}

impl Mul<Complex64> for &ComplexMatrix {
    type Output = ComplexMatrix;

    fn mul(self, rhs: Complex64) -> ComplexMatrix {
        self.map(|z| z * rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_non_finite_and_bad_length() {
        assert!(matches!(
            ComplexMatrix::new(2, 2, vec![c(0.0, 0.0); 3]),
            Err(Error::Dimension(_))
        ));
        let err = ComplexMatrix::new(2, 2, vec![c(0.0, 0.0), c(f64::NAN, 0.0), c(0.0, 0.0), c(0.0, 0.0)]);
        assert_eq!(err, Err(Error::NonFinite { row: 0, col: 1 }));
        assert!(ComplexMatrix::real_diag(&[1.0, f64::INFINITY]).is_err());
    }

    #[test]
    fn trace_defect_and_eigenvalues() {
        assert_eq!(ComplexMatrix::identity(4).trace(), c(4.0, 0.0));
        let h = ComplexMatrix::from_rows(&[vec![c(1.0, 0.0), c(0.3, -0.2)], vec![c(0.3, 0.2), c(-1.0, 0.0)]]).unwrap();
        assert_eq!(h.hermiticity_defect(), 0.0);
        let d = ComplexMatrix::real_diag(&[0.1, 0.9]).unwrap();
        assert!((d.min_eigenvalue() - 0.1).abs() < 1e-14);
        // eigenvalues of [[1, z],[z*, -1]] are ±sqrt(1 + |z|²)
        let expect = -(1.0_f64 + 0.13).sqrt();
        assert!((h.min_eigenvalue() - expect).abs() < 1e-12);
    }

    #[test]
    fn vectorize_round_trip_and_kron_identity() {
        let m = ComplexMatrix::from_fn(3, 3, |i, j| c(i as f64, j as f64 * 0.5)).unwrap();
        let v = m.vectorize();
        assert_eq!(v[1], m.get(1, 0));
        assert_eq!(ComplexMatrix::from_column_stacked(3, &v).unwrap(), m);

        // vec(A X B) = (Bᵀ ⊗ A) vec(X)
        let a = ComplexMatrix::from_fn(2, 2, |i, j| c(1.0 + i as f64, j as f64 - 0.5)).unwrap();
        let b = ComplexMatrix::from_fn(2, 2, |i, j| c(0.2 * j as f64, 1.0 - i as f64)).unwrap();
        let x = ComplexMatrix::from_fn(2, 2, |i, j| c(i as f64 + 2.0 * j as f64, 0.7)).unwrap();
        let lhs = (&(&a * &x) * &b).vectorize();
        let rhs = b.transpose().kron(&a).apply(&x.vectorize());
        for (l, r) in lhs.iter().zip(&rhs) {
            assert!((l - r).norm() < 1e-13);
        }
    }

    #[test]
    fn lu_solve_recovers_solution() {
        let a = ComplexMatrix::from_rows(&[
            vec![c(0.0, 0.0), c(2.0, 1.0), c(1.0, 0.0)],
            vec![c(1.0, -1.0), c(0.5, 0.0), c(0.0, 3.0)],
            vec![c(4.0, 0.0), c(0.0, 0.0), c(-1.0, 0.5)],
        ])
        .unwrap();
        let x = ComplexMatrix::from_fn(3, 2, |i, j| c(i as f64 - j as f64, 0.25 * (i + j) as f64)).unwrap();
        let b = &a * &x;
        let solved = a.solve(&b).unwrap();
        assert!(solved.max_abs_diff(&x) < 1e-13);
        assert_eq!(ComplexMatrix::zeros(2, 2).solve(&ComplexMatrix::identity(2)), Err(Error::Singular));
    }

    #[test]
    fn general_eigenvalues_of_triangular() {
        let m = ComplexMatrix::from_rows(&[vec![c(2.0, 1.0), c(5.0, 0.0)], vec![c(0.0, 0.0), c(-1.0, 0.0)]]).unwrap();
        let mut ev = m.eigenvalues();
        ev.sort_by(|a, b| a.re.total_cmp(&b.re));
        assert!((ev[0] - c(-1.0, 0.0)).norm() < 1e-12);
        assert!((ev[1] - c(2.0, 1.0)).norm() < 1e-12);
    }
}
