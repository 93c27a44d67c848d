use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::matrix::{phase, ComplexMatrix, C64, ONE, ZERO};
use crate::error::{Error, Result};

/// `exp(2πi/d)`.
pub fn omega(d: usize) -> C64 {
    phase(2.0 * PI / d as f64)
}

/// `ω^k` with the exponent reduced mod `d` before evaluation.
fn omega_pow(d: usize, k: usize) -> C64 {
    phase(2.0 * PI * ((k % d) as f64) / d as f64)
}

/// The cyclic shift `X` with ones at `(r, r+1 mod d)`, so that `X^k |s⟩ = |s-k⟩`.
pub fn shift_matrix(d: usize) -> Result<ComplexMatrix> {
    if d < 2 {
        return Err(Error::InvalidDimension(format!(
            "shift matrix needs d >= 2, got {d}"
        )));
    }
    Ok(ComplexMatrix::from_fn(d, d, |r, c| {
        if c == (r + 1) % d {
            ONE
        } else {
            ZERO
        }
    }))
}

/// Unitary Fourier matrix `F[μ][ν] = ω^{μν}/√d`; its columns diagonalise every circulant.
pub fn dft_matrix(d: usize) -> Result<ComplexMatrix> {
    if d == 0 {
        return Err(Error::InvalidDimension("DFT of dimension 0".into()));
    }
    let s = 1.0 / (d as f64).sqrt();
    Ok(ComplexMatrix::from_fn(d, d, |mu, nu| {
        omega_pow(d, mu * nu) * s
    }))
}

/// A circulant `C = Σ_k c_k X^k`, stored by its first row.
///
/// Row `i`, column `j` of the dense form is `c_{(j - i) mod d}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CirculantOperator {
    coeffs: Vec<C64>,
}

impl CirculantOperator {
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidDimension(
                "circulant with no coefficients".into(),
            ));
        }
        Ok(Self { coeffs })
    }

    pub fn zero(d: usize) -> Self {
        Self {
            coeffs: vec![ZERO; d],
        }
    }

    pub fn identity(d: usize) -> Self {
        let mut c = Self::zero(d);
        c.coeffs[0] = ONE;
        c
    }

    /// `X^power`.
    pub fn shift_power(d: usize, power: i64) -> Self {
        let mut c = Self::zero(d);
        c.coeffs[power.rem_euclid(d as i64) as usize] = ONE;
        c
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs[k % self.dim()]
    }

    pub fn to_matrix(&self) -> ComplexMatrix {
        let d = self.dim();
        ComplexMatrix::from_fn(d, d, |i, j| self.coeffs[(j + d - i) % d])
    }

    /// Reads the first row of `m` after checking the circulant pattern to `abs_tol`.
    pub fn from_matrix(m: &ComplexMatrix, abs_tol: f64) -> Result<Self> {
        let dev = circulant_deviation(m)?;
        if dev > abs_tol {
            return Err(Error::InternalConsistency(format!(
                "matrix is not circulant: max deviation {dev:.3e} from first-row pattern"
            )));
        }
        Self::new(m.row(0).to_vec())
    }

    /// `λ_ν = Σ_k c_k ω^{νk}` for ν = 0..d-1, the eigenvalue on the ν-th Fourier column.
    pub fn eigenvalues(&self) -> Vec<C64> {
        let d = self.dim();
        (0..d)
            .map(|nu| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .map(|(k, c)| c * omega_pow(d, nu * k))
                    .sum()
            })
            .collect()
    }

    /// `|𝔣_ν⟩ = (1, ω^ν, …, ω^{ν(d-1)})/√d`.
    pub fn fourier_vector(d: usize, nu: usize) -> Vec<C64> {
        let s = 1.0 / (d as f64).sqrt();
        (0..d).map(|j| omega_pow(d, nu * j) * s).collect()
    }

    pub fn trace(&self) -> C64 {
        self.coeffs[0] * self.dim() as f64
    }

    /// Hermitian adjoint: `c†_k = conj(c_{-k})`.
    pub fn adjoint(&self) -> Self {
        let d = self.dim();
        Self {
            coeffs: (0..d).map(|k| self.coeffs[(d - k) % d].conj()).collect(),
        }
    }

    /// Transpose: `cᵀ_k = c_{-k}`.
    pub fn transpose(&self) -> Self {
        let d = self.dim();
        Self {
            coeffs: (0..d).map(|k| self.coeffs[(d - k) % d]).collect(),
        }
    }

    fn check_dim(&self, other: &Self, op: &'static str) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::ShapeMismatch {
                op,
                left_rows: self.dim(),
                left_cols: self.dim(),
                right_rows: other.dim(),
                right_cols: other.dim(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "circulant add")?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "circulant sub")?;
        Ok(Self {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, factor: C64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Product of circulants: cyclic convolution of the coefficient vectors.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other, "circulant mul")?;
        let d = self.dim();
        let mut out = vec![ZERO; d];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[(i + j) % d] += a * b;
            }
        }
        Ok(Self { coeffs: out })
    }

    pub fn apply(&self, v: &[C64]) -> Result<Vec<C64>> {
        self.to_matrix().mul_vec(v)
    }

    /// Largest coefficient-wise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        self.check_dim(other, "circulant compare")?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max))
    }
}

/// Max elementwise deviation of `m` from the circulant generated by its first row.
pub fn circulant_deviation(m: &ComplexMatrix) -> Result<f64> {
    if !m.is_square() {
        return Err(Error::InvalidDimension(
            "circulant check on non-square matrix".into(),
        ));
    }
    let d = m.rows();
    let mut dev: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            dev = dev.max((m[(i, j)] - m[(0, (j + d - i) % d)]).norm());
        }
    }
    Ok(dev)
}

pub fn is_circulant(m: &ComplexMatrix, abs_tol: f64) -> bool {
    circulant_deviation(m).is_ok_and(|dev| dev <= abs_tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn shift_rejects_small_dimension() {
        assert!(shift_matrix(1).is_err());
        assert!(shift_matrix(0).is_err());
    }

    #[test]
    fn shift_d3_cycle_and_ones() {
        let x = shift_matrix(3).unwrap();
        assert_eq!(x.pow(3).unwrap(), ComplexMatrix::identity(3));
        let sum = ComplexMatrix::identity(3)
            .add(&x)
            .unwrap()
            .add(&x.pow(2).unwrap())
            .unwrap();
        assert!(sum.as_slice().iter().all(|&z| z == ONE));
    }

    #[test]
    fn shift_d2_is_swap() {
        let x = shift_matrix(2).unwrap();
        let swap = ComplexMatrix::from_rows(&[vec![ZERO, ONE], vec![ONE, ZERO]]).unwrap();
        assert_eq!(x, swap);
        assert_eq!(x.pow(2).unwrap(), ComplexMatrix::identity(2));
    }

    #[test]
    fn shift_moves_basis_vectors_down_by_one() {
        let x = shift_matrix(4).unwrap();
        let e2 = [ZERO, ZERO, ONE, ZERO];
        let out = x.mul_vec(&e2).unwrap();
        assert_eq!(out, vec![ZERO, ONE, ZERO, ZERO]);
        let e0 = [ONE, ZERO, ZERO, ZERO];
        assert_eq!(x.mul_vec(&e0).unwrap(), vec![ZERO, ZERO, ZERO, ONE]);
    }

    #[test]
    fn dft_two_point() {
        let f = dft_matrix(2).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let expect =
            ComplexMatrix::from_rows(&[vec![c(s, 0.0), c(s, 0.0)], vec![c(s, 0.0), c(-s, 0.0)]])
                .unwrap();
        assert!(f.max_abs_diff(&expect).unwrap() < 1e-15);
    }

    #[test]
    fn dft_unitary_d5() {
        let f = dft_matrix(5).unwrap();
        let g = f.adjoint().matmul(&f).unwrap();
        assert!(g.max_abs_diff(&ComplexMatrix::identity(5)).unwrap() < 1e-14);
    }

    #[test]
    fn dft_column_is_eigenvector_of_circulant() {
        let w = omega(3);
        let col = dft_matrix(3).unwrap().column(1);
        let s = 1.0 / 3f64.sqrt();
        let expect = [c(s, 0.0), w * s, w * w * s];
        for (a, b) in col.iter().zip(expect) {
            assert!((a - b).norm() < 1e-15);
        }
        let circ = CirculantOperator::new(vec![c(0.3, 0.1), c(-1.0, 2.0), c(0.5, 0.0)]).unwrap();
        let lam = circ.eigenvalues()[1];
        let out = circ.apply(&col).unwrap();
        for (o, v) in out.iter().zip(&col) {
            assert!((o - lam * v).norm() < 1e-14);
        }
    }

    #[test]
    fn eigenvalues_of_ones_over_three() {
        let j3 = CirculantOperator::new(vec![c(1.0 / 3.0, 0.0); 3]).unwrap();
        let ev = j3.eigenvalues();
        assert!((ev[0] - ONE).norm() < 1e-15);
        assert!(ev[1].norm() < 1e-15 && ev[2].norm() < 1e-15);
    }

    #[test]
    fn eigenvalues_of_shift_are_roots_of_unity() {
        for d in 2..7 {
            let x = CirculantOperator::shift_power(d, 1);
            for (nu, ev) in x.eigenvalues().iter().enumerate() {
                assert!((ev - omega(d).powu(nu as u32)).norm() < 1e-14);
            }
        }
    }

    #[test]
    fn adjoint_transpose_match_dense() {
        let circ =
            CirculantOperator::new(vec![c(0.3, 0.1), c(-1.0, 2.0), c(0.5, -0.7), c(0.0, 1.0)])
                .unwrap();
        assert_eq!(circ.adjoint().to_matrix(), circ.to_matrix().adjoint());
        assert_eq!(circ.transpose().to_matrix(), circ.to_matrix().transpose());
        let sq = circ.mul(&circ.adjoint()).unwrap().to_matrix();
        let dense = circ
            .to_matrix()
            .matmul(&circ.to_matrix().adjoint())
            .unwrap();
        assert!(sq.max_abs_diff(&dense).unwrap() < 1e-14);
    }

    #[test]
    fn from_matrix_rejects_non_circulant() {
        let mut m = CirculantOperator::new(vec![ONE, c(2.0, 0.0), ZERO])
            .unwrap()
            .to_matrix();
        assert!(CirculantOperator::from_matrix(&m, 1e-12).is_ok());
        m[(2, 1)] += c(1e-6, 0.0);
        assert!(CirculantOperator::from_matrix(&m, 1e-12).is_err());
        assert!(!is_circulant(&m, 1e-12));
    }
}
