//! Dense complex linear algebra and exact circulant machinery shared by every other module.

mod circulant;
mod io;
mod matrix;
mod spectral;

pub use circulant::{dft_matrix, is_circulant, omega, shift_matrix, CirculantOperator};
pub use io::{matrix_from_csv, matrix_from_json, matrix_to_csv, matrix_to_json, MatrixJson};
pub use matrix::{
    inner, max_abs_diff_vec, norm, normalized, outer, phase, ComplexMatrix, C64, ONE, ZERO,
};
pub use spectral::{largest_singular_value, range_basis, SingularValueEstimate};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute and relative comparison thresholds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            abs_tol: 1e-10,
            rel_tol: 1e-10,
        }
    }
}

impl Tolerance {
    pub fn new(abs_tol: f64, rel_tol: f64) -> Result<Self> {
        let ok = |x: f64| x.is_finite() && x >= 0.0;
        if !ok(abs_tol) || !ok(rel_tol) {
            return Err(Error::InvalidTolerance { abs_tol, rel_tol });
        }
        Ok(Self { abs_tol, rel_tol })
    }

    /// Same absolute and relative threshold.
    pub fn uniform(tol: f64) -> Result<Self> {
        Self::new(tol, tol)
    }

    pub fn close(&self, a: C64, b: C64) -> bool {
        (a - b).norm() <= self.abs_tol + self.rel_tol * a.norm().max(b.norm())
    }

    pub fn close_real(&self, a: f64, b: f64) -> bool {
        (a - b).abs() <= self.abs_tol + self.rel_tol * a.abs().max(b.abs())
    }
}
