use serde::{Deserialize, Serialize};

use super::{resolution_residual, CoherentFamily};
use crate::error::Result;
use crate::numerics::{ComplexMatrix, Tolerance, C64};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResolutionReport {
    /// `max |(MM† - 1_d)_ij|`.
    pub residual: f64,
    pub pass: bool,
}

impl ResolutionReport {
    /// Checks any `d×n` matrix, not only validated families.
    pub fn for_matrix(m: &ComplexMatrix, tol: &Tolerance) -> Self {
        let residual = resolution_residual(m);
        Self {
            residual,
            pass: residual <= tol.abs_tol,
        }
    }
}

pub fn verify_resolution(f: &CoherentFamily, tol: &Tolerance) -> ResolutionReport {
    ResolutionReport::for_matrix(f.matrix(), tol)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpanReport {
    pub orbit: usize,
    /// `|det|` of the d×d matrix whose columns are the normalised states of the orbit.
    pub abs_det: f64,
    pub spans: bool,
}

/// Whether the `d` states of orbit `mu` span H(d).
pub fn span_check(f: &CoherentFamily, mu: usize, tol: &Tolerance) -> Result<SpanReport> {
    f.check_orbit(mu)?;
    let cols: Vec<Vec<C64>> = (0..f.d()).map(|rh| f.state_pair(rh, mu)).collect();
    let abs_det = ComplexMatrix::from_columns(&cols)?.determinant()?.norm();
    Ok(SpanReport {
        orbit: mu,
        abs_det,
        spans: abs_det > tol.abs_tol,
    })
}
