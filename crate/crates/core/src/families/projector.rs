use serde::{Deserialize, Serialize};

use super::CoherentFamily;
use crate::numerics::{ComplexMatrix, C64};

/// The n×n overlap projector `Π = M†M`, `Π_rs = (d/n)⟨a_z(r)|a_z(s)⟩`.
///
/// It has rank d and acts as the reproducing kernel of the n-tuple representation.
#[derive(Debug, Clone)]
pub struct OverlapProjector {
    d: usize,
    n: usize,
    p: ComplexMatrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProjectorReport {
    pub trace: f64,
    /// `|Tr Π - d|`.
    pub trace_residual: f64,
    /// `max |(Π² - Π)_rs|`.
    pub idempotent_residual: f64,
    /// `max |(Π† - Π)_rs|`.
    pub hermitian_residual: f64,
    /// `max_{r,μ} |Π_{r, r+dμ} - (d/n)δ_{0μ}|`.
    pub zero_pattern_residual: f64,
    /// Maximum row norm of Π.
    pub row_norm: f64,
    /// `|row_norm - √(d/n)|`.
    pub row_norm_residual: f64,
}

pub fn overlap_projector(f: &CoherentFamily) -> OverlapProjector {
    let m = f.matrix();
    OverlapProjector {
        d: f.d(),
        n: f.n(),
        p: m.adjoint().matmul(m).expect("M†M is conformable"),
    }
}

impl OverlapProjector {
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.p
    }

    pub fn into_matrix(self) -> ComplexMatrix {
        self.p
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn report(&self) -> ProjectorReport {
        let p = &self.p;
        let trace = p.trace().expect("square").re;
        let sq = p.matmul(p).expect("square");
        let ratio = self.d as f64 / self.n as f64;
        let mut zero_pattern_residual: f64 = 0.0;
        for r in 0..self.n {
            for mu in 0..self.n / self.d {
                let s = (r + self.d * mu) % self.n;
                let expect = if mu == 0 { ratio } else { 0.0 };
                zero_pattern_residual =
                    zero_pattern_residual.max((p[(r, s)] - C64::new(expect, 0.0)).norm());
            }
        }
        let row_norm = p.max_row_norm();
        ProjectorReport {
            trace,
            trace_residual: (trace - self.d as f64).abs(),
            idempotent_residual: sq.max_abs_diff(p).expect("same shape"),
            hermitian_residual: p.adjoint().max_abs_diff(p).expect("same shape"),
            zero_pattern_residual,
            row_norm,
            row_norm_residual: (row_norm - ratio.sqrt()).abs(),
        }
    }
}
