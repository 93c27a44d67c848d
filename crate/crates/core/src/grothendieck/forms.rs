use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{norm, phase, ComplexMatrix, C64};

/// Unit-modulus coefficients `a_r = exp(i·phases[r])`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PhaseVector {
    pub phases: Vec<f64>,
}

impl PhaseVector {
    pub fn new(phases: Vec<f64>) -> Result<Self> {
        if let Some(p) = phases.iter().find(|p| !p.is_finite()) {
            return Err(Error::InvalidInput(format!("phase {p} is not finite")));
        }
        Ok(Self { phases })
    }

    pub fn ones(n: usize) -> Self {
        Self {
            phases: vec![0.0; n],
        }
    }

    /// Phases of the unit-modulus vector closest to `v`; zero entries get phase 0.
    pub fn from_values(v: &[C64]) -> Self {
        Self {
            phases: v
                .iter()
                .map(|z| if z.norm() == 0.0 { 0.0 } else { z.arg() })
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.phases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.phases.is_empty()
    }

    pub fn values(&self) -> Vec<C64> {
        self.phases.iter().map(|&p| phase(p)).collect()
    }
}

/// `𝒩(M) = max_r √(Σ_s |M_rs|²)`.
pub fn norm_n(m: &ComplexMatrix) -> f64 {
    m.max_row_norm()
}

/// `|aᵀ Θ b|`.
pub fn classical_form(theta: &ComplexMatrix, a: &PhaseVector, b: &PhaseVector) -> Result<f64> {
    if a.len() != theta.rows() || b.len() != theta.cols() {
        return Err(Error::ShapeMismatch {
            op: "classical_form",
            left_rows: a.len(),
            left_cols: b.len(),
            right_rows: theta.rows(),
            right_cols: theta.cols(),
        });
    }
    let av = a.values();
    let tb = theta.mul_vec(&b.values())?;
    Ok(av.iter().zip(&tb).map(|(x, y)| x * y).sum::<C64>().norm())
}

/// `Θ / g_est`. Since `g_est` is normally a lower bound on `g(Θ)`, membership of the result
/// in `G_n` has to be re-checked.
pub fn scale_to_gn(theta: &ComplexMatrix, g_est: f64) -> Result<ComplexMatrix> {
    if !(g_est > 0.0 && g_est.is_finite()) {
        return Err(Error::InvalidInput(format!(
            "scale factor must be positive, got {g_est}"
        )));
    }
    Ok(theta.scale_real(1.0 / g_est))
}

#[derive(Debug, Clone)]
pub struct Embedded {
    pub theta: ComplexMatrix,
    pub v: Option<ComplexMatrix>,
    pub w: Option<ComplexMatrix>,
}

/// Pads `θ` (and `V`, `W` when given) with `k` zero rows and columns.
pub fn embed_with_zeros(
    theta: &ComplexMatrix,
    k: usize,
    v: Option<&ComplexMatrix>,
    w: Option<&ComplexMatrix>,
) -> Embedded {
    Embedded {
        theta: theta.pad_zeros(k, k),
        v: v.map(|m| m.pad_zeros(k, k)),
        w: w.map(|m| m.pad_zeros(k, k)),
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuantumForm {
    pub q: f64,
    pub norm_v: f64,
    pub norm_w: f64,
    /// Both `𝒩(V)` and `𝒩(W)` are at most `1 + 1e-9`.
    pub admissible: bool,
}

/// `𝔔 = |Tr(θ V W†)|`.
pub fn quantum_form(
    theta: &ComplexMatrix,
    v: &ComplexMatrix,
    w: &ComplexMatrix,
) -> Result<QuantumForm> {
    let q = theta.matmul(v)?.matmul(&w.adjoint())?.trace()?.norm();
    let (norm_v, norm_w) = (norm_n(v), norm_n(w));
    Ok(QuantumForm {
        q,
        norm_v,
        norm_w,
        admissible: norm_v <= 1.0 + 1e-9 && norm_w <= 1.0 + 1e-9,
    })
}

/// `λ` range `(1/(n·e_max), 1/g_est)` in which `θ = λΘ` can give `𝔔 > 1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LambdaWindow {
    pub lo: f64,
    pub hi: f64,
    pub empty: bool,
}

impl LambdaWindow {
    pub fn midpoint(&self) -> Option<f64> {
        (!self.empty).then_some(0.5 * (self.lo + self.hi))
    }
}

/// Windows narrower than this (relative to `lo`) are treated as empty: an optimizer that
/// reaches `g = n` only to within its stopping tolerance must not open a spurious window.
pub const WINDOW_REL_SLACK: f64 = 1e-8;

pub fn lambda_window(n: usize, e_max: f64, g_est: f64) -> Result<LambdaWindow> {
    if n == 0 || !e_max.is_finite() || e_max <= 0.0 || !g_est.is_finite() || g_est <= 0.0 {
        return Err(Error::InvalidInput(format!(
            "need n > 0, e_max > 0, g > 0; got n = {n}, e_max = {e_max}, g = {g_est}"
        )));
    }
    let lo = 1.0 / (n as f64 * e_max);
    let hi = 1.0 / g_est;
    Ok(LambdaWindow {
        lo,
        hi,
        empty: hi <= lo * (1.0 + WINDOW_REL_SLACK),
    })
}

/// `𝔔` for `θ = |f⟩⟨e|/g`, `V = U`, `W = 1`, where `g = (Σ|f_r|)(Σ|e_s|)` is the exact
/// supremum of the classical form for a rank-one matrix.
pub fn rank_one_harness(e: &[C64], f: &[C64], u: &ComplexMatrix) -> Result<f64> {
    let d = e.len();
    if f.len() != d || u.shape() != (d, d) {
        return Err(Error::InvalidDimension(format!(
            "need matching dimensions: e {d}, f {}, U {}x{}",
            f.len(),
            u.rows(),
            u.cols()
        )));
    }
    for v in [e, f] {
        if (norm(v) - 1.0).abs() > 1e-10 {
            return Err(Error::InvalidState(
                "harness vectors must be normalised".into(),
            ));
        }
    }
    if norm_n(u) > 1.0 + 1e-10 {
        return Err(Error::InvalidInput(format!(
            "U has row norm {} > 1",
            norm_n(u)
        )));
    }
    let g: f64 = f.iter().map(|z| z.norm()).sum::<f64>() * e.iter().map(|z| z.norm()).sum::<f64>();
    let theta = crate::numerics::outer(f, e).scale_real(1.0 / g);
    Ok(quantum_form(&theta, u, &ComplexMatrix::identity(d))?.q)
}
