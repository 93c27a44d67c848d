use serde::{Deserialize, Serialize};

use super::matrix::{inner, norm, ComplexMatrix, C64};
use super::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingularValueEstimate {
    pub value: f64,
    /// False when the iteration budget ran out; `value` is then a lower bound.
    pub converged: bool,
    pub iterations: usize,
}

/// Power iteration on `M†M`; returns the square root of the dominant Rayleigh quotient.
///
/// For a positive semidefinite operator the Rayleigh quotients of the iterates never
/// decrease, so a non-converged run still reports a valid lower bound.
pub fn largest_singular_value(
    m: &ComplexMatrix,
    max_iters: usize,
    tol: &Tolerance,
) -> SingularValueEstimate {
    let gram = m.adjoint().matmul(m).expect("M†M is always conformable");
    let n = gram.rows();
    // deterministic start with no special alignment to structured eigenvectors
    let mut v: Vec<C64> = (0..n)
        .map(|j| {
            let t = j as f64;
            C64::new(1.0 + 0.37 * t.sin(), 0.11 * (1.0 + t * t).ln())
        })
        .collect();
    let scale = norm(&v);
    v.iter_mut().for_each(|z| *z /= scale);

    let mut rayleigh = 0.0;
    for it in 1..=max_iters.max(1) {
        let w = gram.mul_vec(&v).expect("square gram");
        let next = inner(&v, &w).re;
        let wn = norm(&w);
        if wn == 0.0 {
            return SingularValueEstimate {
                value: 0.0,
                converged: true,
                iterations: it,
            };
        }
        v = w.iter().map(|z| z / wn).collect();
        let delta = (next - rayleigh).abs();
        rayleigh = next;
        if it > 1 && delta <= tol.abs_tol.max(tol.rel_tol * rayleigh.abs()) * 1e-2 {
            // refine once on the normalised iterate
            let w = gram.mul_vec(&v).expect("square gram");
            rayleigh = rayleigh.max(inner(&v, &w).re);
            return SingularValueEstimate {
                value: rayleigh.max(0.0).sqrt(),
                converged: true,
                iterations: it,
            };
        }
    }
    SingularValueEstimate {
        value: rayleigh.max(0.0).sqrt(),
        converged: false,
        iterations: max_iters,
    }
}

/// Orthonormal basis of the column space of `m` together with all singular values
/// (descending), via one-sided Jacobi rotations.
///
/// Columns whose singular value is at most `threshold` are discarded; the returned
/// basis has shape `rows × rank` or is `None` when the rank is zero.
pub fn range_basis(m: &ComplexMatrix, threshold: f64) -> (Option<ComplexMatrix>, Vec<f64>) {
    let mut cols = m.columns();
    let k = cols.len();
    for _sweep in 0..60 {
        let mut rotated = false;
        for i in 0..k {
            for j in i + 1..k {
                let alpha: f64 = cols[i].iter().map(|z| z.norm_sqr()).sum();
                let beta: f64 = cols[j].iter().map(|z| z.norm_sqr()).sum();
                let gamma = inner(&cols[i], &cols[j]);
                let g = gamma.norm();
                if g <= 1e-15 * (alpha * beta).sqrt() || g == 0.0 {
                    continue;
                }
                rotated = true;
                let ph = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let t = if zeta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = c * t;
                for r in 0..cols[i].len() {
                    let ai = cols[i][r];
                    let aj = cols[j][r] * ph.conj();
                    cols[i][r] = ai * c - aj * s;
                    cols[j][r] = ai * s + aj * c;
                }
            }
        }
        if !rotated {
            break;
        }
    }
    let mut pairs: Vec<(f64, Vec<C64>)> = cols.into_iter().map(|c| (norm(&c), c)).collect();
    pairs.sort_by(|a, b| b.0.total_cmp(&a.0));
    let singular: Vec<f64> = pairs.iter().map(|p| p.0).collect();
    let kept: Vec<Vec<C64>> = pairs
        .into_iter()
        .filter(|(s, _)| *s > threshold)
        .map(|(s, c)| c.into_iter().map(|z| z / s).collect())
        .collect();
    if kept.is_empty() {
        (None, singular)
    } else {
        (
            Some(ComplexMatrix::from_columns(&kept).expect("non-empty")),
            singular,
        )
    }
}
