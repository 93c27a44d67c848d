use rayon::prelude::*;
use serde::Serialize;

use super::forms::{classical_form, PhaseVector};
use crate::error::{Error, Result};
use crate::numerics::{largest_singular_value, ComplexMatrix, Tolerance, C64};
use crate::sampling::{random_phases, rng_for};

#[derive(Debug, Clone, Serialize)]
pub struct EstimateOptions {
    /// Random starts, in addition to the structured ones.
    pub restarts: usize,
    /// Maximum ascent sweeps per start.
    pub iters: usize,
    pub seed: u64,
    /// Stop a start once a sweep improves the objective by less than this, relatively.
    pub rel_tol: f64,
}

impl Default for EstimateOptions {
    fn default() -> Self {
        Self {
            restarts: 64,
            iters: 500,
            seed: 0,
            rel_tol: 1e-12,
        }
    }
}

/// Certified lower bound on `g(Θ)`: `g_lower = 𝔠(Θ, best_a, best_b)`.
#[derive(Debug, Clone, Serialize)]
pub struct GrothendieckEstimate {
    pub g_lower: f64,
    pub best_a: PhaseVector,
    pub best_b: PhaseVector,
    pub best_start: usize,
    pub restarts_used: usize,
    /// Share of starts that stopped on `rel_tol` rather than the sweep budget.
    pub converged_fraction: f64,
    /// `n·s_max`.
    pub upper_bound: f64,
    /// Every sweep of every start was nondecreasing.
    pub monotone: bool,
}

/// `n·s_max(Θ)`.
pub fn g_upper_bound(theta: &ComplexMatrix) -> Result<f64> {
    if !theta.is_square() {
        return Err(Error::InvalidDimension(format!(
            "upper bound needs a square matrix, got {}x{}",
            theta.rows(),
            theta.cols()
        )));
    }
    let s = largest_singular_value(theta, 20_000, &Tolerance::default());
    Ok(theta.rows() as f64 * s.value)
}

struct Run {
    value: f64,
    a: Vec<C64>,
    b: Vec<C64>,
    converged: bool,
    monotone: bool,
}

fn unit(z: C64) -> C64 {
    let r = z.norm();
    if r == 0.0 {
        C64::new(1.0, 0.0)
    } else {
        z / r
    }
}

/// Alternating maximisation: for fixed `a` the best `b_s` cancels the phase of `(Θᵀa)_s`
/// and the objective becomes `Σ_s |(Θᵀa)_s|`; then the same for `a` given `b`.
fn ascend(
    theta: &ComplexMatrix,
    theta_t: &ComplexMatrix,
    mut a: Vec<C64>,
    iters: usize,
    rel_tol: f64,
) -> Run {
    let mut value = f64::NEG_INFINITY;
    let mut b = vec![C64::new(1.0, 0.0); theta.cols()];
    let mut monotone = true;
    let mut converged = false;
    for _ in 0..iters.max(1) {
        let v = theta_t.mul_vec(&a).expect("n-vector");
        b = v.iter().map(|&z| unit(z).conj()).collect();
        let half: f64 = v.iter().map(|z| z.norm()).sum();
        let u = theta.mul_vec(&b).expect("n-vector");
        a = u.iter().map(|&z| unit(z).conj()).collect();
        let next: f64 = u.iter().map(|z| z.norm()).sum();
        if next < half - 1e-12 * half.abs().max(1.0) || half < value - 1e-12 * value.abs().max(1.0)
        {
            monotone = false;
        }
        let improvement = next - value;
        value = next;
        if improvement <= rel_tol * value.abs() {
            converged = true;
            break;
        }
    }
    Run {
        value,
        a,
        b,
        converged,
        monotone,
    }
}

/// Multi-start estimate of `g(Θ) = sup 𝔠(Θ)`.
///
/// The supremum over the polydisc is attained on the torus, so only phases are searched.
/// Starts: the `rows` Fourier phase patterns (the first is all ones), then
/// `opts.restarts` uniformly random phase vectors seeded by `(seed, start index)`.
/// The best start wins; ties go to the lowest index, so parallel and serial runs agree.
pub fn estimate_g(theta: &ComplexMatrix, opts: &EstimateOptions) -> Result<GrothendieckEstimate> {
    let (n, m) = theta.shape();
    if n == 0 || m == 0 {
        return Err(Error::InvalidDimension("empty matrix".into()));
    }
    let theta_t = theta.transpose();
    let total = n + opts.restarts;
    let runs: Vec<Run> = (0..total)
        .into_par_iter()
        .map(|k| {
            let a: Vec<C64> = if k < n {
                let w = std::f64::consts::TAU * k as f64 / n as f64;
                (0..n).map(|r| C64::from_polar(1.0, w * r as f64)).collect()
            } else {
                let mut rng = rng_for(opts.seed, k as u64);
                random_phases(&mut rng, n)
                    .into_iter()
                    .map(|p| C64::from_polar(1.0, p))
                    .collect()
            };
            ascend(theta, &theta_t, a, opts.iters, opts.rel_tol)
        })
        .collect();
    let mut best = 0;
    for (k, r) in runs.iter().enumerate() {
        if r.value > runs[best].value {
            best = k;
        }
    }
    let best_a = PhaseVector::from_values(&runs[best].a);
    let best_b = PhaseVector::from_values(&runs[best].b);
    let g_lower = classical_form(theta, &best_a, &best_b)?;
    let upper_bound = if theta.is_square() {
        g_upper_bound(theta)?
    } else {
        n.max(m) as f64 * largest_singular_value(theta, 20_000, &Tolerance::default()).value
    };
    Ok(GrothendieckEstimate {
        g_lower,
        best_a,
        best_b,
        best_start: best,
        restarts_used: total,
        converged_fraction: runs.iter().filter(|r| r.converged).count() as f64 / total as f64,
        upper_bound,
        monotone: runs.iter().all(|r| r.monotone),
    })
}
