//! Search for a state whose n-tuple has uniform modulus `|f̃(r)|² = 1/n`.
//!
//! For the established families such a state exists only at special `z`. Uniform `|f̃|`
//! forces uniform `|f_j|`, so the default search runs over `f_j = exp(iφ_j)/√d` only.

use rayon::prelude::*;
use serde::Serialize;

use crate::families::CoherentFamily;
use crate::numerics::{normalized, phase, ComplexMatrix, C64};
use crate::sampling::{random_phases, random_state, rng_for};

/// Residuals above this are reported as infeasible.
pub const INFEASIBLE_THRESHOLD: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    /// `f_j = exp(iφ_j)/√d`, coordinate descent over the `d` phases.
    EqualModulus,
    /// Any normalised `f`, damped Gauss-Newton over its real coordinates.
    FullState,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOptions {
    pub restarts: usize,
    pub iters: usize,
    pub seed: u64,
    pub abs_tol: f64,
    pub mode: SearchMode,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            restarts: 32,
            iters: 500,
            seed: 0,
            abs_tol: 1e-10,
            mode: SearchMode::EqualModulus,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Feasible,
    /// Numerical verdict: best residual above [`INFEASIBLE_THRESHOLD`].
    Infeasible,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct FeasibilityResult {
    pub theta: f64,
    pub mode: SearchMode,
    pub feasible: bool,
    pub verdict: Verdict,
    pub best_residual: f64,
    /// Phases `φ_j` of the best state (equal-modulus mode) when feasible.
    pub witness_phases: Option<Vec<f64>>,
    /// Best state found, feasible or not.
    pub best_state: Vec<C64>,
    pub best_restart: usize,
    pub restarts: usize,
}

/// `Σ_r (|f̃(r)|² − 1/n)²` for `f̃ = M†f`.
pub fn uniformity_residual(mdag: &ComplexMatrix, state: &[C64]) -> f64 {
    let target = 1.0 / mdag.rows() as f64;
    mdag.mul_vec(state)
        .expect("d-vector")
        .iter()
        .map(|z| (z.norm_sqr() - target).powi(2))
        .sum()
}

pub fn uniform_modulus_search(f: &CoherentFamily, opts: &SearchOptions) -> FeasibilityResult {
    let mdag = f.matrix().adjoint();
    let restarts = opts.restarts.max(1);
    let runs: Vec<(f64, Vec<C64>, Option<Vec<f64>>)> = (0..restarts)
        .into_par_iter()
        .map(|k| match opts.mode {
            SearchMode::EqualModulus => {
                let mut rng = rng_for(opts.seed, k as u64);
                let start = if k == 0 {
                    vec![0.0; f.d()]
                } else {
                    random_phases(&mut rng, f.d())
                };
                let (res, phases) = phase_descent(&mdag, start, opts.iters);
                (res, phase_state(&phases), Some(phases))
            }
            SearchMode::FullState => {
                let mut rng = rng_for(opts.seed, k as u64);
                let (res, state) =
                    full_state_descent(&mdag, random_state(&mut rng, f.d()), opts.iters);
                (res, state, None)
            }
        })
        .collect();
    let (best_restart, best) = runs
        .iter()
        .enumerate()
        .fold(
            None::<(usize, &(f64, Vec<C64>, Option<Vec<f64>>))>,
            |acc, (k, r)| match acc {
                Some((_, b)) if b.0 <= r.0 => acc,
                _ => Some((k, r)),
            },
        )
        .expect("at least one restart");
    let feasible = best.0 <= opts.abs_tol;
    let verdict = if feasible {
        Verdict::Feasible
    } else if best.0 > INFEASIBLE_THRESHOLD {
        Verdict::Infeasible
    } else {
        Verdict::Inconclusive
    };
    FeasibilityResult {
        theta: f.theta_z(),
        mode: opts.mode,
        feasible,
        verdict,
        best_residual: best.0,
        witness_phases: if feasible { best.2.clone() } else { None },
        best_state: best.1.clone(),
        best_restart,
        restarts,
    }
}

fn phase_state(phases: &[f64]) -> Vec<C64> {
    let s = 1.0 / (phases.len() as f64).sqrt();
    phases.iter().map(|&p| phase(p) * s).collect()
}

/// Exact coordinate minimisation: with all other phases fixed, each `|f̃(r)|²` is
/// `c_r + a_r cos φ + b_r sin φ`, so the residual is a trigonometric polynomial of degree 2
/// in `φ_j`.
fn phase_descent(mdag: &ComplexMatrix, mut phases: Vec<f64>, iters: usize) -> (f64, Vec<f64>) {
    let n = mdag.rows();
    let d = phases.len();
    let target = 1.0 / n as f64;
    let s = 1.0 / (d as f64).sqrt();
    let mut ft = mdag.mul_vec(&phase_state(&phases)).expect("d-vector");
    let mut current = residual_of(&ft, target);
    let (mut e, mut a, mut b) = (vec![0.0; n], vec![0.0; n], vec![0.0; n]);
    for _ in 0..iters {
        let start = current;
        for j in 0..d {
            let old = phase(phases[j]);
            for r in 0..n {
                let bj = mdag[(r, j)] * s;
                let ar = ft[r] - bj * old;
                let w = ar.conj() * bj;
                e[r] = ar.norm_sqr() + bj.norm_sqr() - target;
                a[r] = 2.0 * w.re;
                b[r] = -2.0 * w.im;
            }
            let phi = minimise_trig(&e, &a, &b, phases[j]);
            let new = phase(phi);
            for r in 0..n {
                ft[r] += mdag[(r, j)] * s * (new - old);
            }
            phases[j] = phi;
        }
        // refresh to keep the incremental update from drifting
        ft = mdag.mul_vec(&phase_state(&phases)).expect("d-vector");
        current = residual_of(&ft, target);
        if start - current <= 1e-15 * start.max(1e-300) || current < 1e-30 {
            break;
        }
    }
    (current, phases)
}

fn residual_of(ft: &[C64], target: f64) -> f64 {
    ft.iter().map(|z| (z.norm_sqr() - target).powi(2)).sum()
}

fn minimise_trig(e: &[f64], a: &[f64], b: &[f64], current: f64) -> f64 {
    let h = |phi: f64| -> f64 {
        let (sn, cs) = phi.sin_cos();
        e.iter()
            .zip(a)
            .zip(b)
            .map(|((&e, &a), &b)| (e + a * cs + b * sn).powi(2))
            .sum()
    };
    let mut best = current;
    let mut best_val = h(current);
    const SAMPLES: usize = 48;
    for k in 0..SAMPLES {
        let phi = current + std::f64::consts::TAU * k as f64 / SAMPLES as f64;
        let v = h(phi);
        if v < best_val {
            best_val = v;
            best = phi;
        }
    }
    // Newton polish on h'
    for _ in 0..30 {
        let (sn, cs) = best.sin_cos();
        let (mut g1, mut g2) = (0.0, 0.0);
        for ((&e, &a), &b) in e.iter().zip(a).zip(b) {
            let g = e + a * cs + b * sn;
            let dg = -a * sn + b * cs;
            let ddg = -a * cs - b * sn;
            g1 += 2.0 * g * dg;
            g2 += 2.0 * (dg * dg + g * ddg);
        }
        if g2 <= 0.0 || g1 == 0.0 {
            break;
        }
        let step = g1 / g2;
        let v = h(best - step);
        if v > best_val {
            break;
        }
        best -= step;
        best_val = v;
        if step.abs() < 1e-15 {
            break;
        }
    }
    best.rem_euclid(std::f64::consts::TAU)
}

/// Levenberg-Marquardt on the real and imaginary parts of `f`, with the scale-free
/// residuals `|f̃(r)|²/‖f‖² − 1/n`.
fn full_state_descent(mdag: &ComplexMatrix, f: Vec<C64>, iters: usize) -> (f64, Vec<C64>) {
    let n = mdag.rows();
    let d = f.len();
    let target = 1.0 / n as f64;
    let mut x: Vec<f64> = f.iter().flat_map(|z| [z.re, z.im]).collect();
    let to_state = |x: &[f64]| -> Vec<C64> { x.chunks(2).map(|p| C64::new(p[0], p[1])).collect() };
    let residuals = |x: &[f64]| -> Vec<f64> {
        let f = to_state(x);
        let u: f64 = f.iter().map(|z| z.norm_sqr()).sum();
        mdag.mul_vec(&f)
            .expect("d-vector")
            .iter()
            .map(|z| z.norm_sqr() / u - target)
            .collect()
    };
    let cost = |r: &[f64]| -> f64 { r.iter().map(|v| v * v).sum() };
    let mut r = residuals(&x);
    let mut value = cost(&r);
    let mut damping = 1e-3;
    for _ in 0..iters {
        if value < 1e-30 {
            break;
        }
        let f = to_state(&x);
        let u: f64 = f.iter().map(|z| z.norm_sqr()).sum();
        let ft = mdag.mul_vec(&f).expect("d-vector");
        // jac[k][p] = ∂r_k/∂x_p
        let jac: Vec<Vec<f64>> = (0..n)
            .map(|k| {
                let q = ft[k].norm_sqr();
                (0..2 * d)
                    .map(|p| {
                        let j = p / 2;
                        let dz = if p % 2 == 0 {
                            mdag[(k, j)]
                        } else {
                            mdag[(k, j)] * C64::new(0.0, 1.0)
                        };
                        let dq = 2.0 * (ft[k].conj() * dz).re;
                        let du = 2.0 * x[p];
                        (dq * u - q * du) / (u * u)
                    })
                    .collect()
            })
            .collect();
        let dim = 2 * d;
        let mut jtj = vec![vec![0.0; dim]; dim];
        let mut jtr = vec![0.0; dim];
        for k in 0..n {
            for p in 0..dim {
                jtr[p] += jac[k][p] * r[k];
                for q in 0..dim {
                    jtj[p][q] += jac[k][p] * jac[k][q];
                }
            }
        }
        let mut improved = false;
        for _ in 0..30 {
            let mut a = jtj.clone();
            for (p, row) in a.iter_mut().enumerate() {
                row[p] += damping * (1.0 + jtj[p][p]);
            }
            let rhs: Vec<f64> = jtr.iter().map(|v| -v).collect();
            if let Some(step) = solve_dense(a, rhs) {
                let trial: Vec<f64> = x.iter().zip(&step).map(|(a, b)| a + b).collect();
                let rt = residuals(&trial);
                let vt = cost(&rt);
                if vt < value {
                    let scale = trial.iter().map(|v| v * v).sum::<f64>().sqrt();
                    x = trial.iter().map(|v| v / scale).collect();
                    r = rt;
                    value = vt;
                    damping = (damping * 0.3).max(1e-15);
                    improved = true;
                    break;
                }
            }
            damping *= 10.0;
        }
        if !improved {
            break;
        }
    }
    (value, normalized(&to_state(&x)).expect("nonzero iterate"))
}

/// Gaussian elimination with partial pivoting.
fn solve_dense(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            let (top, bottom) = a.split_at_mut(row);
            for (x, y) in bottom[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= factor * y;
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Some(x)
}
