use serde::Serialize;

use super::estimate::{estimate_g, EstimateOptions};
use super::forms::{lambda_window, norm_n, quantum_form, LambdaWindow};
use crate::error::Result;
use crate::families::{overlap_projector, CoherentFamily};

/// Reported bounds `(1, 1.4049]` on the complex Grothendieck constant. Only used to label
/// results.
pub const KG_INTERVAL: (f64, f64) = (1.0, 1.4049);

/// Tolerance on `g(λΠ) ≤ 1` in the membership re-check.
const MEMBERSHIP_SLACK: f64 = 1e-6;

#[derive(Debug, Clone, Serialize)]
pub struct DemoOptions {
    pub estimate: EstimateOptions,
    /// Seed offset for the independent membership re-check.
    pub recheck_seed_offset: u64,
}

impl Default for DemoOptions {
    fn default() -> Self {
        Self {
            estimate: EstimateOptions::default(),
            recheck_seed_offset: 1_000_003,
        }
    }
}

/// Outcome of trying to place `𝔔` in `(1, k_G)` with `θ = λΠ`, `V = W = Π/𝒩(Π)`.
#[derive(Debug, Clone, Serialize)]
pub struct QEvaluation {
    pub family: String,
    pub theta_z: f64,
    pub n: usize,
    pub g_lower: f64,
    pub upper_bound: f64,
    pub converged_fraction: f64,
    pub window: LambdaWindow,
    pub lambda: Option<f64>,
    pub q: Option<f64>,
    /// `|q − λn|`.
    pub closed_form_residual: Option<f64>,
    /// Independent estimate of `g(λΠ)`.
    pub membership_g: Option<f64>,
    /// `membership_g − 1`; non-positive up to the slack when the re-check passes.
    pub membership_residual: Option<f64>,
    pub membership_ok: bool,
    /// `q ∈ (1, 1.4049]`.
    pub in_region: bool,
    pub demonstrated: bool,
}

pub fn demonstrate_region(f: &CoherentFamily, opts: &DemoOptions) -> Result<QEvaluation> {
    let pi = overlap_projector(f).into_matrix();
    let n = f.n();
    let est = estimate_g(&pi, &opts.estimate)?;
    // Π is a projector: its largest eigenvalue is exactly 1
    let window = lambda_window(n, 1.0, est.g_lower)?;
    let mut out = QEvaluation {
        family: f.label().to_string(),
        theta_z: f.theta_z(),
        n,
        g_lower: est.g_lower,
        upper_bound: est.upper_bound,
        converged_fraction: est.converged_fraction,
        window,
        lambda: None,
        q: None,
        closed_form_residual: None,
        membership_g: None,
        membership_residual: None,
        membership_ok: false,
        in_region: false,
        demonstrated: false,
    };
    let Some(lambda) = window.midpoint() else {
        return Ok(out);
    };
    let theta = pi.scale_real(lambda);
    let v = pi.scale_real(1.0 / norm_n(&pi));
    let q = quantum_form(&theta, &v, &v)?.q;
    let recheck = EstimateOptions {
        seed: opts.estimate.seed.wrapping_add(opts.recheck_seed_offset),
        ..opts.estimate.clone()
    };
    let g_theta = estimate_g(&theta, &recheck)?.g_lower;
    out.lambda = Some(lambda);
    out.q = Some(q);
    out.closed_form_residual = Some((q - lambda * n as f64).abs());
    out.membership_g = Some(g_theta);
    out.membership_residual = Some(g_theta - 1.0);
    out.membership_ok = g_theta <= 1.0 + MEMBERSHIP_SLACK;
    out.in_region = q > KG_INTERVAL.0 && q <= KG_INTERVAL.1;
    out.demonstrated = out.membership_ok && out.in_region;
    Ok(out)
}
