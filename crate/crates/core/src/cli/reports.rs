//! Report structures shared by the command line and the examples. Every report is plain
//! data with a deterministic JSON form.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::families::{
    isotropy_profile, orbit_matrices, overlap_projector, span_check, verify_resolution,
    CoherentFamily, FamilyName, SpanReport, DEFAULT_NU_MAX,
};
use crate::grothendieck::{demonstrate_region, DemoOptions, LambdaWindow, QEvaluation};
use crate::logic::{bell_report, BellReport};
use crate::numerics::{max_abs_diff_vec, Tolerance, C64};
use crate::representation::{
    from_ntuple, orbit_expectations, scalar_product_check, stroboscopic_evolve, to_ntuple,
    uniform_modulus_search, SearchOptions, Verdict,
};
use crate::sampling::{random_state, rng_for};

/// `θ_k = 2πk/n`, `k = 0..n`.
pub fn theta_grid(n: usize) -> Vec<f64> {
    (0..n)
        .map(|k| std::f64::consts::TAU * k as f64 / n as f64)
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct Residuals {
    pub resolution: f64,
    pub idempotent: f64,
    pub transpose_identity: f64,
    pub vv2: f64,
    pub projector_hermitian: f64,
    pub projector_trace: f64,
    pub zero_pattern: f64,
    pub row_norm: f64,
    pub sigma_dagger: f64,
    pub sigma_trace: f64,
    pub tau_diagonal: f64,
}

impl Residuals {
    pub fn max(&self) -> f64 {
        [
            self.resolution,
            self.idempotent,
            self.transpose_identity,
            self.vv2,
            self.projector_hermitian,
            self.projector_trace,
            self.zero_pattern,
            self.row_norm,
            self.sigma_dagger,
            self.sigma_trace,
            self.tau_diagonal,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct IsotropySummary {
    pub isotropic: bool,
    pub values: Vec<f64>,
    pub multiplicities: Vec<usize>,
    /// `S(ν)` for `ν = 1..=8`.
    #[serde(rename = "S")]
    pub s: Vec<f64>,
    pub max_row_spread: f64,
}

/// Properties C1–C4 of one family at one `z`.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyVerifyReport {
    pub family: String,
    pub theta: f64,
    pub d: usize,
    pub n: usize,
    pub tol: f64,
    pub pass: bool,
    pub residuals: Residuals,
    pub isotropy: IsotropySummary,
    pub spans: Vec<SpanReport>,
}

pub fn verify_family(f: &CoherentFamily, tol: &Tolerance) -> Result<FamilyVerifyReport> {
    let proj = overlap_projector(f).report();
    let orbit = orbit_matrices(f)?.report();
    let iso = isotropy_profile(f, DEFAULT_NU_MAX, tol.abs_tol)?;
    let residuals = Residuals {
        resolution: verify_resolution(f, tol).residual,
        idempotent: proj.idempotent_residual,
        transpose_identity: orbit.transpose_identity_residual,
        vv2: orbit
            .vv2_diagonal_residual
            .max(orbit.vv2_offdiagonal_residual),
        projector_hermitian: proj.hermitian_residual,
        projector_trace: proj.trace_residual,
        zero_pattern: proj.zero_pattern_residual,
        row_norm: proj.row_norm_residual,
        sigma_dagger: orbit.dagger_residual,
        sigma_trace: orbit.trace_residual,
        tau_diagonal: orbit.tau_diagonal_residual,
    };
    let spans = (0..f.orbit_count())
        .map(|mu| span_check(f, mu, tol))
        .collect::<Result<Vec<_>>>()?;
    let pass = residuals.max() <= tol.abs_tol && iso.isotropic;
    Ok(FamilyVerifyReport {
        family: f.label().to_string(),
        theta: f.theta_z(),
        d: f.d(),
        n: f.n(),
        tol: tol.abs_tol,
        pass,
        isotropy: IsotropySummary {
            isotropic: iso.isotropic,
            values: iso.values(),
            multiplicities: iso.multiplicities(),
            s: iso.s_values.iter().map(|p| p.1).collect(),
            max_row_spread: iso.max_row_spread,
        },
        residuals,
        spans,
    })
}

/// Worst-case errors of the n-tuple representation over random states.
#[derive(Debug, Clone, Serialize)]
pub struct RoundTripReport {
    pub family: String,
    pub theta: f64,
    pub samples: usize,
    pub seed: u64,
    pub tol: f64,
    pub pass: bool,
    /// `max |Σ|f̃|² − 1|`.
    pub parseval: f64,
    /// `max_r |(Πf̃ − f̃)(r)|`.
    pub reproducing_kernel: f64,
    /// `max |M f̃ − f|`.
    pub round_trip: f64,
    /// `max |⟨g|f⟩ − ⟨g̃|f̃⟩|`.
    pub scalar_product: f64,
    /// Largest change of any `⟨f|σ_μμ|f⟩` over `3d` single shifts.
    pub stroboscopic_drift: f64,
    /// Largest `|Σ_μ ⟨f|σ_μμ|f⟩ − n/d²|`.
    pub orbit_sum: f64,
}

pub fn round_trip_report(
    f: &CoherentFamily,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<RoundTripReport> {
    let d = f.d();
    let target = f.n() as f64 / (d * d) as f64;
    let per_sample = (0..samples)
        .into_par_iter()
        .map(|k| -> Result<[f64; 6]> {
            let mut rng = rng_for(seed, k as u64);
            let a = random_state(&mut rng, d);
            let b = random_state(&mut rng, d);
            let t = to_ntuple(f, &a)?;
            let back = from_ntuple(f, &t)?;
            let (x, y) = scalar_product_check(f, &b, &a)?;
            let base = orbit_expectations(&t);
            let mut drift: f64 = 0.0;
            let mut cur = t.clone();
            for _ in 0..3 * d {
                cur = stroboscopic_evolve(f, &cur, 1)?;
                for (u, v) in base.iter().zip(orbit_expectations(&cur)) {
                    drift = drift.max((u - v).abs());
                }
            }
            Ok([
                (t.norm_sqr() - 1.0).abs(),
                t.kernel_residual(f),
                max_abs_diff_vec(&back, &a),
                (x - y).norm(),
                drift,
                (base.iter().sum::<f64>() - target).abs(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    let mut worst = [0.0f64; 6];
    for s in &per_sample {
        for (w, v) in worst.iter_mut().zip(s) {
            *w = w.max(*v);
        }
    }
    Ok(RoundTripReport {
        family: f.label().to_string(),
        theta: f.theta_z(),
        samples,
        seed,
        tol,
        pass: worst.iter().all(|&w| w <= tol),
        parseval: worst[0],
        reproducing_kernel: worst[1],
        round_trip: worst[2],
        scalar_product: worst[3],
        stroboscopic_drift: worst[4],
        orbit_sum: worst[5],
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaPoint {
    pub theta: f64,
    pub best_residual: f64,
    pub feasible: bool,
    pub verdict: Verdict,
    pub witness_phases: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct LemmaReport {
    pub family: String,
    pub options: SearchOptions,
    /// Infeasibility is a numerical verdict: no state was found below the threshold.
    pub infeasible_threshold: f64,
    pub points: Vec<LemmaPoint>,
}

pub fn lemma_report(name: FamilyName, thetas: &[f64], opts: &SearchOptions) -> Result<LemmaReport> {
    let points = thetas
        .iter()
        .map(|&theta| {
            let f = crate::families::catalog_family(name, theta)?;
            let r = uniform_modulus_search(&f, opts);
            Ok(LemmaPoint {
                theta,
                best_residual: r.best_residual,
                feasible: r.feasible,
                verdict: r.verdict,
                witness_phases: r.witness_phases,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LemmaReport {
        family: name.to_string(),
        options: opts.clone(),
        infeasible_threshold: crate::representation::INFEASIBLE_THRESHOLD,
        points,
    })
}

/// Compact JSON form of a Bell report.
#[derive(Debug, Clone, Serialize)]
pub struct BellSummary {
    pub family: String,
    pub orbit: usize,
    pub theta: f64,
    #[serde(rename = "A_coeffs")]
    pub a_coeffs: Vec<C64>,
    pub eigenvalues: Vec<f64>,
    pub min_eig: f64,
    pub witness_nu: Option<usize>,
    pub sum_direct: f64,
    pub sum_complement: f64,
    pub violated: bool,
    pub violated_complement_form: bool,
    pub hypothesis_met: bool,
    pub span_abs_det: f64,
}

impl From<&BellReport> for BellSummary {
    fn from(r: &BellReport) -> Self {
        Self {
            family: r.family.clone(),
            orbit: r.orbit,
            theta: r.theta,
            a_coeffs: r.a_coeffs.clone(),
            eigenvalues: r.eigenvalues.clone(),
            min_eig: r.min_eig,
            witness_nu: r.witness_nu,
            sum_direct: r.sum_direct,
            sum_complement: r.sum_complement,
            violated: r.violated_aaa,
            violated_complement_form: r.violated_aa,
            hypothesis_met: r.hypothesis_met,
            span_abs_det: r.span.abs_det,
        }
    }
}

/// Compact JSON form of a demonstration.
#[derive(Debug, Clone, Serialize)]
pub struct DemoSummary {
    pub family: String,
    pub theta: f64,
    pub n: usize,
    pub g_lower: f64,
    pub upper_bound: f64,
    pub converged_fraction: f64,
    pub window: LambdaWindow,
    pub lambda: Option<f64>,
    pub q: Option<f64>,
    pub in_region: bool,
    pub membership_g: Option<f64>,
    pub membership_residual: Option<f64>,
    pub demonstrated: bool,
}

impl From<&QEvaluation> for DemoSummary {
    fn from(q: &QEvaluation) -> Self {
        Self {
            family: q.family.clone(),
            theta: q.theta_z,
            n: q.n,
            g_lower: q.g_lower,
            upper_bound: q.upper_bound,
            converged_fraction: q.converged_fraction,
            window: q.window,
            lambda: q.lambda,
            q: q.q,
            in_region: q.in_region,
            membership_g: q.membership_g,
            membership_residual: q.membership_residual,
            demonstrated: q.demonstrated,
        }
    }
}

/// Marker stored in explorer reports in place of a verdict on the ultra-quantum
/// properties: only measured values are given.
pub const EMPIRICAL_ONLY: &str = "empirical-only";

#[derive(Debug, Clone, Serialize)]
pub struct ExplorerPoint {
    pub theta: f64,
    pub coherence: FamilyVerifyReport,
    pub g_lower: f64,
    pub n: usize,
    pub window: LambdaWindow,
    pub lambda: Option<f64>,
    pub q: Option<f64>,
    pub membership_g: Option<f64>,
    pub bell_min_eig: Vec<f64>,
    pub bell_violated: Vec<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExplorerReport {
    pub family: String,
    pub open_problem: bool,
    pub grothendieck_verdict: &'static str,
    pub bell_verdict: &'static str,
    pub seed: u64,
    pub points: Vec<ExplorerPoint>,
}

pub fn explore(
    name: FamilyName,
    thetas: &[f64],
    demo: &DemoOptions,
    tol: &Tolerance,
) -> Result<ExplorerReport> {
    let points = thetas
        .iter()
        .map(|&theta| {
            let f = crate::families::catalog_family(name, theta)?;
            let coherence = verify_family(&f, tol)?;
            let q = demonstrate_region(&f, demo)?;
            let bells = (0..f.orbit_count())
                .map(|mu| bell_report(&f, mu, None))
                .collect::<Result<Vec<_>>>()?;
            Ok(ExplorerPoint {
                theta,
                coherence,
                g_lower: q.g_lower,
                n: q.n,
                window: q.window,
                lambda: q.lambda,
                q: q.q,
                membership_g: q.membership_g,
                bell_min_eig: bells.iter().map(|b| b.min_eig).collect(),
                bell_violated: bells.iter().map(|b| b.violated()).collect(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExplorerReport {
        family: name.to_string(),
        open_problem: name.is_open_problem(),
        grothendieck_verdict: EMPIRICAL_ONLY,
        bell_verdict: EMPIRICAL_ONLY,
        seed: demo.estimate.seed,
        points,
    })
}
