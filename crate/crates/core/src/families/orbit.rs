use serde::{Deserialize, Serialize};

use super::CoherentFamily;
use crate::error::{Error, Result};
use crate::numerics::{norm, outer, shift_matrix, CirculantOperator, ComplexMatrix, C64};

const CIRCULANT_TOL: f64 = 1e-10;

/// The orbit matrices `σ_μν` and overlap matrices `𝒯_μν` of a family, all circulant.
///
/// `σ_μν = (1/d) Σ_q̂ |a(q̂,ν)⟩⟨a(q̂,μ)|` and `𝒯_μν(r̂,ŝ) = ⟨a(r̂,μ)|a(ŝ,ν)⟩`.
#[derive(Debug, Clone)]
pub struct OrbitMatrixSet {
    d: usize,
    n: usize,
    sigma: Vec<Vec<CirculantOperator>>,
    tau: Vec<Vec<CirculantOperator>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OrbitMatrixReport {
    /// `max |σ_μν - σ_νμ†|`.
    pub dagger_residual: f64,
    /// `max |Tr σ_μν - δ_μν|`.
    pub trace_residual: f64,
    /// `max |(d²/n) Σ_μ σ_μμ - 1_d|`.
    pub vv2_diagonal_residual: f64,
    /// `max |Σ_{μ>ν} (σ_μν + σ_μν†)|`.
    pub vv2_offdiagonal_residual: f64,
    /// `max |𝒯_μν(r̂,ŝ) - d σ_μν(ŝ,r̂)|`.
    pub transpose_identity_residual: f64,
    /// `max |𝒯_μν(r̂,r̂) - δ_μν|`.
    pub tau_diagonal_residual: f64,
}

impl OrbitMatrixReport {
    pub fn max_residual(&self) -> f64 {
        [
            self.dagger_residual,
            self.trace_residual,
            self.vv2_diagonal_residual,
            self.vv2_offdiagonal_residual,
            self.transpose_identity_residual,
            self.tau_diagonal_residual,
        ]
        .into_iter()
        .fold(0.0, f64::max)
    }
}

pub fn orbit_matrices(f: &CoherentFamily) -> Result<OrbitMatrixSet> {
    let d = f.d();
    let count = f.orbit_count();
    let mut sigma = Vec::with_capacity(count);
    let mut tau = Vec::with_capacity(count);
    for mu in 0..count {
        let mut srow = Vec::with_capacity(count);
        let mut trow = Vec::with_capacity(count);
        for nu in 0..count {
            let mut dense = ComplexMatrix::zeros(d, d);
            for q in 0..d {
                dense = dense.add(&outer(&f.state_pair(q, nu), &f.state_pair(q, mu)))?;
            }
            let dense = dense.scale_real(1.0 / d as f64);
            srow.push(
                CirculantOperator::from_matrix(&dense, CIRCULANT_TOL)
                    .map_err(|e| Error::InternalConsistency(format!("sigma[{mu}][{nu}]: {e}")))?,
            );
            let overlaps = ComplexMatrix::from_fn(d, d, |r, s| {
                crate::numerics::inner(&f.state_pair(r, mu), &f.state_pair(s, nu))
            });
            trow.push(
                CirculantOperator::from_matrix(&overlaps, CIRCULANT_TOL)
                    .map_err(|e| Error::InternalConsistency(format!("tau[{mu}][{nu}]: {e}")))?,
            );
        }
        sigma.push(srow);
        tau.push(trow);
    }
    Ok(OrbitMatrixSet {
        d,
        n: f.n(),
        sigma,
        tau,
    })
}

impl OrbitMatrixSet {
    pub fn orbit_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, mu: usize, nu: usize) -> &CirculantOperator {
        &self.sigma[mu][nu]
    }

    pub fn tau(&self, mu: usize, nu: usize) -> &CirculantOperator {
        &self.tau[mu][nu]
    }

    pub fn report(&self) -> OrbitMatrixReport {
        let d = self.d;
        let count = self.orbit_count();
        let df = d as f64;
        let delta = |a: usize, b: usize| if a == b { 1.0 } else { 0.0 };
        let mut rep = OrbitMatrixReport {
            dagger_residual: 0.0,
            trace_residual: 0.0,
            vv2_diagonal_residual: 0.0,
            vv2_offdiagonal_residual: 0.0,
            transpose_identity_residual: 0.0,
            tau_diagonal_residual: 0.0,
        };
        let mut diag_sum = CirculantOperator::zero(d);
        let mut off_sum = CirculantOperator::zero(d);
        for mu in 0..count {
            for nu in 0..count {
                let s = &self.sigma[mu][nu];
                let t = &self.tau[mu][nu];
                rep.dagger_residual = rep.dagger_residual.max(
                    s.max_abs_diff(&self.sigma[nu][mu].adjoint())
                        .expect("same dim"),
                );
                rep.trace_residual = rep
                    .trace_residual
                    .max((s.trace() - C64::new(delta(mu, nu), 0.0)).norm());
                let st = s.transpose().scale(C64::new(df, 0.0));
                rep.transpose_identity_residual = rep
                    .transpose_identity_residual
                    .max(t.max_abs_diff(&st).expect("same dim"));
                rep.tau_diagonal_residual = rep
                    .tau_diagonal_residual
                    .max((t.coeff(0) - C64::new(delta(mu, nu), 0.0)).norm());
                if mu == nu {
                    diag_sum = diag_sum.add(s).expect("same dim");
                } else if mu > nu {
                    off_sum = off_sum
                        .add(&s.add(&s.adjoint()).expect("same dim"))
                        .expect("same dim");
                }
            }
        }
        let scaled = diag_sum.scale(C64::new(df * df / self.n as f64, 0.0));
        rep.vv2_diagonal_residual = scaled
            .max_abs_diff(&CirculantOperator::identity(d))
            .expect("same dim");
        rep.vv2_offdiagonal_residual = off_sum
            .coeffs()
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        rep
    }
}

/// The orbit density matrix `R = (1/d) Σ_r X^r |f⟩⟨f| X^{-r}`, returned as a circulant.
pub fn orbit_density_matrix(state: &[C64]) -> Result<CirculantOperator> {
    let d = state.len();
    let nrm = norm(state);
    if (nrm - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidState(format!(
            "state has norm {nrm}, expected 1"
        )));
    }
    let x = shift_matrix(d)?;
    let mut v = state.to_vec();
    let mut acc = ComplexMatrix::zeros(d, d);
    for _ in 0..d {
        acc = acc.add(&outer(&v, &v))?;
        v = x.mul_vec(&v)?;
    }
    let r = CirculantOperator::from_matrix(&acc.scale_real(1.0 / d as f64), CIRCULANT_TOL)?;
    if let Some(ev) = r.eigenvalues().iter().find(|ev| ev.re < -CIRCULANT_TOL) {
        return Err(Error::InternalConsistency(format!(
            "orbit density matrix has negative eigenvalue {ev}"
        )));
    }
    Ok(r)
}

/// `Tr(R·obs)`, the expectation of `obs` averaged over the orbit described by `R`.
pub fn orbit_average_expectation(r: &CirculantOperator, obs: &ComplexMatrix) -> Result<C64> {
    r.to_matrix().matmul(obs)?.trace()
}
