use rayon::prelude::*;
use serde::Serialize;

use super::subspace::{quantum_prob, validate_density, Subspace};
use crate::error::Result;
use crate::families::{catalog_family, span_check, CoherentFamily, FamilyName, SpanReport};
use crate::numerics::{outer, CirculantOperator, ComplexMatrix, Tolerance, C64};

/// A sum `Σ p(h(r̂)|ρ)` below `1 − VIOLATION_TOL` counts as a violation.
pub const VIOLATION_TOL: f64 = 1e-9;

/// Returns `(Σ_r̂ |a(r̂,μ)⟩⟨a(r̂,μ)|, A)` with `A` the sum minus `1_d`, both as circulants.
pub fn bell_sum_operator(
    f: &CoherentFamily,
    mu: usize,
) -> Result<(CirculantOperator, CirculantOperator)> {
    f.check_orbit(mu)?;
    let d = f.d();
    let mut sum = ComplexMatrix::zeros(d, d);
    for rh in 0..d {
        let a = f.state_pair(rh, mu);
        sum = sum.add(&outer(&a, &a))?;
    }
    let sum_op = CirculantOperator::from_matrix(&sum, 1e-10)?;
    let a = sum_op.sub(&CirculantOperator::identity(d))?;
    Ok((sum_op, a))
}

#[derive(Debug, Clone, Serialize)]
pub struct BellReport {
    pub family: String,
    pub theta: f64,
    pub orbit: usize,
    pub span: SpanReport,
    /// The orbit states span `H(d)`. The inequality is only derived under this hypothesis;
    /// the violation flags below are numeric and do not depend on it.
    pub hypothesis_met: bool,
    /// First-row coefficients of `A = dσ_μμ − 1_d`.
    pub a_coeffs: Vec<C64>,
    /// `λ_ν` of `A` (real, since `A` is Hermitian), indexed by `ν`.
    pub eigenvalues: Vec<f64>,
    pub min_eig: f64,
    pub trace_a: f64,
    /// Fourier index of the witness state, when the default witness was used.
    pub witness_nu: Option<usize>,
    #[serde(skip)]
    pub witness_rho: ComplexMatrix,
    /// `Tr(ρA)`.
    pub expectation_a: f64,
    /// `Σ_r̂ p(h(r̂)|ρ)` with `h(r̂)` the line through `|a(r̂,μ)⟩`.
    pub sum_direct: f64,
    /// `Σ_r̂ p(h(r̂)⊥|ρ)`.
    pub sum_complement: f64,
    /// `sum_direct < 1`: the form `1 ≤ Σ p(h(r̂)|ρ)` fails.
    pub violated_aaa: bool,
    /// `sum_complement > d − 1`: the complementary form fails.
    pub violated_aa: bool,
}

impl BellReport {
    pub fn violated(&self) -> bool {
        self.violated_aaa
    }
}

/// Evaluates the orbit-`μ` inequality on `rho`, or on the Fourier state `|𝔣_ν⟩` that
/// minimises `⟨𝔣_ν|A|𝔣_ν⟩` (lowest `ν` on ties) when `rho` is `None`.
pub fn bell_report(
    f: &CoherentFamily,
    mu: usize,
    rho: Option<&ComplexMatrix>,
) -> Result<BellReport> {
    let d = f.d();
    let span = span_check(f, mu, &Tolerance::default())?;
    let (_, a) = bell_sum_operator(f, mu)?;
    let eigenvalues: Vec<f64> = a.eigenvalues().iter().map(|z| z.re).collect();
    let mut nu_min = 0;
    for (nu, &e) in eigenvalues.iter().enumerate() {
        if e < eigenvalues[nu_min] {
            nu_min = nu;
        }
    }
    let (witness_rho, witness_nu) = match rho {
        Some(r) => {
            validate_density(r, 1e-10)?;
            (r.clone(), None)
        }
        None => {
            let v = CirculantOperator::fourier_vector(d, nu_min);
            (outer(&v, &v), Some(nu_min))
        }
    };
    let expectation_a = witness_rho.matmul(&a.to_matrix())?.trace()?.re;
    let mut sum_direct = 0.0;
    let mut sum_complement = 0.0;
    for rh in 0..d {
        let h = Subspace::line(&f.state_pair(rh, mu))?;
        sum_direct += quantum_prob(&h, &witness_rho)?;
        sum_complement += quantum_prob(&h.complement(), &witness_rho)?;
    }
    let hypothesis_met = span.spans;
    Ok(BellReport {
        family: f.label().to_string(),
        theta: f.theta_z(),
        orbit: mu,
        span,
        hypothesis_met,
        a_coeffs: a.coeffs().to_vec(),
        min_eig: eigenvalues[nu_min],
        eigenvalues,
        trace_a: a.trace().re,
        witness_nu,
        witness_rho,
        expectation_a,
        sum_direct,
        sum_complement,
        violated_aaa: sum_direct < 1.0 - VIOLATION_TOL,
        violated_aa: sum_complement > (d as f64 - 1.0) + VIOLATION_TOL,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScanPoint {
    pub theta: f64,
    pub min_eig: f64,
    pub hypothesis_met: bool,
    pub violated: bool,
}

/// Bell reports with the default witness over `theta_grid`, in grid order.
pub fn violation_scan(name: FamilyName, mu: usize, theta_grid: &[f64]) -> Result<Vec<ScanPoint>> {
    theta_grid
        .par_iter()
        .map(|&theta| {
            let r = bell_report(&catalog_family(name, theta)?, mu, None)?;
            Ok(ScanPoint {
                theta,
                min_eig: r.min_eig,
                hypothesis_met: r.hypothesis_met,
                violated: r.violated(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{phase, ONE};
    use std::f64::consts::PI;

    fn coeffs_close(a: &CirculantOperator, want: &[C64]) -> bool {
        a.coeffs()
            .iter()
            .zip(want)
            .all(|(x, y)| (x - y).norm() < 1e-12)
    }

    #[test]
    fn witness_operators() {
        let th = 0.83;
        let z = phase(th);
        let zero = C64::new(0.0, 0.0);
        // C36: (z*X + zX†)/2 puts z*/2 on X and z/2 on X² = X†
        let (_, a) = bell_sum_operator(&catalog_family(FamilyName::C36, th).unwrap(), 0).unwrap();
        assert!(coeffs_close(&a, &[zero, z.conj() * 0.5, z * 0.5]));
        // C48 from the orbit matrix: (zX + z*X†)/2
        let (_, a) = bell_sum_operator(&catalog_family(FamilyName::C48, th).unwrap(), 0).unwrap();
        assert!(
            coeffs_close(&a, &[zero, z * 0.5, zero, z.conj() * 0.5]),
            "{:?}",
            a.coeffs()
        );
        // C412: ((z+1)X + (z+z*)X² + (z*+1)X³)/3
        let (_, a) = bell_sum_operator(&catalog_family(FamilyName::C412, th).unwrap(), 0).unwrap();
        let want = [
            zero,
            (z + ONE) / 3.0,
            (z + z.conj()) / 3.0,
            (z.conj() + ONE) / 3.0,
        ];
        assert!(coeffs_close(&a, &want), "{:?}", a.coeffs());
        assert!(a.trace().norm() < 1e-12);
    }

    #[test]
    fn c36_at_z_one() {
        let r = bell_report(&catalog_family(FamilyName::C36, 0.0).unwrap(), 0, None).unwrap();
        let mut e = r.eigenvalues.clone();
        e.sort_by(f64::total_cmp);
        assert!(
            (e[0] + 0.5).abs() < 1e-12 && (e[1] + 0.5).abs() < 1e-12 && (e[2] - 1.0).abs() < 1e-12
        );
        assert_eq!(r.witness_nu, Some(1));
        assert!((r.sum_direct - 0.5).abs() < 1e-12);
        assert!(r.violated_aaa && r.violated_aa);
    }

    #[test]
    fn sum_identities_and_mixed_state() {
        let f = catalog_family(FamilyName::C412, 1.0).unwrap();
        let r = bell_report(&f, 1, None).unwrap();
        assert!((r.sum_direct - (1.0 + r.expectation_a)).abs() < 1e-12);
        assert!((r.sum_direct + r.sum_complement - 4.0).abs() < 1e-12);
        let mixed = ComplexMatrix::identity(4).scale_real(0.25);
        let m = bell_report(&f, 1, Some(&mixed)).unwrap();
        assert!((m.sum_direct - 1.0).abs() < 1e-12);
        assert!(!m.violated_aaa && !m.violated_aa);
    }

    #[test]
    fn c48_spectrum() {
        let th = 0.4;
        let r = bell_report(&catalog_family(FamilyName::C48, th).unwrap(), 0, None).unwrap();
        let mut e = r.eigenvalues.clone();
        e.sort_by(f64::total_cmp);
        let mut want = vec![th.cos(), -th.cos(), th.sin(), -th.sin()];
        want.sort_by(f64::total_cmp);
        for (x, y) in e.iter().zip(&want) {
            assert!((x - y).abs() < 1e-12);
        }
    }

    #[test]
    fn scan_orders_by_grid() {
        let grid: Vec<f64> = (0..12).map(|k| 2.0 * PI * k as f64 / 12.0).collect();
        let pts = violation_scan(FamilyName::C36, 0, &grid).unwrap();
        assert_eq!(pts.len(), 12);
        for (p, &t) in pts.iter().zip(&grid) {
            assert_eq!(p.theta, t);
            assert!(p.violated && p.min_eig <= -0.49);
        }
        // the orbit states are linearly dependent when z³ = −1
        assert!(!pts[2].hypothesis_met && !pts[6].hypothesis_met && pts[1].hypothesis_met);
    }
}
