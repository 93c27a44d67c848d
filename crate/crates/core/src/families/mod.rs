//! Coherent-state families: n states in H(d) that resolve the identity, are permuted by
//! the cyclic shift, and split into n/d orbits of exactly d states.
//!
//! States are addressed either by a single index `r ∈ 0..n` or by the pair `(r̂, μ)`
//! with `r = r̂ + μd`, where `μ` labels the orbit and `|a(r̂, μ)⟩ = X^r̂ |a(0, μ)⟩`.

mod catalog;
mod isotropy;
mod orbit;
mod projector;
mod seeds;
mod verify;

pub use catalog::{catalog_family, catalog_family_by_name, catalog_matrix, FamilyName};
pub use isotropy::{isotropy_profile, IsotropyProfile, DEFAULT_NU_MAX};
pub use orbit::{
    orbit_average_expectation, orbit_density_matrix, orbit_matrices, OrbitMatrixReport,
    OrbitMatrixSet,
};
pub use projector::{overlap_projector, OverlapProjector, ProjectorReport};
pub use seeds::family_from_seeds;
pub use verify::{span_check, verify_resolution, ResolutionReport, SpanReport};

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{max_abs_diff_vec, norm, shift_matrix, ComplexMatrix, Tolerance, C64};

/// Where a family came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyLabel {
    Catalog(FamilyName),
    Seeded,
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyLabel::Catalog(name) => write!(f, "{name}"),
            FamilyLabel::Seeded => f.write_str("seeded"),
        }
    }
}

/// A validated coherent family, stored as the semi-unitary `d×n` matrix `M` whose columns
/// are `√(d/n)·|a_z(r)⟩`.
#[derive(Debug, Clone)]
pub struct CoherentFamily {
    label: FamilyLabel,
    d: usize,
    n: usize,
    theta_z: f64,
    m: ComplexMatrix,
}

impl CoherentFamily {
    /// Validates `m` as a coherent family: `n` a multiple of `d`, `MM† = 1_d`, equal column
    /// norms `√(d/n)`, orbit blocks generated by `X`, and pairwise distinct states.
    pub fn from_matrix(
        m: ComplexMatrix,
        theta_z: f64,
        label: FamilyLabel,
        tol: &Tolerance,
    ) -> Result<Self> {
        let (d, n) = m.shape();
        if d < 2 || n % d != 0 {
            return Err(Error::InvalidDimension(format!(
                "family matrix is {d}x{n}; need d >= 2 and n a multiple of d"
            )));
        }
        let residual = resolution_residual(&m);
        if residual > tol.abs_tol {
            return Err(Error::NotCoherentFamily {
                residual,
                tol: tol.abs_tol,
            });
        }
        let family = Self {
            label,
            d,
            n,
            theta_z,
            m,
        };
        let expected_norm = family.scale();
        for r in 0..n {
            let nrm = norm(&family.m.column(r));
            if (nrm - expected_norm).abs() > tol.abs_tol {
                return Err(Error::InvalidState(format!(
                    "column {r} has norm {nrm}, expected {expected_norm}"
                )));
            }
        }
        let x = shift_matrix(d)?;
        for mu in 0..family.orbit_count() {
            for rh in 0..d {
                let shifted = x.mul_vec(&family.m.column(family.index(rh, mu)))?;
                let next = family.m.column(family.index((rh + 1) % d, mu));
                if max_abs_diff_vec(&shifted, &next) > tol.abs_tol {
                    return Err(Error::InvalidState(format!(
                        "column {} is not X applied to column {}",
                        family.index((rh + 1) % d, mu),
                        family.index(rh, mu)
                    )));
                }
            }
        }
        for r in 0..n {
            for s in r + 1..n {
                if max_abs_diff_vec(&family.m.column(r), &family.m.column(s)) <= tol.abs_tol {
                    return Err(Error::DuplicateStates {
                        first: r,
                        second: s,
                    });
                }
            }
        }
        Ok(family)
    }

    pub fn label(&self) -> &FamilyLabel {
        &self.label
    }

    pub fn catalog_name(&self) -> Option<FamilyName> {
        match self.label {
            FamilyLabel::Catalog(name) => Some(name),
            FamilyLabel::Seeded => None,
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn theta_z(&self) -> f64 {
        self.theta_z
    }

    pub fn z(&self) -> C64 {
        C64::from_polar(1.0, self.theta_z)
    }

    /// Number of orbits, n/d.
    pub fn orbit_count(&self) -> usize {
        self.n / self.d
    }

    /// `√(d/n)`, the column norm of `M`.
    pub fn scale(&self) -> f64 {
        (self.d as f64 / self.n as f64).sqrt()
    }

    pub fn matrix(&self) -> &ComplexMatrix {
        &self.m
    }

    /// Single index of the pair `(r̂, μ)`.
    pub fn index(&self, r_hat: usize, mu: usize) -> usize {
        r_hat % self.d + mu * self.d
    }

    /// Pair `(r̂, μ)` of the single index `r`.
    pub fn pair(&self, r: usize) -> (usize, usize) {
        (r % self.d, r / self.d)
    }

    /// The normalised coherent state `|a_z(r)⟩`.
    pub fn state(&self, r: usize) -> Vec<C64> {
        let s = 1.0 / self.scale();
        self.m.column(r).into_iter().map(|z| z * s).collect()
    }

    pub fn state_pair(&self, r_hat: usize, mu: usize) -> Vec<C64> {
        self.state(self.index(r_hat, mu))
    }

    /// `⟨a_z(r)|a_z(s)⟩`.
    pub fn overlap(&self, r: usize, s: usize) -> C64 {
        crate::numerics::inner(&self.state(r), &self.state(s))
    }

    pub fn check_orbit(&self, mu: usize) -> Result<()> {
        if mu >= self.orbit_count() {
            return Err(Error::InvalidInput(format!(
                "orbit {mu} out of range; family has {} orbits",
                self.orbit_count()
            )));
        }
        Ok(())
    }
}

/// `max |(MM† - 1_d)_ij|`.
pub(crate) fn resolution_residual(m: &ComplexMatrix) -> f64 {
    m.matmul(&m.adjoint())
        .and_then(|g| g.max_abs_diff(&ComplexMatrix::identity(m.rows())))
        .unwrap_or(f64::INFINITY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ONE, ZERO};

    #[test]
    fn rejects_non_multiple_and_non_frame() {
        let tol = Tolerance::default();
        let m = ComplexMatrix::identity(3).pad_zeros(0, 1);
        assert!(matches!(
            CoherentFamily::from_matrix(m, 0.0, FamilyLabel::Seeded, &tol),
            Err(Error::InvalidDimension(_))
        ));
        let bad = ComplexMatrix::identity(3).scale_real(0.9);
        assert!(matches!(
            CoherentFamily::from_matrix(bad, 0.0, FamilyLabel::Seeded, &tol),
            Err(Error::NotCoherentFamily { .. })
        ));
    }

    #[test]
    fn rejects_columns_not_related_by_shift() {
        // orthonormal basis in the wrong order: MM† = 1 but column 1 ≠ X column 0
        let m = ComplexMatrix::from_rows(&[
            vec![ONE, ZERO, ZERO],
            vec![ZERO, ONE, ZERO],
            vec![ZERO, ZERO, ONE],
        ])
        .unwrap();
        let err = CoherentFamily::from_matrix(m, 0.0, FamilyLabel::Seeded, &Tolerance::default());
        assert!(matches!(err, Err(Error::InvalidState(_))));
    }

    #[test]
    fn pair_index_bijection() {
        let f = catalog_family(FamilyName::C412, 0.3).unwrap();
        for r in 0..f.n() {
            let (rh, mu) = f.pair(r);
            assert_eq!(f.index(rh, mu), r);
        }
        assert!(f.check_orbit(2).is_ok());
        assert!(f.check_orbit(3).is_err());
    }
}
