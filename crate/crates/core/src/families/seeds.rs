use super::{resolution_residual, CoherentFamily, FamilyLabel};
use crate::error::{Error, Result};
use crate::numerics::{norm, shift_matrix, ComplexMatrix, Tolerance, C64};

/// Builds the family whose orbit `μ` is `{X^r̂ seed_μ : r̂ = 0..d}`, scaled by `√(d/n)`.
///
/// Fails with [`Error::NotCoherentFamily`] (carrying `‖MM† - 1_d‖_max`) when the orbits do
/// not resolve the identity, and with [`Error::DuplicateStates`] when two states coincide.
pub fn family_from_seeds(
    d: usize,
    seeds: &[Vec<C64>],
    theta_z: f64,
    tol: &Tolerance,
) -> Result<CoherentFamily> {
    if seeds.is_empty() {
        return Err(Error::InvalidInput("at least one seed is required".into()));
    }
    let x = shift_matrix(d)?;
    for (mu, seed) in seeds.iter().enumerate() {
        if seed.len() != d {
            return Err(Error::InvalidState(format!(
                "seed {mu} has length {}, expected {d}",
                seed.len()
            )));
        }
        let nrm = norm(seed);
        if (nrm - 1.0).abs() > tol.abs_tol {
            return Err(Error::InvalidState(format!(
                "seed {mu} has norm {nrm}, expected 1"
            )));
        }
    }
    let n = d * seeds.len();
    let scale = (d as f64 / n as f64).sqrt();
    let mut m = ComplexMatrix::zeros(d, n);
    for (mu, seed) in seeds.iter().enumerate() {
        let mut v: Vec<C64> = seed.iter().map(|z| z * scale).collect();
        for rh in 0..d {
            m.set_column(rh + mu * d, &v);
            v = x.mul_vec(&v)?;
        }
    }
    let residual = resolution_residual(&m);
    if residual > tol.abs_tol {
        return Err(Error::NotCoherentFamily {
            residual,
            tol: tol.abs_tol,
        });
    }
    CoherentFamily::from_matrix(m, theta_z, FamilyLabel::Seeded, tol)
}
