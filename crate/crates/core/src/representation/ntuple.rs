use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::CoherentFamily;
use crate::numerics::{inner, norm, ComplexMatrix, C64};

/// Expansion coefficients `f̃(r)` of a state over the coherent states of one family.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NTuple {
    pub d: usize,
    pub n: usize,
    pub values: Vec<C64>,
}

impl NTuple {
    pub fn new(f: &CoherentFamily, values: Vec<C64>) -> Result<Self> {
        if values.len() != f.n() {
            return Err(Error::InvalidDimension(format!(
                "n-tuple has {} entries, family has n = {}",
                values.len(),
                f.n()
            )));
        }
        Ok(Self {
            d: f.d(),
            n: f.n(),
            values,
        })
    }

    /// `f̃(r̂, μ)`.
    pub fn at(&self, r_hat: usize, mu: usize) -> C64 {
        self.values[r_hat % self.d + mu * self.d]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.values.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Coefficients of orbit `μ`, in `r̂` order.
    pub fn orbit_block(&self, mu: usize) -> &[C64] {
        &self.values[mu * self.d..(mu + 1) * self.d]
    }

    /// `max_r |(Π f̃ − f̃)(r)|`.
    pub fn kernel_residual(&self, f: &CoherentFamily) -> f64 {
        let m = f.matrix();
        let back = m
            .adjoint()
            .mul_vec(&m.mul_vec(&self.values).expect("n-vector"))
            .expect("d-vector");
        crate::numerics::max_abs_diff_vec(&back, &self.values)
    }
}

fn check_family(f: &CoherentFamily, t: &NTuple) -> Result<()> {
    if t.d != f.d() || t.n != f.n() {
        return Err(Error::InvalidDimension(format!(
            "n-tuple belongs to a ({}, {}) family, got ({}, {})",
            t.d,
            t.n,
            f.d(),
            f.n()
        )));
    }
    Ok(())
}

fn check_state(f: &CoherentFamily, state: &[C64]) -> Result<()> {
    if state.len() != f.d() {
        return Err(Error::InvalidDimension(format!(
            "state has {} entries, family has d = {}",
            state.len(),
            f.d()
        )));
    }
    Ok(())
}

/// `f̃ = M†·state`.
pub fn to_ntuple(f: &CoherentFamily, state: &[C64]) -> Result<NTuple> {
    check_state(f, state)?;
    let nrm = norm(state);
    if (nrm - 1.0).abs() > 1e-10 {
        return Err(Error::InvalidState(format!(
            "state has norm {nrm}, expected 1"
        )));
    }
    NTuple::new(f, f.matrix().adjoint().mul_vec(state)?)
}

/// `M·f̃`. Components of `f̃` outside the range of `Π` are annihilated.
pub fn from_ntuple(f: &CoherentFamily, t: &NTuple) -> Result<Vec<C64>> {
    check_family(f, t)?;
    f.matrix().mul_vec(&t.values)
}

/// `(⟨g|f⟩, ⟨g̃|f̃⟩)`.
pub fn scalar_product_check(
    f: &CoherentFamily,
    g_state: &[C64],
    f_state: &[C64],
) -> Result<(C64, C64)> {
    check_state(f, g_state)?;
    check_state(f, f_state)?;
    let mdag = f.matrix().adjoint();
    let gt = mdag.mul_vec(g_state)?;
    let ft = mdag.mul_vec(f_state)?;
    Ok((inner(g_state, f_state), inner(&gt, &ft)))
}

/// `F̃(r, s) = (d/n)⟨a(r)|ρ|a(s)⟩`, an `n×n` matrix.
#[derive(Debug, Clone)]
pub struct DensityNTuple {
    pub d: usize,
    pub n: usize,
    pub values: ComplexMatrix,
}

impl DensityNTuple {
    pub fn diagonal_sum(&self) -> C64 {
        self.values.trace().expect("square")
    }
}

pub fn density_ntuple(f: &CoherentFamily, rho: &ComplexMatrix) -> Result<DensityNTuple> {
    let d = f.d();
    if rho.shape() != (d, d) {
        return Err(Error::InvalidDensity(format!(
            "density matrix is {}x{}, expected {d}x{d}",
            rho.rows(),
            rho.cols()
        )));
    }
    if !rho.is_hermitian(1e-10) {
        return Err(Error::InvalidDensity(
            "density matrix is not Hermitian".into(),
        ));
    }
    let tr = rho.trace()?;
    if (tr - C64::new(1.0, 0.0)).norm() > 1e-10 {
        return Err(Error::InvalidDensity(format!(
            "density matrix has trace {tr}, expected 1"
        )));
    }
    let m = f.matrix();
    Ok(DensityNTuple {
        d,
        n: f.n(),
        values: m.adjoint().matmul(rho)?.matmul(m)?,
    })
}

/// Applies `X^steps` to the represented state.
///
/// Since `X^t|a(r̂, μ)⟩ = |a(r̂ + t, μ)⟩`, this is the block-wise cyclic permutation
/// `f̃'(r̂, μ) = f̃(r̂ − t, μ)`, applied directly so the moduli are permuted exactly.
/// On tuples outside the range of `Π` it is the permutation, not the re-expansion.
pub fn stroboscopic_evolve(f: &CoherentFamily, t: &NTuple, steps: i64) -> Result<NTuple> {
    check_family(f, t)?;
    let d = f.d();
    let shift = steps.rem_euclid(d as i64) as usize;
    let mut values = t.values.clone();
    for mu in 0..f.orbit_count() {
        for rh in 0..d {
            values[f.index((rh + shift) % d, mu)] = t.values[f.index(rh, mu)];
        }
    }
    NTuple::new(f, values)
}

/// `⟨f|σ_μμ|f⟩ = (n/d²) Σ_r̂ |f̃(r̂, μ)|²` for each orbit. The entries sum to `n/d²`.
pub fn orbit_expectations(t: &NTuple) -> Vec<f64> {
    let scale = t.n as f64 / (t.d * t.d) as f64;
    (0..t.n / t.d)
        .map(|mu| scale * t.orbit_block(mu).iter().map(|z| z.norm_sqr()).sum::<f64>())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{
        catalog_family, family_from_seeds, orbit_matrices, overlap_projector, FamilyName,
    };
    use crate::numerics::{max_abs_diff_vec, outer, Tolerance, ONE, ZERO};
    use crate::sampling::{random_state, rng_for};

    #[test]
    fn coherent_state_expands_along_projector_column() {
        let f = catalog_family(FamilyName::C412, 0.8).unwrap();
        let p = overlap_projector(&f);
        let t = to_ntuple(&f, &f.state(0)).unwrap();
        let k = (f.n() as f64 / f.d() as f64).sqrt();
        for r in 0..f.n() {
            assert!((t.values[r] - p.matrix()[(r, 0)] * k).norm() < 1e-12);
        }
        assert!((t.values[0].re - (f.d() as f64 / f.n() as f64).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn trivial_basis_family() {
        let f = family_from_seeds(2, &[vec![ONE, ZERO]], 0.0, &Tolerance::default()).unwrap();
        let t = to_ntuple(&f, &[ONE, ZERO]).unwrap();
        assert!(max_abs_diff_vec(&t.values, &[ONE, ZERO]) < 1e-15);
    }

    #[test]
    fn round_trips_and_scalar_products() {
        let f = catalog_family(FamilyName::C48, 1.1).unwrap();
        let mut rng = rng_for(3, 0);
        for _ in 0..50 {
            let a = random_state(&mut rng, 4);
            let b = random_state(&mut rng, 4);
            let t = to_ntuple(&f, &a).unwrap();
            assert!((t.norm_sqr() - 1.0).abs() < 1e-12);
            assert!(t.kernel_residual(&f) < 1e-12);
            assert!(max_abs_diff_vec(&from_ntuple(&f, &t).unwrap(), &a) < 1e-12);
            let (x, y) = scalar_product_check(&f, &b, &a).unwrap();
            assert!((x - y).norm() < 1e-12);
        }
    }

    #[test]
    fn projector_column_maps_to_coherent_state() {
        let f = catalog_family(FamilyName::C36, 0.4).unwrap();
        let p = overlap_projector(&f);
        let t = NTuple::new(&f, p.matrix().column(2)).unwrap();
        let v = from_ntuple(&f, &t).unwrap();
        assert!(max_abs_diff_vec(&v, &f.matrix().column(2)) < 1e-12);
    }

    #[test]
    fn density_of_coherent_state() {
        let f = catalog_family(FamilyName::C36, 0.9).unwrap();
        let p = overlap_projector(&f);
        let a0 = f.state(0);
        let dn = density_ntuple(&f, &outer(&a0, &a0)).unwrap();
        let k = f.n() as f64 / f.d() as f64;
        for r in 0..6 {
            for s in 0..6 {
                let want = p.matrix()[(r, 0)] * p.matrix()[(0, s)] * k;
                assert!((dn.values[(r, s)] - want).norm() < 1e-12);
            }
        }
        assert!((dn.diagonal_sum() - ONE).norm() < 1e-12);
        let mixed = ComplexMatrix::identity(3).scale_real(1.0 / 3.0);
        let dm = density_ntuple(&f, &mixed).unwrap();
        assert!(
            dm.values
                .max_abs_diff(&p.matrix().scale_real(1.0 / 3.0))
                .unwrap()
                < 1e-12
        );
        let bad = ComplexMatrix::from_fn(3, 3, |i, j| if i < j { ONE } else { ZERO });
        assert!(matches!(
            density_ntuple(&f, &bad),
            Err(Error::InvalidDensity(_))
        ));
    }

    #[test]
    fn density_of_orbit_matrix_is_constant_along_orbit() {
        let f = catalog_family(FamilyName::C36, 0.9).unwrap();
        let sigma = orbit_matrices(&f).unwrap().sigma(0, 0).to_matrix();
        let dn = density_ntuple(&f, &sigma).unwrap();
        for mu in 0..2 {
            let base = dn.values[(f.index(0, mu), f.index(0, mu))];
            for rh in 1..3 {
                assert!((dn.values[(f.index(rh, mu), f.index(rh, mu))] - base).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn stroboscopic_evolution_permutes_orbit_blocks() {
        let f = catalog_family(FamilyName::C48, 0.6).unwrap();
        let t = to_ntuple(&f, &random_state(&mut rng_for(9, 1), 4)).unwrap();
        let before = orbit_expectations(&t);
        assert!((before.iter().sum::<f64>() - 8.0 / 16.0).abs() < 1e-12);
        let one = stroboscopic_evolve(&f, &t, 1).unwrap();
        for mu in 0..2 {
            for rh in 0..4 {
                assert!((one.at(rh + 1, mu) - t.at(rh, mu)).norm() < 1e-12);
            }
        }
        for (a, b) in before.iter().zip(orbit_expectations(&one)) {
            assert!((a - b).abs() < 1e-12);
        }
        let full = stroboscopic_evolve(&f, &t, 4).unwrap();
        assert!(max_abs_diff_vec(&full.values, &t.values) < 1e-12);
        // same as representing X^3|f⟩ from scratch
        let state = from_ntuple(&f, &t).unwrap();
        let x3 = crate::numerics::shift_matrix(4).unwrap().pow(3).unwrap();
        let direct = to_ntuple(&f, &x3.mul_vec(&state).unwrap()).unwrap();
        let three = stroboscopic_evolve(&f, &t, -1).unwrap();
        assert!(max_abs_diff_vec(&direct.values, &three.values) < 1e-12);
    }

    #[test]
    fn orbit_expectation_matches_sigma() {
        let f = catalog_family(FamilyName::C36, 1.3).unwrap();
        let s = 1.0 / 14f64.sqrt();
        let f1 = vec![
            C64::new(s, 0.0),
            C64::new(-3.0 * s, 0.0),
            C64::new(2.0 * s, 0.0),
        ];
        let t = to_ntuple(&f, &f1).unwrap();
        let z = f.z();
        let want = 1.0 / 3.0 - (z + z.conj()).re / 12.0;
        assert!((orbit_expectations(&t)[0] - want).abs() < 1e-12);
    }
}
