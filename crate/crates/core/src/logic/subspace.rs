use crate::error::{Error, Result};
use crate::numerics::{range_basis, ComplexMatrix, C64};

/// Singular values above this count toward rank.
pub const RANK_THRESHOLD: f64 = 1e-8;

/// A subspace of `H(d)` held as an orthonormal basis (possibly empty).
#[derive(Debug, Clone)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<C64>>,
}

impl Subspace {
    /// The span of `vectors`, each of length `ambient`.
    pub fn span(ambient: usize, vectors: &[Vec<C64>]) -> Result<Self> {
        if ambient == 0 {
            return Err(Error::InvalidDimension("ambient dimension 0".into()));
        }
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::InvalidDimension(format!(
                "vector of length {} in H({ambient})",
                v.len()
            )));
        }
        if vectors.is_empty() {
            return Ok(Self::zero(ambient));
        }
        let (basis, _) = range_basis(&ComplexMatrix::from_columns(vectors)?, RANK_THRESHOLD);
        Ok(Self {
            ambient,
            basis: basis.map(|b| b.columns()).unwrap_or_default(),
        })
    }

    pub fn line(v: &[C64]) -> Result<Self> {
        Self::span(v.len(), &[v.to_vec()])
    }

    /// The zero subspace `𝒪`.
    pub fn zero(ambient: usize) -> Self {
        Self {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self {
            ambient,
            basis: ComplexMatrix::identity(ambient).columns(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<C64>] {
        &self.basis
    }

    /// `Π(h) = Σ_k |b_k⟩⟨b_k|`.
    pub fn projector(&self) -> ComplexMatrix {
        let d = self.ambient;
        ComplexMatrix::from_fn(d, d, |i, j| {
            self.basis.iter().map(|b| b[i] * b[j].conj()).sum()
        })
    }

    fn same_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::InvalidDimension(format!(
                "subspaces of H({}) and H({})",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }

    /// `h⊥`, the range of `1 − Π(h)`.
    pub fn complement(&self) -> Self {
        let d = self.ambient;
        if self.dim() == 0 {
            return Self::full(d);
        }
        let q = ComplexMatrix::identity(d)
            .sub(&self.projector())
            .expect("same shape");
        let (basis, _) = range_basis(&q, RANK_THRESHOLD);
        Self {
            ambient: d,
            basis: basis.map(|b| b.columns()).unwrap_or_default(),
        }
    }

    /// `h₁ ∨ h₂ = span(h₁ ∪ h₂)`.
    pub fn join(&self, other: &Self) -> Result<Self> {
        self.same_ambient(other)?;
        let all: Vec<Vec<C64>> = self.basis.iter().chain(&other.basis).cloned().collect();
        Self::span(self.ambient, &all)
    }

    /// `h₁ ∧ h₂ = (h₁⊥ ∨ h₂⊥)⊥`.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        Ok(self.complement().join(&other.complement())?.complement())
    }

    /// `h ≺ g`: every basis vector of `h` lies in `g` up to `tol`.
    pub fn is_within(&self, other: &Self, tol: f64) -> Result<bool> {
        self.same_ambient(other)?;
        let p = other.projector();
        Ok(self.basis.iter().all(|b| {
            let pb = p.mul_vec(b).expect("d-vector");
            crate::numerics::max_abs_diff_vec(&pb, b) <= tol
        }))
    }
}

/// `𝔇(h₁, h₂) = Π(h₁∨h₂) + Π(h₁∧h₂) − Π(h₁) − Π(h₂)`.
pub fn d_operator(h1: &Subspace, h2: &Subspace) -> Result<ComplexMatrix> {
    let join = h1.join(h2)?.projector();
    let meet = h1.meet(h2)?.projector();
    join.add(&meet)?.sub(&h1.projector())?.sub(&h2.projector())
}

/// `max |[Π₁, Π₂] − 𝔇·(Π₁ − Π₂)|`.
pub fn commutator_residual(h1: &Subspace, h2: &Subspace) -> Result<f64> {
    let (p1, p2) = (h1.projector(), h2.projector());
    let comm = p1.matmul(&p2)?.sub(&p2.matmul(&p1)?)?;
    let rhs = d_operator(h1, h2)?.matmul(&p1.sub(&p2)?)?;
    comm.max_abs_diff(&rhs)
}

/// Hermitian, unit trace and positive semidefinite, each to `tol`.
pub fn validate_density(rho: &ComplexMatrix, tol: f64) -> Result<()> {
    if !rho.is_square() {
        return Err(Error::InvalidDensity(format!(
            "{}x{} is not square",
            rho.rows(),
            rho.cols()
        )));
    }
    if !rho.is_hermitian(tol) {
        return Err(Error::InvalidDensity("not Hermitian".into()));
    }
    let tr = rho.trace()?;
    if (tr - C64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::InvalidDensity(format!("trace {tr}, expected 1")));
    }
    if !rho.is_psd(tol) {
        return Err(Error::InvalidDensity("not positive semidefinite".into()));
    }
    Ok(())
}

/// `p(h|ρ) = Tr[ρ Π(h)]`.
pub fn quantum_prob(h: &Subspace, rho: &ComplexMatrix) -> Result<f64> {
    validate_density(rho, 1e-10)?;
    if rho.rows() != h.ambient() {
        return Err(Error::InvalidDimension(format!(
            "density on H({}) but subspace in H({})",
            rho.rows(),
            h.ambient()
        )));
    }
    Ok(rho.matmul(&h.projector())?.trace()?.re)
}
