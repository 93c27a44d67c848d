use serde::{Deserialize, Serialize};

use super::CoherentFamily;
use crate::error::{Error, Result};

pub const DEFAULT_NU_MAX: u32 = 8;

/// Values closer than this are merged into one multiset entry.
const GROUPING_TOL: f64 = 1e-9;

/// Per-row distribution of overlap moduli `|⟨a_z(r)|a_z(s)⟩|` and the power sums
/// `S(ν) = Σ_s |⟨a_z(r)|a_z(s)⟩|^ν`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IsotropyProfile {
    /// `(modulus, multiplicity)` for row 0, in descending modulus.
    pub row_multiset: Vec<(f64, usize)>,
    /// `(ν, S(ν))` for ν = 1..=nu_max, evaluated on row 0.
    pub s_values: Vec<(u32, f64)>,
    /// Largest difference between the sorted modulus lists of any row and row 0.
    pub max_row_spread: f64,
    /// Largest deviation of `S(ν)` across rows.
    pub max_s_spread: f64,
    pub isotropic: bool,
}

impl IsotropyProfile {
    pub fn values(&self) -> Vec<f64> {
        self.row_multiset.iter().map(|p| p.0).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.row_multiset.iter().map(|p| p.1).collect()
    }

    pub fn s(&self, nu: u32) -> Option<f64> {
        self.s_values.iter().find(|p| p.0 == nu).map(|p| p.1)
    }
}

fn group(sorted_desc: &[f64]) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted_desc {
        match out.last_mut() {
            Some((rep, count)) if (*rep - v).abs() <= GROUPING_TOL => *count += 1,
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Computes the isotropy profile. Rows that disagree beyond `abs_tol` are reported with
/// `isotropic = false` rather than as an error; that is a legitimate outcome for
/// seed-generated families.
pub fn isotropy_profile(f: &CoherentFamily, nu_max: u32, abs_tol: f64) -> Result<IsotropyProfile> {
    if nu_max < 1 {
        return Err(Error::InvalidInput("nu_max must be at least 1".into()));
    }
    let n = f.n();
    let states: Vec<_> = (0..n).map(|r| f.state(r)).collect();
    let rows: Vec<Vec<f64>> = (0..n)
        .map(|r| {
            let mut v: Vec<f64> = (0..n)
                .map(|s| crate::numerics::inner(&states[r], &states[s]).norm())
                .collect();
            v.sort_by(|a, b| b.total_cmp(a));
            v
        })
        .collect();
    let power_sum = |row: &[f64], nu: u32| row.iter().map(|x| x.powi(nu as i32)).sum::<f64>();
    let mut max_row_spread: f64 = 0.0;
    let mut max_s_spread: f64 = 0.0;
    for row in &rows[1..] {
        for (a, b) in row.iter().zip(&rows[0]) {
            max_row_spread = max_row_spread.max((a - b).abs());
        }
        for nu in 1..=nu_max {
            max_s_spread = max_s_spread.max((power_sum(row, nu) - power_sum(&rows[0], nu)).abs());
        }
    }
    Ok(IsotropyProfile {
        row_multiset: group(&rows[0]),
        s_values: (1..=nu_max)
            .map(|nu| (nu, power_sum(&rows[0], nu)))
            .collect(),
        max_row_spread,
        max_s_spread,
        isotropic: max_row_spread <= abs_tol,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{catalog_family, family_from_seeds, FamilyName};
    use crate::numerics::{normalized, Tolerance, C64};

    #[test]
    fn c36_values_and_power_sums() {
        let p = isotropy_profile(&catalog_family(FamilyName::C36, 1.0).unwrap(), 8, 1e-12).unwrap();
        assert!(p.isotropic);
        assert_eq!(p.multiplicities(), vec![1, 4, 1]);
        let v = p.values();
        assert!((v[0] - 1.0).abs() < 1e-14 && (v[1] - 0.5).abs() < 1e-14 && v[2].abs() < 1e-14);
        for nu in 1..=8 {
            let expect = 1.0 + 2f64.powi(2 - nu as i32);
            assert!((p.s(nu).unwrap() - expect).abs() < 1e-12);
        }
    }

    #[test]
    fn s2_equals_n_over_d() {
        for name in FamilyName::ALL {
            let f = catalog_family(name, 0.37).unwrap();
            let p = isotropy_profile(&f, 3, 1e-12).unwrap();
            assert!((p.s(2).unwrap() - f.n() as f64 / f.d() as f64).abs() < 1e-12);
        }
    }

    #[test]
    fn nu_max_zero_is_invalid() {
        let f = catalog_family(FamilyName::C36, 0.0).unwrap();
        assert!(isotropy_profile(&f, 0, 1e-12).is_err());
    }

    #[test]
    fn anisotropic_seeded_family_is_reported_not_rejected() {
        // Fourier power spectra (0.6, 0.3, 0.1), (0.2, 0.5, 0.3), (0.2, 0.2, 0.6) add to 1
        // in every mode, so the three orbits resolve the identity, but their
        // autocorrelations differ.
        let d = 3;
        let f = crate::numerics::dft_matrix(d).unwrap();
        let mix = |w: [f64; 3]| -> Vec<C64> {
            let v: Vec<C64> = (0..d)
                .map(|i| (0..d).map(|k| f[(i, k)] * w[k].sqrt()).sum())
                .collect();
            normalized(&v).unwrap()
        };
        let seeds = vec![
            mix([0.6, 0.3, 0.1]),
            mix([0.2, 0.5, 0.3]),
            mix([0.2, 0.2, 0.6]),
        ];
        let fam = family_from_seeds(d, &seeds, 0.0, &Tolerance::default()).unwrap();
        let p = isotropy_profile(&fam, 4, 1e-12).unwrap();
        assert!(!p.isotropic);
        assert!(p.max_row_spread > 1e-3);
        assert!((p.s(2).unwrap() - 3.0).abs() < 1e-12);
    }
}
