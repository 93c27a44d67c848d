//! Literal entry tables for the six named families.
//!
//! Each table is the d×n matrix `M` with its printed prefactor; `z = exp(iθ_z)` and
//! `ω = exp(2πi/3)` are substituted at construction time.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CoherentFamily, FamilyLabel};
use crate::error::{Error, Result};
use crate::numerics::{phase, ComplexMatrix, Tolerance, C64};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum FamilyName {
    C36,
    C48,
    C412,
    C510,
    C515,
    C612,
}

impl FamilyName {
    pub const ALL: [FamilyName; 6] = [
        FamilyName::C36,
        FamilyName::C48,
        FamilyName::C412,
        FamilyName::C510,
        FamilyName::C515,
        FamilyName::C612,
    ];

    /// The three families whose ultra-quantum behaviour is established.
    pub const ESTABLISHED: [FamilyName; 3] = [FamilyName::C36, FamilyName::C48, FamilyName::C412];

    /// The generalised families for which the Grothendieck and Bell behaviour is open.
    pub const OPEN_PROBLEM: [FamilyName; 3] =
        [FamilyName::C510, FamilyName::C515, FamilyName::C612];

    pub fn dims(self) -> (usize, usize) {
        match self {
            FamilyName::C36 => (3, 6),
            FamilyName::C48 => (4, 8),
            FamilyName::C412 => (4, 12),
            FamilyName::C510 => (5, 10),
            FamilyName::C515 => (5, 15),
            FamilyName::C612 => (6, 12),
        }
    }

    pub fn is_open_problem(self) -> bool {
        Self::OPEN_PROBLEM.contains(&self)
    }

    /// Default special values of θ_z where degeneracies occur.
    ///
    /// C36: the phase conditions `cos(φ_i - φ_{i+1} + θ) = 0` close only for
    /// θ ≡ π/6 mod π/3 (π/2 is one of them). C48: the equal-modulus conditions close only
    /// for θ ≡ 0 mod π/4. C412 and C515: θ ∈ {0, ±2π/3}. C510 and C612 have no
    /// curated list.
    pub fn special_thetas(self) -> Vec<f64> {
        match self {
            FamilyName::C36 => (0..6).map(|k| PI / 6.0 + k as f64 * PI / 3.0).collect(),
            FamilyName::C48 => (0..8).map(|k| k as f64 * PI / 4.0).collect(),
            FamilyName::C412 | FamilyName::C515 => vec![0.0, 2.0 * PI / 3.0, 4.0 * PI / 3.0],
            FamilyName::C510 | FamilyName::C612 => Vec::new(),
        }
    }

    /// θ_z values printed as special points in the lemma on uniform moduli.
    pub fn lemma_special_thetas(self) -> Vec<f64> {
        match self {
            FamilyName::C36 | FamilyName::C48 => vec![PI / 2.0],
            FamilyName::C412 => vec![0.0, 2.0 * PI / 3.0, -2.0 * PI / 3.0],
            _ => Vec::new(),
        }
    }
}

impl fmt::Display for FamilyName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyName::C36 => "C36",
            FamilyName::C48 => "C48",
            FamilyName::C412 => "C412",
            FamilyName::C510 => "C510",
            FamilyName::C515 => "C515",
            FamilyName::C612 => "C612",
        };
        f.write_str(s)
    }
}

impl FromStr for FamilyName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm: String = s
            .chars()
            .filter(|c| !matches!(c, '(' | ')' | ',' | ' ' | '_' | '-'))
            .collect::<String>()
            .to_ascii_uppercase();
        Self::ALL
            .into_iter()
            .find(|f| f.to_string() == norm)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// Symbols appearing in the printed matrices.
#[derive(Clone, Copy)]
enum Sym {
    O,
    I,
    NegI,
    Z,
    NegZ,
    W,
    W2,
}

use Sym::{NegI, NegZ, I, O, W, W2, Z};

impl Sym {
    fn value(self, z: C64, w: C64) -> C64 {
        match self {
            O => C64::new(0.0, 0.0),
            I => C64::new(1.0, 0.0),
            NegI => C64::new(-1.0, 0.0),
            Z => z,
            NegZ => -z,
            W => w,
            W2 => w * w,
        }
    }
}

const C36_TABLE: [[Sym; 6]; 3] = [
    [I, Z, O, I, NegZ, O],
    [Z, O, I, NegZ, O, I],
    [O, I, Z, O, I, NegZ],
];

const C48_TABLE: [[Sym; 8]; 4] = [
    [Z, I, O, O, Z, NegI, O, O],
    [I, O, O, Z, NegI, O, O, Z],
    [O, O, Z, I, O, O, Z, NegI],
    [O, Z, I, O, O, Z, NegI, O],
];

const C412_TABLE: [[Sym; 12]; 4] = [
    [Z, I, I, O, Z, W, W2, O, Z, W2, W, O],
    [I, I, O, Z, W, W2, O, Z, W2, W, O, Z],
    [I, O, Z, I, W2, O, Z, W, W, O, Z, W2],
    [O, Z, I, I, O, Z, W, W2, O, Z, W2, W],
];

const C510_TABLE: [[Sym; 10]; 5] = [
    [Z, I, O, O, O, NegZ, I, O, O, O],
    [I, O, O, O, Z, I, O, O, O, NegZ],
    [O, O, O, Z, I, O, O, O, NegZ, I],
    [O, O, Z, I, O, O, O, NegZ, I, O],
    [O, Z, I, O, O, O, NegZ, I, O, O],
];

const C515_TABLE: [[Sym; 15]; 5] = [
    [Z, I, I, O, O, Z, W, W2, O, O, Z, W2, W, O, O],
    [I, I, O, O, Z, W, W2, O, O, Z, W2, W, O, O, Z],
    [I, O, O, Z, I, W2, O, O, Z, W, W, O, O, Z, W2],
    [O, O, Z, I, I, O, O, Z, W, W2, O, O, Z, W2, W],
    [O, Z, I, I, O, O, Z, W, W2, O, O, Z, W2, W, O],
];

const C612_TABLE: [[Sym; 12]; 6] = [
    [Z, I, O, O, O, O, NegZ, I, O, O, O, O],
    [I, O, O, O, O, Z, I, O, O, O, O, NegZ],
    [O, O, O, O, Z, I, O, O, O, O, NegZ, I],
    [O, O, O, Z, I, O, O, O, O, NegZ, I, O],
    [O, O, Z, I, O, O, O, O, NegZ, I, O, O],
    [O, Z, I, O, O, O, O, NegZ, I, O, O, O],
];

fn build<const N: usize>(table: &[[Sym; N]], prefactor: f64, theta_z: f64) -> ComplexMatrix {
    let z = phase(theta_z);
    let w = phase(2.0 * PI / 3.0);
    ComplexMatrix::from_fn(table.len(), N, |i, j| table[i][j].value(z, w) * prefactor)
}

/// The catalog matrix `M` for `name` at `z = exp(i·theta_z)`, without validation.
pub fn catalog_matrix(name: FamilyName, theta_z: f64) -> ComplexMatrix {
    match name {
        FamilyName::C36 => build(&C36_TABLE, 0.5, theta_z),
        FamilyName::C48 => build(&C48_TABLE, 0.5, theta_z),
        FamilyName::C412 => build(&C412_TABLE, 1.0 / 3.0, theta_z),
        FamilyName::C510 => build(&C510_TABLE, 0.5, theta_z),
        FamilyName::C515 => build(&C515_TABLE, 1.0 / 3.0, theta_z),
        FamilyName::C612 => build(&C612_TABLE, 0.5, theta_z),
    }
}

/// Builds a catalog family and checks every structural invariant.
pub fn catalog_family(name: FamilyName, theta_z: f64) -> Result<CoherentFamily> {
    CoherentFamily::from_matrix(
        catalog_matrix(name, theta_z),
        theta_z,
        FamilyLabel::Catalog(name),
        &Tolerance::uniform(1e-10)?,
    )
}

/// Name lookup that also accepts lower case and the `C(3,6)` spelling.
pub fn catalog_family_by_name(name: &str, theta_z: f64) -> Result<CoherentFamily> {
    catalog_family(name.parse()?, theta_z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{max_abs_diff_vec, ComplexMatrix};

    #[test]
    fn names_parse_and_print() {
        for f in FamilyName::ALL {
            assert_eq!(f.to_string().parse::<FamilyName>().unwrap(), f);
        }
        assert_eq!("c(4,12)".parse::<FamilyName>().unwrap(), FamilyName::C412);
        assert!(matches!(
            "C77".parse::<FamilyName>(),
            Err(Error::UnknownFamily(_))
        ));
        assert!(catalog_family_by_name("C99", 0.0).is_err());
    }

    #[test]
    fn c36_first_states_at_z_one() {
        let f = catalog_family(FamilyName::C36, 0.0).unwrap();
        let s = 1.0 / 2f64.sqrt();
        let a0 = [C64::new(s, 0.0), C64::new(s, 0.0), C64::new(0.0, 0.0)];
        let a3 = [C64::new(s, 0.0), C64::new(-s, 0.0), C64::new(0.0, 0.0)];
        assert!(max_abs_diff_vec(&f.state(0), &a0) < 1e-15);
        assert!(max_abs_diff_vec(&f.state(3), &a3) < 1e-15);
    }

    #[test]
    fn c48_resolves_identity_for_any_theta() {
        for k in 0..13 {
            let m = catalog_matrix(FamilyName::C48, 0.487 * k as f64);
            let res = m
                .matmul(&m.adjoint())
                .unwrap()
                .max_abs_diff(&ComplexMatrix::identity(4))
                .unwrap();
            assert!(res < 1e-12);
        }
    }

    #[test]
    fn c510_has_two_orbits_of_distinct_states() {
        let f = catalog_family(FamilyName::C510, PI / 3.0).unwrap();
        assert_eq!((f.d(), f.n(), f.orbit_count()), (5, 10, 2));
        for r in 0..10 {
            for s in r + 1..10 {
                assert!(max_abs_diff_vec(&f.state(r), &f.state(s)) > 1e-3);
            }
        }
    }

    #[test]
    fn every_catalog_entry_validates() {
        for name in FamilyName::ALL {
            for k in 0..7 {
                let f = catalog_family(name, 0.9 * k as f64).unwrap();
                assert_eq!((f.d(), f.n()), name.dims());
            }
        }
    }
}
