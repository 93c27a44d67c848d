use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};

const MAX_OMEGA: usize = 16;
const TOL: f64 = 1e-12;

/// A finite Kolmogorov space with a list of events given as bitmasks over `Ω`.
#[derive(Debug, Clone, Serialize)]
pub struct ClassicalSpace {
    pub omega_size: usize,
    pub subsets: Vec<u32>,
    pub measure: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClassicalReport {
    pub sum_p: f64,
    pub intersection_empty: bool,
    pub union_covers: bool,
    /// `∩A_i = ∅ ⇒ Σp(A_i) ≤ n − 1`.
    pub frechet_holds: bool,
    /// `∪A_i = Ω ⇒ Σp(A_i) ≥ 1`.
    pub covering_holds: bool,
    /// `p(∪A_i) ≤ Σp(A_i)`.
    pub boole_holds: bool,
    /// `p(Ā) = 1 − p(A)` for every event.
    pub complement_holds: bool,
    /// `p(A∪B) + p(A∩B) = p(A) + p(B)` for every pair.
    pub additivity_holds: bool,
}

impl ClassicalReport {
    pub fn all_hold(&self) -> bool {
        self.frechet_holds
            && self.covering_holds
            && self.boole_holds
            && self.complement_holds
            && self.additivity_holds
    }
}

impl ClassicalSpace {
    pub fn new(omega_size: usize, subsets: Vec<u32>, measure: Vec<f64>) -> Result<Self> {
        if omega_size == 0 || omega_size > MAX_OMEGA {
            return Err(Error::InvalidInput(format!(
                "|Ω| = {omega_size} outside 1..={MAX_OMEGA}"
            )));
        }
        if measure.len() != omega_size {
            return Err(Error::InvalidInput(format!(
                "measure has {} weights for |Ω| = {omega_size}",
                measure.len()
            )));
        }
        if measure.iter().any(|&w| !w.is_finite() || w < 0.0) {
            return Err(Error::InvalidInput(
                "measure weights must be finite and non-negative".into(),
            ));
        }
        let total: f64 = measure.iter().sum();
        if (total - 1.0).abs() > TOL {
            return Err(Error::InvalidInput(format!("measure sums to {total}")));
        }
        let full = Self::full_mask(omega_size);
        if subsets.iter().any(|&s| s & !full != 0) {
            return Err(Error::InvalidInput(
                "subset mentions points outside Ω".into(),
            ));
        }
        Ok(Self {
            omega_size,
            subsets,
            measure,
        })
    }

    fn full_mask(omega_size: usize) -> u32 {
        (1u32 << omega_size) - 1
    }

    /// Random weights (normalised exponentials) and `k` random non-empty events.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, omega_size: usize, k: usize) -> Result<Self> {
        let raw: Vec<f64> = (0..omega_size)
            .map(|_| -rng.random_range(1e-12f64..1.0).ln())
            .collect();
        let total: f64 = raw.iter().sum();
        let mut measure: Vec<f64> = raw.iter().map(|w| w / total).collect();
        // absorb the rounding error so the weights sum to 1 to machine precision
        let drift = 1.0 - measure.iter().sum::<f64>();
        measure[0] = (measure[0] + drift).max(0.0);
        let full = Self::full_mask(omega_size);
        let subsets = (0..k).map(|_| rng.random_range(1..=full)).collect();
        Self::new(omega_size, subsets, measure)
    }

    pub fn prob(&self, mask: u32) -> f64 {
        (0..self.omega_size)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| self.measure[i])
            .sum()
    }

    pub fn check(&self) -> ClassicalReport {
        let full = Self::full_mask(self.omega_size);
        let n = self.subsets.len();
        let sum_p: f64 = self.subsets.iter().map(|&s| self.prob(s)).sum();
        let inter = self.subsets.iter().fold(full, |acc, &s| acc & s);
        let union = self.subsets.iter().fold(0, |acc, &s| acc | s);
        let intersection_empty = n > 0 && inter == 0;
        let union_covers = union == full;
        let frechet_holds = !intersection_empty || sum_p <= (n as f64 - 1.0) + TOL;
        let covering_holds = !union_covers || sum_p >= 1.0 - TOL;
        let boole_holds = self.prob(union) <= sum_p + TOL;
        let complement_holds = self
            .subsets
            .iter()
            .all(|&s| (self.prob(!s & full) - (1.0 - self.prob(s))).abs() <= TOL);
        let additivity_holds = self.subsets.iter().all(|&a| {
            self.subsets.iter().all(|&b| {
                (self.prob(a | b) + self.prob(a & b) - self.prob(a) - self.prob(b)).abs() <= TOL
            })
        });
        ClassicalReport {
            sum_p,
            intersection_empty,
            union_covers,
            frechet_holds,
            covering_holds,
            boole_holds,
            complement_holds,
            additivity_holds,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::rng_for;

    #[test]
    fn two_point_boundary_case() {
        let s = ClassicalSpace::new(2, vec![0b01, 0b10], vec![0.5, 0.5]).unwrap();
        let r = s.check();
        assert!(r.intersection_empty && r.union_covers);
        assert!((r.sum_p - 1.0).abs() < 1e-15);
        assert!(r.all_hold());
    }

    #[test]
    fn random_spaces_never_fail() {
        let mut rng = rng_for(12, 0);
        for _ in 0..200 {
            let omega = rng.random_range(1..=8);
            let k = rng.random_range(1..=5);
            let s = ClassicalSpace::random(&mut rng, omega, k).unwrap();
            assert!(s.check().all_hold(), "{s:?}");
        }
    }

    #[test]
    fn invalid_spaces() {
        assert!(ClassicalSpace::new(2, vec![0b100], vec![0.5, 0.5]).is_err());
        assert!(ClassicalSpace::new(2, vec![1], vec![0.6, 0.5]).is_err());
        assert!(ClassicalSpace::new(17, vec![], vec![0.0; 17]).is_err());
    }
}
