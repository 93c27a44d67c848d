use std::f64::consts::TAU;

use cyclic_coherent::families::{
    catalog_family, isotropy_profile, orbit_matrices, overlap_projector, CoherentFamily, FamilyName,
};
use cyclic_coherent::grothendieck::{
    classical_form, embed_with_zeros, estimate_g, norm_n, quantum_form, EstimateOptions,
};
use cyclic_coherent::logic::{bell_report, quantum_prob, ClassicalSpace, Subspace};
use cyclic_coherent::numerics::{
    dft_matrix, is_circulant, largest_singular_value, norm, outer, phase, shift_matrix,
    CirculantOperator, ComplexMatrix, Tolerance, C64,
};
use cyclic_coherent::representation::{
    from_ntuple, orbit_expectations, stroboscopic_evolve, to_ntuple, NTuple,
};
use cyclic_coherent::sampling::{random_matrix, random_phases, random_state, rng_for};
use proptest::prelude::*;
use rand::Rng;

fn family() -> impl Strategy<Value = CoherentFamily> {
    (0..FamilyName::ALL.len(), 0.0..TAU)
        .prop_map(|(k, theta)| catalog_family(FamilyName::ALL[k], theta).unwrap())
}

fn established() -> impl Strategy<Value = CoherentFamily> {
    (0..FamilyName::ESTABLISHED.len(), 0.0..TAU)
        .prop_map(|(k, theta)| catalog_family(FamilyName::ESTABLISHED[k], theta).unwrap())
}

fn random_subspace<R: Rng>(rng: &mut R, d: usize) -> Subspace {
    let k = rng.random_range(0..=d);
    let vs: Vec<_> = (0..k).map(|_| random_state(rng, d)).collect();
    Subspace::span(d, &vs).unwrap()
}

fn random_density<R: Rng>(rng: &mut R, d: usize) -> ComplexMatrix {
    let g = random_matrix(rng, d, d);
    let rho = g.matmul(&g.adjoint()).unwrap();
    let t = rho.trace().unwrap().re;
    rho.scale_real(1.0 / t)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn circulant_diagonalised_by_fourier_vectors(d in 2usize..9, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 0);
        let c = CirculantOperator::new(random_matrix(&mut rng, 1, d).row(0).to_vec()).unwrap();
        let m = c.to_matrix();
        prop_assert!(is_circulant(&m, 1e-12));
        let back = CirculantOperator::from_matrix(&m, 1e-12).unwrap();
        prop_assert!(back.max_abs_diff(&c).unwrap() <= 1e-15);
        for (nu, lambda) in c.eigenvalues().into_iter().enumerate() {
            let v = CirculantOperator::fourier_vector(d, nu);
            let cv = m.mul_vec(&v).unwrap();
            let err: f64 = cv.iter().zip(&v).map(|(a, b)| (a - lambda * b).norm()).fold(0.0, f64::max);
            prop_assert!(err <= 1e-11, "nu {nu}: {err}");
        }
    }

    #[test]
    fn shift_has_order_d(d in 2usize..10) {
        let x = shift_matrix(d).unwrap();
        prop_assert_eq!(x.pow(d as u32).unwrap(), ComplexMatrix::identity(d));
    }

    #[test]
    fn phased_fourier_matrices_have_unit_spectral_norm(d in 2usize..9, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 1);
        let f = dft_matrix(d).unwrap();
        let a = random_phases(&mut rng, d);
        let b = random_phases(&mut rng, d);
        let u = ComplexMatrix::from_fn(d, d, |i, j| phase(a[i]) * f[(i, j)] * phase(b[j]));
        let s = largest_singular_value(&u, 500, &Tolerance::default());
        prop_assert!((s.value - 1.0).abs() <= 1e-8, "{}", s.value);
    }

    #[test]
    fn projector_and_orbit_identities(f in family()) {
        let p = overlap_projector(&f);
        let r = p.report();
        prop_assert!(r.idempotent_residual <= 1e-12);
        prop_assert!(r.trace_residual <= 1e-12);
        prop_assert!(r.zero_pattern_residual <= 1e-12);
        let expected = (f.d() as f64 / f.n() as f64).sqrt();
        prop_assert!((norm_n(p.matrix()) - expected).abs() <= 1e-12);
        let o = orbit_matrices(&f).unwrap().report();
        prop_assert!(o.transpose_identity_residual <= 1e-12);
        prop_assert!(o.tau_diagonal_residual <= 1e-12);
        prop_assert!(o.vv2_diagonal_residual <= 1e-12);
        prop_assert!(o.vv2_offdiagonal_residual <= 1e-12);
    }

    #[test]
    fn overlap_rows_are_permutations_of_each_other(f in established()) {
        let iso = isotropy_profile(&f, 8, 1e-12).unwrap();
        prop_assert!(iso.isotropic && iso.max_row_spread <= 1e-12);
    }

    #[test]
    fn range_complement_is_annihilated(f in family(), seed in any::<u64>()) {
        let mut rng = rng_for(seed, 2);
        let n = f.n();
        let h = random_state(&mut rng, n);
        let ph = overlap_projector(&f).matrix().mul_vec(&h).unwrap();
        let g: Vec<C64> = h.iter().zip(&ph).map(|(a, b)| a - b).collect();
        let pg = overlap_projector(&f).matrix().mul_vec(&g).unwrap();
        prop_assert!(norm(&pg) <= 1e-11);
        let back = from_ntuple(&f, &NTuple::new(&f, g).unwrap()).unwrap();
        prop_assert!(norm(&back) <= 1e-11);
    }

    #[test]
    fn stroboscopic_steps_permute_each_orbit_block(f in family(), seed in any::<u64>(), steps in -20i64..20) {
        let mut rng = rng_for(seed, 3);
        let t = to_ntuple(&f, &random_state(&mut rng, f.d())).unwrap();
        let moved = stroboscopic_evolve(&f, &t, steps).unwrap();
        let sorted = |b: &[C64]| {
            let mut m: Vec<f64> = b.iter().map(|z| z.norm()).collect();
            m.sort_by(f64::total_cmp);
            m
        };
        for mu in 0..f.orbit_count() {
            prop_assert_eq!(sorted(t.orbit_block(mu)), sorted(moved.orbit_block(mu)));
        }
        for (a, b) in orbit_expectations(&t).iter().zip(orbit_expectations(&moved)) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
    }

    #[test]
    fn estimate_is_certified_and_bounded(rows in 2usize..6, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 4);
        let theta = random_matrix(&mut rng, rows, rows);
        let est = estimate_g(&theta, &EstimateOptions { restarts: 4, iters: 200, seed, ..EstimateOptions::default() }).unwrap();
        let recomputed = classical_form(&theta, &est.best_a, &est.best_b).unwrap();
        prop_assert!((recomputed - est.g_lower).abs() <= 1e-12);
        prop_assert!(est.g_lower <= est.upper_bound + 1e-9);
        prop_assert!(est.monotone);
    }

    #[test]
    fn quantum_form_ignores_zero_padding(d in 2usize..6, k in 1usize..4, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 5);
        let theta = random_matrix(&mut rng, d, d);
        let v = random_matrix(&mut rng, d, d);
        let w = random_matrix(&mut rng, d, d);
        let q = quantum_form(&theta, &v, &w).unwrap().q;
        let e = embed_with_zeros(&theta, k, Some(&v), Some(&w));
        let qe = quantum_form(&e.theta, e.v.as_ref().unwrap(), e.w.as_ref().unwrap()).unwrap().q;
        prop_assert!((q - qe).abs() <= 1e-12 * q.max(1.0));
    }

    #[test]
    fn projector_form_closed_value(f in established(), lambda in 0.01f64..1.0) {
        let p = overlap_projector(&f).into_matrix();
        let vw = p.scale_real(1.0 / norm_n(&p));
        let q = quantum_form(&p.scale_real(lambda), &vw, &vw).unwrap();
        prop_assert!(q.admissible);
        prop_assert!((q.q - lambda * f.n() as f64).abs() <= 1e-12);
    }

    #[test]
    fn lattice_laws(d in 3usize..5, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 6);
        let h1 = random_subspace(&mut rng, d);
        let h2 = random_subspace(&mut rng, d);
        let id = ComplexMatrix::identity(d);
        let dc = h1.complement().complement().projector().max_abs_diff(&h1.projector()).unwrap();
        prop_assert!(dc <= 1e-10);
        let pp = h1.projector().add(&h1.complement().projector()).unwrap().max_abs_diff(&id).unwrap();
        prop_assert!(pp <= 1e-10);
        let join = h1.join(&h2).unwrap();
        let meet = h1.meet(&h2).unwrap();
        prop_assert_eq!(join.dim() + meet.dim(), h1.dim() + h2.dim());
        prop_assert!(h1.is_within(&join, 1e-10).unwrap());
        prop_assert!(meet.is_within(&h2, 1e-10).unwrap());
        let rho = random_density(&mut rng, d);
        // capacities are monotone along inclusions
        let (pm, p1, pj) = (
            quantum_prob(&meet, &rho).unwrap(),
            quantum_prob(&h1, &rho).unwrap(),
            quantum_prob(&join, &rho).unwrap(),
        );
        prop_assert!(pm <= p1 + 1e-12 && p1 <= pj + 1e-12);
    }

    #[test]
    fn bell_sums_match_operator_expectation(f in family(), seed in any::<u64>()) {
        let mut rng = rng_for(seed, 7);
        let rho = random_density(&mut rng, f.d());
        for mu in 0..f.orbit_count() {
            let r = bell_report(&f, mu, Some(&rho)).unwrap();
            prop_assert!((r.sum_direct - 1.0 - r.expectation_a).abs() <= 1e-12);
            prop_assert!((r.sum_direct + r.sum_complement - f.d() as f64).abs() <= 1e-12);
            prop_assert!(r.trace_a.abs() <= 1e-12);
        }
    }

    #[test]
    fn classical_spaces_obey_frechet_and_boole(omega in 1usize..9, k in 1usize..6, seed in any::<u64>()) {
        let mut rng = rng_for(seed, 8);
        let report = ClassicalSpace::random(&mut rng, omega, k).unwrap().check();
        prop_assert!(report.all_hold(), "{report:?}");
    }

    #[test]
    fn pure_state_orbit_expectations_sum_to_n_over_d_squared(f in family(), seed in any::<u64>()) {
        let mut rng = rng_for(seed, 9);
        let psi = random_state(&mut rng, f.d());
        let t = to_ntuple(&f, &psi).unwrap();
        let total: f64 = orbit_expectations(&t).iter().sum();
        let expected = f.n() as f64 / (f.d() * f.d()) as f64;
        prop_assert!((total - expected).abs() <= 1e-12);
        let rho = outer(&psi, &psi);
        prop_assert!((rho.trace().unwrap().re - 1.0).abs() <= 1e-12);
    }
}
