//! Matrix files: write a catalog matrix as JSON and CSV, read it back, and validate a
//! family built from orbit seeds.

use cyclic_coherent::families::{
    catalog_matrix, family_from_seeds, CoherentFamily, FamilyLabel, FamilyName,
};
use cyclic_coherent::numerics::{
    dft_matrix, matrix_from_csv, matrix_from_json, matrix_to_csv, matrix_to_json, Tolerance, C64,
};

fn main() -> cyclic_coherent::Result<()> {
    let m = catalog_matrix(FamilyName::C36, 0.25);
    let json = matrix_to_json(&m);
    let csv = matrix_to_csv(&m);
    println!("{json}\n{csv}");
    assert_eq!(matrix_from_json(&json)?, m);
    assert_eq!(matrix_from_csv(&csv)?, m);

    let tol = Tolerance::default();
    let f = CoherentFamily::from_matrix(matrix_from_json(&json)?, 0.25, FamilyLabel::Seeded, &tol)?;
    println!(
        "read back: d={} n={} orbits={}",
        f.d(),
        f.n(),
        f.orbit_count()
    );

    // two orbits whose power spectra add up to a constant
    let dft = dft_matrix(4)?;
    let s = 1.0 / 2f64.sqrt();
    let seed = |a: usize, b: usize| -> Vec<C64> {
        (0..4).map(|i| (dft[(i, a)] + dft[(i, b)]) * s).collect()
    };
    let g = family_from_seeds(4, &[seed(0, 1), seed(2, 3)], 0.0, &tol)?;
    println!("seeded family: d={} n={}", g.d(), g.n());

    let bad = m.scale_real(0.9);
    match CoherentFamily::from_matrix(bad, 0.25, FamilyLabel::Seeded, &tol) {
        Err(e) => println!("rejected: {e}"),
        Ok(_) => unreachable!("a scaled frame is not a resolution of the identity"),
    }
    Ok(())
}
