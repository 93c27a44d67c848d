//! Builds every catalog family at one angle and prints its coherence checks.
//!
//! cargo run --example family_catalog -- 0.7

use cyclic_coherent::families::{
    catalog_family, isotropy_profile, orbit_matrices, overlap_projector, span_check,
    verify_resolution, FamilyName,
};
use cyclic_coherent::numerics::Tolerance;

fn main() -> cyclic_coherent::Result<()> {
    let theta: f64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("theta must be a number"))
        .unwrap_or(0.7);
    let tol = Tolerance::default();
    println!("theta_z = {theta}");
    for name in FamilyName::ALL {
        let f = catalog_family(name, theta)?;
        let res = verify_resolution(&f, &tol);
        let p = overlap_projector(&f).report();
        let orb = orbit_matrices(&f)?.report();
        let iso = isotropy_profile(&f, 4, 1e-10)?;
        let spans: Vec<bool> = (0..f.orbit_count())
            .map(|mu| span_check(&f, mu, &tol).map(|s| s.spans))
            .collect::<Result<_, _>>()?;
        println!(
            "{name:>5}  d={} n={}  MM^dag-1 {:.1e}  Pi^2-Pi {:.1e}  orbit {:.1e}  isotropic {}  spans {:?}",
            f.d(),
            f.n(),
            res.residual,
            p.idempotent_residual,
            orb.max_residual(),
            iso.isotropic,
            spans
        );
        let overlaps: Vec<String> = iso
            .row_multiset
            .iter()
            .map(|(v, m)| format!("{v:.4}x{m}"))
            .collect();
        println!("       |<a(0)|a(s)>|: {}", overlaps.join(" "));
    }
    Ok(())
}
