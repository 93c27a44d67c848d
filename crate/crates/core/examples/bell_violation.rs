//! The orbit Bell-like inequality Σ_r p(a(r)) ≥ 1 and its violation by a Fourier state.

use cyclic_coherent::cli::reports::theta_grid;
use cyclic_coherent::families::{catalog_family, FamilyName};
use cyclic_coherent::logic::{bell_report, violation_scan};

fn main() -> cyclic_coherent::Result<()> {
    let f = catalog_family(FamilyName::C36, 0.0)?;
    let r = bell_report(&f, 0, None)?;
    println!("C36 z=1 orbit 0: A eigenvalues {:?}", r.eigenvalues);
    println!(
        "witness Fourier state nu={:?}: sum p = {:.6} (< 1 violates), complement sum {:.6} (> d-1 violates)",
        r.witness_nu, r.sum_direct, r.sum_complement
    );

    for name in FamilyName::ESTABLISHED {
        let scan = violation_scan(name, 0, &theta_grid(72))?;
        let worst = scan
            .iter()
            .map(|p| p.min_eig)
            .fold(f64::NEG_INFINITY, f64::max);
        let violated = scan.iter().filter(|p| p.violated).count();
        let no_span: Vec<String> = scan
            .iter()
            .filter(|p| !p.hypothesis_met)
            .map(|p| format!("{:.4}", p.theta))
            .collect();
        println!(
            "{name:>4}: violated at {violated}/72 angles, least negative min eigenvalue {worst:.4}, orbit fails to span at [{}]",
            no_span.join(" ")
        );
    }
    Ok(())
}
