//! Represents a random state as an n-tuple over C(4,12,z) and evolves it stroboscopically.

use cyclic_coherent::families::{catalog_family, FamilyName};
use cyclic_coherent::numerics::max_abs_diff_vec;
use cyclic_coherent::representation::{
    from_ntuple, orbit_expectations, scalar_product_check, stroboscopic_evolve, to_ntuple,
};
use cyclic_coherent::sampling::{random_state, rng_for};

fn main() -> cyclic_coherent::Result<()> {
    let f = catalog_family(FamilyName::C412, 1.1)?;
    let mut rng = rng_for(42, 0);
    let psi = random_state(&mut rng, f.d());
    let phi = random_state(&mut rng, f.d());

    let t = to_ntuple(&f, &psi)?;
    println!("sum |f~|^2 = {:.15}", t.norm_sqr());
    println!(
        "kernel residual |Pi f~ - f~| = {:.1e}",
        t.kernel_residual(&f)
    );
    println!(
        "round trip error = {:.1e}",
        max_abs_diff_vec(&from_ntuple(&f, &t)?, &psi)
    );
    let (direct, via) = scalar_product_check(&f, &phi, &psi)?;
    println!("<phi|psi> = {direct:.6}, via n-tuples {via:.6}");

    let mut cur = t;
    for step in 0..=f.d() {
        let e: Vec<String> = orbit_expectations(&cur)
            .iter()
            .map(|v| format!("{v:.12}"))
            .collect();
        let block: Vec<String> = cur
            .orbit_block(0)
            .iter()
            .map(|z| format!("{:.3}", z.norm()))
            .collect();
        println!(
            "t={step}: orbit expectations [{}], |f~| on orbit 0 [{}]",
            e.join(", "),
            block.join(" ")
        );
        cur = stroboscopic_evolve(&f, &cur, 1)?;
    }
    Ok(())
}
