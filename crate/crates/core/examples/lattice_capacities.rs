//! Subspace lattice in H(3): join, meet, complements, and probabilities that are not additive.

use cyclic_coherent::logic::{
    commutator_residual, d_operator, quantum_prob, ClassicalSpace, Subspace,
};
use cyclic_coherent::numerics::{outer, C64};
use cyclic_coherent::sampling::rng_for;

fn c(re: f64) -> C64 {
    C64::new(re, 0.0)
}

fn main() -> cyclic_coherent::Result<()> {
    let s = 1.0 / 2f64.sqrt();
    let h1 = Subspace::line(&[c(1.0), c(0.0), c(0.0)])?;
    let h2 = Subspace::line(&[c(s), c(s), c(0.0)])?;
    let join = h1.join(&h2)?;
    let meet = h1.meet(&h2)?;
    println!(
        "dims: h1 {}, h2 {}, join {}, meet {}, h1 complement {}",
        h1.dim(),
        h2.dim(),
        join.dim(),
        meet.dim(),
        h1.complement().dim()
    );
    let d = d_operator(&h1, &h2)?;
    println!(
        "Tr D = {:.1e}, commutator identity residual {:.1e}",
        d.trace()?.norm(),
        commutator_residual(&h1, &h2)?
    );

    let psi = [c(0.0), c(0.0), c(1.0)];
    let rho = outer(&psi, &psi);
    let p = |h: &Subspace| quantum_prob(h, &rho);
    println!(
        "rho = |e2><e2|: p(h1 v h2) + p(h1 ^ h2) = {:.3}, p(h1) + p(h2) = {:.3}",
        p(&join)? + p(&meet)?,
        p(&h1)? + p(&h2)?
    );
    let phi = [c(s), c(-s), c(0.0)];
    let rho = outer(&phi, &phi);
    let p = |h: &Subspace| quantum_prob(h, &rho);
    println!(
        "rho = |e0-e1><e0-e1|/2: p(h1 v h2) + p(h1 ^ h2) = {:.3}, p(h1) + p(h2) = {:.3}",
        p(&join)? + p(&meet)?,
        p(&h1)? + p(&h2)?
    );

    let mut rng = rng_for(1, 0);
    let space = ClassicalSpace::random(&mut rng, 6, 3)?;
    println!("classical space {:?}", space.subsets);
    println!("{:?}", space.check());
    Ok(())
}
