//! Searches for states with uniform n-tuple modulus |f~(r)|^2 = 1/n across a θ_z grid.
//!
//! cargo run --release --example lemma_feasibility -- C36

use cyclic_coherent::cli::reports::theta_grid;
use cyclic_coherent::families::{catalog_family, FamilyName};
use cyclic_coherent::representation::{uniform_modulus_search, SearchMode, SearchOptions};

fn main() -> cyclic_coherent::Result<()> {
    let name: FamilyName = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "C36".into())
        .parse()?;
    let opts = SearchOptions::default();
    let mut thetas = theta_grid(24);
    thetas.extend(name.lemma_special_thetas());
    for theta in thetas {
        let f = catalog_family(name, theta)?;
        let r = uniform_modulus_search(&f, &opts);
        let full = uniform_modulus_search(
            &f,
            &SearchOptions {
                mode: SearchMode::FullState,
                restarts: 8,
                ..opts
            },
        );
        println!(
            "{name} theta {theta:+.4}: equal-modulus {:.3e} ({:?}), unrestricted {:.3e}",
            r.best_residual, r.verdict, full.best_residual
        );
    }
    Ok(())
}
