//! Estimates g(Π) for the established families and looks for λ with 1 < 𝔔 ≤ k_G.

use cyclic_coherent::families::{catalog_family, FamilyName};
use cyclic_coherent::grothendieck::{demonstrate_region, DemoOptions, EstimateOptions};

fn main() -> cyclic_coherent::Result<()> {
    let opts = DemoOptions {
        estimate: EstimateOptions {
            restarts: 32,
            ..EstimateOptions::default()
        },
        ..DemoOptions::default()
    };
    for name in FamilyName::ESTABLISHED {
        for theta in [0.3, 0.9, 2.0] {
            let q = demonstrate_region(&catalog_family(name, theta)?, &opts)?;
            print!(
                "{name:>4} theta {theta}: g >= {:.9} (n = {}, upper {:.3}), window ({:.5}, {:.5})",
                q.g_lower, q.n, q.upper_bound, q.window.lo, q.window.hi
            );
            match (q.lambda, q.q, q.membership_g) {
                (Some(l), Some(v), Some(g)) => println!(
                    "  lambda {l:.5} -> Q = {v:.5}, g(lambda Pi) = {g:.6}, demonstrated {}",
                    q.demonstrated
                ),
                _ => println!("  empty window"),
            }
        }
    }
    Ok(())
}
