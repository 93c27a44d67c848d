//! Empirical data for C(5,10,z), C(5,15,z), C(6,12,z); prints the JSON report.

use cyclic_coherent::cli::reports::{explore, theta_grid};
use cyclic_coherent::families::FamilyName;
use cyclic_coherent::grothendieck::{DemoOptions, EstimateOptions};
use cyclic_coherent::numerics::Tolerance;

fn main() -> cyclic_coherent::Result<()> {
    let demo = DemoOptions {
        estimate: EstimateOptions {
            restarts: 16,
            ..EstimateOptions::default()
        },
        ..DemoOptions::default()
    };
    for name in FamilyName::OPEN_PROBLEM {
        let rep = explore(name, &theta_grid(4), &demo, &Tolerance::default())?;
        for p in &rep.points {
            println!(
                "{name:>4} theta {:.4}: coherent {} g >= {:.6}/{} window empty {} Bell min eig {:?}",
                p.theta, p.coherence.pass, p.g_lower, p.n, p.window.empty, p.bell_min_eig
            );
        }
    }
    let rep = explore(FamilyName::C510, &[0.5], &demo, &Tolerance::default())?;
    println!(
        "{}",
        serde_json::to_string_pretty(&rep).expect("serialisable")
    );
    Ok(())
}
