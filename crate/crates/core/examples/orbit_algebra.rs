//! Orbit matrices of C(4,8,z) as circulants: coefficients, spectra and the transpose rule.

use cyclic_coherent::families::{catalog_family, orbit_matrices, FamilyName};

fn main() -> cyclic_coherent::Result<()> {
    let theta = 0.4;
    let f = catalog_family(FamilyName::C48, theta)?;
    let set = orbit_matrices(&f)?;
    for mu in 0..set.orbit_count() {
        for nu in 0..set.orbit_count() {
            let s = set.sigma(mu, nu);
            let c: Vec<String> = s
                .coeffs()
                .iter()
                .map(|z| format!("{:+.4}{:+.4}i", z.re, z.im))
                .collect();
            println!("sigma_{mu}{nu} = sum_k c_k X^k, c = [{}]", c.join(", "));
        }
    }
    // σ_00 = (1 + A)/4 with A = (zX + z*X†)/2, whose spectrum is ±cos θ, ±sin θ
    let eig: Vec<String> = set
        .sigma(0, 0)
        .eigenvalues()
        .iter()
        .map(|z| format!("{:.6}", z.re))
        .collect();
    println!("eigenvalues of sigma_00: {}", eig.join(" "));
    println!(
        "expected 1/4 +- cos/4, 1/4 +- sin/4: {:.6} {:.6} {:.6} {:.6}",
        0.25 + theta.cos() / 4.0,
        0.25 - theta.cos() / 4.0,
        0.25 + theta.sin() / 4.0,
        0.25 - theta.sin() / 4.0
    );
    let r = set.report();
    println!(
        "T = d sigma^T residual {:.1e}, diag(T) residual {:.1e}, sum rules {:.1e}/{:.1e}",
        r.transpose_identity_residual,
        r.tau_diagonal_residual,
        r.vv2_diagonal_residual,
        r.vv2_offdiagonal_residual
    );
    Ok(())
}
