//! Where the cokernel and tilde-kernel dimensions reach their limits for d = 8.

use ratcurve::difforms::{coker_dims, freeness_verdict, tilde_kernel_dims};
use ratcurve::fixtures;
use ratcurve::musyz::{self, Parametrization};

fn table(name: &str, phi: &Parametrization) -> ratcurve::error::Result<()> {
    let f = musyz::implicit_equation(phi)?.f;
    let inv = freeness_verdict(phi, None)?;
    println!("{name}: F = {f}");
    println!("  tau = {}, delta = {}, {}", inv.tau, inv.delta, inv.verdict.name());
    println!("  {:>3} {:>4} {:>4} {:>4} {:>4} {:>4}", "q", "c0", "c1", "c2", "k1", "k2");
    for q in 4..=16 {
        let (c0, c1, c2) = coker_dims(phi, q);
        let (k1, k2) = if q >= 12 {
            let (k1, k2) = tilde_kernel_dims(phi, &f, q);
            (k1.to_string(), k2.to_string())
        } else {
            ("-".into(), "-".into())
        };
        println!("  {q:>3} {c0:>4} {c1:>4} {c2:>4} {k1:>4} {k2:>4}");
    }
    Ok(())
}

fn main() -> ratcurve::error::Result<()> {
    table("nearly free octic", &fixtures::monomial_cusp(8, 3))?;
    table("free octic", &fixtures::free_family(8, 3))?;
    Ok(())
}
