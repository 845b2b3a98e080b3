//! Tjurina number, delta, mdr and the free / nearly free verdict.

use ratcurve::difforms;
use ratcurve::fixtures;

fn main() -> ratcurve::error::Result<()> {
    let curves = [
        ("cuspidal cubic", fixtures::cuspidal_cubic()),
        ("quintic C", fixtures::quintic_free()),
        ("quintic D", fixtures::quintic_nearly_free()),
        ("quintic x^2 y^3 - z^5", fixtures::monomial_cusp(5, 2)),
        ("nonic", fixtures::ordinary_point_family(9)),
    ];
    for (name, phi) in &curves {
        let d = phi.degree();
        let inv = difforms::freeness_verdict(phi, Some(2 * d))?;
        println!("{name}: d = {d}");
        println!("  tau = {}, delta = {}, mdr = {}, tau(d, r) = {}", inv.tau, inv.delta, inv.mdr, inv.tau_dr);
        println!("  a(q) = {:?}", inv.a_seq);
        match inv.verdict.exponents() {
            Some((d1, d2)) => println!("  {} with exponents ({d1}, {d2})", inv.verdict.name()),
            None => println!("  {}", inv.verdict.name()),
        }
    }
    Ok(())
}
