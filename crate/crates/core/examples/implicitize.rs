//! mu-basis and implicit equation of a few parametrizations.

use ratcurve::fixtures;
use ratcurve::musyz::{self, Parametrization};

fn show(name: &str, phi: &Parametrization) -> ratcurve::error::Result<()> {
    let basis = musyz::mu_basis(phi)?;
    let curve = musyz::implicit_from_basis(phi, &basis)?;
    println!("{name}: d = {}, mu = ({}, {})", phi.degree(), basis.mu1, basis.mu2);
    println!("  p = ({}, {}, {})", basis.p[0], basis.p[1], basis.p[2]);
    println!("  q = ({}, {}, {})", basis.q[0], basis.q[1], basis.q[2]);
    println!("  F = {}", curve.f);
    Ok(())
}

fn main() -> ratcurve::error::Result<()> {
    show("cuspidal cubic", &fixtures::cuspidal_cubic())?;
    show("quartic with three cusps", &fixtures::quartic_three_cusps())?;
    let phi = Parametrization::from_ints(&[1, 0, -2, 0], &[0, 1, 1, 0], &[3, 0, 0, 1])?;
    show("generic cubic", &phi)?;
    // (s^2, st, t^2) twisted by s -> s^2 covers the conic twice.
    let double = fixtures::double_conic();
    println!("double conic: degree of the map = {}", musyz::properness(&double));
    Ok(())
}
