//! Dual parametrization and the factorization of the line discriminant.

use ratcurve::dualgeom;
use ratcurve::fibers;
use ratcurve::fixtures;
use ratcurve::musyz::{self, Parametrization};

const UVW: [&str; 3] = ["u", "v", "w"];

fn show(name: &str, phi: &Parametrization) -> ratcurve::error::Result<()> {
    let f = musyz::implicit_equation(phi)?.f;
    let (_, a) = dualgeom::dual_parametrization(phi)?;
    let fib = fibers::analyze_fibers(phi, &a)?;
    let dual = dualgeom::discriminant_factorization(phi, &fib.points, Some(&f))?;
    println!("{name}: F = {f}");
    println!("  A = {}", dual.a);
    println!("  phi_dual = ({}, {}, {})", dual.phi_dual[0], dual.phi_dual[1], dual.phi_dual[2]);
    println!("  F_dual = {} (degree {})", dual.f_dual.to_string_in(UVW), dual.d_dual);
    println!("  D = {} * F_dual * ({})", dual.constant, dual.singular_lines.to_string_in(UVW));
    for l in &dual.lines {
        println!("  line {} with exponent {}", l.line.to_string_in(UVW), l.exponent);
    }
    Ok(())
}

fn main() -> ratcurve::error::Result<()> {
    show("cuspidal cubic", &fixtures::cuspidal_cubic())?;
    show("nodal cubic", &fixtures::nodal_cubic())?;
    show("quartic A6", &fixtures::quartic_a6())?;
    Ok(())
}
