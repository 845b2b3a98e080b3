//! Singular points, branches and the cuspidality test with its witness.

use ratcurve::dualgeom;
use ratcurve::fibers::{self, Parameter, Partner};
use ratcurve::fixtures;
use ratcurve::musyz::Parametrization;

fn show(name: &str, phi: &Parametrization) -> ratcurve::error::Result<()> {
    let (_, a) = dualgeom::dual_parametrization(phi)?;
    let fib = fibers::analyze_fibers(phi, &a)?;
    println!("{name}: T = {}", fib.data.t);
    for p in &fib.points {
        let branches: Vec<String> = p.branches.iter().map(|b| format!("({})^{}", b.factor, b.multiplicity)).collect();
        let [x, y, z] = p.point.as_rationals();
        println!("  ({x} : {y} : {z}) m = {} r = {} H = {} branches {}", p.m, p.r, p.h, branches.join(" "));
    }
    if fib.residual_support.degree() > 0 {
        println!("  residual support {}", fib.residual_support);
    }
    println!("  {:?}", fib.cuspidality.status);
    if let Some(w) = &fib.cuspidality.witness {
        let param = match &w.parameter {
            Parameter::Rational(p) => format!("{p}"),
            Parameter::Algebraic(m) => format!("root of {m}"),
        };
        let partner = match &w.partner {
            Partner::Rational(g) => format!("zero of {g}"),
            Partner::Algebraic(_) => "conjugate parameter".to_string(),
            Partner::AtInfinity => "(1 : 0)".to_string(),
        };
        println!("  witness: {param} meets {partner}, verified = {}", w.verify(phi));
    }
    Ok(())
}

fn main() -> ratcurve::error::Result<()> {
    show("nodal cubic", &fixtures::nodal_cubic())?;
    for (name, phi) in fixtures::cuspidal_quartics() {
        show(name, &phi)?;
    }
    show("nonic", &fixtures::ordinary_point_family(9))?;
    Ok(())
}
