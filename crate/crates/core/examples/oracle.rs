//! Invariants computed from F alone, compared with the parametric side.

use ratcurve::difforms;
use ratcurve::fixtures;
use ratcurve::musyz;
use ratcurve::oracle;

fn main() -> ratcurve::error::Result<()> {
    for (name, phi) in fixtures::all() {
        if phi.degree() < 3 {
            continue;
        }
        let f = musyz::implicit_equation(&phi)?.f;
        let o = oracle::oracle_report(&f)?;
        let inv = difforms::freeness_verdict(&phi, None)?;
        let agree = o.tau_f == inv.tau && o.mdr_f == inv.mdr && o.verdict_f == inv.verdict;
        println!(
            "{name:<22} tau {:>3}/{:<3} mdr {}/{} st {:>2} N = {:?} {}",
            o.tau_f,
            inv.tau,
            o.mdr_f,
            inv.mdr,
            o.st_f,
            o.n_dims,
            if agree { "agree" } else { "DISAGREE" }
        );
    }
    Ok(())
}
