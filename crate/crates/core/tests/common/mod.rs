#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratcurve::difforms::form_matrices;
use ratcurve::exactalg::{rat, BinaryForm, Rational};
use ratcurve::exactlin::{kernel_basis, rank, QMatrix};
use ratcurve::musyz::{self, Parametrization};
use ratcurve::report::{analyze, Options};

pub const SEED: u64 = 0x5eed_c0ff_ee15;

/// `n` proper parametrizations with `2 <= d <= 6` and coefficients in `[-5, 5]`.
pub fn random_parametrizations(n: usize, seed: u64) -> Vec<Parametrization> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let d = rng.gen_range(2..=6);
        let mut form = || BinaryForm::new((0..=d).map(|_| rat(rng.gen_range(-5..=5))).collect());
        let (f0, f1, f2) = (form(), form(), form());
        if [&f0, &f1, &f2].iter().any(|f| f.coeffs().iter().all(|c| c == &Rational::from_integer(0.into()))) {
            continue;
        }
        let Ok(phi) = Parametrization::new(f0, f1, f2) else {
            continue;
        };
        if musyz::properness(&phi) == 1 {
            out.push(phi);
        }
    }
    out
}

fn matrix_consistency(m: &QMatrix) -> bool {
    let r = rank(m);
    let ker = kernel_basis(m);
    let zero = vec![Rational::from_integer(0.into()); m.rows()];
    r + ker.len() == m.cols() && ker.iter().all(|v| m.mul_vec(v) == zero)
}

/// Every structural property of one curve; returns the violated ones.
pub fn property_violations(phi: &Parametrization) -> Vec<String> {
    let mut bad = Vec::new();
    let d = phi.degree();
    let report = match analyze(phi, &Options::default()) {
        Ok(r) => r,
        Err(e) => return vec![format!("pipeline error: {e}")],
    };
    for c in report.failures() {
        bad.push(format!("{}: {} vs {}", c.name, c.lhs, c.rhs));
    }
    if report.mu[0] + report.mu[1] != d {
        bad.push("mu1 + mu2 != d".into());
    }
    if report.implicit.degree != d {
        bad.push("deg F != d".into());
    }
    let basis = musyz::mu_basis(phi).expect("mu-basis");
    if musyz::minors_constant(&basis, phi).is_none() {
        bad.push("mu-basis minors not proportional".into());
    }
    if let Some(dual) = &report.dual {
        if dual.degree != 2 * (d - 1) - dual.deg_a {
            bad.push("dual degree".into());
        }
    }
    if d >= 3 {
        let oracle = report.oracle.as_ref().expect("oracle block");
        let inv = &report.invariants;
        if inv.tau != oracle.tau || inv.mdr != Some(oracle.mdr) || inv.verdict.as_ref() != Some(&oracle.verdict) {
            bad.push("difforms and oracle disagree".into());
        }
        for q in 0..=d {
            if inv.a_seq[q] != q * (q + 1) / 2 + oracle.ar_dims[q] {
                bad.push(format!("a({q}) identity"));
            }
        }
        if oracle.n_dims[..=d - 3].iter().any(|&n| n != 0) {
            bad.push("N(F)_k != 0 below d-2".into());
        }
        if oracle.st > 2 * d - 3 {
            bad.push("st(F) > 2d-3".into());
        }
        let m = form_matrices(phi, d);
        for (name, mat) in [("M0", &m.m0), ("M1", &m.m1), ("M2", &m.m2)] {
            if !matrix_consistency(mat) {
                bad.push(format!("{name} rank/kernel mismatch"));
            }
        }
    }
    bad
}
