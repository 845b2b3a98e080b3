//! Reference computations from the implicit equation alone: Jacobian
//! syzygies, the Hilbert function of the Milnor algebra, the global Tjurina
//! number, the stability threshold and the dimensions of `N(F)`.

use rayon::prelude::*;

use crate::difforms::Verdict;
use crate::error::{CurveError, Result};
use crate::exactalg::rational::{binomial, Rational};
use crate::exactalg::ternary::{monomial_count, monomials};
use crate::exactalg::TernaryForm;
use crate::exactlin::{rank, QMatrix};

/// Matrix of `(a, b, c) -> a F_x + b F_y + c F_z` on `(S_q)^3`.
fn jacobian_map(f: &TernaryForm, q: usize) -> QMatrix {
    let d = f.degree() as usize;
    let target = monomials((q + d - 1) as u32);
    let grad = f.gradient();
    let cols: Vec<Vec<Rational>> = grad
        .iter()
        .flat_map(|g| {
            monomials(q as u32).into_iter().map(move |e| {
                let n = TernaryForm::from_terms(q as u32, [(e, Rational::from_integer(1.into()))]);
                &n * g
            })
        })
        .collect::<Vec<_>>()
        .par_iter()
        .map(|p| target.iter().map(|e| p.coeff(e)).collect())
        .collect();
    QMatrix::from_columns(target.len(), &cols)
}

/// `dim AR(F)_q`
pub fn ar_dim(f: &TernaryForm, q: usize) -> usize {
    let m = jacobian_map(f, q);
    m.cols() - rank(&m)
}

/// `dim M(F)_k = dim S_k - dim J_k`
pub fn milnor_hilbert(f: &TernaryForm, k: usize) -> usize {
    let d = f.degree() as usize;
    let total = monomial_count(k as i64);
    if k + 1 < d {
        return total;
    }
    total - rank(&jacobian_map(f, k + 1 - d))
}

/// `(tau, st)`: the value at `2d - 3`, confirmed at `2d - 2`, and the least
/// degree from which the Hilbert function is constant.
pub fn tjurina_f(f: &TernaryForm) -> Result<(usize, usize)> {
    let d = f.degree() as usize;
    if d < 3 {
        return Err(CurveError::InvalidInput("oracle needs d >= 3".into()));
    }
    let (tau, next) = rayon::join(|| milnor_hilbert(f, 2 * d - 3), || milnor_hilbert(f, 2 * d - 2));
    if tau != next {
        return Err(CurveError::Internal(format!(
            "Milnor algebra not stable at 2d-3: {tau} then {next}"
        )));
    }
    let mut st = 2 * d - 3;
    while st > 0 && milnor_hilbert(f, st - 1) == tau {
        st -= 1;
    }
    Ok((tau, st))
}

/// Coefficient of `t^k` in `(1 + t + ... + t^(d-2))^3`.
pub fn smooth_milnor(d: usize, k: usize) -> usize {
    let n = d - 1;
    // inclusion-exclusion on three bounded parts
    (0..=3i64)
        .map(|j| {
            let rest = k as i64 - j * n as i64;
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * binomial(3, j) * if rest < 0 { 0 } else { binomial(rest + 2, 2) }
        })
        .sum::<i64>() as usize
}

/// `dim N(F)_k = dim M(F)_k + dim M(F)_(D-k) - dim M(F_s)_k - tau`, `D = 3(d-2)`.
pub fn n_dim(f: &TernaryForm, k: usize, tau: usize) -> Result<usize> {
    let d = f.degree() as usize;
    let top = 3 * (d - 2);
    assert!(k <= top, "k out of range");
    let v = milnor_hilbert(f, k) as i64 + milnor_hilbert(f, top - k) as i64
        - smooth_milnor(d, k) as i64
        - tau as i64;
    if v < 0 {
        return Err(CurveError::Internal(format!("negative dim N(F)_{k} = {v}")));
    }
    Ok(v as usize)
}

/// Least `q` with a nonzero Jacobian syzygy.
pub fn mdr_f(f: &TernaryForm) -> usize {
    let d = f.degree() as usize;
    (0..d).find(|&q| ar_dim(f, q) > 0).unwrap_or(d - 1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub tau_f: usize,
    pub mdr_f: usize,
    /// `dim AR(F)_q` for `q = 0..=d`.
    pub ar_dims: Vec<usize>,
    /// `dim M(F)_k` for `k = 0..=2d-2`.
    pub milnor_hilbert: Vec<usize>,
    /// `dim N(F)_k` for `k = 0..=3(d-2)`.
    pub n_dims: Vec<usize>,
    pub st_f: usize,
    pub verdict_f: Verdict,
}

/// Free iff `N(F)` vanishes on `[d-2, 2d-4]`, nearly free iff its maximum there is 1.
pub fn verdict_from_n(d: usize, n_dims: &[usize], mdr: usize) -> Verdict {
    let window = &n_dims[d - 2..=2 * d - 4];
    match window.iter().max().copied().unwrap_or(0) {
        0 => Verdict::Free(mdr, d - 1 - mdr),
        1 => Verdict::NearlyFree(mdr, d - mdr),
        _ => Verdict::Neither,
    }
}

pub fn verdict_f(f: &TernaryForm) -> Result<Verdict> {
    Ok(oracle_report(f)?.verdict_f)
}

pub fn oracle_report(f: &TernaryForm) -> Result<OracleReport> {
    let d = f.degree() as usize;
    if d < 3 {
        return Err(CurveError::InvalidInput("oracle needs d >= 3".into()));
    }
    let top = 3 * (d - 2);
    let kmax = top.max(2 * d - 2);
    let hilbert: Vec<usize> = (0..=kmax).into_par_iter().map(|k| milnor_hilbert(f, k)).collect();
    let tau = hilbert[2 * d - 3];
    if hilbert[2 * d - 2] != tau {
        return Err(CurveError::Internal("Milnor algebra not stable at 2d-3".into()));
    }
    let mut st = 2 * d - 3;
    while st > 0 && hilbert[st - 1] == tau {
        st -= 1;
    }
    let n_dims = (0..=top)
        .map(|k| {
            let v = hilbert[k] as i64 + hilbert[top - k] as i64 - smooth_milnor(d, k) as i64 - tau as i64;
            if v < 0 {
                Err(CurveError::Internal(format!("negative dim N(F)_{k} = {v}")))
            } else {
                Ok(v as usize)
            }
        })
        .collect::<Result<Vec<usize>>>()?;
    let ar_dims: Vec<usize> = (0..=d).into_par_iter().map(|q| ar_dim(f, q)).collect();
    let mdr = ar_dims.iter().position(|&a| a > 0).unwrap_or(d - 1);
    Ok(OracleReport {
        tau_f: tau,
        mdr_f: mdr,
        verdict_f: verdict_from_n(d, &n_dims, mdr),
        ar_dims,
        milnor_hilbert: hilbert[..=2 * d - 2].to_vec(),
        n_dims,
        st_f: st,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cusp() -> TernaryForm {
        TernaryForm::from_int_terms(3, &[((1, 0, 2), 1), ((0, 3, 0), -1)])
    }

    #[test]
    fn cubic_values() {
        let f = cusp();
        assert_eq!(ar_dim(&f, 0), 0);
        assert_eq!(ar_dim(&f, 1), 1);
        assert_eq!(ar_dim(&f, 2), 5);
        assert_eq!(
            (0..5).map(|k| milnor_hilbert(&f, k)).collect::<Vec<_>>(),
            vec![1, 3, 3, 2, 2]
        );
        assert_eq!(tjurina_f(&f).unwrap(), (2, 3));
        let r = oracle_report(&f).unwrap();
        assert_eq!(r.n_dims, vec![0, 1, 1, 0]);
        assert_eq!(r.verdict_f, Verdict::NearlyFree(1, 2));
    }

    #[test]
    fn smooth_series() {
        assert_eq!((0..4).map(|k| smooth_milnor(3, k)).collect::<Vec<_>>(), vec![1, 3, 3, 1]);
        assert_eq!(smooth_milnor(4, 3), 7);
    }

    #[test]
    fn quartic_nearly_free() {
        // y^4 - x z^3
        let f = TernaryForm::from_int_terms(4, &[((0, 4, 0), 1), ((1, 0, 3), -1)]);
        assert_eq!(verdict_f(&f).unwrap(), Verdict::NearlyFree(1, 3));
    }
}
