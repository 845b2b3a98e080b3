//! Pull-backs of differential forms along the parametrization. Their
//! cokernels give the delta invariant and the Tjurina number, the kernels of
//! the 2-form maps give the `a(q)` sequence that decides freeness.

use std::fmt;


use rayon::prelude::*;

use crate::dualgeom::jacobian_minors;
use crate::error::{CurveError, Result};
use crate::exactalg::rational::{binomial, Rational};
use crate::exactalg::ternary::{monomials, Exponent};
use crate::exactalg::{BinaryForm, TernaryForm};
use crate::exactlin::{rank, QMatrix};
use crate::musyz::Parametrization;

/// Matrices of the pull-back maps at form degree `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FormMapMatrices {
    pub q: usize,
    pub m0: QMatrix,
    pub m1: QMatrix,
    pub m2: QMatrix,
}

/// Compositions `n(f0, f1, f2)` of monomials, with cached powers.
struct Composer {
    powers: [Vec<BinaryForm>; 3],
    d: usize,
}

impl Composer {
    fn new(phi: &Parametrization, max: usize) -> Self {
        let powers = phi.forms().clone().map(|f| {
            let mut p = vec![BinaryForm::constant(Rational::from_integer(1.into()))];
            for k in 1..=max {
                let next = &p[k - 1] * &f;
                p.push(next);
            }
            p
        });
        Self {
            powers,
            d: phi.degree(),
        }
    }

    fn monomial(&self, e: Exponent) -> BinaryForm {
        let (a, b, c) = (e.0 as usize, e.1 as usize, e.2 as usize);
        &(&self.powers[0][a] * &self.powers[1][b]) * &self.powers[2][c]
    }

    /// Images of the graded-lex monomial basis of `S_m`.
    fn images(&self, m: usize) -> Vec<BinaryForm> {
        monomials(m as u32).into_par_iter().map(|e| self.monomial(e)).collect()
    }
}

fn column(parts: &[&BinaryForm]) -> Vec<Rational> {
    parts.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
}

fn m0_matrix(c: &Composer, q: usize) -> QMatrix {
    let cols: Vec<Vec<Rational>> = c.images(q).iter().map(|f| f.coeffs().to_vec()).collect();
    QMatrix::from_columns(q * c.d + 1, &cols)
}

fn m1_matrix(c: &Composer, phi: &Parametrization, q: usize) -> QMatrix {
    let rows = 2 * q * c.d;
    if q == 0 {
        return QMatrix::zeros(rows, 0);
    }
    let images = c.images(q - 1);
    let ds: Vec<BinaryForm> = phi.forms().iter().map(BinaryForm::partial_s).collect();
    let dt: Vec<BinaryForm> = phi.forms().iter().map(BinaryForm::partial_t).collect();
    let cols: Vec<Vec<Rational>> = (0..3)
        .flat_map(|k| images.iter().map(move |n| (k, n)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(k, n)| column(&[&(n * &ds[k]), &(n * &dt[k])]))
        .collect();
    QMatrix::from_columns(rows, &cols)
}

fn m2_matrix(c: &Composer, minors: &[BinaryForm; 3], q: usize) -> QMatrix {
    let rows = (q * c.d).saturating_sub(1);
    if q < 2 {
        return QMatrix::zeros(rows, 0);
    }
    let images = c.images(q - 2);
    // (A_x, A_y, A_z) multiply (m12, m02, m01)
    let order = [&minors[2], &minors[1], &minors[0]];
    let cols: Vec<Vec<Rational>> = (0..3)
        .flat_map(|k| images.iter().map(move |n| (k, n)))
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&(k, n)| (n * order[k]).coeffs().to_vec())
        .collect();
    QMatrix::from_columns(rows, &cols)
}

pub fn form_matrices(phi: &Parametrization, q: usize) -> FormMapMatrices {
    let c = Composer::new(phi, q);
    let minors = jacobian_minors(phi);
    FormMapMatrices {
        q,
        m0: m0_matrix(&c, q),
        m1: m1_matrix(&c, phi, q),
        m2: m2_matrix(&c, &minors, q),
    }
}

/// `(c0, c1, c2)`: row count minus rank for each pull-back matrix.
pub fn coker_dims(phi: &Parametrization, q: usize) -> (usize, usize, usize) {
    let m = form_matrices(phi, q);
    let (r0, (r1, r2)) = rayon::join(|| rank(&m.m0), || rayon::join(|| rank(&m.m1), || rank(&m.m2)));
    (m.m0.rows() - r0, m.m1.rows() - r1, m.m2.rows() - r2)
}

/// `dim coker` of the 0-form map at degree `q`.
pub fn coker0(phi: &Parametrization, q: usize) -> usize {
    let m = m0_matrix(&Composer::new(phi, q), q);
    m.rows() - rank(&m)
}

/// `dim coker` of the 1-form map at degree `q`.
pub fn coker1(phi: &Parametrization, q: usize) -> usize {
    let m = m1_matrix(&Composer::new(phi, q), phi, q);
    m.rows() - rank(&m)
}

/// `dim coker` of the 2-form map at degree `q`.
pub fn coker2(phi: &Parametrization, q: usize) -> usize {
    let m = m2_matrix(&Composer::new(phi, q), &jacobian_minors(phi), q);
    m.rows() - rank(&m)
}

/// `(tau, delta)`: delta from the 0-forms at `q = d - 2`, tau from the
/// 1-forms at `q = d`, both confirmed at the next degree.
pub fn tjurina_delta(phi: &Parametrization) -> Result<(usize, usize)> {
    let d = phi.degree();
    if d == 2 {
        return Ok((0, 0));
    }
    let ((delta, delta_next), (tau, tau_next)) = rayon::join(
        || rayon::join(|| coker0(phi, d - 2), || coker0(phi, d - 1)),
        || rayon::join(|| coker1(phi, d), || coker1(phi, d + 1)),
    );
    if delta != delta_next || tau != tau_next {
        return Err(CurveError::Internal(format!(
            "cokernel dimensions not stable: delta {delta}/{delta_next}, tau {tau}/{tau_next}"
        )));
    }
    Ok((tau, delta))
}

/// `a(q)`: nullity of the 2-form map at form degree `q + 2`.
pub fn a_value(phi: &Parametrization, q: usize) -> usize {
    let m = m2_matrix(&Composer::new(phi, q + 2), &jacobian_minors(phi), q + 2);
    m.cols() - rank(&m)
}

pub fn a_sequence(phi: &Parametrization, q_max: usize) -> Vec<usize> {
    (0..=q_max).into_par_iter().map(|q| a_value(phi, q)).collect()
}

/// `C(q + 1, 2)`, the contribution of the Euler multiples.
pub fn euler_part(q: usize) -> usize {
    binomial(q as i64 + 1, 2) as usize
}

/// `(d - 1)^2 - r (d - r - 1)`
pub fn tau_dr(d: usize, r: usize) -> i64 {
    let (d, r) = (d as i64, r as i64);
    (d - 1) * (d - 1) - r * (d - r - 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Free(usize, usize),
    NearlyFree(usize, usize),
    Neither,
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Free(..) => "free",
            Verdict::NearlyFree(..) => "nearly free",
            Verdict::Neither => "neither",
        }
    }

    pub fn exponents(&self) -> Option<(usize, usize)> {
        match *self {
            Verdict::Free(a, b) | Verdict::NearlyFree(a, b) => Some((a, b)),
            Verdict::Neither => None,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Free(a, b) => write!(f, "free ({a}, {b})"),
            Verdict::NearlyFree(a, b) => write!(f, "nearly free ({a}, {b})"),
            Verdict::Neither => write!(f, "neither"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantReport {
    pub tau: usize,
    pub delta: usize,
    pub mdr: usize,
    pub a_seq: Vec<usize>,
    pub verdict: Verdict,
    pub tau_dr: i64,
}

fn c2(n: i64) -> i64 {
    binomial(n, 2)
}

/// Freeness verdict from the `a(q)` sequence alone.
pub fn verdict_from_a(d: usize, a: impl Fn(usize) -> usize, r: usize) -> Verdict {
    let (di, ri) = (d as i64, r as i64);
    if 2 * r + 1 <= d && a(d - r - 1) as i64 == c2(di - ri) + c2(di - 2 * ri + 1) + 1 {
        return Verdict::Free(r, d - 1 - r);
    }
    if 2 * r <= d && a(d - r) as i64 == c2(di - ri + 1) + c2(di - 2 * ri + 2) + 2 {
        return Verdict::NearlyFree(r, d - r);
    }
    Verdict::Neither
}

/// Checks the Tjurina number against the verdict.
pub fn check_tau(verdict: Verdict, tau: usize, d: usize, r: usize) -> Result<()> {
    let bound = tau_dr(d, r);
    let tau = tau as i64;
    let ok = match verdict {
        Verdict::Free(..) => tau == bound,
        Verdict::NearlyFree(..) => tau == bound - 1,
        Verdict::Neither => tau < bound - 1,
    };
    if ok {
        Ok(())
    } else {
        Err(CurveError::Internal(format!(
            "verdict {verdict} inconsistent with tau = {tau}, tau(d,r) = {bound}"
        )))
    }
}

/// `q_max` bounds the reported `a(q)` sequence (defaults to `d`).
pub fn freeness_verdict(phi: &Parametrization, q_max: Option<usize>) -> Result<InvariantReport> {
    let d = phi.degree();
    if d < 3 {
        return Err(CurveError::InvalidInput("freeness needs d >= 3".into()));
    }
    let q_max = q_max.unwrap_or(d).max(d);
    let (a_seq, td) = rayon::join(|| a_sequence(phi, q_max), || tjurina_delta(phi));
    let (tau, delta) = td?;
    let mdr = (0..=q_max)
        .find(|&q| a_seq[q] > euler_part(q))
        .ok_or_else(|| CurveError::Internal("no Jacobian syzygy up to q_max".into()))?;
    let verdict = verdict_from_a(d, |q| a_seq[q], mdr);
    check_tau(verdict, tau, d, mdr)?;
    Ok(InvariantReport {
        tau,
        delta,
        mdr,
        a_seq,
        verdict,
        tau_dr: tau_dr(d, mdr),
    })
}

/// Coordinates of a 1- or 2-form given by three coefficient polynomials of
/// degree `m`, concatenated in graded-lex order.
fn form_vector(parts: &[TernaryForm; 3], m: u32) -> Vec<Rational> {
    let basis = monomials(m);
    parts
        .iter()
        .flat_map(|p| basis.iter().map(move |e| p.coeff(e)))
        .collect()
}

fn monomial_form(e: Exponent) -> TernaryForm {
    TernaryForm::from_terms(e.0 + e.1 + e.2, [(e, Rational::from_integer(1.into()))])
}

fn span_dim(vectors: Vec<Vec<Rational>>, len: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&QMatrix::from_columns(len, &vectors))
}

/// `dim (S_{q-d} dF + F Omega^1_{q-d})` inside `Omega^1_q`.
pub fn one_form_subspace_dim(f: &TernaryForm, q: usize) -> usize {
    let d = f.degree() as usize;
    if q < d {
        return 0;
    }
    let m = (q - 1) as u32;
    let len = 3 * monomials(m).len();
    let grad = f.gradient();
    let zero = TernaryForm::zero(m);
    let mut gens: Vec<Vec<Rational>> = monomials((q - d) as u32)
        .into_iter()
        .map(|e| {
            let n = monomial_form(e);
            form_vector(&[&n * &grad[0], &n * &grad[1], &n * &grad[2]], m)
        })
        .collect();
    if q > d {
        for k in 0..3 {
            for e in monomials((q - d - 1) as u32) {
                let mut parts = [zero.clone(), zero.clone(), zero.clone()];
                parts[k] = &monomial_form(e) * f;
                gens.push(form_vector(&parts, m));
            }
        }
    }
    span_dim(gens, len)
}

/// `dim (F Omega^2_{q-d} + dF ^ Omega^1_{q-d})` inside `Omega^2_q`.
pub fn two_form_subspace_dim(f: &TernaryForm, q: usize) -> usize {
    let d = f.degree() as usize;
    if q < d + 1 {
        return 0;
    }
    let m = (q - 2) as u32;
    let len = 3 * monomials(m).len();
    let [fx, fy, fz] = f.gradient();
    let zero = TernaryForm::zero(m);
    let mut gens = Vec::new();
    if q >= d + 2 {
        for k in 0..3 {
            for e in monomials((q - d - 2) as u32) {
                let mut parts = [zero.clone(), zero.clone(), zero.clone()];
                parts[k] = &monomial_form(e) * f;
                gens.push(form_vector(&parts, m));
            }
        }
    }
    // dF ^ (n e_k) for B = n dx, n dy, n dz
    for e in monomials((q - d - 1) as u32) {
        let n = monomial_form(e);
        let z = TernaryForm::zero(m);
        // B = n dx: A = (0, -F_z n, -F_y n)
        gens.push(form_vector(&[z.clone(), -&(&fz * &n), -&(&fy * &n)], m));
        // B = n dy: A = (-F_z n, 0, F_x n)
        gens.push(form_vector(&[-&(&fz * &n), z.clone(), &fx * &n], m));
        // B = n dz: A = (F_y n, F_x n, 0)
        gens.push(form_vector(&[&fy * &n, &fx * &n, z], m));
    }
    span_dim(gens, len)
}

/// `(k1, k2)`: kernel dimensions of the pull-back maps on the quotient
/// 1- and 2-forms modulo those vanishing identically on the curve.
pub fn tilde_kernel_dims(phi: &Parametrization, f: &TernaryForm, q: usize) -> (usize, usize) {
    let c = Composer::new(phi, q);
    let minors = jacobian_minors(phi);
    let ((n1, n2), (s1, s2)) = rayon::join(
        || {
            rayon::join(
                || {
                    let m = m1_matrix(&c, phi, q);
                    m.cols() - rank(&m)
                },
                || {
                    let m = m2_matrix(&c, &minors, q);
                    m.cols() - rank(&m)
                },
            )
        },
        || rayon::join(|| one_form_subspace_dim(f, q), || two_form_subspace_dim(f, q)),
    );
    (n1 - s1, n2 - s2)
}


#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> Parametrization {
        Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap()
    }

    fn cubic_f() -> TernaryForm {
        TernaryForm::from_int_terms(3, &[((1, 0, 2), 1), ((0, 3, 0), -1)])
    }

    #[test]
    fn matrix_shapes() {
        let conic = Parametrization::from_ints(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap();
        let m = form_matrices(&conic, 2);
        assert_eq!((m.m0.rows(), m.m0.cols()), (5, 6));
        assert_eq!(rank(&m.m0), 5);
        let m = form_matrices(&cubic(), 3);
        assert_eq!((m.m0.rows(), m.m0.cols()), (10, 10));
        assert_eq!(rank(&m.m0), 9);
        assert_eq!(m.m2.cols(), 9);
        assert_eq!(rank(&m.m2), 7);
        assert_eq!((m.m1.rows(), m.m1.cols()), (18, 18));
    }

    #[test]
    fn cubic_invariants() {
        assert_eq!(coker_dims(&cubic(), 3), (1, 2, 1));
        assert_eq!(tjurina_delta(&cubic()).unwrap(), (2, 1));
        assert_eq!(&a_sequence(&cubic(), 2), &[0, 2, 8]);
        let r = freeness_verdict(&cubic(), None).unwrap();
        assert_eq!(r.verdict, Verdict::NearlyFree(1, 2));
        assert_eq!(r.mdr, 1);
        assert_eq!(r.tau_dr, 3);
    }

    #[test]
    fn cubic_tilde_kernels() {
        assert_eq!(tilde_kernel_dims(&cubic(), &cubic_f(), 4).0, 2);
        assert_eq!(tilde_kernel_dims(&cubic(), &cubic_f(), 6).1, 4);
    }

    #[test]
    fn tau_dr_values() {
        assert_eq!(tau_dr(3, 1), 3);
        assert_eq!(tau_dr(8, 3), 37);
        assert_eq!(tau_dr(8, 2), 39);
    }
}
