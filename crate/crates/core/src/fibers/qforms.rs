//! Off-diagonal identification forms `Q_ij` and what they determine:
//! the properness degree and the support `T` of all identification parameters.


use rayon::prelude::*;

use crate::error::{CurveError, Result};
use crate::exactalg::rational::rat;
use crate::exactalg::{BiForm, BinaryForm, UniPoly};
use crate::musyz::Parametrization;

/// Index pairs of `Q01, Q02, Q12`.
pub const PAIRS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberData {
    /// `Q01, Q02, Q12`, each of bidegree `(d-1, d-1)`.
    pub q: [BiForm; 3],
    /// Squarefree form vanishing at every off-diagonal identification parameter.
    pub t: BinaryForm,
    /// Gcd of the `Q_ij` over `Q(s)` after setting `t = v = 1`, as coefficients
    /// of powers of `u`.
    pub g: Vec<UniPoly>,
}

impl FiberData {
    pub fn properness(&self) -> usize {
        self.g.len()
    }
}

/// `(f_i(s,t) f_j(u,v) - f_j(s,t) f_i(u,v)) / (s v - t u)` for the three pairs.
pub fn off_diagonal_forms(phi: &Parametrization) -> Result<[BiForm; 3]> {
    let f = phi.forms();
    let mut out = Vec::with_capacity(3);
    for (i, j) in PAIRS {
        let n = BiForm::antisymmetric(&f[i], &f[j]);
        let q = n
            .divide_by_diagonal()
            .ok_or_else(|| CurveError::Internal(format!("s v - t u does not divide N{i}{j}")))?;
        out.push(q);
    }
    Ok(out.try_into().expect("three forms"))
}

/// Polynomial in `u` with coefficients in `Q[s]`.
type SPoly = Vec<UniPoly>;

fn trim(p: &mut SPoly) {
    while p.last().is_some_and(UniPoly::is_zero) {
        p.pop();
    }
}

fn content(p: &SPoly) -> UniPoly {
    p.iter().fold(UniPoly::zero(), |g, c| g.gcd(c))
}

fn primitive(p: &SPoly) -> SPoly {
    let c = content(p);
    p.iter()
        .map(|a| a.exact_div(&c).expect("content divides"))
        .collect()
}

fn pseudo_rem(a: &SPoly, b: &SPoly) -> SPoly {
    let mut r = a.clone();
    let lb = b.last().unwrap().clone();
    while r.len() >= b.len() && !r.is_empty() {
        let lr = r.last().unwrap().clone();
        let k = r.len() - b.len();
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (j, bj) in b.iter().enumerate() {
            r[k + j] = &r[k + j] - &(&lr * bj);
        }
        trim(&mut r);
    }
    r
}

/// Gcd in `Q(s)[u]` by the primitive remainder sequence; the result is
/// primitive over `Q[s]`.
fn function_field_gcd(polys: &[SPoly]) -> SPoly {
    let mut nonzero = polys.iter().filter(|p| !p.is_empty()).cloned();
    let Some(first) = nonzero.next() else {
        return Vec::new();
    };
    let mut g = primitive(&first);
    for p in nonzero {
        let (mut a, mut b) = (g, primitive(&p));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(&a, &b);
            a = b;
            if r.is_empty() {
                b = Vec::new();
                break;
            }
            b = primitive(&r);
        }
        g = if b.is_empty() { a } else { vec![UniPoly::one()] };
        if g.len() == 1 {
            return vec![UniPoly::one()];
        }
    }
    g
}

fn dehomogenized(q: &BiForm) -> SPoly {
    let mut p = q.dehomogenized();
    trim(&mut p);
    p
}

/// The gcd `G` of the `Q_ij` over the function field, dehomogenized.
pub fn identification_gcd(q: &[BiForm; 3]) -> SPoly {
    let polys: Vec<SPoly> = q.iter().map(dehomogenized).collect();
    function_field_gcd(&polys)
}

/// `e = deg G + 1`. A specialization with coprime `Q_ij(s0, 1; u, v)` proves
/// `G = 1`; otherwise the function-field gcd decides.
pub fn properness_degree(phi: &Parametrization) -> usize {
    let q = off_diagonal_forms(phi).expect("validated parametrization");
    for s0 in 0..6 {
        let spec: Vec<BinaryForm> = q.iter().map(|b| b.at_st(&rat(s0), &rat(1))).collect();
        let nonzero: Vec<&BinaryForm> = spec.iter().filter(|f| !f.is_zero()).collect();
        if nonzero.is_empty() {
            continue;
        }
        if BinaryForm::gcd_all(nonzero).degree() == 0 {
            return 1;
        }
    }
    identification_gcd(&q).len()
}

/// Combination schedule for the support resultants.
fn schedule(q: &[BiForm; 3]) -> Vec<(BiForm, BiForm)> {
    let two = rat(2);
    let three = rat(3);
    vec![
        (q[0].clone(), q[1].clone()),
        (q[0].clone(), q[2].clone()),
        (q[1].clone(), q[2].clone()),
        (&q[0] + &q[1], &q[0] + &q[2]),
        (&q[0] + &q[1].scale(&two), &q[0] + &q[2].scale(&three)),
    ]
}

/// Squarefree support of the identification parameters, times the
/// squarefree part of `a` (the gcd of the Jacobian minors).
pub fn identification_support(q: &[BiForm; 3], a: &BinaryForm) -> BinaryForm {
    let resultants: Vec<BinaryForm> = schedule(q)
        .par_iter()
        .map(|(x, y)| x.resultant_uv(y))
        .collect();
    let mut g: Option<BinaryForm> = None;
    for r in resultants.iter().filter(|r| !r.is_zero()) {
        g = Some(match g {
            None => r.monic(),
            Some(g) => g.gcd(r),
        });
        if g.as_ref().is_some_and(|g| g.degree() == 0) {
            break;
        }
    }
    let base = g.unwrap_or_else(|| BinaryForm::constant(rat(1)));
    let mut t = base.squarefree_part();
    if a.degree() > 0 {
        t = (&t * &a.squarefree_part()).squarefree_part();
    }
    t
}

pub fn qforms(phi: &Parametrization, a: &BinaryForm) -> Result<FiberData> {
    let q = off_diagonal_forms(phi)?;
    let g = identification_gcd(&q);
    let t = identification_support(&q, a);
    Ok(FiberData { q, t, g })
}

/// `d * Q_ij(s, t; s, t)`, which equals the Jacobian minor `m_ij`.
pub fn diagonal_law(phi: &Parametrization, q: &BiForm) -> BinaryForm {
    q.diagonal().scale(&rat(phi.degree() as i64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn conic_and_cubic_quotients() {
        let conic = Parametrization::from_ints(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap();
        let q = off_diagonal_forms(&conic).unwrap();
        // s v + t u
        assert_eq!(q[1], BiForm::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]));
        let cubic = Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap();
        let q = off_diagonal_forms(&cubic).unwrap();
        let expect = BiForm::from_rows(vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(0)],
        ]);
        assert_eq!(q[1], expect);
        assert_eq!(diagonal_law(&cubic, &q[1]), BinaryForm::from_ints(&[0, 0, 9, 0, 0]));
    }

    #[test]
    fn properness_examples() {
        let improper =
            Parametrization::from_ints(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1]).unwrap();
        assert_eq!(properness_degree(&improper), 2);
        let q = off_diagonal_forms(&improper).unwrap();
        assert_eq!(identification_gcd(&q).len(), 2);
        // e = 3 via (s^3, t^3) composed into a conic
        let cube = Parametrization::from_ints(
            &[1, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 1, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
        )
        .unwrap();
        assert_eq!(properness_degree(&cube), 3);
    }

    #[test]
    fn cubic_support() {
        let cubic = Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap();
        let q = off_diagonal_forms(&cubic).unwrap();
        let t = identification_support(&q, &BinaryForm::from_ints(&[0, 1]));
        assert_eq!(t, BinaryForm::from_ints(&[0, 1]));
    }
}
