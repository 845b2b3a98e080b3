//! Syzygies of the parametrization: the mu-basis, the properness degree and
//! the implicit equation as the resultant of the two moving lines.

use num_traits::{One, Zero};

use crate::error::{CurveError, Result};
use crate::exactalg::rational::{primitive_positive, Rational};
use crate::exactalg::{BinaryForm, TernaryForm};
use crate::exactlin::{self, kernel_basis, poly_matrix_det, PolyMatrix, QMatrix};
use crate::fibers::qforms::properness_degree;

/// Three coprime binary forms of a common degree `d >= 2` whose image is a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Parametrization {
    f: [BinaryForm; 3],
}

impl Parametrization {
    pub fn new(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm) -> Result<Self> {
        let d = f0.degree();
        if f1.degree() != d || f2.degree() != d {
            return Err(CurveError::InvalidInput(format!(
                "degree mismatch: {}, {}, {}",
                d,
                f1.degree(),
                f2.degree()
            )));
        }
        if d < 2 {
            return Err(CurveError::InvalidInput(format!("degree {d} < 2")));
        }
        let f = [f0, f1, f2];
        let coeffs = QMatrix::from_rows(f.iter().map(|g| g.coeffs().to_vec()).collect());
        if exactlin::rank(&coeffs) < 2 {
            return Err(CurveError::InvalidInput(
                "the three forms are proportional (image is a point)".into(),
            ));
        }
        let g = BinaryForm::gcd_all(f.iter());
        if g.degree() > 0 {
            return Err(CurveError::InvalidInput(format!("common factor {g}")));
        }
        Ok(Self { f })
    }

    pub fn from_ints(f0: &[i64], f1: &[i64], f2: &[i64]) -> Result<Self> {
        Self::new(
            BinaryForm::from_ints(f0),
            BinaryForm::from_ints(f1),
            BinaryForm::from_ints(f2),
        )
    }

    pub fn degree(&self) -> usize {
        self.f[0].degree()
    }

    pub fn forms(&self) -> &[BinaryForm; 3] {
        &self.f
    }

    pub fn component(&self, i: usize) -> &BinaryForm {
        &self.f[i]
    }

    /// Image of a parameter value.
    pub fn eval(&self, s: &Rational, t: &Rational) -> [Rational; 3] {
        [self.f[0].eval(s, t), self.f[1].eval(s, t), self.f[2].eval(s, t)]
    }
}

/// A syzygy `(g0, g1, g2)` with `g0 f0 + g1 f1 + g2 f2 = 0`.
pub type Syzygy = [BinaryForm; 3];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MuBasis {
    pub mu1: usize,
    pub mu2: usize,
    pub p: Syzygy,
    pub q: Syzygy,
}

/// Coefficient matrix of `(g0, g1, g2) -> g0 f0 + g1 f1 + g2 f2` on `(R_mu)^3`.
fn syzygy_matrix(phi: &Parametrization, mu: usize) -> QMatrix {
    let d = phi.degree();
    let mut m = QMatrix::zeros(mu + d + 1, 3 * (mu + 1));
    for (k, f) in phi.forms().iter().enumerate() {
        for j in 0..=mu {
            for (i, c) in f.coeffs().iter().enumerate() {
                if !c.is_zero() {
                    m.set(i + j, k * (mu + 1) + j, c.clone());
                }
            }
        }
    }
    m
}

fn split_syzygy(v: &[Rational], mu: usize) -> Syzygy {
    [0, 1, 2].map(|k| BinaryForm::new(v[k * (mu + 1)..(k + 1) * (mu + 1)].to_vec()))
}

fn flatten_syzygy(g: &Syzygy) -> Vec<Rational> {
    g.iter().flat_map(|f| f.coeffs().iter().cloned()).collect()
}

/// Basis of the syzygies of degree `mu`.
pub fn syzygy_space(phi: &Parametrization, mu: usize) -> Vec<Syzygy> {
    kernel_basis(&syzygy_matrix(phi, mu))
        .iter()
        .map(|v| split_syzygy(v, mu))
        .collect()
}

/// `g0 f0 + g1 f1 + g2 f2`
pub fn apply_syzygy(g: &Syzygy, phi: &Parametrization) -> BinaryForm {
    let f = phi.forms();
    &(&(&g[0] * &f[0]) + &(&g[1] * &f[1])) + &(&g[2] * &f[2])
}

/// Cross product of two syzygies (the 2-minors of `[p q]`).
pub fn cross(p: &Syzygy, q: &Syzygy) -> [BinaryForm; 3] {
    [
        &(&p[1] * &q[2]) - &(&p[2] * &q[1]),
        &(&p[2] * &q[0]) - &(&p[0] * &q[2]),
        &(&p[0] * &q[1]) - &(&p[1] * &q[0]),
    ]
}

/// The unique `lambda` with `a = lambda * b` componentwise, if any.
pub fn proportionality(a: &[BinaryForm], b: &[BinaryForm]) -> Option<Rational> {
    let av: Vec<Rational> = a.iter().flat_map(|f| f.coeffs().iter().cloned()).collect();
    let bv: Vec<Rational> = b.iter().flat_map(|f| f.coeffs().iter().cloned()).collect();
    if av.len() != bv.len() {
        return None;
    }
    let k = bv.iter().position(|c| !c.is_zero())?;
    let lambda = &av[k] / &bv[k];
    (!lambda.is_zero() && av.iter().zip(&bv).all(|(x, y)| *x == &lambda * y)).then_some(lambda)
}

pub fn mu_basis(phi: &Parametrization) -> Result<MuBasis> {
    let d = phi.degree();
    let (mu1, p) = (0..=d)
        .find_map(|mu| syzygy_space(phi, mu).into_iter().next().map(|p| (mu, p)))
        .ok_or_else(|| CurveError::Internal("no syzygy up to degree d".into()))?;
    let mu2 = d - mu1;
    // Coordinates of the monomial multiples of p inside (R_mu2)^3.
    let shifts: Vec<Vec<Rational>> = (0..=mu2 - mu1)
        .map(|i| {
            let m = BinaryForm::monomial(mu2 - mu1, i, Rational::one());
            flatten_syzygy(&[&p[0] * &m, &p[1] * &m, &p[2] * &m])
        })
        .collect();
    let (rref, pivots) = QMatrix::from_rows(shifts).rref();
    let q = kernel_basis(&syzygy_matrix(phi, mu2))
        .iter()
        .map(|v| QMatrix::reduce_against_rref(&rref, &pivots, v))
        .find(|r| r.iter().any(|c| !c.is_zero()))
        .ok_or_else(|| CurveError::Internal("no independent syzygy in degree mu2".into()))?;
    let q = split_syzygy(&primitive_positive(&q), mu2);
    let basis = MuBasis { mu1, mu2, p, q };
    if minors_constant(&basis, phi).is_none() {
        return Err(CurveError::Internal("mu-basis minors are not proportional to phi".into()));
    }
    Ok(basis)
}

/// `lambda` with `p x q = lambda (f0, f1, f2)`.
pub fn minors_constant(basis: &MuBasis, phi: &Parametrization) -> Option<Rational> {
    proportionality(&cross(&basis.p, &basis.q), phi.forms())
}

/// Properness degree `e`: the parametrization is generically `e`-to-1.
pub fn properness(phi: &Parametrization) -> usize {
    properness_degree(phi)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitCurve {
    pub f: TernaryForm,
    pub e: usize,
}

/// Moving line `g0 x + g1 y + g2 z` as a coefficient list in `(s, t)`.
fn moving_line(g: &Syzygy) -> Vec<TernaryForm> {
    (0..=g[0].degree())
        .map(|i| TernaryForm::linear(g[0].coeff(i), g[1].coeff(i), g[2].coeff(i)))
        .collect()
}

/// Resultant of the moving lines of a mu-basis, without normalization.
pub fn moving_line_resultant(basis: &MuBasis, degree: usize) -> Result<TernaryForm> {
    let m = PolyMatrix::sylvester(&moving_line(&basis.p), &moving_line(&basis.q));
    poly_matrix_det(&m, degree as u32).map_err(|e| CurveError::Internal(e.to_string()))
}

pub fn implicit_equation(phi: &Parametrization) -> Result<ImplicitCurve> {
    let e = properness(phi);
    if e > 1 {
        return Err(CurveError::ImproperParametrization(e));
    }
    let basis = mu_basis(phi)?;
    implicit_from_basis(phi, &basis)
}

/// Implicit equation from an already computed mu-basis of a proper `phi`.
pub fn implicit_from_basis(phi: &Parametrization, basis: &MuBasis) -> Result<ImplicitCurve> {
    let f = moving_line_resultant(basis, phi.degree())?.primitive_positive();
    if f.is_zero() || !f.compose(phi.forms()).is_zero() {
        return Err(CurveError::Internal("implicit equation does not vanish on phi".into()));
    }
    Ok(ImplicitCurve { f, e: 1 })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> Parametrization {
        Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn validation() {
        // (s^2, s^2, t^2) * s has the common factor s
        let r = Parametrization::from_ints(&[1, 0, 0, 0], &[1, 0, 0, 0], &[0, 0, 1, 0]);
        assert!(matches!(r, Err(CurveError::InvalidInput(_))));
        let r = Parametrization::from_ints(&[1, 0], &[0, 1], &[1, 1]);
        assert!(matches!(r, Err(CurveError::InvalidInput(_))));
        let r = Parametrization::from_ints(&[1, 0, 0], &[2, 0, 0], &[3, 0, 0]);
        assert!(matches!(r, Err(CurveError::InvalidInput(_))));
        let r = Parametrization::from_ints(&[1, 0, 0], &[0, 1, 0, 0], &[0, 0, 1]);
        assert!(matches!(r, Err(CurveError::InvalidInput(_))));
    }

    #[test]
    fn cubic_syzygies() {
        let phi = cubic();
        assert!(syzygy_space(&phi, 0).is_empty());
        let s1 = syzygy_space(&phi, 1);
        assert_eq!(s1.len(), 1);
        assert_eq!(
            s1[0],
            [BinaryForm::zero(1), BinaryForm::from_ints(&[0, 1]), BinaryForm::from_ints(&[-1, 0])]
        );
        assert_eq!(syzygy_space(&phi, 2).len(), 3);
    }

    #[test]
    fn cubic_mu_basis() {
        let b = mu_basis(&cubic()).unwrap();
        assert_eq!((b.mu1, b.mu2), (1, 2));
        assert_eq!(
            b.q,
            [
                BinaryForm::from_ints(&[0, 0, 1]),
                BinaryForm::from_ints(&[-1, 0, 0]),
                BinaryForm::zero(2)
            ]
        );
        assert_eq!(minors_constant(&b, &cubic()), Some(Rational::from_integer((-1).into())));
    }

    #[test]
    fn conic_and_quintic_degrees() {
        let conic = Parametrization::from_ints(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap();
        let b = mu_basis(&conic).unwrap();
        assert_eq!((b.mu1, b.mu2), (1, 1));
        let quintic = Parametrization::from_ints(
            &[1, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 1, 0, 0],
        )
        .unwrap();
        let b = mu_basis(&quintic).unwrap();
        assert_eq!((b.mu1, b.mu2), (2, 3));
        let f = implicit_equation(&quintic).unwrap().f;
        let expect = TernaryForm::from_int_terms(5, &[((2, 3, 0), 1), ((0, 0, 5), -1)]);
        assert_eq!(f, expect);
    }

    #[test]
    fn cubic_implicit() {
        let f = implicit_equation(&cubic()).unwrap().f;
        let expect = TernaryForm::from_int_terms(3, &[((1, 0, 2), 1), ((0, 3, 0), -1)]);
        assert_eq!(f, expect);
    }

    #[test]
    fn improper_detected() {
        let phi = Parametrization::from_ints(&[1, 0, 0, 0, 0], &[0, 0, 1, 0, 0], &[0, 0, 0, 0, 1])
            .unwrap();
        assert_eq!(properness(&phi), 2);
        assert_eq!(implicit_equation(&phi), Err(CurveError::ImproperParametrization(2)));
        assert_eq!(properness(&cubic()), 1);
    }
}
