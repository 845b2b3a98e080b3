//! The dual curve: Jacobian minors, the dual parametrization, its implicit
//! equation and the factorization of the line discriminant.

use num_traits::Zero;

use crate::error::{CurveError, Result};
use crate::exactalg::rational::{primitive_positive, Rational};
use crate::exactalg::{BinaryForm, TernaryForm};
use crate::exactlin::{poly_matrix_det, PolyMatrix};
use crate::fibers::{P2Point, SingularPoint};
use crate::musyz::{implicit_equation, proportionality, Parametrization};

/// `(m01, m02, m12)` with `m_ij = d_s f_i d_t f_j - d_t f_i d_s f_j`.
pub fn jacobian_minors(phi: &Parametrization) -> [BinaryForm; 3] {
    let f = phi.forms();
    let ds: Vec<BinaryForm> = f.iter().map(BinaryForm::partial_s).collect();
    let dt: Vec<BinaryForm> = f.iter().map(BinaryForm::partial_t).collect();
    let m = |i: usize, j: usize| &(&ds[i] * &dt[j]) - &(&dt[i] * &ds[j]);
    [m(0, 1), m(0, 2), m(1, 2)]
}

/// Scales a triple jointly to coprime integers, first nonzero coefficient positive.
pub fn normalize_triple(g: &[BinaryForm; 3]) -> [BinaryForm; 3] {
    let flat: Vec<Rational> = g.iter().flat_map(|f| f.coeffs().iter().cloned()).collect();
    let v = primitive_positive(&flat);
    let n = g[0].degree() + 1;
    [0, 1, 2].map(|k| BinaryForm::new(v[k * n..(k + 1) * n].to_vec()))
}

fn divide_triple(g: &[BinaryForm; 3], h: &BinaryForm) -> Result<[BinaryForm; 3]> {
    let parts: Vec<BinaryForm> = g
        .iter()
        .map(|f| {
            if f.is_zero() {
                Some(BinaryForm::zero(f.degree() - h.degree()))
            } else {
                f.exact_div(h)
            }
        })
        .collect::<Option<_>>()
        .ok_or_else(|| CurveError::Internal("gcd does not divide a component".into()))?;
    Ok(normalize_triple(&parts.try_into().expect("three forms")))
}

/// `(phi_dual, A)`: `A` is the primitive-positive gcd of the minors and
/// `phi_dual` is `(m12, -m02, m01) / A`, jointly primitive.
pub fn dual_parametrization(phi: &Parametrization) -> Result<([BinaryForm; 3], BinaryForm)> {
    let [m01, m02, m12] = jacobian_minors(phi);
    let a = BinaryForm::gcd_all([&m01, &m02, &m12]).primitive_positive();
    let dual = divide_triple(&[m12, -&m02, m01], &a)?;
    Ok((dual, a))
}

/// `(psi, h)`: the gradient of `F` composed with `phi`, divided by its gcd `h`.
pub fn dual_via_gradient(phi: &Parametrization, f: &TernaryForm) -> Result<([BinaryForm; 3], BinaryForm)> {
    let g = f.gradient().map(|fx| fx.compose(phi.forms()));
    let h = BinaryForm::gcd_all(g.iter()).primitive_positive();
    let psi = divide_triple(&g, &h)?;
    Ok((psi, h))
}

/// `Res_(s,t)(d_s g, d_t g)` for `g = u f0 + v f1 + w f2`, primitive-positive.
pub fn line_discriminant(phi: &Parametrization) -> Result<TernaryForm> {
    let d = phi.degree();
    let f = phi.forms();
    let coeffs = |parts: [BinaryForm; 3]| -> Vec<TernaryForm> {
        (0..d)
            .map(|i| TernaryForm::linear(parts[0].coeff(i), parts[1].coeff(i), parts[2].coeff(i)))
            .collect()
    };
    let gs = coeffs([f[0].partial_s(), f[1].partial_s(), f[2].partial_s()]);
    let gt = coeffs([f[0].partial_t(), f[1].partial_t(), f[2].partial_t()]);
    let m = PolyMatrix::sylvester(&gs, &gt);
    let disc = poly_matrix_det(&m, 2 * (d as u32 - 1)).map_err(|e| CurveError::Internal(e.to_string()))?;
    Ok(disc.primitive_positive())
}

/// A linear factor `L_P = a u + b v + c w` of the discriminant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLine {
    pub line: TernaryForm,
    pub exponent: usize,
    pub point: P2Point,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualData {
    pub minors: [BinaryForm; 3],
    pub a: BinaryForm,
    pub phi_dual: [BinaryForm; 3],
    pub d_dual: usize,
    pub f_dual: TernaryForm,
    pub psi: Option<([BinaryForm; 3], BinaryForm)>,
    pub discriminant: TernaryForm,
    /// `D = constant * F_dual * singular_lines`
    pub constant: Rational,
    pub singular_lines: TernaryForm,
    pub lines: Vec<SingularLine>,
    pub residual: TernaryForm,
}

/// Maximal power of `line` dividing `g`, and the cofactor.
fn peel(g: &TernaryForm, line: &TernaryForm) -> (usize, TernaryForm) {
    let mut k = 0;
    let mut rest = g.clone();
    while rest.degree() > 0 {
        match rest.divide_exact(line) {
            Ok(q) => {
                rest = q;
                k += 1;
            }
            Err(_) => break,
        }
    }
    (k, rest)
}

pub fn discriminant_factorization(
    phi: &Parametrization,
    points: &[SingularPoint],
    f: Option<&TernaryForm>,
) -> Result<DualData> {
    let minors = jacobian_minors(phi);
    let (phi_dual, a) = dual_parametrization(phi)?;
    let d_dual = phi_dual[0].degree();
    let dual_param = Parametrization::new(phi_dual[0].clone(), phi_dual[1].clone(), phi_dual[2].clone())?;
    let f_dual = match implicit_equation(&dual_param) {
        Ok(c) => c.f,
        Err(CurveError::ImproperParametrization(e)) => {
            return Err(CurveError::Internal(format!("dual parametrization is {e}-to-1")))
        }
        Err(e) => return Err(e),
    };
    if f_dual.degree() as usize != d_dual {
        return Err(CurveError::Internal("dual degree mismatch".into()));
    }
    let psi = match f {
        Some(f) => {
            let (psi, h) = dual_via_gradient(phi, f)?;
            if proportionality(&psi, &phi_dual).is_none() {
                return Err(CurveError::Internal("gradient image is not the dual parametrization".into()));
            }
            Some((psi, h))
        }
        None => None,
    };
    let disc = line_discriminant(phi)?;
    let quotient = disc
        .divide_exact(&f_dual)
        .map_err(|_| CurveError::Internal("dual equation does not divide the discriminant".into()))?;
    let singular_lines = quotient.primitive_positive();
    let constant = quotient_constant(&quotient, &singular_lines);
    let mut rest = singular_lines.clone();
    let mut lines = Vec::new();
    for p in points {
        if p.m <= p.r {
            continue;
        }
        let [a0, a1, a2] = p.point.as_rationals();
        let line = TernaryForm::linear(&a0, &a1, &a2).primitive_positive();
        let (k, cofactor) = peel(&rest, &line);
        if k != p.m - p.r {
            return Err(CurveError::Internal(format!(
                "line of {} has exponent {k}, expected {}",
                p.point,
                p.m - p.r
            )));
        }
        rest = cofactor;
        lines.push(SingularLine {
            line,
            exponent: k,
            point: p.point.clone(),
        });
    }
    Ok(DualData {
        minors,
        a,
        phi_dual,
        d_dual,
        f_dual,
        psi,
        discriminant: disc,
        constant,
        singular_lines,
        lines,
        residual: rest.primitive_positive(),
    })
}

/// `c` with `q = c * p`, both nonzero.
fn quotient_constant(q: &TernaryForm, p: &TernaryForm) -> Rational {
    let (e, c) = p.leading().expect("nonzero");
    let qc = q.coeff(e);
    if c.is_zero() {
        Rational::zero()
    } else {
        qc / c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn cubic() -> Parametrization {
        Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn cubic_minors_and_dual() {
        let m = jacobian_minors(&cubic());
        assert_eq!(m[0], BinaryForm::from_ints(&[0, 6, 0, 0, 0]));
        assert_eq!(m[1], BinaryForm::from_ints(&[0, 0, 9, 0, 0]));
        assert_eq!(m[2], BinaryForm::from_ints(&[0, 0, 0, 0, 3]));
        let (dual, a) = dual_parametrization(&cubic()).unwrap();
        assert_eq!(a, BinaryForm::from_ints(&[0, 1]));
        assert_eq!(
            dual,
            [
                BinaryForm::from_ints(&[0, 0, 0, 1]),
                BinaryForm::from_ints(&[0, -3, 0, 0]),
                BinaryForm::from_ints(&[2, 0, 0, 0]),
            ]
        );
    }

    #[test]
    fn cubic_discriminant() {
        // u (4 v^3 + 27 u w^2)
        let d = line_discriminant(&cubic()).unwrap();
        let expect = TernaryForm::from_int_terms(4, &[((1, 3, 0), 4), ((2, 0, 2), 27)]);
        assert_eq!(d, expect);
        let conic = Parametrization::from_ints(&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]).unwrap();
        let expect = TernaryForm::from_int_terms(2, &[((0, 2, 0), -1), ((1, 0, 1), 4)]);
        assert_eq!(line_discriminant(&conic).unwrap(), expect);
    }

    #[test]
    fn cubic_gradient_image() {
        let f = TernaryForm::from_int_terms(3, &[((1, 0, 2), 1), ((0, 3, 0), -1)]);
        let (psi, h) = dual_via_gradient(&cubic(), &f).unwrap();
        assert_eq!(h, BinaryForm::from_ints(&[0, 0, 0, 1]));
        let (dual, _) = dual_parametrization(&cubic()).unwrap();
        assert_eq!(proportionality(&psi, &dual), Some(rat(1)));
    }
}
