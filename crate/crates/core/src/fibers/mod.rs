//! Fibers of the parametrization: pull-back polynomials, rational singular
//! points with their branch data, the exact cuspidality decision and the
//! pointwise `M_k` rank test.

pub mod d5;
pub mod qforms;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::rational::{primitive_positive, rat, Rational};
use crate::exactalg::{BiForm, BinaryForm, P1Point, UniPoly};
use crate::exactlin::{interpolate, nullity, QMatrix};
use crate::musyz::Parametrization;

pub use d5::{explore, Ext, Split};
pub use qforms::{qforms, FiberData};

/// A point of the projective plane as coprime integers, first nonzero positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P2Point(pub [BigInt; 3]);

impl P2Point {
    pub fn new(c: &[Rational; 3]) -> Self {
        let v = primitive_positive(c);
        Self([0, 1, 2].map(|k| v[k].to_integer()))
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Self {
        Self::new(&[rat(a), rat(b), rat(c)])
    }

    pub fn as_rationals(&self) -> [Rational; 3] {
        self.0.clone().map(Rational::from_integer)
    }
}

impl fmt::Display for P2Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{}:{})", self.0[0], self.0[1], self.0[2])
    }
}

/// Squarefree factor of a pull-back polynomial: `deg factor` branches, each
/// of the given multiplicity. Rational branches have linear factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Branch {
    pub factor: BinaryForm,
    pub multiplicity: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPoint {
    pub point: P2Point,
    pub h: BinaryForm,
    pub m: usize,
    pub r: usize,
    pub branches: Vec<Branch>,
}

/// `a f0 + b f1 + c f2`
fn compose_line(phi: &Parametrization, l: &[Rational; 3]) -> BinaryForm {
    let f = phi.forms();
    &(&f[0].scale(&l[0]) + &f[1].scale(&l[1])) + &f[2].scale(&l[2])
}

/// Monic gcd of the compositions of two lines through `p`; constant iff `p`
/// is off the curve.
pub fn pullback_polynomial(phi: &Parametrization, p: &P2Point) -> BinaryForm {
    let [x, y, z] = p.as_rationals();
    let zero = Rational::zero();
    let candidates = [
        [y.clone(), -x.clone(), zero.clone()],
        [z.clone(), zero.clone(), -x.clone()],
        [zero, z, -y],
    ];
    let mut chosen: Vec<&[Rational; 3]> = Vec::new();
    for l in &candidates {
        if l.iter().all(Zero::is_zero) {
            continue;
        }
        if let Some(first) = chosen.first() {
            let m = QMatrix::from_rows(vec![first.to_vec(), l.to_vec()]);
            if crate::exactlin::rank(&m) < 2 {
                continue;
            }
        }
        chosen.push(l);
        if chosen.len() == 2 {
            break;
        }
    }
    compose_line(phi, chosen[0]).gcd(&compose_line(phi, chosen[1]))
}

fn branches_of(h: &BinaryForm) -> Vec<Branch> {
    let mut out = Vec::new();
    for (g, m) in h.squarefree() {
        for (p, _) in g.rational_roots() {
            out.push(Branch {
                factor: BinaryForm::linear_vanishing_at(&p).primitive_positive(),
                multiplicity: m,
            });
        }
        let rest = g.without_rational_roots();
        if rest.degree() > 0 {
            out.push(Branch {
                factor: rest.primitive_positive(),
                multiplicity: m,
            });
        }
    }
    out
}

fn singular_point(phi: &Parametrization, p: &P2Point) -> Option<SingularPoint> {
    let h = pullback_polynomial(phi, p);
    let m = h.degree();
    if m < 2 {
        return None;
    }
    let r = h.squarefree_part().degree();
    Some(SingularPoint {
        point: p.clone(),
        branches: branches_of(&h),
        h,
        m,
        r,
    })
}

/// Dehomogenized values `f_i(theta, 1)` reduced in the extension.
fn reduced_components(phi: &Parametrization, ext: &Ext) -> [UniPoly; 3] {
    phi.forms().clone().map(|f| ext.reduce(&f.dehomogenize_t()))
}

/// `Res(m, x * den - num)` as a polynomial in `x`, with the second argument
/// declared of degree `deg m - 1`.
fn ratio_charpoly(m: &UniPoly, num: &UniPoly, den: &UniPoly) -> UniPoly {
    let n = m.degree().unwrap();
    let mh = BinaryForm::homogenize_s(m, n);
    let points: Vec<Rational> = (0..=n as i64).map(rat).collect();
    let values: Vec<Rational> = points
        .iter()
        .map(|x| {
            let r = &den.scale(x) - num;
            mh.resultant(&BinaryForm::homogenize_s(&r, n - 1))
        })
        .collect();
    interpolate(&points, &values)
}

/// Splits `m` (coprime to `den`) by the rational values of `num / den` at its roots.
fn split_by_ratio(m: &UniPoly, num: &UniPoly, den: &UniPoly) -> Vec<(Rational, UniPoly)> {
    if m.degree() == Some(0) {
        return Vec::new();
    }
    let ext = Ext::new(m);
    let (num, den) = (ext.reduce(num), ext.reduce(den));
    if m.degree() == Some(1) {
        let inv = ext.inv(&den).expect("denominator is a unit");
        return vec![(ext.mul(&num, &inv).coeff(0), m.monic())];
    }
    let chi = ratio_charpoly(m, &num, &den);
    crate::exactalg::rational_roots(&chi)
        .into_iter()
        .map(|c| (c.clone(), m.gcd(&(&num - &den.scale(&c)))))
        .filter(|(_, g)| g.degree().is_some_and(|k| k > 0))
        .collect()
}

/// Rational points of the plane hit by roots of `w`, with the factor of `w`
/// mapping to each.
pub fn rational_images(phi: &Parametrization, w: &UniPoly) -> Vec<(P2Point, UniPoly)> {
    let mut out = Vec::new();
    if w.degree().map_or(true, |k| k == 0) {
        return out;
    }
    let ext = Ext::new(w);
    let [f0, f1, f2] = reduced_components(phi, &ext);
    let w0 = w.gcd(&f0);
    let w1 = w.exact_div(&w0).unwrap();
    for (c1, m1) in split_by_ratio(&w1, &f1, &f0) {
        for (c2, m2) in split_by_ratio(&m1, &f2, &f0) {
            out.push((P2Point::new(&[rat(1), c1.clone(), c2]), m2));
        }
    }
    if w0.degree().is_some_and(|k| k > 0) {
        let w00 = w0.gcd(&f1);
        let w01 = w0.exact_div(&w00).unwrap();
        for (c, m) in split_by_ratio(&w01, &f2, &f1) {
            out.push((P2Point::new(&[rat(0), rat(1), c]), m));
        }
        if w00.degree().is_some_and(|k| k > 0) {
            out.push((P2Point::from_ints(0, 0, 1), w00));
        }
    }
    out
}

/// A parameter value: rational, or any root `(theta : 1)` of a squarefree `w`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Parameter {
    Rational(P1Point),
    Algebraic(UniPoly),
}

/// A second parameter with the same image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Partner {
    /// Binary form in `(u, v)` over the rationals, coprime to the diagonal.
    Rational(BinaryForm),
    /// Monic polynomial in `u` over `Q[theta]/(w)`, not vanishing at `theta`.
    Algebraic(Vec<UniPoly>),
    /// The parameter `(1 : 0)`.
    AtInfinity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub parameter: Parameter,
    pub partner: Partner,
}

impl Witness {
    /// Re-checks the identification from scratch.
    pub fn verify(&self, phi: &Parametrization) -> bool {
        let Ok(q) = qforms::off_diagonal_forms(phi) else {
            return false;
        };
        match (&self.parameter, &self.partner) {
            (Parameter::Rational(p), Partner::Rational(g)) => {
                let (s, t) = p.as_rationals();
                let diag = BinaryForm::linear_vanishing_at(p);
                g.degree() > 0
                    && g.gcd(&diag).degree() == 0
                    && q.iter().all(|b| {
                        let f = b.at_st(&s, &t);
                        f.is_zero() || f.exact_div(g).is_some()
                    })
            }
            (Parameter::Rational(p), Partner::AtInfinity) => {
                let (s, t) = p.as_rationals();
                !t.is_zero() && q.iter().all(|b| b.at_st(&s, &t).coeff(0).is_zero())
            }
            (Parameter::Algebraic(w), partner) => {
                let ext = Ext::new(w);
                let theta = UniPoly::from_ints(&[0, 1]);
                match partner {
                    Partner::Algebraic(g) => {
                        g.len() > 1
                            && ext.inv(&ext.eval(g, &theta)).is_ok()
                            && q.iter().all(|b| {
                                let p: Vec<UniPoly> =
                                    b.dehomogenized().iter().map(|c| ext.reduce(c)).collect();
                                ext.rem(&p, g).is_ok_and(|r| r.is_empty())
                            })
                    }
                    Partner::AtInfinity => q.iter().all(|b| at_infinity(&ext, b).is_zero()),
                    Partner::Rational(_) => false,
                }
            }
            (Parameter::Rational(_), Partner::Algebraic(_)) => false,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.parameter {
            Parameter::Rational(p) => write!(f, "parameter {p}")?,
            Parameter::Algebraic(w) => write!(f, "root theta of {}", w.to_string_in("theta"))?,
        }
        match &self.partner {
            Partner::Rational(g) => write!(f, " shares its image with the roots of {}", g.to_string_in("u", "v")),
            Partner::Algebraic(g) => {
                let terms: Vec<String> = g
                    .iter()
                    .enumerate()
                    .rev()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| format!("({})*u^{k}", c.to_string_in("theta")))
                    .collect();
                write!(f, " shares its image with the roots of {}", terms.join(" + "))
            }
            Partner::AtInfinity => write!(f, " shares its image with (1:0)"),
        }
    }
}

/// `Q(theta, 1; 1, 0)` reduced in the extension.
fn at_infinity(ext: &Ext, q: &BiForm) -> UniPoly {
    let coeffs = q.dehomogenized();
    ext.reduce(coeffs.last().expect("nonempty"))
}

/// Partner search at a rational parameter.
fn rational_partner(q: &[BiForm; 3], p: &P1Point) -> Option<Partner> {
    let (s, t) = p.as_rationals();
    let spec: Vec<BinaryForm> = q.iter().map(|b| b.at_st(&s, &t)).filter(|f| !f.is_zero()).collect();
    let mut g = BinaryForm::gcd_all(spec.iter());
    let diag = BinaryForm::linear_vanishing_at(p);
    while g.degree() > 0 {
        match g.exact_div(&diag) {
            Some(h) => g = h,
            None => break,
        }
    }
    (g.degree() > 0).then(|| Partner::Rational(g.primitive_positive()))
}

/// Partner search at the roots of the extension modulus.
fn algebraic_partner(q: &[BiForm; 3], ext: &Ext) -> Result<Option<Partner>, Split> {
    let theta = UniPoly::from_ints(&[0, 1]);
    let mut g: Vec<UniPoly> = Vec::new();
    for b in q {
        let p = ext.lift(&b.dehomogenized())?;
        g = ext.gcd(&g, &p)?;
    }
    while g.len() > 1 && ext.is_zero(&ext.eval(&g, &theta))? {
        g = ext.div_linear(&g, &theta);
    }
    if g.len() > 1 {
        return Ok(Some(Partner::Algebraic(g)));
    }
    for b in q {
        if !ext.is_zero(&at_infinity(ext, b))? {
            return Ok(None);
        }
    }
    Ok(Some(Partner::AtInfinity))
}

/// Partner search over every root of `w`, splitting as needed.
fn algebraic_partners(q: &[BiForm; 3], w: &UniPoly) -> Vec<(UniPoly, Option<Partner>)> {
    if w.degree().map_or(true, |k| k == 0) {
        return Vec::new();
    }
    explore(w, |ext| algebraic_partner(q, ext))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CuspidalityStatus {
    Cuspidal,
    NotCuspidal,
    Incomplete,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CuspidalityVerdict {
    pub status: CuspidalityStatus,
    pub witness: Option<Witness>,
    pub diagnostics: String,
}

/// Default cap on the degree of a residual factor handled by dynamic evaluation.
pub const DEFAULT_DEGREE_CAP: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberAnalysis {
    pub data: FiberData,
    pub points: Vec<SingularPoint>,
    pub complete: bool,
    /// Part of `T` without rational roots.
    pub residual_support: BinaryForm,
    /// Factors of the residual support whose roots map to non-rational points
    /// and take part in identifications.
    pub residual_partners: Vec<UniPoly>,
    pub cuspidality: CuspidalityVerdict,
}

pub fn analyze_fibers(phi: &Parametrization, a: &BinaryForm) -> crate::error::Result<FiberAnalysis> {
    analyze_fibers_with_cap(phi, a, DEFAULT_DEGREE_CAP)
}

pub fn analyze_fibers_with_cap(
    phi: &Parametrization,
    a: &BinaryForm,
    cap: usize,
) -> crate::error::Result<FiberAnalysis> {
    let data = qforms(phi, a)?;
    let t = &data.t;
    let mut points: BTreeMap<P2Point, SingularPoint> = BTreeMap::new();
    let mut witness: Option<Witness> = None;
    let rational = t.rational_roots();
    for (p, _) in &rational {
        let (s, tt) = p.as_rationals();
        let img = P2Point::new(&phi.eval(&s, &tt));
        if !points.contains_key(&img) {
            if let Some(sp) = singular_point(phi, &img) {
                points.insert(img, sp);
            }
        }
        if witness.is_none() {
            if let Some(partner) = rational_partner(&data.q, p) {
                witness = Some(Witness {
                    parameter: Parameter::Rational(p.clone()),
                    partner,
                });
            }
        }
    }
    let residual_support = t.without_rational_roots().primitive_positive();
    let w = residual_support.dehomogenize_t().monic();
    let mut diagnostics = Vec::new();
    let mut incomplete = false;
    let mut leftover = w.clone();
    let mut residual_partners = Vec::new();
    if w.degree().is_some_and(|k| k > 0) {
        if w.degree().unwrap() > cap {
            incomplete = true;
            diagnostics.push(format!(
                "residual factor of degree {} exceeds the cap {cap}",
                w.degree().unwrap()
            ));
        } else {
            for (img, factor) in rational_images(phi, &w) {
                leftover = leftover.exact_div(&factor).expect("image factor divides");
                if !points.contains_key(&img) {
                    if let Some(sp) = singular_point(phi, &img) {
                        points.insert(img, sp);
                    }
                }
            }
            for (factor, partner) in algebraic_partners(&data.q, &w) {
                if let Some(partner) = partner {
                    if !factor.gcd(&leftover).is_constant() {
                        residual_partners.push(factor.gcd(&leftover));
                    }
                    if witness.is_none() {
                        witness = Some(Witness {
                            parameter: Parameter::Algebraic(factor),
                            partner,
                        });
                    }
                }
            }
        }
    }
    let points: Vec<SingularPoint> = points.into_values().collect();
    let excess: usize = points.iter().map(|p| p.m - p.r).sum();
    let a_dehom = a.dehomogenize_t();
    let complete = !incomplete
        && excess == a.degree()
        && residual_partners.is_empty()
        && (a_dehom.is_zero() || leftover.gcd(&a_dehom).is_constant());
    if excess != a.degree() {
        diagnostics.push(format!(
            "rational points account for {excess} of deg A = {}",
            a.degree()
        ));
    }
    let status = match (&witness, incomplete) {
        (Some(_), _) => CuspidalityStatus::NotCuspidal,
        (None, true) => CuspidalityStatus::Incomplete,
        (None, false) => CuspidalityStatus::Cuspidal,
    };
    Ok(FiberAnalysis {
        data,
        points,
        complete,
        residual_support,
        residual_partners,
        cuspidality: CuspidalityVerdict {
            status,
            witness,
            diagnostics: diagnostics.join("; "),
        },
    })
}

/// Singular points with rational coordinates, completeness flag and the
/// non-rational part of the support.
pub fn singular_points(
    phi: &Parametrization,
    a: &BinaryForm,
) -> crate::error::Result<(Vec<SingularPoint>, bool, BinaryForm)> {
    let f = analyze_fibers(phi, a)?;
    Ok((f.points, f.complete, f.residual_support))
}

pub fn cuspidality(phi: &Parametrization, a: &BinaryForm) -> crate::error::Result<CuspidalityVerdict> {
    Ok(analyze_fibers(phi, a)?.cuspidality)
}

/// Matrix `M_k`: the shifts `H s^(d-k-i) t^i` followed by `f0, f1, f2`.
pub fn mk_matrix(phi: &Parametrization, h: &BinaryForm) -> QMatrix {
    let d = phi.degree();
    let k = h.degree();
    let mut cols: Vec<Vec<Rational>> = (0..=d - k)
        .map(|i| (h * &BinaryForm::monomial(d - k, i, Rational::one())).coeffs().to_vec())
        .collect();
    cols.extend(phi.forms().iter().map(|f| f.coeffs().to_vec()));
    QMatrix::from_columns(d + 1, &cols)
}

/// True iff `M_k` has nullity at least two, i.e. `H` divides the pull-back
/// polynomial of a point of multiplicity at least `deg H`.
pub fn mk_rank_test(phi: &Parametrization, h: &BinaryForm) -> bool {
    assert!(h.degree() >= 1 && h.degree() < phi.degree(), "1 <= deg H <= d - 1");
    nullity(&mk_matrix(phi, h)) >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> Parametrization {
        Parametrization::from_ints(&[1, 0, 0, 0], &[0, 0, 1, 0], &[0, 0, 0, 1]).unwrap()
    }

    fn quintic_d() -> Parametrization {
        Parametrization::from_ints(&[1, 0, 0, 0, 0, 0], &[0, 0, 1, 0, 0, 0], &[0, 0, 0, 0, 0, 1]).unwrap()
    }

    #[test]
    fn pullbacks() {
        let phi = cubic();
        assert_eq!(pullback_polynomial(&phi, &P2Point::from_ints(1, 0, 0)), BinaryForm::from_ints(&[0, 0, 1]));
        assert_eq!(pullback_polynomial(&phi, &P2Point::from_ints(1, 1, 1)), BinaryForm::from_ints(&[1, -1]));
        assert_eq!(pullback_polynomial(&phi, &P2Point::from_ints(1, 1, 0)).degree(), 0);
        let q = quintic_d();
        assert_eq!(pullback_polynomial(&q, &P2Point::from_ints(1, 0, 0)), BinaryForm::from_ints(&[0, 0, 1]));
        assert_eq!(pullback_polynomial(&q, &P2Point::from_ints(0, 0, 1)), BinaryForm::from_ints(&[1, 0, 0, 0]));
    }

    #[test]
    fn rank_test() {
        let q = quintic_d();
        assert!(mk_rank_test(&q, &BinaryForm::from_ints(&[0, 0, 1])));
        assert!(mk_rank_test(&q, &BinaryForm::from_ints(&[1, 0, 0])));
        assert!(!mk_rank_test(&q, &BinaryForm::from_ints(&[0, 1, 0])));
        assert!(mk_rank_test(&cubic(), &BinaryForm::from_ints(&[0, 0, 1])));
        assert!(!mk_rank_test(&cubic(), &BinaryForm::from_ints(&[1, 0, 0])));
    }

    #[test]
    fn cubic_fibers() {
        let f = analyze_fibers(&cubic(), &BinaryForm::from_ints(&[0, 1])).unwrap();
        assert_eq!(f.points.len(), 1);
        assert_eq!(f.points[0].point, P2Point::from_ints(1, 0, 0));
        assert_eq!((f.points[0].m, f.points[0].r), (2, 1));
        assert!(f.complete);
        assert_eq!(f.cuspidality.status, CuspidalityStatus::Cuspidal);
    }

    #[test]
    fn nodal_cubic_witness() {
        // (s^2 t - t^3, s^3 - s t^2, t^3... ) node at the image of s = +-t
        let phi = Parametrization::from_ints(&[0, 1, 0, -1], &[1, 0, -1, 0], &[0, 0, 0, 1]).unwrap();
        let (_, a) = crate::dualgeom::dual_parametrization(&phi).unwrap();
        let f = analyze_fibers(&phi, &a).unwrap();
        assert_eq!(f.cuspidality.status, CuspidalityStatus::NotCuspidal);
        assert!(f.cuspidality.witness.as_ref().unwrap().verify(&phi));
        assert_eq!(f.points.len(), 1);
        assert_eq!((f.points[0].m, f.points[0].r), (2, 2));
    }

    #[test]
    fn irrational_node() {
        // node with preimages s^2 = 2 t^2: (s^2 t - 2 t^3, s^3 - 2 s t^2, t^3)
        let phi = Parametrization::from_ints(&[0, 1, 0, -2], &[1, 0, -2, 0], &[0, 0, 0, 1]).unwrap();
        let (_, a) = crate::dualgeom::dual_parametrization(&phi).unwrap();
        let f = analyze_fibers(&phi, &a).unwrap();
        assert_eq!(f.cuspidality.status, CuspidalityStatus::NotCuspidal);
        let w = f.cuspidality.witness.clone().unwrap();
        assert!(matches!(w.parameter, Parameter::Algebraic(_)));
        assert!(w.verify(&phi));
        assert_eq!(f.points.len(), 1);
        assert_eq!(f.points[0].point, P2Point::from_ints(0, 0, 1));
        assert!(f.complete);
    }
}
