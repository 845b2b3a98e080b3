//! Homogeneous polynomials in `(s, t)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::{primitive_positive, Rational};
use super::roots::rational_roots;
use super::univariate::{push_term, UniPoly};
use crate::exactlin::{det, QMatrix};

/// Dense binary form; `coeffs[i]` multiplies `s^(degree-i) t^i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<Rational>,
}

/// A point of the projective line, stored as coprime integers with positive
/// first nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct P1Point {
    pub s: BigInt,
    pub t: BigInt,
}

impl P1Point {
    pub fn new(s: Rational, t: Rational) -> Self {
        let v = primitive_positive(&[s, t]);
        Self {
            s: v[0].to_integer(),
            t: v[1].to_integer(),
        }
    }

    pub fn as_rationals(&self) -> (Rational, Rational) {
        (
            Rational::from_integer(self.s.clone()),
            Rational::from_integer(self.t.clone()),
        )
    }
}

impl fmt::Display for P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}:{})", self.s, self.t)
    }
}

impl BinaryForm {
    /// Panics if `coeffs` is empty; the degree is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a binary form needs at least one coefficient");
        Self {
            degree: coeffs.len() - 1,
            coeffs,
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| Rational::from_integer(c.into())).collect())
    }

    pub fn zero(degree: usize) -> Self {
        Self::new(vec![Rational::zero(); degree + 1])
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c * s^(degree-i) * t^i`
    pub fn monomial(degree: usize, i: usize, c: Rational) -> Self {
        let mut f = Self::zero(degree);
        f.coeffs[i] = c;
        f
    }

    /// `beta*s - alpha*t`, vanishing at `(alpha:beta)`.
    pub fn linear_vanishing_at(p: &P1Point) -> Self {
        let (a, b) = p.as_rationals();
        Self::new(vec![b, -a])
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, s: &Rational, t: &Rational) -> Rational {
        // Horner in s/t would need t != 0; expand with powers instead.
        let mut spow = vec![Rational::one(); self.degree + 1];
        let mut tpow = vec![Rational::one(); self.degree + 1];
        for k in 1..=self.degree {
            spow[k] = &spow[k - 1] * s;
            tpow[k] = &tpow[k - 1] * t;
        }
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &spow[self.degree - i] * &tpow[i])
            .sum()
    }

    pub fn partial_s(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        Self::new(
            (0..self.degree)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(self.degree - i)))
                .collect(),
        )
    }

    pub fn partial_t(&self) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        Self::new(
            (1..=self.degree)
                .map(|i| &self.coeffs[i] * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Exchanges the roles of `s` and `t`.
    pub fn swap_st(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::constant(Rational::one());
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Multiplicity of the factor `t`, i.e. of the root `(1:0)`.
    pub fn t_multiplicity(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `f(s, 1)` as a polynomial in `s`.
    pub fn dehomogenize_t(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// Homogenizes a polynomial in `s` to the given degree (`t` fills the gap).
    pub fn homogenize_s(p: &UniPoly, degree: usize) -> Self {
        let d = p.degree().unwrap_or(0);
        assert!(p.is_zero() || d <= degree, "degree too small for homogenization");
        Self::new((0..=degree).map(|i| p.coeff(degree - i)).collect())
    }

    /// Coprime integer coefficients, first nonzero coefficient positive.
    pub fn primitive_positive(&self) -> Self {
        Self::new(primitive_positive(&self.coeffs))
    }

    /// First nonzero coefficient (s-descending) scaled to one.
    pub fn monic(&self) -> Self {
        match self.coeffs.iter().find(|c| !c.is_zero()) {
            Some(c) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let tm = self.t_multiplicity().min(other.t_multiplicity());
        let g = self.dehomogenize_t().gcd(&other.dehomogenize_t());
        let gd = g.degree().unwrap();
        (&Self::homogenize_s(&g, gd) * &Self::monomial(tm, tm, Rational::one())).monic()
    }

    pub fn gcd_all<'a>(forms: impl IntoIterator<Item = &'a Self>) -> Self {
        let mut it = forms.into_iter();
        let first = it.next().expect("gcd of an empty family").monic();
        it.fold(first, |g, f| g.gcd(f))
    }

    /// Quotient if `divisor` divides `self` exactly.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by the zero form");
        if divisor.degree > self.degree {
            return self.is_zero().then(|| Self::zero(0));
        }
        let qd = self.degree - divisor.degree;
        let lead = divisor.coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let inv = divisor.coeffs[lead].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rational::zero(); qd + 1];
        for k in 0..=qd {
            let c = &rem[k + lead] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, b) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &c * b;
            }
            quot[k] = c;
        }
        rem.iter().all(Zero::is_zero).then(|| Self::new(quot))
    }

    /// Determinant of the Sylvester matrix built from the declared degrees.
    pub fn resultant(&self, other: &Self) -> Rational {
        let m = self.degree;
        let n = other.degree;
        if m + n == 0 {
            return Rational::one();
        }
        det(&sylvester(self.coeffs(), other.coeffs())).expect("Sylvester matrix is square")
    }

    /// Squarefree decomposition: pairwise coprime squarefree factors with
    /// multiplicities whose product recovers `self` up to a constant.
    pub fn squarefree(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree decomposition of the zero form");
        let tm = self.t_multiplicity();
        let mut out: Vec<(Self, usize)> = self
            .dehomogenize_t()
            .squarefree()
            .into_iter()
            .map(|(g, m)| {
                let d = g.degree().unwrap();
                (Self::homogenize_s(&g, d).primitive_positive(), m)
            })
            .collect();
        if tm > 0 {
            out.push((Self::from_ints(&[0, 1]), tm));
        }
        out
    }

    /// Product of the distinct factors.
    pub fn squarefree_part(&self) -> Self {
        let parts = self.squarefree();
        parts
            .iter()
            .fold(Self::constant(Rational::one()), |acc, (g, _)| &acc * g)
            .primitive_positive()
    }

    /// Roots in `P^1(Q)` with multiplicities, ordered by multiplicity class
    /// then by the value `s/t`; the root `(1:0)` comes last.
    pub fn rational_roots(&self) -> Vec<(P1Point, usize)> {
        let mut out = Vec::new();
        let tm = self.t_multiplicity();
        for (g, m) in self.dehomogenize_t().squarefree() {
            for r in rational_roots(&g) {
                out.push((P1Point::new(r, Rational::one()), m));
            }
        }
        if tm > 0 {
            out.push((P1Point::new(Rational::one(), Rational::zero()), tm));
        }
        out
    }

    /// Factor of `self` with every rational root removed (keeps its multiplicity
    /// structure for the remaining part).
    pub fn without_rational_roots(&self) -> Self {
        let mut rest = self.clone();
        for (p, m) in self.rational_roots() {
            let lin = Self::linear_vanishing_at(&p).pow(m);
            rest = rest.exact_div(&lin).expect("root factor divides");
        }
        rest
    }

    /// Displays in the variables `(a, b)` instead of `(s, t)`.
    pub fn to_string_in(&self, a: &str, b: &str) -> String {
        let mut out = String::new();
        let d = self.degree;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut parts = Vec::new();
            match d - i {
                0 => {}
                1 => parts.push(a.to_string()),
                k => parts.push(format!("{a}^{k}")),
            }
            match i {
                0 => {}
                1 => parts.push(b.to_string()),
                k => parts.push(format!("{b}^{k}")),
            }
            push_term(&mut out, c, &parts.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Sylvester matrix of two coefficient vectors (degrees are `len - 1`).
pub fn sylvester(f: &[Rational], g: &[Rational]) -> QMatrix {
    let m = f.len() - 1;
    let n = g.len() - 1;
    let size = m + n;
    let mut out = QMatrix::zeros(size, size);
    for r in 0..n {
        for (j, c) in f.iter().enumerate() {
            out.set(r, r + j, c.clone());
        }
    }
    for r in 0..m {
        for (j, c) in g.iter().enumerate() {
            out.set(n + r, r + j, c.clone());
        }
    }
    out
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in("s", "t"))
    }
}

impl fmt::Debug for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

impl Add for &BinaryForm {
    type Output = BinaryForm;
    fn add(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "adding forms of different degrees");
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &BinaryForm {
    type Output = BinaryForm;
    fn sub(self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "subtracting forms of different degrees");
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Mul for &BinaryForm {
    type Output = BinaryForm;
    fn mul(self, rhs: &BinaryForm) -> BinaryForm {
        let mut out = vec![Rational::zero(); self.degree + rhs.degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BinaryForm::new(out)
    }
}

impl Neg for &BinaryForm {
    type Output = BinaryForm;
    fn neg(self) -> BinaryForm {
        BinaryForm::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn bf(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c)
    }

    #[test]
    fn gcd_examples() {
        // gcd(s t^2, t^3) = t^2
        assert_eq!(bf(&[0, 0, 1, 0]).gcd(&bf(&[0, 0, 0, 1])), bf(&[0, 0, 1]));
        // gcd(s^2 - t^2, (s - t)^2) = s - t
        assert_eq!(bf(&[1, 0, -1]).gcd(&bf(&[1, -2, 1])), bf(&[1, -1]));
        // gcd(s^3, t^3) = 1
        assert_eq!(bf(&[1, 0, 0, 0]).gcd(&bf(&[0, 0, 0, 1])), bf(&[1]));
        // gcd with zero returns the other, normalized
        assert_eq!(bf(&[0, 0]).gcd(&bf(&[2, 4])), bf(&[1, 2]));
    }

    #[test]
    fn resultant_examples() {
        assert_eq!(bf(&[1, 0]).resultant(&bf(&[0, 1])), rat(1));
        assert_eq!(bf(&[1, -1]).resultant(&bf(&[1, 1])), rat(2));
        // 3s^2 + t^2 and 2st + 3t^2
        assert_eq!(bf(&[3, 0, 1]).resultant(&bf(&[0, 2, 3])), rat(93));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(bf(&[0, 0, 1]).squarefree(), vec![(bf(&[0, 1]), 2)]);
        // s (t - s)^2 = s^3 - 2 s^2 t + s t^2
        assert_eq!(
            bf(&[1, -2, 1, 0]).squarefree(),
            vec![(bf(&[1, 0]), 1), (bf(&[1, -1]), 2)]
        );
        assert_eq!(bf(&[1, 0, 0, 1]).squarefree(), vec![(bf(&[1, 0, 0, 1]), 1)]);
    }

    #[test]
    fn rational_root_examples() {
        let p = |s: i64, t: i64| P1Point::new(rat(s), rat(t));
        assert_eq!(bf(&[0, 0, 1]).rational_roots(), vec![(p(1, 0), 2)]);
        assert_eq!(
            bf(&[1, 0, -1]).rational_roots(),
            vec![(p(1, -1), 1), (p(1, 1), 1)]
        );
        assert!(bf(&[1, 0, 1]).rational_roots().is_empty());
    }

    #[test]
    fn exact_division() {
        let f = &bf(&[1, -1]) * &bf(&[2, 0, 5]);
        assert_eq!(f.exact_div(&bf(&[1, -1])), Some(bf(&[2, 0, 5])));
        assert_eq!(bf(&[1, 0, 1]).exact_div(&bf(&[1, 1])), None);
        assert_eq!(bf(&[0, 0, 1]).exact_div(&bf(&[0, 1])), Some(bf(&[0, 1])));
    }

    #[test]
    fn derivatives_and_display() {
        let f = bf(&[1, 0, 1, 0]); // s^3 + s t^2
        assert_eq!(f.partial_s(), bf(&[3, 0, 1]));
        assert_eq!(f.partial_t(), bf(&[0, 2, 0]));
        assert_eq!(f.to_string(), "s^3 + s*t^2");
        assert_eq!(bf(&[0, 0, 1]).to_string(), "t^2");
        assert_eq!(BinaryForm::new(vec![rat(-1), rat(0)]).to_string(), "-s");
    }
}
