//! Homogeneous polynomials in three variables, stored sparsely.
//!
//! Keys are exponent triples `(a, b, c)`; since all keys share the same total
//! degree, the natural ordering of the triples is graded-lex with `x > y > z`
//! and the last entry of the map is the leading term.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::binary::BinaryForm;
use super::rational::{denominator_lcm, Rational};
use super::univariate::push_term;

pub type Exponent = (u32, u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TernaryError {
    #[error("divisor does not divide the dividend exactly")]
    NotDivisible,
    #[error("division by the zero form")]
    ZeroDivisor,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    degree: u32,
    terms: BTreeMap<Exponent, Rational>,
}

/// Monomials of `S_n` in graded-lex order `x > y > z` (descending).
pub fn monomials(n: u32) -> Vec<Exponent> {
    let mut out = Vec::with_capacity(((n + 1) * (n + 2) / 2) as usize);
    for a in (0..=n).rev() {
        for b in (0..=n - a).rev() {
            out.push((a, b, n - a - b));
        }
    }
    out
}

/// `dim S_n = C(n+2, 2)`; zero for negative degrees.
pub fn monomial_count(n: i64) -> usize {
    if n < 0 {
        0
    } else {
        ((n + 1) * (n + 2) / 2) as usize
    }
}

impl TernaryForm {
    pub fn zero(degree: u32) -> Self {
        Self {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_terms(0, [((0, 0, 0), c)])
    }

    /// Collects terms, summing duplicates and dropping zeros.
    /// Panics if an exponent does not sum to `degree`.
    pub fn from_terms(degree: u32, terms: impl IntoIterator<Item = (Exponent, Rational)>) -> Self {
        let mut map: BTreeMap<Exponent, Rational> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.0 + e.1 + e.2, degree, "exponent {e:?} is not of degree {degree}");
            *map.entry(e).or_insert_with(Rational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Self { degree, terms: map }
    }

    pub fn from_int_terms(degree: u32, terms: &[(Exponent, i64)]) -> Self {
        Self::from_terms(
            degree,
            terms
                .iter()
                .map(|&(e, c)| (e, Rational::from_integer(BigInt::from(c)))),
        )
    }

    /// The `k`-th coordinate `x`, `y` or `z`.
    pub fn variable(k: usize) -> Self {
        let e = match k {
            0 => (1, 0, 0),
            1 => (0, 1, 0),
            2 => (0, 0, 1),
            _ => panic!("variable index out of range"),
        };
        Self::from_terms(1, [(e, Rational::one())])
    }

    /// `a x + b y + c z`
    pub fn linear(a: &Rational, b: &Rational, c: &Rational) -> Self {
        Self::from_terms(
            1,
            [
                ((1, 0, 0), a.clone()),
                ((0, 1, 0), b.clone()),
                ((0, 0, 1), c.clone()),
            ],
        )
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponent) -> Rational {
        self.terms.get(e).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn leading(&self) -> Option<(&Exponent, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.degree, self.terms.iter().map(|(e, a)| (*e, a * c)))
    }

    /// Partial derivative with respect to coordinate `k`.
    pub fn partial(&self, k: usize) -> Self {
        if self.degree == 0 {
            return Self::zero(0);
        }
        let terms = self.terms.iter().filter_map(|(&(a, b, c), coeff)| {
            let (n, e) = match k {
                0 => (a, (a.wrapping_sub(1), b, c)),
                1 => (b, (a, b.wrapping_sub(1), c)),
                _ => (c, (a, b, c.wrapping_sub(1))),
            };
            (n > 0).then(|| (e, coeff * Rational::from_integer(BigInt::from(n))))
        });
        Self::from_terms(self.degree - 1, terms)
    }

    pub fn gradient(&self) -> [Self; 3] {
        [self.partial(0), self.partial(1), self.partial(2)]
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        let n = self.degree as usize;
        let powers = |v: &Rational| {
            let mut p = vec![Rational::one(); n + 1];
            for k in 1..=n {
                p[k] = &p[k - 1] * v;
            }
            p
        };
        let (px, py, pz) = (powers(x), powers(y), powers(z));
        self.terms
            .iter()
            .map(|(&(a, b, c), coeff)| coeff * &px[a as usize] * &py[b as usize] * &pz[c as usize])
            .sum()
    }

    /// Substitutes binary forms of a common degree for the three variables.
    pub fn compose(&self, f: &[BinaryForm; 3]) -> BinaryForm {
        let d = f[0].degree();
        let n = self.degree as usize;
        if self.is_zero() {
            return BinaryForm::zero(n * d);
        }
        let powers: Vec<Vec<BinaryForm>> = f
            .iter()
            .map(|g| {
                let mut p = vec![BinaryForm::constant(Rational::one())];
                for k in 1..=n {
                    let next = &p[k - 1] * g;
                    p.push(next);
                }
                p
            })
            .collect();
        let mut acc = BinaryForm::zero(n * d);
        for (&(a, b, c), coeff) in &self.terms {
            let m = &(&powers[0][a as usize] * &powers[1][b as usize]) * &powers[2][c as usize];
            acc = &acc + &m.scale(coeff);
        }
        acc
    }

    /// Exact quotient by `divisor`, via leading-term division in graded-lex order.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, TernaryError> {
        let (lead_e, lead_c) = divisor.leading().ok_or(TernaryError::ZeroDivisor)?;
        let (lead_e, inv) = (*lead_e, lead_c.recip());
        if self.is_zero() {
            return Ok(Self::zero(self.degree.saturating_sub(divisor.degree)));
        }
        if divisor.degree > self.degree {
            return Err(TernaryError::NotDivisible);
        }
        let qdeg = self.degree - divisor.degree;
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((&e, c)) = rem.iter().next_back() {
            if e.0 < lead_e.0 || e.1 < lead_e.1 || e.2 < lead_e.2 {
                return Err(TernaryError::NotDivisible);
            }
            let qe = (e.0 - lead_e.0, e.1 - lead_e.1, e.2 - lead_e.2);
            let qc = c * &inv;
            for (&(a, b, cc), dc) in &divisor.terms {
                let key = (a + qe.0, b + qe.1, cc + qe.2);
                let entry = rem.entry(key).or_insert_with(Rational::zero);
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.insert(qe, qc);
        }
        Ok(Self {
            degree: qdeg,
            terms: quot,
        })
    }

    /// Coprime integer coefficients with a positive leading coefficient.
    pub fn primitive_positive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = denominator_lcm(self.terms.values());
        let ints: Vec<(Exponent, BigInt)> = self
            .terms
            .iter()
            .map(|(e, c)| (*e, (c * Rational::from_integer(l.clone())).to_integer()))
            .collect();
        let mut g = ints
            .iter()
            .fold(BigInt::zero(), |acc, (_, v)| num_integer::Integer::gcd(&acc, v));
        if ints.last().unwrap().1.is_negative() {
            g = -g;
        }
        Self::from_terms(
            self.degree,
            ints.into_iter()
                .map(|(e, v)| (e, Rational::from_integer(v / &g))),
        )
    }

    /// Coefficient vector in the graded-lex monomial basis of its degree.
    pub fn coefficient_vector(&self) -> Vec<Rational> {
        monomials(self.degree)
            .iter()
            .map(|e| self.coeff(e))
            .collect()
    }

    pub fn to_string_in(&self, names: [&str; 3]) -> String {
        let mut out = String::new();
        for (&(a, b, c), coeff) in self.terms.iter().rev() {
            let parts: Vec<String> = [a, b, c]
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(&k, v)| if k == 1 { v.to_string() } else { format!("{v}^{k}") })
                .collect();
            push_term(&mut out, coeff, &parts.join("*"));
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_string_in(["x", "y", "z"]))
    }
}

impl fmt::Debug for TernaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[deg {}] {}", self.degree, self)
    }
}

impl Add for &TernaryForm {
    type Output = TernaryForm;
    fn add(self, rhs: &TernaryForm) -> TernaryForm {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, rhs.degree, "adding forms of different degrees");
        TernaryForm::from_terms(
            self.degree,
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(e, c)| (*e, c.clone())),
        )
    }
}

impl Sub for &TernaryForm {
    type Output = TernaryForm;
    fn sub(self, rhs: &TernaryForm) -> TernaryForm {
        self + &(-rhs)
    }
}

impl Neg for &TernaryForm {
    type Output = TernaryForm;
    fn neg(self) -> TernaryForm {
        self.scale(&-Rational::one())
    }
}

impl Mul for &TernaryForm {
    type Output = TernaryForm;
    fn mul(self, rhs: &TernaryForm) -> TernaryForm {
        let terms = self.terms.iter().flat_map(|(&(a, b, c), x)| {
            rhs.terms
                .iter()
                .map(move |(&(p, q, r), y)| ((a + p, b + q, c + r), x * y))
        });
        TernaryForm::from_terms(self.degree + rhs.degree, terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    fn cusp() -> TernaryForm {
        // y^3 - x z^2
        TernaryForm::from_int_terms(3, &[((0, 3, 0), 1), ((1, 0, 2), -1)])
    }

    #[test]
    fn compose_examples() {
        let phi = [
            BinaryForm::from_ints(&[1, 0, 0, 0]),
            BinaryForm::from_ints(&[0, 0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 0, 1]),
        ];
        assert!(cusp().compose(&phi).is_zero());
        assert_eq!(cusp().compose(&phi).degree(), 9);
        assert_eq!(TernaryForm::variable(0).compose(&phi), phi[0]);
        let conic = TernaryForm::from_int_terms(2, &[((1, 0, 1), 1), ((0, 2, 0), -1)]);
        let phi2 = [
            BinaryForm::from_ints(&[1, 0, 0]),
            BinaryForm::from_ints(&[0, 1, 0]),
            BinaryForm::from_ints(&[0, 0, 1]),
        ];
        assert!(conic.compose(&phi2).is_zero());
    }

    #[test]
    fn divide_examples() {
        let x = TernaryForm::variable(0);
        let x2y = TernaryForm::from_int_terms(3, &[((2, 1, 0), 1)]);
        assert_eq!(
            x2y.divide_exact(&x).unwrap(),
            TernaryForm::from_int_terms(2, &[((1, 1, 0), 1)])
        );
        let x2y2 = TernaryForm::from_int_terms(2, &[((2, 0, 0), 1), ((0, 2, 0), 1)]);
        assert_eq!(x2y2.divide_exact(&x), Err(TernaryError::NotDivisible));
        // u (4 v^3 + 27 u w^2) / u
        let dual = TernaryForm::from_int_terms(3, &[((0, 3, 0), 4), ((1, 0, 2), 27)]);
        let disc = &x * &dual;
        assert_eq!(disc.divide_exact(&x).unwrap(), dual);
    }

    #[test]
    fn normalization_and_display() {
        let f = cusp().scale(&rat(-6));
        let n = f.primitive_positive();
        assert_eq!(n.to_string(), "x*z^2 - y^3");
        assert_eq!(n.leading().unwrap().1, &rat(1));
        assert_eq!(monomials(1), vec![(1, 0, 0), (0, 1, 0), (0, 0, 1)]);
        assert_eq!(monomials(2).len(), monomial_count(2));
    }

    #[test]
    fn gradient_of_cusp() {
        let [fx, fy, fz] = cusp().gradient();
        assert_eq!(fx, TernaryForm::from_int_terms(2, &[((0, 0, 2), -1)]));
        assert_eq!(fy, TernaryForm::from_int_terms(2, &[((0, 2, 0), 3)]));
        assert_eq!(fz, TernaryForm::from_int_terms(2, &[((1, 0, 1), -2)]));
    }
}
