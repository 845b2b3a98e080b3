//! Bihomogeneous forms in `(s, t; u, v)`.

use std::ops::Add;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::binary::BinaryForm;
use super::rational::Rational;
use super::univariate::UniPoly;

/// Entry `(i, j)` multiplies `s^(a-i) t^i u^(b-j) v^j` for bidegree `(a, b)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiForm {
    bidegree: (usize, usize),
    coeffs: Vec<Rational>,
}

impl BiForm {
    pub fn zero(a: usize, b: usize) -> Self {
        Self {
            bidegree: (a, b),
            coeffs: vec![Rational::zero(); (a + 1) * (b + 1)],
        }
    }

    /// Builds from a coefficient matrix, one row per `(s, t)` monomial.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let a = rows.len() - 1;
        let b = rows[0].len() - 1;
        assert!(rows.iter().all(|r| r.len() == b + 1), "ragged coefficient matrix");
        Self {
            bidegree: (a, b),
            coeffs: rows.into_iter().flatten().collect(),
        }
    }

    pub fn bidegree(&self) -> (usize, usize) {
        self.bidegree
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.coeffs[i * (self.bidegree.1 + 1) + j]
    }

    fn get_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        let w = self.bidegree.1 + 1;
        &mut self.coeffs[i * w + j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self {
            bidegree: self.bidegree,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// `f(s,t) g(u,v) - g(s,t) f(u,v)`
    pub fn antisymmetric(f: &BinaryForm, g: &BinaryForm) -> Self {
        let d = f.degree();
        assert_eq!(d, g.degree());
        let mut out = Self::zero(d, d);
        for i in 0..=d {
            for j in 0..=d {
                *out.get_mut(i, j) = f.coeff(i) * g.coeff(j) - g.coeff(i) * f.coeff(j);
            }
        }
        out
    }

    /// Exact quotient by `s v - t u`, or `None` when it does not divide.
    pub fn divide_by_diagonal(&self) -> Option<Self> {
        let (a, b) = self.bidegree;
        if a == 0 || b == 0 {
            return self.is_zero().then(|| Self::zero(a.saturating_sub(1), b.saturating_sub(1)));
        }
        // (s v - t u) Q has coefficient N[i][j] = Q[i][j-1] - Q[i-1][j].
        let mut q = Self::zero(a - 1, b - 1);
        for i in 0..a {
            for j in 1..=b {
                let prev = if i > 0 && j <= b - 1 {
                    q.get(i - 1, j).clone()
                } else {
                    Rational::zero()
                };
                *q.get_mut(i, j - 1) = self.get(i, j) + prev;
            }
        }
        (q.times_diagonal() == *self).then_some(q)
    }

    /// Product with `s v - t u`.
    pub fn times_diagonal(&self) -> Self {
        let (a, b) = self.bidegree;
        let mut out = Self::zero(a + 1, b + 1);
        for i in 0..=a {
            for j in 0..=b {
                let c = self.get(i, j);
                if c.is_zero() {
                    continue;
                }
                *out.get_mut(i, j + 1) += c;
                *out.get_mut(i + 1, j) -= c;
            }
        }
        out
    }

    /// Specializes `(s, t)`, leaving a binary form in `(u, v)`.
    pub fn at_st(&self, s: &Rational, t: &Rational) -> BinaryForm {
        let (a, b) = self.bidegree;
        let weights: Vec<Rational> = (0..=a)
            .map(|i| BinaryForm::monomial(a, i, Rational::one()).eval(s, t))
            .collect();
        BinaryForm::new(
            (0..=b)
                .map(|j| (0..=a).map(|i| &weights[i] * self.get(i, j)).sum())
                .collect(),
        )
    }

    /// Restriction to the diagonal `u = s, v = t`.
    pub fn diagonal(&self) -> BinaryForm {
        let (a, b) = self.bidegree;
        let mut out = vec![Rational::zero(); a + b + 1];
        for i in 0..=a {
            for j in 0..=b {
                out[i + j] += self.get(i, j);
            }
        }
        BinaryForm::new(out)
    }

    /// Dehomogenized at `t = v = 1`: entry `k` is the coefficient of `u^k`
    /// as a polynomial in `s`.
    pub fn dehomogenized(&self) -> Vec<UniPoly> {
        let (a, b) = self.bidegree;
        (0..=b)
            .map(|k| {
                let j = b - k;
                UniPoly::new((0..=a).map(|p| self.get(a - p, j).clone()).collect())
            })
            .collect()
    }

    /// `Res_(u,v)` with declared degrees; a binary form in `(s, t)` of degree
    /// `a1*b2 + a2*b1`, recovered by interpolation on `(k : 1)`.
    pub fn resultant_uv(&self, other: &Self) -> BinaryForm {
        let (a1, b1) = self.bidegree;
        let (a2, b2) = other.bidegree;
        let degree = a1 * b2 + a2 * b1;
        let one = Rational::one();
        let points: Vec<Rational> = (0..=degree)
            .map(|k| Rational::from_integer(BigInt::from(k)))
            .collect();
        let values: Vec<Rational> = {
            use rayon::prelude::*;
            points
                .par_iter()
                .map(|k| self.at_st(k, &one).resultant(&other.at_st(k, &one)))
                .collect()
        };
        let p = crate::exactlin::interpolate(&points, &values);
        BinaryForm::homogenize_s(&p, degree)
    }
}

impl Add for &BiForm {
    type Output = BiForm;
    fn add(self, rhs: &BiForm) -> BiForm {
        assert_eq!(self.bidegree, rhs.bidegree);
        BiForm {
            bidegree: self.bidegree,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(x, y)| x + y).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn conic_quotient() {
        // (s^2 v^2 - t^2 u^2) / (s v - t u) = s v + t u
        let n = BiForm::antisymmetric(
            &BinaryForm::from_ints(&[1, 0, 0]),
            &BinaryForm::from_ints(&[0, 0, 1]),
        );
        let q = n.divide_by_diagonal().unwrap();
        let expect = BiForm::from_rows(vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]]);
        assert_eq!(q, expect);
    }

    #[test]
    fn non_divisible() {
        let n = BiForm::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(0)]]);
        assert!(n.divide_by_diagonal().is_none());
    }

    #[test]
    fn specializations() {
        // s u + 2 t v
        let f = BiForm::from_rows(vec![vec![rat(1), rat(0)], vec![rat(0), rat(2)]]);
        assert_eq!(f.at_st(&rat(3), &rat(1)), BinaryForm::from_ints(&[3, 2]));
        assert_eq!(f.diagonal(), BinaryForm::from_ints(&[1, 0, 2]));
        // Res_(u,v)(s u + 2 t v, u) = -(2t)... Sylvester [[s, 2t],[1, 0]] = -2t
        let g = BiForm::from_rows(vec![vec![rat(1), rat(0)]]);
        assert_eq!(f.resultant_uv(&g), BinaryForm::from_ints(&[0, -2]));
    }
}
