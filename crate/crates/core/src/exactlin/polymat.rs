use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{det, LinError, QMatrix};
use crate::exactalg::rational::{rat, Rational};
use crate::exactalg::ternary::TernaryForm;
use crate::exactalg::univariate::UniPoly;

/// Square matrix of ternary forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    pub entries: Vec<Vec<TernaryForm>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<TernaryForm>>) -> Self {
        Self { entries }
    }

    /// Sylvester matrix of two binary forms in `(s, t)` whose coefficients
    /// are ternary forms, given as coefficient lists (`s`-descending).
    pub fn sylvester(f: &[TernaryForm], g: &[TernaryForm]) -> Self {
        let m = f.len() - 1;
        let n = g.len() - 1;
        let zero = TernaryForm::zero(f[0].degree());
        let mut rows = vec![vec![zero; m + n]; m + n];
        for r in 0..n {
            for (j, c) in f.iter().enumerate() {
                rows[r][r + j] = c.clone();
            }
        }
        for r in 0..m {
            for (j, c) in g.iter().enumerate() {
                rows[n + r][r + j] = c.clone();
            }
        }
        Self::new(rows)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn eval(&self, x: &Rational, y: &Rational, z: &Rational) -> QMatrix {
        QMatrix::from_rows(
            self.entries
                .iter()
                .map(|row| row.iter().map(|e| e.eval(x, y, z)).collect())
                .collect(),
        )
    }

    fn det_at(&self, x: &Rational, y: &Rational, z: &Rational) -> Rational {
        det(&self.eval(x, y, z)).expect("square")
    }
}

/// Falling-factorial binomial `C(u, a)` as a polynomial in `u`.
fn binomial_poly(a: usize) -> UniPoly {
    let mut p = UniPoly::one();
    for k in 0..a {
        p = &p * &UniPoly::linear_root(&rat(k as i64));
    }
    let fact: BigInt = (1..=a as u64).map(BigInt::from).product();
    p.scale(&Rational::new(BigInt::one(), fact))
}

/// Determinant of a matrix of ternary forms, known to be homogeneous of
/// degree `degree`, by interpolation on the triangle `(i, j, 1)`, `i + j <= D`.
pub fn poly_matrix_det(m: &PolyMatrix, degree: u32) -> Result<TernaryForm, LinError> {
    let n = m.size();
    if m.entries.iter().any(|r| r.len() != n) {
        return Err(LinError::NotSquare {
            rows: n,
            cols: m.entries.first().map_or(0, Vec::len),
        });
    }
    let d = degree as usize;
    let one = Rational::one();
    let grid: Vec<(usize, usize)> = (0..=d)
        .flat_map(|i| (0..=d - i).map(move |j| (i, j)))
        .collect();
    let values: Vec<Rational> = grid
        .par_iter()
        .map(|&(i, j)| m.det_at(&rat(i as i64), &rat(j as i64), &one))
        .collect();
    // table[i][j] = value at (i, j)
    let mut table: Vec<Vec<Rational>> = (0..=d).map(|i| vec![Rational::zero(); d + 1 - i]).collect();
    for (&(i, j), v) in grid.iter().zip(values) {
        table[i][j] = v;
    }
    // Forward differences in u (first index), then in v.
    for level in 1..=d {
        for i in (level..=d).rev() {
            for j in 0..=d - i {
                let v = &table[i][j] - &table[i - 1][j];
                table[i][j] = v;
            }
        }
    }
    for a in 0..=d {
        let len = d + 1 - a;
        for level in 1..len {
            for j in (level..len).rev() {
                let v = &table[a][j] - &table[a][j - 1];
                table[a][j] = v;
            }
        }
    }
    let binoms: Vec<UniPoly> = (0..=d).map(binomial_poly).collect();
    let mut coeffs = vec![vec![Rational::zero(); d + 1]; d + 1];
    for a in 0..=d {
        for b in 0..=d - a {
            let c = &table[a][b];
            if c.is_zero() {
                continue;
            }
            for (p, cu) in binoms[a].coeffs().iter().enumerate() {
                for (q, cv) in binoms[b].coeffs().iter().enumerate() {
                    coeffs[p][q] += c * cu * cv;
                }
            }
        }
    }
    let mut terms = Vec::new();
    for (p, row) in coeffs.into_iter().enumerate() {
        for (q, c) in row.into_iter().enumerate() {
            if !c.is_zero() {
                terms.push(((p as u32, q as u32, (d - p - q) as u32), c));
            }
        }
    }
    let f = TernaryForm::from_terms(degree, terms);
    let checks = [
        (rat(d as i64 + 1), rat(0), rat(1)),
        (rat(0), rat(d as i64 + 1), rat(1)),
        (rat(1), rat(2), rat(2)),
        (rat(3), rat(-1), rat(2)),
    ];
    for (x, y, z) in &checks {
        if f.eval(x, y, z) != m.det_at(x, y, z) {
            return Err(LinError::DegreeMismatch { declared: degree });
        }
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64, c: i64) -> TernaryForm {
        TernaryForm::linear(&rat(a), &rat(b), &rat(c))
    }

    #[test]
    fn two_by_two_linear() {
        // det [[x, y], [y, z]] = x z - y^2
        let m = PolyMatrix::new(vec![vec![lin(1, 0, 0), lin(0, 1, 0)], vec![lin(0, 1, 0), lin(0, 0, 1)]]);
        let f = poly_matrix_det(&m, 2).unwrap();
        let expect = TernaryForm::from_int_terms(2, &[((1, 0, 1), 1), ((0, 2, 0), -1)]);
        assert_eq!(f, expect);
    }

    #[test]
    fn wrong_degree_detected() {
        let m = PolyMatrix::new(vec![vec![lin(1, 0, 0), lin(0, 1, 0)], vec![lin(0, 1, 0), lin(0, 0, 1)]]);
        assert_eq!(poly_matrix_det(&m, 1), Err(LinError::DegreeMismatch { declared: 1 }));
    }
}
