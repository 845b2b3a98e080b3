//! Exact linear algebra over the rationals.
//!
//! Rank and determinant go through fraction-free (Bareiss) elimination on
//! integer rows; kernels come from the reduced row echelon form, which is
//! unique and therefore reproducible.

mod bareiss;
mod interp;
mod polymat;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactalg::rational::{denominator_lcm, primitive_positive, Rational};

pub use interp::interpolate;
pub use polymat::{poly_matrix_det, PolyMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("determinant is not homogeneous of the declared degree {declared}")]
    DegreeMismatch { declared: u32 },
}

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    /// Builds a matrix from its columns (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<Rational>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows, "column {j} has the wrong length");
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    m.set(i, j, v.clone());
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Rows scaled to integers by their denominator lcm (row space unchanged),
    /// together with the product of the scale factors.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut scale = BigInt::one();
        let rows = (0..self.rows)
            .map(|i| {
                let l = denominator_lcm(self.row(i));
                let lr = Rational::from_integer(l.clone());
                scale *= &l;
                self.row(i)
                    .iter()
                    .map(|q| (q * &lr).to_integer())
                    .collect()
            })
            .collect();
        (rows, scale)
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (QMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..self.cols {
                    m.entries.swap(p * self.cols + j, r * self.cols + j);
                }
            }
            let inv = m.get(r, c).recip();
            for j in c..self.cols {
                let v = m.get(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..self.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..self.cols {
                    if m.get(r, j).is_zero() {
                        continue;
                    }
                    let v = m.get(i, j) - &f * m.get(r, j);
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    /// Reduces `v` modulo the row space of `self` given its rref.
    pub fn reduce_against_rref(rref: &QMatrix, pivots: &[usize], v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (r, &c) in pivots.iter().enumerate() {
            if out[c].is_zero() {
                continue;
            }
            let f = out[c].clone();
            for (j, x) in out.iter_mut().enumerate() {
                let a = rref.get(r, j);
                if !a.is_zero() {
                    *x -= &f * a;
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> QMatrix {
        let mut t = QMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }
}

/// Exact rank by Bareiss elimination.
pub fn rank(m: &QMatrix) -> usize {
    if m.rows == 0 || m.cols == 0 {
        return 0;
    }
    let (rows, _) = m.integer_rows();
    bareiss::eliminate(rows, m.cols).rank
}

/// `cols - rank`
pub fn nullity(m: &QMatrix) -> usize {
    m.cols - rank(m)
}

/// Kernel basis: one vector per free column (increasing), each scaled to
/// coprime integers with a positive first nonzero entry.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    use rayon::prelude::*;
    if m.rows == 0 {
        return (0..m.cols)
            .map(|f| {
                let mut v = vec![Rational::zero(); m.cols];
                v[f] = Rational::one();
                v
            })
            .collect();
    }
    let (rows, _) = m.integer_rows();
    let e = bareiss::eliminate(rows, m.cols);
    let free: Vec<usize> = (0..m.cols).filter(|c| !e.pivots.contains(c)).collect();
    free.par_iter()
        .map(|&f| {
            let v: Vec<Rational> = bareiss::kernel_vector(&e, f, m.cols)
                .into_iter()
                .map(Rational::from_integer)
                .collect();
            primitive_positive(&v)
        })
        .collect()
}

/// Exact determinant by Bareiss elimination.
pub fn det(m: &QMatrix) -> Result<Rational, LinError> {
    if m.rows != m.cols {
        return Err(LinError::NotSquare {
            rows: m.rows,
            cols: m.cols,
        });
    }
    if m.rows == 0 {
        return Ok(Rational::one());
    }
    let (rows, scale) = m.integer_rows();
    let out = bareiss::eliminate(rows, m.cols);
    if out.rank < m.rows {
        return Ok(Rational::zero());
    }
    let mut d = out.last_pivot;
    if out.swaps % 2 == 1 {
        d = -d;
    }
    Ok(Rational::new(d, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&QMatrix::identity(2)), 2);
        assert_eq!(rank(&QMatrix::from_int_rows(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&QMatrix::zeros(3, 2)), 0);
        assert_eq!(rank(&QMatrix::from_int_rows(&[&[0, 0, 1], &[0, 2, 0], &[0, 4, 3]])), 2);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&QMatrix::zeros(2, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(k[0], vec![rat(1), rat(0), rat(0)]);
        let k = kernel_basis(&QMatrix::from_int_rows(&[&[1, 1]]));
        assert_eq!(k, vec![vec![rat(1), rat(-1)]]);
    }

    #[test]
    fn det_examples() {
        assert_eq!(det(&QMatrix::identity(3)).unwrap(), rat(1));
        assert_eq!(det(&QMatrix::from_int_rows(&[&[0, 1], &[1, 0]])).unwrap(), rat(-1));
        assert_eq!(
            det(&QMatrix::from_int_rows(&[&[1, 2, 3]])),
            Err(LinError::NotSquare { rows: 1, cols: 3 })
        );
        let m = QMatrix::from_rows(vec![
            vec![rat(1) / rat(2), rat(1)],
            vec![rat(3), rat(1) / rat(3)],
        ]);
        assert_eq!(det(&m).unwrap(), rat(1) / rat(6) - rat(3));
    }

    #[test]
    fn rref_reduction() {
        let m = QMatrix::from_int_rows(&[&[1, 1, 0], &[0, 1, 1]]);
        let (r, p) = m.rref();
        let v = QMatrix::reduce_against_rref(&r, &p, &[rat(2), rat(3), rat(1)]);
        assert_eq!(v, vec![rat(0), rat(0), rat(0)]);
        let v = QMatrix::reduce_against_rref(&r, &p, &[rat(0), rat(0), rat(1)]);
        assert_eq!(v, vec![rat(0), rat(0), rat(1)]);
    }
}
