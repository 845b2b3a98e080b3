use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

pub(super) struct Elimination {
    pub rank: usize,
    pub last_pivot: BigInt,
    pub swaps: usize,
    /// Row echelon form: the first `rank` rows.
    pub rows: Vec<Vec<BigInt>>,
    pub pivots: Vec<usize>,
}

/// Fraction-free elimination. Pivots are the first nonzero entry of each
/// column scanned left to right, rows top to bottom.
pub(super) fn eliminate(mut rows: Vec<Vec<BigInt>>, cols: usize) -> Elimination {
    let n = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    let mut swaps = 0;
    let mut pivots = Vec::new();
    for c in 0..cols {
        if r == n {
            break;
        }
        let Some(p) = (r..n).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        if p != r {
            rows.swap(p, r);
            swaps += 1;
        }
        let (head, tail) = rows.split_at_mut(r + 1);
        let pivot_row = &head[r];
        let piv = &pivot_row[c];
        tail.par_iter_mut().for_each(|row| {
            let f = std::mem::take(&mut row[c]);
            for j in c + 1..cols {
                let a = &row[j] * piv;
                let v = if f.is_zero() || pivot_row[j].is_zero() {
                    a
                } else {
                    a - &f * &pivot_row[j]
                };
                row[j] = if prev.is_one() { v } else { v / &prev };
            }
        });
        prev = rows[r][c].clone();
        pivots.push(c);
        r += 1;
    }
    Elimination {
        rank: r,
        last_pivot: prev,
        swaps,
        rows,
        pivots,
    }
}

/// Kernel vector with `x[free] = 1` and zeros at the other free columns, as
/// integers up to a common scale, by back substitution in the echelon form.
pub(super) fn kernel_vector(e: &Elimination, free: usize, cols: usize) -> Vec<BigInt> {
    let mut x = vec![BigInt::zero(); cols];
    x[free] = BigInt::one();
    for i in (0..e.rank).rev() {
        let p = e.pivots[i];
        let row = &e.rows[i];
        let mut s = BigInt::zero();
        for j in p + 1..cols {
            if !row[j].is_zero() && !x[j].is_zero() {
                s += &row[j] * &x[j];
            }
        }
        if s.is_zero() {
            continue;
        }
        let piv = &row[p];
        let g = s.gcd(piv);
        let scale = piv / &g;
        if !scale.is_one() {
            for v in x.iter_mut() {
                if !v.is_zero() {
                    *v *= &scale;
                }
            }
        }
        x[p] = -(s / g);
    }
    x
}
