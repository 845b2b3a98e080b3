use num_traits::Zero;

use crate::exactalg::rational::Rational;
use crate::exactalg::univariate::UniPoly;

/// Interpolating polynomial through `(points[k], values[k])` by Newton
/// divided differences. Points must be distinct.
pub fn interpolate(points: &[Rational], values: &[Rational]) -> UniPoly {
    assert_eq!(points.len(), values.len());
    let n = points.len();
    let mut dd = values.to_vec();
    for level in 1..n {
        for k in (level..n).rev() {
            let den = &points[k] - &points[k - level];
            assert!(!den.is_zero(), "interpolation points must be distinct");
            dd[k] = (&dd[k] - &dd[k - 1]) / den;
        }
    }
    let mut out = UniPoly::zero();
    for k in (0..n).rev() {
        out = &(&out * &UniPoly::linear_root(&points[k])) + &UniPoly::constant(dd[k].clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::rat;

    #[test]
    fn recovers_cubic() {
        let f = UniPoly::from_ints(&[7, 0, -3, 2]);
        let pts: Vec<Rational> = (0..4).map(rat).collect();
        let vals: Vec<Rational> = pts.iter().map(|x| f.eval(x)).collect();
        assert_eq!(interpolate(&pts, &vals), f);
    }
}
