//! Named parametrizations used by the tests, examples and documentation.
//! Coefficient vectors list `s^d, s^(d-1) t, ..., t^d`.

use crate::exactalg::rational::{rat, rat_frac, Rational};
use crate::exactalg::BinaryForm;
use crate::musyz::Parametrization;

fn form(d: usize, terms: &[(usize, Rational)]) -> BinaryForm {
    let mut c = vec![rat(0); d + 1];
    for (i, v) in terms {
        c[*i] += v;
    }
    BinaryForm::new(c)
}

/// `c * s^(d-i) t^i`
fn mono(d: usize, i: usize, c: i64) -> BinaryForm {
    form(d, &[(i, rat(c))])
}

fn build(f0: BinaryForm, f1: BinaryForm, f2: BinaryForm) -> Parametrization {
    Parametrization::new(f0, f1, f2).expect("fixture is a valid parametrization")
}

/// Smooth conic `(s^2, st, t^2)`.
pub fn conic() -> Parametrization {
    build(mono(2, 0, 1), mono(2, 1, 1), mono(2, 2, 1))
}

/// Cuspidal cubic `(s^3, st^2, t^3)`, image `y^3 = x z^2`.
pub fn cuspidal_cubic() -> Parametrization {
    build(mono(3, 0, 1), mono(3, 2, 1), mono(3, 3, 1))
}

/// Nodal cubic `(s^2 t - t^3, s^3 - s t^2, t^3)`.
pub fn nodal_cubic() -> Parametrization {
    build(
        form(3, &[(1, rat(1)), (3, rat(-1))]),
        form(3, &[(0, rat(1)), (2, rat(-1))]),
        mono(3, 3, 1),
    )
}

/// `(s^4, s^2 t^2, t^4)`, a conic traced twice.
pub fn double_conic() -> Parametrization {
    build(mono(4, 0, 1), mono(4, 2, 1), mono(4, 4, 1))
}

/// Cuspidal quartic with three simple cusps.
pub fn quartic_three_cusps() -> Parametrization {
    build(
        form(4, &[(0, rat_frac(-1, 2)), (1, rat(1))]),
        mono(4, 2, 1),
        form(4, &[(3, rat(-2)), (4, rat(1))]),
    )
}

/// Cuspidal quartic with an `A2` and an `A4` cusp.
pub fn quartic_a2_a4() -> Parametrization {
    build(form(4, &[(0, rat(1)), (1, rat(1))]), mono(4, 2, 1), mono(4, 4, 1))
}

/// Cuspidal quartic with a single `A6` cusp.
pub fn quartic_a6() -> Parametrization {
    build(form(4, &[(0, rat(1)), (3, rat(1))]), mono(4, 2, 1), mono(4, 4, 1))
}

/// Cuspidal quartic `y^4 = x z^3` with an `E6` point.
pub fn quartic_e6_a() -> Parametrization {
    build(mono(4, 0, 1), mono(4, 3, 1), mono(4, 4, 1))
}

/// Cuspidal quartic `y^4 - x z^3 + y^3 z = 0` with an `E6` point.
pub fn quartic_e6_b() -> Parametrization {
    build(form(4, &[(0, rat(1)), (1, rat(1))]), mono(4, 3, 1), mono(4, 4, 1))
}

/// The five cuspidal quartics, in the order above.
pub fn cuspidal_quartics() -> Vec<(&'static str, Parametrization)> {
    vec![
        ("quartic_three_cusps", quartic_three_cusps()),
        ("quartic_a2_a4", quartic_a2_a4()),
        ("quartic_a6", quartic_a6()),
        ("quartic_e6_a", quartic_e6_a()),
        ("quartic_e6_b", quartic_e6_b()),
    ]
}

/// Free quintic `(s^5, s^3 t^2, s t^4 + t^5)` with an `A4` and an `E8` point.
pub fn quintic_free() -> Parametrization {
    build(mono(5, 0, 1), mono(5, 2, 1), form(5, &[(4, rat(1)), (5, rat(1))]))
}

/// Nearly free quintic `(s^5, s^3 t^2, t^5)`.
pub fn quintic_nearly_free() -> Parametrization {
    build(mono(5, 0, 1), mono(5, 2, 1), mono(5, 5, 1))
}

/// `(s^d, t^d, s^m1 t^(d-m1))`, image `x^m1 y^(d-m1) = z^d`.
pub fn monomial_cusp(d: usize, m1: usize) -> Parametrization {
    build(mono(d, 0, 1), mono(d, d, 1), mono(d, d - m1, 1))
}

/// `(s t^(d-1), t^d, -s^m1 (s^(m2+1) + t^(m2+1)))` with `m2 = d - m1 - 1`;
/// image `x^d + x^m1 y^(m2+1) + y^(d-1) z = 0`.
pub fn free_family(d: usize, m1: usize) -> Parametrization {
    let m2 = d - m1 - 1;
    build(
        mono(d, d - 1, 1),
        mono(d, d, 1),
        form(d, &[(0, rat(-1)), (m2 + 1, rat(-1))]),
    )
}

/// `(s (s^(d-1) + t^(d-1)), t (s^(d-1) + t^(d-1)), -s^d)`; image
/// `x^d + (x^(d-1) + y^(d-1)) z = 0` with an ordinary `(d-1)`-fold point.
pub fn ordinary_point_family(d: usize) -> Parametrization {
    build(
        form(d, &[(0, rat(1)), (d - 1, rat(1))]),
        form(d, &[(1, rat(1)), (d, rat(1))]),
        mono(d, 0, -1),
    )
}

/// Every fixed fixture with a short name.
pub fn all() -> Vec<(&'static str, Parametrization)> {
    let mut v = vec![
        ("conic", conic()),
        ("cuspidal_cubic", cuspidal_cubic()),
        ("nodal_cubic", nodal_cubic()),
    ];
    v.extend(cuspidal_quartics());
    v.extend([
        ("quintic_free", quintic_free()),
        ("quintic_nearly_free", quintic_nearly_free()),
        ("quintic_monomial", monomial_cusp(5, 2)),
        ("octic_nearly_free", monomial_cusp(8, 3)),
        ("octic_free", free_family(8, 3)),
        ("nonic_ordinary", ordinary_point_family(9)),
    ]);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        assert_eq!(all().len(), 14);
        assert_eq!(free_family(8, 3).degree(), 8);
        assert!(crate::musyz::Parametrization::new(
            double_conic().component(0).clone(),
            double_conic().component(1).clone(),
            double_conic().component(2).clone()
        )
        .is_ok());
    }
}
