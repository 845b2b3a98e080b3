use proptest::prelude::*;

use ratcurve::exactalg::rational::rat_frac;
use ratcurve::exactalg::{format_rational, parse_rational, rat, rational_roots, BinaryForm, Rational, TernaryForm, UniPoly};
use ratcurve::exactlin::{det, interpolate, kernel_basis, poly_matrix_det, rank, PolyMatrix, QMatrix};
use ratcurve::musyz::{self, Parametrization};

fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    prop::collection::vec(-6i64..=6, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c))
}

fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    small_poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

fn binary_form(d: usize) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-5i64..=5, d + 1).prop_map(|c| BinaryForm::from_ints(&c))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec((-4i64..=4, 1i64..=3), rows * cols).prop_map(move |v| {
        let entries: Vec<Vec<Rational>> = v
            .chunks(cols)
            .map(|r| r.iter().map(|&(n, d)| rat_frac(n, d)).collect())
            .collect();
        QMatrix::from_rows(entries)
    })
}

fn mat_mul(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let rows = (0..a.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| (0..a.cols()).map(|k| a.get(i, k) * b.get(k, j)).sum())
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_identity(a in small_poly(7), b in nonzero_poly(4)) {
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.is_zero() || r.degree() < b.degree());
    }

    #[test]
    fn gcd_divides_and_scales(a in nonzero_poly(4), b in nonzero_poly(4), c in nonzero_poly(3)) {
        let g = a.gcd(&b);
        prop_assert!(a.exact_div(&g).is_some() && b.exact_div(&g).is_some());
        let gc = (&a * &c).gcd(&(&b * &c));
        prop_assert_eq!(gc, (&g * &c).monic());
    }

    #[test]
    fn squarefree_decomposition_multiplies_back(a in nonzero_poly(3), b in nonzero_poly(2)) {
        let f = &a * &b.pow(2);
        let mut prod = UniPoly::constant(f.leading());
        for (g, m) in f.squarefree() {
            prod = &prod * &g.pow(m);
        }
        prop_assert_eq!(prod, f.clone());
        let sf = f.squarefree_part();
        prop_assert!(sf.gcd(&sf.derivative()).is_constant());
    }

    #[test]
    fn rational_roots_are_exact(roots in prop::collection::vec((-20i64..=20, 1i64..=6), 0..4), extra in nonzero_poly(2)) {
        let mut f = extra.clone();
        for &(n, d) in &roots {
            f = &f * &UniPoly::from_ints(&[-n, d]);
        }
        let found = rational_roots(&f);
        for &(n, d) in &roots {
            prop_assert!(found.contains(&rat_frac(n, d)));
        }
        for r in &found {
            prop_assert!(f.eval(r) == rat(0));
        }
    }

    #[test]
    fn resultant_is_multiplicative(f in binary_form(2), g in binary_form(2), h in binary_form(3)) {
        prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
        let lhs = (&f * &g).resultant(&h);
        prop_assert_eq!(lhs, f.resultant(&h) * g.resultant(&h));
    }

    #[test]
    fn rationals_round_trip(n in -100000i64..=100000, d in 1i64..=1000) {
        let q = rat_frac(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)).unwrap(), q);
    }

    #[test]
    fn rank_kernel_consistency(m in matrix(4, 6)) {
        let r = rank(&m);
        let k = kernel_basis(&m);
        prop_assert_eq!(r + k.len(), m.cols());
        prop_assert_eq!(rank(&m.transpose()), r);
        let zero = vec![rat(0); m.rows()];
        for v in &k {
            prop_assert_eq!(m.mul_vec(v), zero.clone());
        }
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix(3, 3), b in matrix(3, 3)) {
        prop_assert_eq!(det(&mat_mul(&a, &b)).unwrap(), det(&a).unwrap() * det(&b).unwrap());
    }

    #[test]
    fn interpolation_recovers(p in small_poly(6)) {
        let n = p.degree().unwrap_or(0);
        let pts: Vec<Rational> = (0..=n as i64).map(|k| rat(2 * k - 3)).collect();
        let vals: Vec<Rational> = pts.iter().map(|x| p.eval(x)).collect();
        prop_assert_eq!(interpolate(&pts, &vals), p);
    }

    #[test]
    fn symbolic_determinant_matches_evaluation(c in prop::collection::vec(-3i64..=3, 27), pt in (-4i64..=4, -4i64..=4, 1i64..=4)) {
        let entries: Vec<Vec<TernaryForm>> = c
            .chunks(9)
            .map(|row| row.chunks(3).map(|l| TernaryForm::linear(&rat(l[0]), &rat(l[1]), &rat(l[2]))).collect())
            .collect();
        let m = PolyMatrix::new(entries);
        let d = poly_matrix_det(&m, 3).unwrap();
        let (x, y, z) = (rat(pt.0), rat(pt.1), rat(pt.2));
        prop_assert_eq!(d.eval(&x, &y, &z), det(&m.eval(&x, &y, &z)).unwrap());
    }

    #[test]
    fn composition_is_multiplicative(a in prop::collection::vec(-3i64..=3, 3), b in prop::collection::vec(-3i64..=3, 6), f in binary_form(2), g in binary_form(2), h in binary_form(2)) {
        let lin = TernaryForm::linear(&rat(a[0]), &rat(a[1]), &rat(a[2]));
        let quad = TernaryForm::from_int_terms(2, &[((2, 0, 0), b[0]), ((1, 1, 0), b[1]), ((1, 0, 1), b[2]), ((0, 2, 0), b[3]), ((0, 1, 1), b[4]), ((0, 0, 2), b[5])]);
        let phi = [f, g, h];
        prop_assert_eq!((&lin * &quad).compose(&phi), &lin.compose(&phi) * &quad.compose(&phi));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn curve_invariants(d in 2usize..=4, seed in prop::collection::vec(-4i64..=4, 15)) {
        let take = |k: usize| BinaryForm::from_ints(&seed[k * 5..k * 5 + d + 1]);
        let phi = Parametrization::new(take(0), take(1), take(2));
        prop_assume!(phi.is_ok());
        let phi = phi.unwrap();
        prop_assume!(musyz::properness(&phi) == 1);
        let basis = musyz::mu_basis(&phi).unwrap();
        prop_assert_eq!(basis.mu1 + basis.mu2, d);
        prop_assert!(basis.mu1 <= basis.mu2);
        prop_assert!(musyz::minors_constant(&basis, &phi).is_some());
        let f = musyz::implicit_equation(&phi).unwrap().f;
        prop_assert_eq!(f.degree() as usize, d);
        prop_assert!(f.compose(phi.forms()).is_zero());
    }
}
