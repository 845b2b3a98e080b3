//! Rational roots of univariate polynomials by p-adic lifting.
//!
//! A rational root `a/b` of a primitive integer polynomial has `b | a_n` and
//! `a | a_0`, so it is recovered from its simple root modulo a prime `p ∤ a_n`
//! lifted far enough for rational reconstruction. Every candidate is checked
//! by exact evaluation, so the result is exactly the set of rational roots.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::modp::{self, is_prime, mod_u64, reconstruct};
use super::rational::Rational;
use super::univariate::UniPoly;

/// Distinct rational roots, sorted ascending.
pub fn rational_roots(f: &UniPoly) -> Vec<Rational> {
    assert!(!f.is_zero(), "rational_roots of the zero polynomial");
    let g = f.squarefree_part();
    let mut coeffs = g.primitive_part();
    let mut roots = Vec::new();
    if coeffs.first().is_some_and(Zero::is_zero) {
        roots.push(Rational::zero());
        coeffs.remove(0);
    }
    match coeffs.len() {
        0 | 1 => {}
        2 => roots.push(Rational::new(-coeffs[0].clone(), coeffs[1].clone())),
        _ => roots.extend(lifted_roots(&coeffs)),
    }
    roots.sort();
    roots.dedup();
    roots
}

fn lifted_roots(coeffs: &[BigInt]) -> Vec<Rational> {
    let n = coeffs.len() - 1;
    let lead = &coeffs[n];
    let bound = coeffs[0].abs().max(lead.abs());
    // 2 * bound^2 < modulus guarantees reconstruction of any root a/b with |a|,|b| <= bound
    let need: BigInt = &bound * &bound * 2u32 + 1u32;
    let p = choose_prime(coeffs);
    let pb = BigInt::from(p);
    let deriv: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * BigInt::from(k))
        .collect();
    let residues: Vec<u64> = coeffs.iter().map(|c| mod_u64(c, p)).collect();
    let mut out = Vec::new();
    for x in 0..p {
        if eval_mod(&residues, x, p) != 0 {
            continue;
        }
        let mut root = BigInt::from(x);
        let mut modulus = pb.clone();
        while modulus < need {
            modulus = &modulus * &modulus;
            let fv = eval_big(coeffs, &root).mod_floor(&modulus);
            let dv = eval_big(&deriv, &root).mod_floor(&modulus);
            let inv = dv
                .modinv(&modulus)
                .expect("simple root modulo p has invertible derivative");
            root = (&root - fv * inv).mod_floor(&modulus);
        }
        if let Some(q) = reconstruct(&root, &modulus) {
            if eval_rational(coeffs, &q).is_zero() {
                out.push(q);
            }
        }
    }
    out
}

fn choose_prime(coeffs: &[BigInt]) -> u64 {
    let lead = coeffs.last().unwrap();
    let mut p = 1009u64;
    loop {
        if is_prime(p) && mod_u64(lead, p) != 0 {
            let f: Vec<u64> = coeffs.iter().map(|c| mod_u64(c, p)).collect();
            let df: Vec<u64> = f
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * (k as u64 % p) % p)
                .collect();
            if modp::gcd(f, df, p).len() == 1 {
                return p;
            }
        }
        p += 2;
    }
}

fn eval_mod(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, c| (acc * x + c) % p)
}

fn eval_big(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| acc * x + c)
}

fn eval_rational(coeffs: &[BigInt], x: &Rational) -> Rational {
    coeffs
        .iter()
        .rev()
        .fold(Rational::zero(), |acc, c| acc * x + Rational::from_integer(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::rational::{rat, rat_frac};

    #[test]
    fn finds_rational_roots() {
        // (2x - 3)(x + 5)(x^2 + 1)
        let f = &(&UniPoly::from_ints(&[-3, 2]) * &UniPoly::from_ints(&[5, 1]))
            * &UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(rational_roots(&f), vec![rat(-5), rat_frac(3, 2)]);
    }

    #[test]
    fn no_rational_roots() {
        assert!(rational_roots(&UniPoly::from_ints(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&UniPoly::from_ints(&[-2, 0, 1])).is_empty());
        assert!(rational_roots(&UniPoly::from_ints(&[3])).is_empty());
    }

    #[test]
    fn large_roots_and_zero() {
        // x (7x - 123456789)(x - 1)^2 (x^3 - 2)
        let f = &(&(&UniPoly::from_ints(&[0, 1]) * &UniPoly::from_ints(&[-123456789, 7]))
            * &UniPoly::from_ints(&[-1, 1]).pow(2))
            * &UniPoly::from_ints(&[-2, 0, 0, 1]);
        assert_eq!(
            rational_roots(&f),
            vec![rat(0), rat(1), rat_frac(123456789, 7)]
        );
    }
}
