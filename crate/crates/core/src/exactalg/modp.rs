//! Dense polynomials over `F_p` for word-sized primes, ascending coefficients.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::Rational;
use super::univariate::UniPoly;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    (2..).take_while(|k| k * k <= n).all(|k| n % k != 0)
}

pub fn mod_u64(c: &BigInt, p: u64) -> u64 {
    c.mod_floor(&BigInt::from(p)).to_u64().unwrap()
}

pub fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Image of a rational, or `None` when `p` divides the denominator.
pub fn rational_mod(q: &Rational, p: u64) -> Option<u64> {
    let den = mod_u64(q.denom(), p);
    (den != 0).then(|| mod_u64(q.numer(), p) * pow_mod(den, p - 2, p) % p)
}

pub fn poly_mod(f: &UniPoly, p: u64) -> Option<Vec<u64>> {
    let mut v = f
        .coeffs()
        .iter()
        .map(|c| rational_mod(c, p))
        .collect::<Option<Vec<u64>>>()?;
    trim(&mut v);
    Some(v)
}

pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    let mut d: Vec<u64> = f
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, c)| c * (k as u64 % p) % p)
        .collect();
    trim(&mut d);
    d
}

/// Gcd over `F_p`, not normalized; only its degree is meaningful.
pub fn gcd(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = pow_mod(*b.last().unwrap(), p - 2, p);
        while a.len() >= b.len() && !a.is_empty() {
            let c = a.last().unwrap() * inv % p;
            let shift = a.len() - b.len();
            for (j, bj) in b.iter().enumerate() {
                a[shift + j] = (a[shift + j] + p - c * bj % p) % p;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// Wang's rational reconstruction with symmetric bounds `sqrt(m/2)`.
pub fn reconstruct(r: &BigInt, m: &BigInt) -> Option<Rational> {
    let bound: BigInt = (m / 2u32).sqrt();
    let (mut r0, mut r1) = (m.clone(), r.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound {
        return None;
    }
    if t1.sign() == Sign::Minus {
        Some(Rational::new(-r1, -t1))
    } else {
        Some(Rational::new(r1, t1))
    }
}


/// Inverse of `a` modulo `w` over `F_p`, or `None` when they share a factor.
pub fn inverse(a: &[u64], w: &[u64], p: u64) -> Option<Vec<u64>> {
    let mut r0 = w.to_vec();
    let mut r1 = a.to_vec();
    trim(&mut r1);
    let (mut u0, mut u1): (Vec<u64>, Vec<u64>) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let qu = mul(&q, &u1, p);
        let mut u = u0.clone();
        u.resize(u.len().max(qu.len()), 0);
        for (k, c) in qu.iter().enumerate() {
            u[k] = (u[k] + p - c) % p;
        }
        trim(&mut u);
        r0 = std::mem::replace(&mut r1, r);
        u0 = std::mem::replace(&mut u1, u);
    }
    if r0.len() != 1 {
        return None;
    }
    let inv = pow_mod(r0[0], p - 2, p);
    let (_, mut out) = div_rem(&u0.iter().map(|c| c * inv % p).collect::<Vec<_>>(), w, p);
    out.resize(w.len() - 1, 0);
    Some(out)
}

pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(&mut out);
    out
}

pub fn div_rem(a: &[u64], b: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = pow_mod(*b.last().unwrap(), p - 2, p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * inv % p;
        q[shift] = c;
        for (j, bj) in b.iter().enumerate() {
            r[shift + j] = (r[shift + j] + p - c * bj % p) % p;
        }
        trim(&mut r);
    }
    trim(&mut q);
    (q, r)
}
