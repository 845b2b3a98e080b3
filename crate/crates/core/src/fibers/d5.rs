//! Arithmetic in `Q[theta]/(w)` for a squarefree `w`, with dynamic evaluation:
//! an attempt to invert a zero divisor reports the splitting of `w` it found.


use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactalg::modp;
use crate::exactalg::UniPoly;

/// A nontrivial monic factor of the modulus discovered during a computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split(pub UniPoly);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ext {
    modulus: UniPoly,
    /// A prime keeping the modulus squarefree of full degree, with its image.
    shadow: Option<(u64, Vec<u64>)>,
}

fn shadow_prime(w: &UniPoly) -> Option<(u64, Vec<u64>)> {
    let n = w.degree()?;
    let mut p = (1u64 << 31) - 1;
    for _ in 0..64 {
        while !modp::is_prime(p) {
            p -= 2;
        }
        if let Some(wp) = modp::poly_mod(w, p) {
            if wp.len() == n + 1 && modp::gcd(wp.clone(), modp::derivative(&wp, p), p).len() == 1 {
                return Some((p, wp));
            }
        }
        p -= 2;
    }
    None
}

/// Polynomial in `u` over the extension, ascending, trimmed.
pub type ExtPoly = Vec<UniPoly>;

impl Ext {
    /// `w` must be squarefree of positive degree.
    pub fn new(w: &UniPoly) -> Self {
        let modulus = w.monic();
        let shadow = shadow_prime(&modulus);
        Self { modulus, shadow }
    }

    pub fn modulus(&self) -> &UniPoly {
        &self.modulus
    }

    pub fn reduce(&self, a: &UniPoly) -> UniPoly {
        a.rem(&self.modulus)
    }

    pub fn mul(&self, a: &UniPoly, b: &UniPoly) -> UniPoly {
        self.reduce(&(a * b))
    }

    /// Inverse of a certified unit by Chinese remaindering over word-sized
    /// primes, accepted only once the exact product is one.
    fn modular_inverse(&self, a: &UniPoly) -> Option<UniPoly> {
        let n = self.modulus.degree()?;
        let mut residues = vec![BigInt::zero(); n];
        let mut m = BigInt::one();
        let mut p = (1u64 << 31) - 1;
        let (mut used, mut next_check) = (0usize, 2usize);
        while used < 4096 {
            p -= 2;
            if !modp::is_prime(p) {
                continue;
            }
            let Some(wp) = modp::poly_mod(&self.modulus, p).filter(|wp| wp.len() == n + 1) else {
                continue;
            };
            let Some(bp) = modp::poly_mod(a, p).and_then(|ap| modp::inverse(&ap, &wp, p)) else {
                continue;
            };
            let m_inv = modp::pow_mod(modp::mod_u64(&m, p), p - 2, p);
            for (r, b) in residues.iter_mut().zip(&bp) {
                let diff = (b + p - modp::mod_u64(r, p)) % p;
                *r += &m * BigInt::from(diff * m_inv % p);
            }
            m *= BigInt::from(p);
            used += 1;
            if used == next_check {
                next_check *= 2;
                let coeffs: Option<Vec<_>> = residues.iter().map(|r| modp::reconstruct(r, &m)).collect();
                if let Some(c) = coeffs {
                    let b = UniPoly::new(c);
                    if self.mul(a, &b) == UniPoly::one() {
                        return Some(b);
                    }
                }
            }
        }
        None
    }

    /// Inverse, or the splitting revealed by a nontrivial gcd with the modulus.
    pub fn inv(&self, a: &UniPoly) -> Result<UniPoly, Split> {
        let a = self.reduce(a);
        assert!(!a.is_zero(), "inverse of zero");
        if self.certainly_unit(&a) {
            if let Some(b) = self.modular_inverse(&a) {
                return Ok(b);
            }
        }
        let (g, u) = a.half_ext_gcd(&self.modulus);
        if g.degree() == Some(0) {
            Ok(self.reduce(&u.scale(&g.leading().recip())))
        } else {
            Err(Split(g))
        }
    }

    /// A unit modulo the shadow prime is a unit over the rationals: every
    /// rational factor of the modulus survives reduction with its degree.
    fn certainly_unit(&self, a: &UniPoly) -> bool {
        let Some((p, wp)) = &self.shadow else {
            return false;
        };
        match modp::poly_mod(a, *p) {
            Some(ap) if !ap.is_empty() => modp::gcd(ap, wp.clone(), *p).len() == 1,
            _ => false,
        }
    }

    /// Decides whether `a` is zero or invertible, splitting otherwise.
    pub fn is_zero(&self, a: &UniPoly) -> Result<bool, Split> {
        let a = self.reduce(a);
        if a.is_zero() {
            return Ok(true);
        }
        if self.certainly_unit(&a) {
            return Ok(false);
        }
        self.inv(&a).map(|_| false)
    }

    pub fn trim(&self, p: &mut ExtPoly) -> Result<(), Split> {
        while let Some(last) = p.last() {
            if self.is_zero(last)? {
                p.pop();
            } else {
                break;
            }
        }
        Ok(())
    }

    pub fn lift(&self, p: &[UniPoly]) -> Result<ExtPoly, Split> {
        let mut out: ExtPoly = p.iter().map(|c| self.reduce(c)).collect();
        self.trim(&mut out)?;
        Ok(out)
    }

    pub fn monic(&self, p: &ExtPoly) -> Result<ExtPoly, Split> {
        let inv = self.inv(p.last().expect("nonzero polynomial"))?;
        Ok(p.iter().map(|c| self.mul(c, &inv)).collect())
    }

    /// Remainder of `a` by a monic `b`.
    pub fn rem(&self, a: &ExtPoly, b: &ExtPoly) -> Result<ExtPoly, Split> {
        let mut r = a.clone();
        self.trim(&mut r)?;
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let c = r.last().unwrap().clone();
            for (j, bj) in b.iter().enumerate() {
                r[k + j] = self.reduce(&(&r[k + j] - &(&c * bj)));
            }
            r.pop();
            self.trim(&mut r)?;
        }
        Ok(r)
    }

    /// Monic gcd over the extension.
    pub fn gcd(&self, a: &ExtPoly, b: &ExtPoly) -> Result<ExtPoly, Split> {
        let (mut a, mut b) = (a.clone(), b.clone());
        self.trim(&mut a)?;
        self.trim(&mut b)?;
        if a.is_empty() {
            return if b.is_empty() { Ok(b) } else { self.monic(&b) };
        }
        a = self.monic(&a)?;
        while !b.is_empty() {
            b = self.monic(&b)?;
            let r = self.rem(&a, &b)?;
            a = std::mem::replace(&mut b, r);
        }
        Ok(a)
    }

    /// Value at `u = x`.
    pub fn eval(&self, p: &ExtPoly, x: &UniPoly) -> UniPoly {
        p.iter()
            .rev()
            .fold(UniPoly::zero(), |acc, c| self.reduce(&(&(&acc * x) + c)))
    }

    /// Quotient by `u - x`, assuming `p(x) = 0`.
    pub fn div_linear(&self, p: &ExtPoly, x: &UniPoly) -> ExtPoly {
        let n = p.len();
        let mut q = vec![UniPoly::zero(); n - 1];
        let mut carry = UniPoly::zero();
        for k in (1..n).rev() {
            carry = self.reduce(&(&p[k] + &(&carry * x)));
            q[k - 1] = carry.clone();
        }
        q
    }
}

/// Runs `task` over the splitting tree of `w`: whenever the task reveals a
/// factor, both parts are explored separately. Results come in a
/// deterministic order (the revealed factor is explored first).
pub fn explore<T>(w: &UniPoly, mut task: impl FnMut(&Ext) -> Result<T, Split>) -> Vec<(UniPoly, T)> {
    let mut out = Vec::new();
    let mut stack = vec![w.monic()];
    while let Some(m) = stack.pop() {
        let ext = Ext::new(&m);
        match task(&ext) {
            Ok(v) => out.push((ext.modulus().clone(), v)),
            Err(Split(g)) => {
                let g = g.monic();
                let h = m.exact_div(&g).expect("split factor divides").monic();
                stack.push(h);
                stack.push(g);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_split() {
        // w = (x^2 + 1)(x - 2)
        let w = &UniPoly::from_ints(&[1, 0, 1]) * &UniPoly::from_ints(&[-2, 1]);
        let k = Ext::new(&w);
        let x = UniPoly::from_ints(&[0, 1]);
        let inv = k.inv(&x).unwrap();
        assert_eq!(k.mul(&x, &inv), UniPoly::one());
        assert_eq!(k.inv(&UniPoly::from_ints(&[-2, 1])), Err(Split(UniPoly::from_ints(&[-2, 1]))));
    }

    #[test]
    fn exploration_splits() {
        let w = &UniPoly::from_ints(&[1, 0, 1]) * &UniPoly::from_ints(&[-2, 1]);
        let r = explore(&w, |k| k.is_zero(&UniPoly::from_ints(&[-2, 1])));
        assert_eq!(
            r,
            vec![(UniPoly::from_ints(&[-2, 1]), true), (UniPoly::from_ints(&[1, 0, 1]), false)]
        );
    }

    #[test]
    fn gcd_over_extension() {
        // over Q(i): gcd(u^2 + 1, u - i) = u - i
        let k = Ext::new(&UniPoly::from_ints(&[1, 0, 1]));
        let a = vec![UniPoly::from_ints(&[1]), UniPoly::zero(), UniPoly::from_ints(&[1])];
        let b = vec![-&UniPoly::from_ints(&[0, 1]), UniPoly::from_ints(&[1])];
        assert_eq!(k.gcd(&a, &b).unwrap(), b);
        assert!(k.eval(&a, &UniPoly::from_ints(&[0, 1])).is_zero());
        assert_eq!(k.div_linear(&a, &UniPoly::from_ints(&[0, 1])), vec![UniPoly::from_ints(&[0, 1]), UniPoly::one()]);
    }
}
