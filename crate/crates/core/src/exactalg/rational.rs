//! Rational scalars and a few helpers around `num_rational::BigRational`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number; always stored reduced with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal `{0}`")]
pub struct ParseRationalError(pub String);

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p"` or `"p/q"` with optional sign on `p`.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let valid_int = |s: &str, allow_sign: bool| {
        let digits = if allow_sign {
            s.strip_prefix(['-', '+']).unwrap_or(s)
        } else {
            s
        };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid_int(num, true) {
        return Err(err());
    }
    let n: BigInt = num.trim_start_matches('+').parse().map_err(|_| err())?;
    let d: BigInt = match den {
        Some(d) => {
            if !valid_int(d, false) {
                return Err(err());
            }
            d.parse().map_err(|_| err())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(n, d))
}

/// Renders as `"p"` when integral, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Least common multiple of the denominators.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

/// Scales a rational vector to coprime integers, keeping the direction.
/// A zero vector maps to zeros.
pub fn primitive_integers(values: &[Rational]) -> Vec<BigInt> {
    let l = denominator_lcm(values);
    let ints: Vec<BigInt> = values
        .iter()
        .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|v| v / &g).collect()
}

/// Scales a rational vector to coprime integers whose first nonzero entry is positive.
pub fn primitive_positive(values: &[Rational]) -> Vec<Rational> {
    let mut ints = primitive_integers(values);
    if ints.iter().find(|v| !v.is_zero()).is_some_and(|v| v.is_negative()) {
        for v in ints.iter_mut() {
            *v = -v.clone();
        }
    }
    ints.into_iter().map(Rational::from_integer).collect()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3").unwrap(), rat(3));
        assert_eq!(parse_rational("-6/4").unwrap(), rat_frac(-3, 2));
        assert_eq!(format_rational(&rat_frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(7)), "7");
        for bad in ["", "1/0", "a", "1/-2", "--1", "1.5", "/3"] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn primitive_vectors() {
        let v = [rat_frac(-1, 2), rat_frac(3, 4), rat(0)];
        assert_eq!(primitive_positive(&v), vec![rat(2), rat(-3), rat(0)]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
