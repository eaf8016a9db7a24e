//! Exact rational scalars and the integer helpers used throughout the crate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn from_bigint(v: BigInt) -> Scalar {
    Scalar::from_integer(v)
}

/// `binom(n, k)` with the convention that it vanishes outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binom_q(n: i64, k: i64) -> Scalar {
    from_bigint(binomial(n, k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn catalan(n: u64) -> BigInt {
    binomial(2 * n as i64, n as i64) / BigInt::from(n + 1)
}

/// Integer power with negative exponents allowed (errors on `0^-m`).
pub fn pow_i(base: &Scalar, exp: i64) -> Result<Scalar> {
    if exp >= 0 {
        return Ok(num_traits::pow(base.clone(), exp as usize));
    }
    if base.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(num_traits::pow(base.recip(), (-exp) as usize))
}

pub fn sign(v: &Scalar) -> i32 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Renders `p` for integers and `p/q` otherwise.
pub fn format_scalar(v: &Scalar) -> String {
    v.to_string()
}

/// Parses an exact literal: `-3`, `7`, `3/4`, `-1/2`. Decimal points and exponents are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not an exact rational literal: {text:?}"));
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let parse_int = |part: &str| -> Result<BigInt> {
        let part = part.trim();
        let digits = part.strip_prefix(['-', '+']).unwrap_or(part);
        if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        part.parse::<BigInt>().map_err(|_| bad())
    };
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_int(s)?)),
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Scalar::new(p, q))
        }
    }
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Scalar>) -> BigInt {
    values.into_iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, -1), BigInt::zero());
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(0, 0), BigInt::one());
        assert_eq!(binomial(40, 20), "137846528820".parse::<BigInt>().unwrap());
    }

    #[test]
    fn catalan_prefix() {
        let c: Vec<i64> = (0..8).map(|n| catalan(n).try_into().unwrap()).collect();
        assert_eq!(c, vec![1, 1, 2, 5, 14, 42, 132, 429]);
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse_scalar("6/4").unwrap(), ratio(3, 2));
        assert_eq!(parse_scalar("7").unwrap(), int(7));
        assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
        assert_eq!(format_scalar(&int(12)), "12");
        assert!(parse_scalar("1.5").is_err());
        assert!(parse_scalar("1e3").is_err());
        assert!(parse_scalar("x").is_err());
        assert!(parse_scalar("").is_err());
        assert!(matches!(parse_scalar("1/0"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn negative_powers() {
        assert_eq!(pow_i(&int(2), -2).unwrap(), ratio(1, 4));
        assert_eq!(pow_i(&int(0), 0).unwrap(), int(1));
        assert!(pow_i(&int(0), -1).is_err());
    }
}
