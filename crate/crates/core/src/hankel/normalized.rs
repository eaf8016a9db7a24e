//! Shifted Hankel determinants of `M(b, n)` divided by the unshifted ones.

use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::scalar::{binom_q, int, pow_i};
use crate::exact::Scalar;
use crate::ortho::moments::{MomentSequence, SequenceFamily};

use super::table::hankel_det;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Normalized {
    Value(Scalar),
    /// Numerator and denominator both vanish (`b = 2`, `k >= 2`).
    Indeterminate,
}

impl fmt::Display for Normalized {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Normalized::Value(v) => write!(f, "{v}"),
            Normalized::Indeterminate => f.write_str("0/0"),
        }
    }
}

/// `det(M(b, n+i+j))_{i,j<k} / (2 - b)^(k-1)` for `k >= 1`.
///
/// `family` is `Mcap` (with `b`) or `central` (the `b = 0` member).
pub fn normalized_shifted(family: SequenceFamily, b: Option<&Scalar>, n: usize, k: usize) -> Result<Normalized> {
    let b = match family {
        SequenceFamily::Mcap => b.ok_or(Error::MissingParameter("Mcap"))?.clone(),
        SequenceFamily::Central => int(0),
        other => {
            return Err(Error::UnsupportedFamily(format!(
                "normalization by (2 - b)^(k-1) applies to Mcap and central, not {other}"
            )))
        }
    };
    if k == 0 {
        return Err(Error::InvalidArgument("the normalized determinant needs k >= 1".into()));
    }
    let two_minus_b = int(2) - &b;
    if two_minus_b.is_zero() && k >= 2 {
        return Ok(Normalized::Indeterminate);
    }
    let seq = MomentSequence::new(SequenceFamily::Mcap, Some(b))?;
    let det = hankel_det(&seq, n, k);
    Ok(Normalized::Value(det / pow_i(&two_minus_b, k as i64 - 1)?))
}

/// `2^n prod_{j=1}^{n-1} binom(2k-1+2j, j) / binom(2j, j)`.
pub fn central_rhs(n: usize, k: usize) -> Scalar {
    let (n, k) = (n as i64, k as i64);
    (1..n).fold(int(2).pow(n as i32), |acc, j| {
        acc * binom_q(2 * k - 1 + 2 * j, j) / binom_q(2 * j, j)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ratio;
    use crate::hankel::closed_forms::v_poly;

    #[test]
    fn central_examples() {
        let v = |n, k| normalized_shifted(SequenceFamily::Central, None, n, k).unwrap();
        assert_eq!(v(2, 2), Normalized::Value(int(10)));
        for k in 1..6 {
            assert_eq!(v(0, k), Normalized::Value(int(1)));
        }
        assert_eq!(central_rhs(2, 2), int(10));
    }

    #[test]
    fn b_two_is_indeterminate() {
        let two = int(2);
        assert_eq!(
            normalized_shifted(SequenceFamily::Mcap, Some(&two), 1, 3).unwrap(),
            Normalized::Indeterminate
        );
        assert_eq!(
            normalized_shifted(SequenceFamily::Mcap, Some(&two), 3, 1).unwrap(),
            Normalized::Value(int(64))
        );
    }

    #[test]
    fn agrees_with_v_poly() {
        for b in [int(-1), ratio(1, 3), int(5)] {
            for n in 0..4 {
                for k in 1..5 {
                    let lhs = normalized_shifted(SequenceFamily::Mcap, Some(&b), n, k).unwrap();
                    assert_eq!(
                        lhs,
                        Normalized::Value(v_poly(n).eval(&b, &int(k as i64))),
                        "b={b} n={n} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(normalized_shifted(SequenceFamily::Mcap, None, 1, 1).is_err());
        assert!(normalized_shifted(SequenceFamily::Catalan, None, 1, 1).is_err());
        assert!(normalized_shifted(SequenceFamily::Central, None, 1, 0).is_err());
    }
}
