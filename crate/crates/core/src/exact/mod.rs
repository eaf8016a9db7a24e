//! Exact numeric substrate: rationals, polynomials in `b` and `x`, truncated
//! power series and determinants.

pub mod matrix;
pub mod parse;
pub mod poly;
pub mod scalar;
pub mod series;

pub use matrix::{det_exact, det_poly, Matrix};
pub use poly::Poly;
pub use scalar::Scalar;
pub use series::PowerSeries;

use scalar::{factorial, from_bigint, int};

/// `binom(arg, r) = arg (arg - 1) ... (arg - r + 1) / r!` with a polynomial top argument.
pub fn binom_poly(arg: &Poly, r: u32) -> Poly {
    let falling: Poly = (0..r as i64).map(|i| arg - &Poly::int(i)).product();
    falling.scale(&from_bigint(factorial(r as u64)).recip())
}

/// `binom(x + shift, r)` as a polynomial in `x`.
pub fn binom_x(shift: i64, r: u32) -> Poly {
    binom_poly(&Poly::affine_x(int(1), int(shift)), r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::binomial;
    use proptest::prelude::*;

    #[test]
    fn binom_poly_examples() {
        assert_eq!(binom_poly(&Poly::x(), 0), Poly::one());
        let two_x_plus_two: Poly = "2*x + 2".parse().unwrap();
        assert_eq!(binom_poly(&two_x_plus_two, 1), two_x_plus_two);
        let expected: Poly = "(x + 2)*(x + 1)*1/2".parse().unwrap();
        let got = binom_x(2, 2);
        assert_eq!(got, expected);
        assert_eq!(got.eval(&int(0), &int(2)), int(6));
    }

    proptest! {
        #[test]
        fn binom_poly_matches_integer_binomial(m in 0i64..40, r in 0u32..12) {
            prop_assume!(m >= r as i64);
            let v = binom_poly(&Poly::x(), r).eval(&int(0), &int(m));
            prop_assert_eq!(v, from_bigint(binomial(m, r as i64)));
        }

        #[test]
        fn rendering_round_trips(coeffs in prop::collection::vec((-9i64..10, 1i64..5), 0..12)) {
            let p: Poly = coeffs.iter().enumerate()
                .map(|(i, &(num, den))| Poly::monomial(scalar::ratio(num, den), i / 3, i % 3))
                .sum();
            let back: Poly = p.to_string().parse().unwrap();
            prop_assert_eq!(back, p);
        }
    }
}
