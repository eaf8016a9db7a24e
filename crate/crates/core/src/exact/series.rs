use std::fmt;

use num_traits::{One, Zero};

use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Truncated power series: the coefficients of `x^0 .. x^(N-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<Scalar>,
}

/// Renders the coefficient list and the truncation order, e.g. `[1, 1, 2] mod x^3`.
impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        write!(f, "[{}] mod x^{}", cs.join(", "), self.order())
    }
}

impl PowerSeries {
    /// Builds a series of order `order`, padding or truncating `coeffs`.
    pub fn new(coeffs: impl IntoIterator<Item = Scalar>, order: usize) -> Self {
        let mut coeffs: Vec<Scalar> = coeffs.into_iter().take(order).collect();
        coeffs.resize(order, Scalar::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries::new([], order)
    }

    pub fn one(order: usize) -> Self {
        PowerSeries::new([Scalar::one()], order)
    }

    /// The series `x` (zero when `order < 2`).
    pub fn x(order: usize) -> Self {
        PowerSeries::new([Scalar::zero(), Scalar::one()], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &PowerSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check(other)?;
        Ok(PowerSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Scalar) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `x`, dropping the coefficient that falls off the end.
    pub fn mul_x(&self) -> PowerSeries {
        let n = self.order();
        PowerSeries::new(std::iter::once(Scalar::zero()).chain(self.coeffs.iter().cloned()), n)
    }

    /// Cauchy product truncated to the common order.
    pub fn mul(&self, other: &PowerSeries) -> Result<PowerSeries> {
        self.check(other)?;
        let n = self.order();
        let mut out = vec![Scalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// Multiplicative inverse modulo `x^N`.
    pub fn reciprocal(&self) -> Result<PowerSeries> {
        let n = self.order();
        if n == 0 {
            return Ok(self.clone());
        }
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NonUnitSeries);
        }
        let inv0 = a0.recip();
        let mut out: Vec<Scalar> = Vec::with_capacity(n);
        out.push(inv0.clone());
        for m in 1..n {
            let acc = (1..=m).fold(Scalar::zero(), |acc, i| acc + &self.coeffs[i] * &out[m - i]);
            out.push(-acc * &inv0);
        }
        Ok(PowerSeries { coeffs: out })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;
    use proptest::prelude::*;

    fn ints(v: &[i64], n: usize) -> PowerSeries {
        PowerSeries::new(v.iter().map(|&c| int(c)), n)
    }

    #[test]
    fn geometric_series() {
        let s = ints(&[1, -1], 4);
        assert_eq!(s.reciprocal().unwrap(), ints(&[1, 1, 1, 1], 4));
    }

    #[test]
    fn one_is_identity() {
        let s = ints(&[3, 0, -2, 7], 4);
        assert_eq!(PowerSeries::one(4).mul(&s).unwrap(), s);
    }

    #[test]
    fn errors() {
        assert_eq!(ints(&[0, 1], 3).reciprocal(), Err(Error::NonUnitSeries));
        assert_eq!(ints(&[1], 3).mul(&ints(&[1], 4)), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn mul_x_truncates() {
        assert_eq!(ints(&[1, 2, 3], 3).mul_x(), ints(&[0, 1, 2], 3));
    }

    proptest! {
        #[test]
        fn reciprocal_is_inverse(head in 1i64..20, sign in prop::bool::ANY,
                                 tail in prop::collection::vec(-20i64..20, 0..10)) {
            let mut v = vec![if sign { head } else { -head }];
            v.extend(tail);
            let n = v.len();
            let s = ints(&v, n);
            let prod = s.mul(&s.reciprocal().unwrap()).unwrap();
            prop_assert_eq!(prod, PowerSeries::one(n));
        }
    }
}
