//! Truncated generating series `C(x)` and `B_b(x) = C(x) / (1 - b x C(x))`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::scalar::int;
use crate::exact::{PowerSeries, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GfFamily {
    Catalan,
    /// Moments `M_b(n)` at the given `b`.
    Moments(Scalar),
}

/// Residual `C - 1 - x C^2`, zero modulo `x^N` for the true Catalan series.
pub fn catalan_residual(c: &PowerSeries) -> Result<PowerSeries> {
    let n = c.order();
    c.sub(&PowerSeries::one(n))?.sub(&c.mul(c)?.mul_x())
}

/// First `order` Catalan numbers via the convolution `C_{m+1} = sum_i C_i C_{m-i}`.
pub fn catalan_series(order: usize) -> PowerSeries {
    let mut c: Vec<Scalar> = Vec::with_capacity(order);
    if order > 0 {
        c.push(int(1));
    }
    for m in 0..order.saturating_sub(1) {
        let next = (0..=m).fold(Scalar::zero(), |acc, i| acc + &c[i] * &c[m - i]);
        c.push(next);
    }
    let series = PowerSeries::new(c, order);
    let residual = catalan_residual(&series).expect("same order");
    assert!(residual.is_zero(), "C = 1 + x C^2 fails modulo x^{order}");
    series
}

/// `C(x) / (1 - b x C(x))`.
pub fn moment_series(b: &Scalar, order: usize) -> Result<PowerSeries> {
    let c = catalan_series(order);
    let denom = PowerSeries::one(order).sub(&c.mul_x().scale(b))?;
    c.mul(&denom.reciprocal()?)
}

pub fn gf_coeffs(family: &GfFamily, order: usize) -> Result<PowerSeries> {
    if order == 0 {
        return Err(Error::InvalidArgument("series order must be at least 1".into()));
    }
    match family {
        GfFamily::Catalan => Ok(catalan_series(order)),
        GfFamily::Moments(b) => moment_series(b, order),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ratio;
    use crate::ortho::moments::{sequence_term, SequenceFamily};

    fn strs(s: &PowerSeries) -> Vec<String> {
        s.coeffs().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            strs(&gf_coeffs(&GfFamily::Catalan, 6).unwrap()),
            ["1", "1", "2", "5", "14", "42"]
        );
        assert_eq!(
            gf_coeffs(&GfFamily::Moments(int(0)), 6).unwrap(),
            gf_coeffs(&GfFamily::Catalan, 6).unwrap()
        );
        assert_eq!(
            strs(&gf_coeffs(&GfFamily::Moments(int(2)), 4).unwrap()),
            ["1", "3", "10", "35"]
        );
        assert!(gf_coeffs(&GfFamily::Catalan, 0).is_err());
    }

    #[test]
    fn x_c_squared_is_shifted_catalan() {
        let c = catalan_series(5);
        let xc2 = c.mul(&c).unwrap().mul_x();
        assert_eq!(strs(&xc2), ["0", "1", "2", "5", "14"]);
    }

    #[test]
    fn series_identity_and_coefficients() {
        for b in [int(-1), int(2), int(3), ratio(-3, 2)] {
            let bb = moment_series(&b, 20).unwrap();
            let c = catalan_series(20);
            let lhs = bb
                .mul(&PowerSeries::one(20).sub(&c.mul_x().scale(&b)).unwrap())
                .unwrap();
            assert_eq!(lhs, c);
            for n in 0..20 {
                assert_eq!(bb.coeff(n), sequence_term(SequenceFamily::Mb, Some(&b), n).unwrap());
            }
        }
    }
}
