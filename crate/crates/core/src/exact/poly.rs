//! Exact polynomials in the two fixed variables `b` and `x`.
//!
//! Storage is dense in `x`; each `x`-coefficient is itself a dense polynomial in `b`.
//! The representation is kept normalized (no trailing zeros at either level), so
//! derived equality is mathematical equality.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::scalar::{int, Scalar};
use crate::error::Error;

/// Polynomial in `b` alone, dense, lowest degree first.
type BCoeffs = Vec<Scalar>;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    // coeffs[i][j] is the coefficient of x^i b^j
    coeffs: Vec<BCoeffs>,
}

fn trim(v: &mut BCoeffs) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn b_add(a: &[Scalar], b: &[Scalar]) -> BCoeffs {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(&mut out);
    out
}

fn b_sub(a: &[Scalar], b: &[Scalar]) -> BCoeffs {
    let mut out = vec![Scalar::zero(); a.len().max(b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(&mut out);
    out
}

fn b_mul(a: &[Scalar], b: &[Scalar]) -> BCoeffs {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Scalar::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn b_eval(a: &[Scalar], b: &Scalar) -> Scalar {
    a.iter().rev().fold(Scalar::zero(), |acc, c| acc * b + c)
}

/// Exact division in Q[b]; `None` when `d` is zero or does not divide `a`.
fn b_div_exact(a: &[Scalar], d: &[Scalar]) -> Option<BCoeffs> {
    let lead = d.last()?;
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < d.len() {
        return None;
    }
    let mut rem = a.to_vec();
    let mut quot = vec![Scalar::zero(); a.len() - d.len() + 1];
    for shift in (0..quot.len()).rev() {
        let c = &rem[shift + d.len() - 1] / lead;
        if c.is_zero() {
            continue;
        }
        for (i, di) in d.iter().enumerate() {
            rem[shift + i] -= &c * di;
        }
        quot[shift] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut quot);
    Some(quot)
}

impl Poly {
    fn from_raw(mut coeffs: Vec<BCoeffs>) -> Self {
        for c in coeffs.iter_mut() {
            trim(c);
        }
        while coeffs.last().is_some_and(Vec::is_empty) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Poly::from_raw(vec![vec![c]])
    }

    pub fn int(v: i64) -> Self {
        Poly::constant(int(v))
    }

    /// The variable `x`.
    pub fn x() -> Self {
        Poly::monomial(Scalar::one(), 1, 0)
    }

    /// The variable `b`.
    pub fn b() -> Self {
        Poly::monomial(Scalar::one(), 0, 1)
    }

    /// `coef * x^x_deg * b^b_deg`.
    pub fn monomial(coef: Scalar, x_deg: usize, b_deg: usize) -> Self {
        let mut coeffs = vec![Vec::new(); x_deg + 1];
        let mut inner = vec![Scalar::zero(); b_deg + 1];
        inner[b_deg] = coef;
        coeffs[x_deg] = inner;
        Poly::from_raw(coeffs)
    }

    /// Univariate polynomial in `x` from coefficients, lowest degree first.
    pub fn from_x_coeffs(cs: impl IntoIterator<Item = Scalar>) -> Self {
        Poly::from_raw(cs.into_iter().map(|c| vec![c]).collect())
    }

    /// Univariate polynomial in `b` from coefficients, lowest degree first.
    pub fn from_b_coeffs(cs: impl IntoIterator<Item = Scalar>) -> Self {
        Poly::from_raw(vec![cs.into_iter().collect()])
    }

    /// `a*x + c` for scalars.
    pub fn affine_x(a: Scalar, c: Scalar) -> Self {
        Poly::from_x_coeffs([c, a])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn degree_b(&self) -> Option<usize> {
        self.coeffs.iter().filter_map(|c| c.len().checked_sub(1)).max()
    }

    pub fn coeff(&self, x_deg: usize, b_deg: usize) -> Scalar {
        self.coeffs
            .get(x_deg)
            .and_then(|c| c.get(b_deg))
            .cloned()
            .unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of `x^x_deg` as a polynomial in `b`.
    pub fn x_coeff(&self, x_deg: usize) -> Poly {
        match self.coeffs.get(x_deg) {
            Some(c) => Poly::from_raw(vec![c.clone()]),
            None => Poly::zero(),
        }
    }

    /// Nonzero terms as `(x_deg, b_deg, coefficient)`, ascending.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> + '_ {
        self.coeffs.iter().enumerate().flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| (i, j, c))
        })
    }

    /// True when the polynomial does not involve `b`.
    pub fn is_free_of_b(&self) -> bool {
        self.coeffs.iter().all(|c| c.len() <= 1)
    }

    /// The constant value, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.coeffs.len() {
            0 => Some(Scalar::zero()),
            1 if self.coeffs[0].len() <= 1 => Some(self.coeff(0, 0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_raw(
            self.coeffs
                .iter()
                .map(|row| row.iter().map(|v| v * c).collect())
                .collect(),
        )
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn eval(&self, b: &Scalar, x: &Scalar) -> Scalar {
        self.coeffs
            .iter()
            .rev()
            .fold(Scalar::zero(), |acc, row| acc * x + b_eval(row, b))
    }

    /// Substitutes a value for `x`, leaving a polynomial in `b`.
    pub fn eval_x(&self, x: &Scalar) -> Poly {
        let mut acc: BCoeffs = Vec::new();
        for row in self.coeffs.iter().rev() {
            acc = b_add(&acc.iter().map(|c| c * x).collect::<Vec<_>>(), row);
        }
        Poly::from_raw(vec![acc])
    }

    /// Substitutes a value for `b`, leaving a polynomial in `x`.
    pub fn specialize_b(&self, b: &Scalar) -> Poly {
        Poly::from_raw(self.coeffs.iter().map(|row| vec![b_eval(row, b)]).collect())
    }

    /// Substitutes the polynomial `q` for `x` (Horner).
    pub fn compose_x(&self, q: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for row in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Poly::from_raw(vec![row.clone()]);
        }
        acc
    }

    /// Shorthand for `x -> x + shift`.
    pub fn shift_x(&self, shift: &Scalar) -> Poly {
        self.compose_x(&Poly::affine_x(Scalar::one(), shift.clone()))
    }

    /// Exact quotient `self / d` in Q[b][x]; `None` unless `d` divides `self`.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let d_deg = d.degree_x()?;
        let lead = &d.coeffs[d_deg];
        let mut rem = self.coeffs.clone();
        if rem.is_empty() {
            return Some(Poly::zero());
        }
        if rem.len() <= d_deg {
            return None;
        }
        let mut quot = vec![Vec::new(); rem.len() - d_deg];
        for shift in (0..quot.len()).rev() {
            let top = &rem[shift + d_deg];
            if top.is_empty() {
                continue;
            }
            let c = b_div_exact(top, lead)?;
            for (i, di) in d.coeffs.iter().enumerate() {
                rem[shift + i] = b_sub(&rem[shift + i], &b_mul(&c, di));
            }
            quot[shift] = c;
        }
        if rem.iter().any(|r| !r.is_empty()) {
            return None;
        }
        Some(Poly::from_raw(quot))
    }

    /// Maps `x^(2j)` to `x^j`. `None` if an odd power of `x` is present.
    pub fn halve_even_powers(&self) -> Option<Poly> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            if i % 2 == 1 {
                if !row.is_empty() {
                    return None;
                }
            } else {
                out.push(row.clone());
            }
        }
        Some(Poly::from_raw(out))
    }

    /// Maps `x^(2j+1)` to `x^j`, i.e. `p(sqrt x)/sqrt x`. `None` if an even power is present.
    pub fn halve_odd_powers(&self) -> Option<Poly> {
        let mut out = Vec::new();
        for (i, row) in self.coeffs.iter().enumerate() {
            if i % 2 == 0 {
                if !row.is_empty() {
                    return None;
                }
            } else {
                out.push(row.clone());
            }
        }
        Some(Poly::from_raw(out))
    }
}

impl From<Scalar> for Poly {
    fn from(c: Scalar) -> Self {
        Poly::constant(c)
    }
}

impl<'a> Add<&'a Poly> for &Poly {
    type Output = Poly;
    fn add(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let empty = Vec::new();
        Poly::from_raw(
            (0..n)
                .map(|i| {
                    b_add(
                        self.coeffs.get(i).unwrap_or(&empty),
                        rhs.coeffs.get(i).unwrap_or(&empty),
                    )
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a Poly> for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &'a Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let empty = Vec::new();
        Poly::from_raw(
            (0..n)
                .map(|i| {
                    b_sub(
                        self.coeffs.get(i).unwrap_or(&empty),
                        rhs.coeffs.get(i).unwrap_or(&empty),
                    )
                })
                .collect(),
        )
    }
}

impl<'a> Mul<&'a Poly> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &'a Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Vec::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_empty() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_empty() {
                    continue;
                }
                out[i + j] = b_add(&out[i + j], &b_mul(a, b));
            }
        }
        Poly::from_raw(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Scalar::one())
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &'a Poly) -> Poly {
                (&self).$method(rhs)
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&Poly> for Poly {
    fn add_assign(&mut self, rhs: &Poly) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Poly> for Poly {
    fn sub_assign(&mut self, rhs: &Poly) {
        *self = &*self - rhs;
    }
}

impl std::iter::Sum for Poly {
    fn sum<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::zero(), |acc, p| &acc + &p)
    }
}

impl std::iter::Product for Poly {
    fn product<I: Iterator<Item = Poly>>(iter: I) -> Poly {
        iter.fold(Poly::one(), |acc, p| &acc * &p)
    }
}

fn monomial_text(x_deg: usize, b_deg: usize) -> String {
    let mut parts = Vec::new();
    match b_deg {
        0 => {}
        1 => parts.push("b".to_string()),
        d => parts.push(format!("b^{d}")),
    }
    match x_deg {
        0 => {}
        1 => parts.push("x".to_string()),
        d => parts.push(format!("x^{d}")),
    }
    parts.join("*")
}

/// Canonical rendering: descending `x` degree, then descending `b` degree,
/// rational coefficients as `p/q`, e.g. `1/3*b^2*x^2 + b*x - 1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, row) in self.coeffs.iter().enumerate().rev() {
            for (j, c) in row.iter().enumerate().rev() {
                if c.is_zero() {
                    continue;
                }
                let neg = c.is_negative();
                let mag = c.abs();
                let mono = monomial_text(i, j);
                let body = if mono.is_empty() {
                    mag.to_string()
                } else if mag.is_one() {
                    mono
                } else {
                    format!("{mag}*{mono}")
                };
                match (first, neg) {
                    (true, false) => f.write_str(&body)?,
                    (true, true) => write!(f, "-{body}")?,
                    (false, false) => write!(f, " + {body}")?,
                    (false, true) => write!(f, " - {body}")?,
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl FromStr for Poly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        super::parse::parse_poly(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::ratio;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn canonical_rendering() {
        assert_eq!((Poly::b() * Poly::x() + Poly::one()).to_string(), "b*x + 1");
        assert_eq!((Poly::x() - Poly::b() - Poly::one()).to_string(), "x - b - 1");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::monomial(ratio(-1, 3), 2, 2).to_string(), "-1/3*b^2*x^2");
        assert_eq!(Poly::int(-4).to_string(), "-4");
    }

    #[test]
    fn zero_coefficients_are_stripped() {
        let a = p("x^2 + b");
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff, Poly::zero());
        assert_eq!(diff.degree_x(), None);
        assert_eq!((p("x^3 + 1") - p("x^3")).degree_x(), Some(0));
    }

    #[test]
    fn degrees() {
        let q = p("b^3*x + x^4 - 2");
        assert_eq!(q.degree_x(), Some(4));
        assert_eq!(q.degree_b(), Some(3));
    }

    #[test]
    fn compose_and_eval() {
        let q = p("x^2 + b*x");
        let shifted = q.shift_x(&int(-1));
        assert_eq!(shifted, p("x^2 - 2*x + 1 + b*x - b"));
        assert_eq!(q.eval(&int(3), &int(2)), int(10));
        assert_eq!(q.eval_x(&int(2)), p("4 + 2*b"));
        assert_eq!(q.specialize_b(&int(-1)), p("x^2 - x"));
    }

    #[test]
    fn exact_division() {
        let a = p("(x + b)*(x^2 - b*x + 3)");
        assert_eq!(a.div_exact(&p("x + b")).unwrap(), p("x^2 - b*x + 3"));
        assert_eq!(a.div_exact(&p("x^2 - b*x + 3")).unwrap(), p("x + b"));
        assert!(a.div_exact(&p("x + 1")).is_none());
        assert!(a.div_exact(&Poly::zero()).is_none());
        let c = p("(2 - b)^2 * (1 + b*x)");
        assert_eq!(c.div_exact(&p("2 - b")).unwrap(), p("(2 - b)*(1 + b*x)"));
    }

    #[test]
    fn parity_split() {
        let even = p("x^4 - 3*x^2 + 1");
        assert_eq!(even.halve_even_powers().unwrap(), p("x^2 - 3*x + 1"));
        assert!(even.halve_odd_powers().is_none());
        let odd = p("x^3 - 2*x");
        assert_eq!(odd.halve_odd_powers().unwrap(), p("x - 2"));
    }
}
