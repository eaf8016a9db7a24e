//! The polynomial families that evaluate shifted Hankel determinants:
//! `H_n(x)`, `H_n(b, x)`, `H_n(2, x)`, `V_n(b, x)` and `h_n(x)`.
//!
//! Every family with more than one formula is built all ways and the results
//! are asserted equal before anything is returned.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::exact::scalar::{binom_q, int, ratio};
use crate::exact::{binom_poly, binom_x, det_poly, Matrix, Poly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PolyKind {
    /// `H_n(x)`, Catalan shifted Hankel determinants.
    H,
    /// `H_n(b, x)`.
    Hb,
    /// `H_n(2, x)`.
    H2,
    /// `V_n(b, x) = 2^n H_n(b, (2x - 1)/2)`.
    V,
    /// `h_n(x) = prod_k ((x + k)/k)^min(k, n-k)`.
    Little,
}

impl PolyKind {
    pub const ALL: [PolyKind; 5] = [PolyKind::H, PolyKind::Hb, PolyKind::H2, PolyKind::V, PolyKind::Little];

    pub fn name(self) -> &'static str {
        match self {
            PolyKind::H => "H",
            PolyKind::Hb => "Hb",
            PolyKind::H2 => "H2",
            PolyKind::V => "V",
            PolyKind::Little => "h",
        }
    }

    pub fn member(self, n: usize) -> Poly {
        match self {
            PolyKind::H => product_poly_h(n),
            PolyKind::Hb => det_poly_hb(n),
            PolyKind::H2 => product_poly_h2(n),
            PolyKind::V => v_poly(n),
            PolyKind::Little => h_poly(n),
        }
    }
}

impl fmt::Display for PolyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PolyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        PolyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown polynomial family {s:?}")))
    }
}

fn cache() -> &'static RwLock<HashMap<(PolyKind, usize), Poly>> {
    static CACHE: OnceLock<RwLock<HashMap<(PolyKind, usize), Poly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cached(kind: PolyKind, n: usize, build: impl FnOnce() -> Poly) -> Poly {
    if let Some(p) = cache().read().unwrap().get(&(kind, n)) {
        return p.clone();
    }
    let p = build();
    cache().write().unwrap().insert((kind, n), p.clone());
    p
}

/// `(2x + c) / d`.
fn lin(c: i64, d: i64) -> Poly {
    Poly::affine_x(ratio(2, d), ratio(c, d))
}

/// The four product forms of `H_n(x)`, in order: binomial quotient,
/// double product over `i <= j`, exponent form, nested `floor(n/2)` form.
pub fn product_forms_h(n: usize) -> [Poly; 4] {
    let n = n as i64;
    let binomial_quotient: Poly = (1..n)
        .map(|j| binom_poly(&Poly::affine_x(int(2), int(2 * j)), j as u32).scale(&binom_q(2 * j, j).recip()))
        .product();
    let double: Poly = (1..n)
        .flat_map(|j| (1..=j).map(move |i| (i, j)))
        .map(|(i, j)| lin(i + j, i + j))
        .product();
    let exponent: Poly = (2..=2 * n - 2)
        .map(|l| lin(l, l).pow((l / 2).min((2 * n - l) / 2) as u32))
        .product();
    let nested: Poly = (1..=n / 2)
        .flat_map(|j| (2 * j..=2 * n - 2 * j).map(|i| lin(i, i)))
        .product();
    [binomial_quotient, double, exponent, nested]
}

/// `H_n(x) = prod_{1 <= i <= j <= n-1} (2x + i + j)/(i + j)`.
pub fn product_poly_h(n: usize) -> Poly {
    cached(PolyKind::H, n, || {
        let [a, b, c, d] = product_forms_h(n);
        assert_eq!(a, b, "H_{n}: binomial-quotient vs double product");
        assert_eq!(b, c, "H_{n}: double product vs exponent form");
        assert_eq!(c, d, "H_{n}: exponent form vs nested form");
        a
    })
}

/// `binom(x+i+j, 2j) + b binom(x+i+j, 2j+1)`.
pub fn hb_entry(i: usize, j: usize) -> Poly {
    let shift = (i + j) as i64;
    let r = 2 * j as u32;
    binom_x(shift, r) + Poly::b() * binom_x(shift, r + 1)
}

/// `H_n(b, x) = det(binom(x+i+j, 2j) + b binom(x+i+j, 2j+1))_{i,j<n}`.
pub fn det_poly_hb(n: usize) -> Poly {
    cached(PolyKind::Hb, n, || det_poly(&Matrix::from_fn(n, hb_entry)))
}

/// `det(binom(x+i+j, 2j))_{i,j<n}`, the `b = 0` member, built from its own matrix.
pub fn det_poly_binomial(n: usize) -> Poly {
    det_poly(&Matrix::from_fn(n, |i, j| binom_x((i + j) as i64, 2 * j as u32)))
}

/// `prod_{j=0}^{floor((n-1)/2)} prod_{i=2j+1}^{2n-2j-1} (2x + i)/i` without cross-checks.
pub fn product_form_h2(n: usize) -> Poly {
    let n = n as i64;
    if n == 0 {
        return Poly::one();
    }
    (0..=(n - 1) / 2)
        .flat_map(|j| (2 * j + 1..=2 * n - 2 * j - 1).map(|i| lin(i, i)))
        .product()
}

/// `H_n(2, x)` in product form, checked against `H_n(b, x)` at `b = 2` and
/// against `2^n H_n(1, x - 1/2)`.
pub fn product_poly_h2(n: usize) -> Poly {
    cached(PolyKind::H2, n, || {
        let product = product_form_h2(n);
        let hb = det_poly_hb(n);
        assert_eq!(product, hb.specialize_b(&int(2)), "H_{n}(2, x): product vs b = 2");
        let shifted = hb
            .specialize_b(&int(1))
            .shift_x(&ratio(-1, 2))
            .scale(&int(2).pow(n as i32));
        assert_eq!(product, shifted, "H_{n}(2, x) vs 2^n H_n(1, x - 1/2)");
        product
    })
}

/// `2^n H_n(b, (2x - 1)/2)`.
pub fn v_by_substitution(n: usize) -> Poly {
    det_poly_hb(n)
        .compose_x(&Poly::affine_x(int(1), ratio(-1, 2)))
        .scale(&int(2).pow(n as i32))
}

/// Entry of the `V_n` determinant:
/// `binom(y, 2j) (2x+2i)/y + b binom(y, 2j+1) (2x+2i-1)/y` with `y = x + i + j`.
pub fn v_entry(i: usize, j: usize) -> Poly {
    let (i_, j_) = (i as i64, j as i64);
    let y = Poly::affine_x(int(1), int(i_ + j_));
    let first = (binom_x(i_ + j_, 2 * j as u32) * Poly::affine_x(int(2), int(2 * i_)))
        .div_exact(&y)
        .expect("x + i + j divides the first numerator");
    let second = (binom_x(i_ + j_, 2 * j as u32 + 1) * Poly::affine_x(int(2), int(2 * i_ - 1)))
        .div_exact(&y)
        .expect("x + i + j divides the second numerator");
    first + Poly::b() * second
}

pub fn v_by_determinant(n: usize) -> Poly {
    det_poly(&Matrix::from_fn(n, v_entry))
}

/// `V_n(b, x)`, computed by substitution and by its own determinant; both must agree.
pub fn v_poly(n: usize) -> Poly {
    cached(PolyKind::V, n, || {
        let sub = v_by_substitution(n);
        let det = v_by_determinant(n);
        assert_eq!(sub, det, "V_{n}: substitution vs determinant");
        sub
    })
}

/// `h_n(x) = prod_{k=1}^{n-1} ((x + k)/k)^min(k, n - k)`.
pub fn h_poly(n: usize) -> Poly {
    cached(PolyKind::Little, n, || {
        let n = n as i64;
        (1..n)
            .map(|k| Poly::affine_x(ratio(1, k), int(1)).pow(k.min(n - k) as u32))
            .product()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::binom_q;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn h_examples() {
        assert_eq!(product_poly_h(0), Poly::one());
        assert_eq!(product_poly_h(1), Poly::one());
        assert_eq!(product_poly_h(2), p("x + 1"));
        assert_eq!(product_poly_h(3), p("(x + 1)*(x + 2)*(2*x + 3)*1/6"));
        assert_eq!(product_poly_h(3).eval(&int(0), &int(2)), int(14));
        for n in 0..=8 {
            assert_eq!(product_poly_h(n).eval(&int(0), &int(0)), int(1));
        }
    }

    #[test]
    fn hb_examples() {
        assert_eq!(det_poly_hb(0), Poly::one());
        assert_eq!(det_poly_hb(1), p("1 + b*x"));
        assert_eq!(det_poly_hb(2), p("1/6*(1 + x)*(6 + b*(b + 6)*x + 2*b^2*x^2)"));
        assert_eq!(
            det_poly_hb(3),
            p("1/180*(1 + x)*(2 + x)*(3 + 2*x)*(30 + b*(b^2 + 6*b + 30)*x + 3*b^2*(b + 4)*x^2 + 2*b^3*x^3)")
        );
        assert_eq!(det_poly_hb(2).specialize_b(&int(0)), product_poly_h(2));
    }

    #[test]
    fn binomial_determinant_is_h() {
        for n in 0..=7 {
            assert_eq!(det_poly_binomial(n), product_poly_h(n), "n={n}");
        }
    }

    #[test]
    fn h2_examples() {
        assert_eq!(product_poly_h2(0), Poly::one());
        assert_eq!(product_poly_h2(1), p("1 + 2*x"));
        assert_eq!(product_poly_h2(2).eval(&int(0), &int(1)), int(10));
        for n in 0..=10i64 {
            assert_eq!(
                product_form_h2(n as usize).eval(&int(0), &int(1)),
                binom_q(2 * n + 1, n)
            );
        }
    }

    #[test]
    fn v_examples() {
        assert_eq!(v_poly(0), Poly::one());
        assert_eq!(v_poly(1), p("2 + b*(2*x - 1)"));
        assert_eq!(v_poly(1).eval_x(&int(1)), p("2 + b"));
        for n in 0..=4 {
            v_poly(n);
        }
    }

    #[test]
    fn little_h_examples() {
        assert_eq!(h_poly(0), Poly::one());
        assert_eq!(h_poly(1), Poly::one());
        assert_eq!(h_poly(2), p("x + 1"));
        assert_eq!(h_poly(2).eval(&int(0), &int(1)), int(2));
        assert_eq!(h_poly(3).eval(&int(0), &int(1)), int(3));
        for n in 0..=10i64 {
            assert_eq!(h_poly(n as usize).eval(&int(0), &int(1)), binom_q(n, n / 2));
        }
    }

    #[test]
    fn hb_at_one_is_shifted_h() {
        for n in 0..=6 {
            assert_eq!(det_poly_hb(n).specialize_b(&int(1)), product_poly_h(n + 1), "n={n}");
        }
    }
}
