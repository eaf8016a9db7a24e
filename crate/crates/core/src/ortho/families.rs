//! The named orthogonal families in closed form, each cross-checked against
//! the three-term recurrence of its Jacobi spec.

use std::fmt;
use std::str::FromStr;

use super::jacobi::{ortho_poly, JacobiSpec};
use crate::error::{Error, Result};
use crate::exact::scalar::{binom_q, int, ratio};
use crate::exact::{Poly, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedKind {
    /// `F_n(x)`, `s = 0`, `t = 1`.
    Fibonacci,
    /// Modified Lucas `L_n(x)`, `s = 0`, `t_0 = 2`, `t = 1`.
    Lucas,
    /// `f_n(x) = F_{2n}(sqrt x)`.
    F,
    /// `g_n(x) = F_{2n+1}(sqrt x) / sqrt x`.
    G,
    /// `P_n(b, x) = f_n(x) - b g_{n-1}(x)`.
    P,
    /// `p_n(b, x) = L_{2n}(sqrt x) - b L_{2n-1}(sqrt x) / sqrt x`.
    PCentral,
}

impl NamedKind {
    pub const ALL: [NamedKind; 6] = [
        NamedKind::Fibonacci,
        NamedKind::Lucas,
        NamedKind::F,
        NamedKind::G,
        NamedKind::P,
        NamedKind::PCentral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedKind::Fibonacci => "fibonacci",
            NamedKind::Lucas => "lucas",
            NamedKind::F => "f",
            NamedKind::G => "g",
            NamedKind::P => "P",
            NamedKind::PCentral => "p-central",
        }
    }

    pub fn spec(self, b: &Poly) -> JacobiSpec {
        match self {
            NamedKind::Fibonacci => JacobiSpec::fibonacci(),
            NamedKind::Lucas => JacobiSpec::lucas(),
            NamedKind::F => JacobiSpec::f_family(),
            NamedKind::G => JacobiSpec::g_family(),
            NamedKind::P => JacobiSpec::shifted_catalan(b),
            NamedKind::PCentral => JacobiSpec::central(b),
        }
    }
}

impl fmt::Display for NamedKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "fibonacci" | "F" => NamedKind::Fibonacci,
            "lucas" | "L" => NamedKind::Lucas,
            "f" => NamedKind::F,
            "g" => NamedKind::G,
            "P" => NamedKind::P,
            "p-central" | "p_lemma8" | "p" => NamedKind::PCentral,
            other => return Err(Error::Parse(format!("unknown polynomial family {other:?}"))),
        })
    }
}

fn sign(e: i64) -> Scalar {
    if e.rem_euclid(2) == 0 {
        int(1)
    } else {
        int(-1)
    }
}

fn x_sum(terms: impl IntoIterator<Item = (usize, Scalar)>) -> Poly {
    terms.into_iter().map(|(deg, c)| Poly::monomial(c, deg, 0)).sum()
}

/// `F_n(x) = sum_j (-1)^j binom(n-j, j) x^(n-2j)`.
pub fn fibonacci_closed(n: usize) -> Poly {
    let n = n as i64;
    x_sum((0..=n / 2).map(|j| ((n - 2 * j) as usize, sign(j) * binom_q(n - j, j))))
}

/// `L_n(x) = sum_k binom(n-k, k) n/(n-k) (-1)^k x^(n-2k)` for `n > 0`, `L_0 = 1`.
pub fn lucas_closed(n: usize) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let n = n as i64;
    x_sum((0..=n / 2).map(|k| ((n - 2 * k) as usize, sign(k) * binom_q(n - k, k) * ratio(n, n - k))))
}

/// Both closed forms of `f_n`: `sum_j (-1)^(n-j) binom(n+j, 2j) x^j` and
/// `sum_k (-1)^k binom(2n-k, k) x^(n-k)`.
pub fn f_closed_forms(n: usize) -> (Poly, Poly) {
    let n = n as i64;
    let by_j = x_sum((0..=n).map(|j| (j as usize, sign(n - j) * binom_q(n + j, 2 * j))));
    let by_k = x_sum((0..=n).map(|k| ((n - k) as usize, sign(k) * binom_q(2 * n - k, k))));
    (by_j, by_k)
}

/// Both closed forms of `g_n`: `sum_j (-1)^(n-j) binom(n+1+j, 2j+1) x^j` and
/// `sum_k (-1)^k binom(2n+1-k, k) x^(n-k)`.
pub fn g_closed_forms(n: usize) -> (Poly, Poly) {
    let n = n as i64;
    let by_j = x_sum((0..=n).map(|j| (j as usize, sign(n - j) * binom_q(n + 1 + j, 2 * j + 1))));
    let by_k = x_sum((0..=n).map(|k| ((n - k) as usize, sign(k) * binom_q(2 * n + 1 - k, k))));
    (by_j, by_k)
}

/// `P_n(b, x) = sum_j (-1)^(n-j) (binom(n+j, 2j) + b binom(n+j, 2j+1)) x^j`.
pub fn p_closed(n: usize, b: &Poly) -> Poly {
    let n = n as i64;
    (0..=n)
        .map(|j| {
            let c = Poly::constant(binom_q(n + j, 2 * j)) + b.scale(&binom_q(n + j, 2 * j + 1));
            (&c * &Poly::monomial(int(1), j as usize, 0)).scale(&sign(n - j))
        })
        .sum()
}

/// `p_n(b, x)` of the central-binomial spec:
/// `sum_j (-1)^(n-j) [binom(n+j, 2j) 2n/(n+j) + b binom(n+j, 2j+1) (2n-1)/(n+j)] x^j`.
pub fn p_central_closed(n: usize, b: &Poly) -> Poly {
    if n == 0 {
        return Poly::one();
    }
    let n = n as i64;
    (0..=n)
        .map(|j| {
            let c = Poly::constant(binom_q(n + j, 2 * j) * ratio(2 * n, n + j))
                + b.scale(&(binom_q(n + j, 2 * j + 1) * ratio(2 * n - 1, n + j)));
            (&c * &Poly::monomial(int(1), j as usize, 0)).scale(&sign(n - j))
        })
        .sum()
}

/// The closed-form member `n` of a named family. The recurrence form is computed
/// as well and must agree; for `P` and `PCentral` the decompositions through
/// Fibonacci resp. Lucas polynomials are also checked. `b` may be formal
/// (`Poly::b()`) or a constant; it is ignored by the `b`-free families.
pub fn named_poly(kind: NamedKind, n: usize, b: &Poly) -> Poly {
    let closed = match kind {
        NamedKind::Fibonacci => fibonacci_closed(n),
        NamedKind::Lucas => lucas_closed(n),
        NamedKind::F => {
            let (a, c) = f_closed_forms(n);
            assert_eq!(a, c, "two closed forms of f_{n} disagree");
            assert_eq!(
                Some(a.clone()),
                fibonacci_closed(2 * n).halve_even_powers(),
                "f_{n} != F_(2n)(sqrt x)"
            );
            a
        }
        NamedKind::G => {
            let (a, c) = g_closed_forms(n);
            assert_eq!(a, c, "two closed forms of g_{n} disagree");
            assert_eq!(
                Some(a.clone()),
                fibonacci_closed(2 * n + 1).halve_odd_powers(),
                "g_{n} != F_(2n+1)(sqrt x)/sqrt x"
            );
            a
        }
        NamedKind::P => {
            let closed = p_closed(n, b);
            if n > 0 {
                let via_fg = named_poly(NamedKind::F, n, b) - b * named_poly(NamedKind::G, n - 1, b);
                assert_eq!(closed, via_fg, "P_{n} != f_n - b g_(n-1)");
            }
            closed
        }
        NamedKind::PCentral => {
            let closed = p_central_closed(n, b);
            if n > 0 {
                let even = lucas_closed(2 * n).halve_even_powers().expect("L_2n is even");
                let odd = lucas_closed(2 * n - 1).halve_odd_powers().expect("L_(2n-1) is odd");
                assert_eq!(
                    closed,
                    even - b * odd,
                    "p_{n} != L_2n(sqrt x) - b L_(2n-1)(sqrt x)/sqrt x"
                );
            }
            closed
        }
    };
    let recurrence = ortho_poly(&kind.spec(b), n);
    assert_eq!(closed, recurrence, "{kind}_{n}: closed form disagrees with recurrence");
    closed
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let b = Poly::b();
        assert_eq!(named_poly(NamedKind::Fibonacci, 4, &b), p("x^4 - 3*x^2 + 1"));
        assert_eq!(named_poly(NamedKind::F, 1, &b), p("x - 1"));
        assert_eq!(named_poly(NamedKind::G, 1, &b), p("x - 2"));
        assert_eq!(named_poly(NamedKind::Lucas, 2, &b), p("x^2 - 2"));
        assert_eq!(named_poly(NamedKind::P, 1, &b), p("x - b - 1"));
        assert_eq!(named_poly(NamedKind::PCentral, 1, &b), p("x - b - 2"));
    }

    #[test]
    fn all_families_consistent_up_to_twelve() {
        for kind in NamedKind::ALL {
            for n in 0..=12 {
                let formal = named_poly(kind, n, &Poly::b());
                let at_three = named_poly(kind, n, &Poly::int(3));
                assert_eq!(formal.specialize_b(&int(3)), at_three);
                assert_eq!(formal.degree_x(), Some(n));
                assert_eq!(formal.x_coeff(n), Poly::one(), "{kind}_{n} is monic");
            }
        }
    }

    #[test]
    fn constant_term_of_p_central() {
        // (-1)^k p_k(b, 0) = 2 + (2k - 1) b
        for k in 1..=10usize {
            let v = named_poly(NamedKind::PCentral, k, &Poly::b()).eval_x(&int(0));
            let signed = if k % 2 == 0 { v } else { -v };
            assert_eq!(signed, Poly::int(2) + Poly::b().scale(&int(2 * k as i64 - 1)));
        }
    }

    #[test]
    fn kind_names_parse() {
        for kind in NamedKind::ALL {
            assert_eq!(kind.name().parse::<NamedKind>().unwrap(), kind);
        }
        assert!("chebyshev".parse::<NamedKind>().is_err());
    }
}
