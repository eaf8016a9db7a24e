//! Three-term recurrence data and everything that follows from it: the monic
//! orthogonal polynomials, the expansion coefficients of `x^n` in that basis,
//! and the moments of the associated linear functional.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::Poly;

/// A parameter sequence given by a finite prefix followed by a constant tail.
/// Values are polynomials in `b` (constants for numeric specs).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamSeq {
    pub prefix: Vec<Poly>,
    pub tail: Poly,
}

impl ParamSeq {
    pub fn new(prefix: Vec<Poly>, tail: Poly) -> Self {
        ParamSeq { prefix, tail }
    }

    pub fn constant(v: Poly) -> Self {
        ParamSeq::new(Vec::new(), v)
    }

    pub fn at(&self, n: usize) -> &Poly {
        self.prefix.get(n).unwrap_or(&self.tail)
    }

    fn specialize_b(&self, b: &crate::exact::Scalar) -> ParamSeq {
        ParamSeq {
            prefix: self.prefix.iter().map(|p| p.specialize_b(b)).collect(),
            tail: self.tail.specialize_b(b),
        }
    }
}

impl fmt::Display for ParamSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: Vec<String> = self.prefix.iter().map(ToString::to_string).collect();
        write!(f, "[{}], {}", prefix.join(", "), self.tail)
    }
}

/// Jacobi parameters: `p_n = (x - s_{n-1}) p_{n-1} - t_{n-2} p_{n-2}`, `p_{-1} = 0`, `p_0 = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiSpec {
    pub s: ParamSeq,
    pub t: ParamSeq,
}

impl JacobiSpec {
    pub fn new(s: ParamSeq, t: ParamSeq) -> Self {
        JacobiSpec { s, t }
    }

    /// `s = 0`, `t = 1`: the Fibonacci polynomials; moments `C_{n/2}` at even `n`.
    pub fn fibonacci() -> Self {
        JacobiSpec::new(ParamSeq::constant(Poly::zero()), ParamSeq::constant(Poly::one()))
    }

    /// `s = 0`, `t_0 = 2`, `t = 1`: the modified Lucas polynomials.
    pub fn lucas() -> Self {
        JacobiSpec::new(
            ParamSeq::constant(Poly::zero()),
            ParamSeq::new(vec![Poly::int(2)], Poly::one()),
        )
    }

    /// `s_0 = b + 1`, `s = 2`, `t = 1`. Moments `M_b(n)`.
    pub fn shifted_catalan(b: &Poly) -> Self {
        JacobiSpec::new(
            ParamSeq::new(vec![b + &Poly::one()], Poly::int(2)),
            ParamSeq::constant(Poly::one()),
        )
    }

    /// `f_n(x) = F_{2n}(sqrt x)`: the `b = 0` member of [`shifted_catalan`](Self::shifted_catalan).
    pub fn f_family() -> Self {
        JacobiSpec::shifted_catalan(&Poly::zero())
    }

    /// `g_n(x) = F_{2n+1}(sqrt x)/sqrt x`: the `b = 1` member.
    pub fn g_family() -> Self {
        JacobiSpec::shifted_catalan(&Poly::one())
    }

    /// `s_0 = b + 2`, `s = 2`, `t_0 = 2 - b`, `t = 1`. Moments `M(b, n) = sum binom(n+j, j) b^(n-j)`.
    pub fn central(b: &Poly) -> Self {
        JacobiSpec::new(
            ParamSeq::new(vec![b + &Poly::int(2)], Poly::int(2)),
            ParamSeq::new(vec![&Poly::int(2) - b], Poly::one()),
        )
    }

    pub fn specialize_b(&self, b: &crate::exact::Scalar) -> JacobiSpec {
        JacobiSpec::new(self.s.specialize_b(b), self.t.specialize_b(b))
    }
}

/// Text form `s: [b+1], 2; t: [], 1`.
impl fmt::Display for JacobiSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s: {}; t: {}", self.s, self.t)
    }
}

fn parse_param_seq(src: &str) -> Result<ParamSeq> {
    let bad = || Error::Parse(format!("expected `[v, ...], tail`, got {src:?}"));
    let src = src.trim();
    let rest = src.strip_prefix('[').ok_or_else(bad)?;
    let (inside, tail) = rest.split_once(']').ok_or_else(bad)?;
    let tail = tail.trim().strip_prefix(',').ok_or_else(bad)?;
    let prefix = if inside.trim().is_empty() {
        Vec::new()
    } else {
        inside.split(',').map(str::parse).collect::<Result<Vec<Poly>>>()?
    };
    Ok(ParamSeq::new(prefix, tail.parse()?))
}

impl FromStr for JacobiSpec {
    type Err = Error;
    fn from_str(src: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `s: ...; t: ...`, got {src:?}"));
        let (s_part, t_part) = src.split_once(';').ok_or_else(bad)?;
        let s_body = s_part.trim().strip_prefix("s:").ok_or_else(bad)?;
        let t_body = t_part.trim().strip_prefix("t:").ok_or_else(bad)?;
        let spec = JacobiSpec::new(parse_param_seq(s_body)?, parse_param_seq(t_body)?);
        let all = spec
            .s
            .prefix
            .iter()
            .chain(spec.t.prefix.iter())
            .chain([&spec.s.tail, &spec.t.tail]);
        for v in all {
            if v.degree_x().unwrap_or(0) > 0 {
                return Err(Error::Parse(format!("parameter {v} depends on x")));
            }
        }
        Ok(spec)
    }
}

/// `p_0 .. p_{n_max}` by the three-term recurrence.
pub fn ortho_polys(spec: &JacobiSpec, n_max: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one()];
    let mut prev = Poly::zero();
    for n in 1..=n_max {
        let cur = out.last().unwrap();
        let mut next = &(&Poly::x() - spec.s.at(n - 1)) * cur;
        if n >= 2 {
            next -= &(spec.t.at(n - 2) * &prev);
        }
        prev = cur.clone();
        out.push(next);
    }
    out
}

pub fn ortho_poly(spec: &JacobiSpec, n: usize) -> Poly {
    ortho_polys(spec, n).pop().unwrap()
}

/// Rows `c(m, 0..=m)` for `m = 0..=n_max`, where `x^m = sum_k c(m, k) p_k(x)`.
pub fn expansion_table(spec: &JacobiSpec, n_max: usize) -> Vec<Vec<Poly>> {
    let mut rows = vec![vec![Poly::one()]];
    for m in 1..=n_max {
        let prev = &rows[m - 1];
        let get = |k: usize| prev.get(k).cloned().unwrap_or_else(Poly::zero);
        let row: Vec<Poly> = (0..=m)
            .map(|k| {
                let mut v = spec.s.at(k) * &get(k) + spec.t.at(k) * &get(k + 1);
                if k > 0 {
                    v += &get(k - 1);
                }
                v
            })
            .collect();
        rows.push(row);
    }
    rows
}

/// `c(n, 0..=n)`.
pub fn expansion_coeffs(spec: &JacobiSpec, n: usize) -> Vec<Poly> {
    expansion_table(spec, n).pop().unwrap()
}

/// `M(n) = c(n, 0)`.
pub fn moment(spec: &JacobiSpec, n: usize) -> Poly {
    expansion_coeffs(spec, n).swap_remove(0)
}

pub fn moments(spec: &JacobiSpec, count: usize) -> Vec<Poly> {
    if count == 0 {
        return Vec::new();
    }
    expansion_table(spec, count - 1)
        .into_iter()
        .map(|mut row| row.swap_remove(0))
        .collect()
}

/// Applies the moment functional: `sum_i q_i M(i)` for `q = sum_i q_i x^i`.
/// The result is a polynomial in `b`.
pub fn apply_functional(spec: &JacobiSpec, q: &Poly) -> Poly {
    let Some(deg) = q.degree_x() else {
        return Poly::zero();
    };
    moments(spec, deg + 1)
        .iter()
        .enumerate()
        .map(|(i, m)| &q.x_coeff(i) * m)
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{catalan, from_bigint};

    fn p(s: &str) -> Poly {
        s.parse().unwrap()
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(ortho_poly(&JacobiSpec::fibonacci(), 3), p("x^3 - 2*x"));
        assert_eq!(ortho_poly(&JacobiSpec::shifted_catalan(&Poly::b()), 1), p("x - b - 1"));
        assert_eq!(ortho_poly(&JacobiSpec::central(&Poly::b()), 0), Poly::one());
        assert_eq!(ortho_poly(&JacobiSpec::lucas(), 2), p("x^2 - 2"));
    }

    #[test]
    fn expansion_examples() {
        assert_eq!(expansion_coeffs(&JacobiSpec::fibonacci(), 0), vec![Poly::one()]);
        let row6 = expansion_coeffs(&JacobiSpec::fibonacci(), 6);
        let brackets: Vec<String> = (0..4).map(|k| row6[6 - 2 * k].to_string()).collect();
        assert_eq!(brackets, ["1", "5", "9", "5"]);
        let m: Vec<String> = (0..4)
            .map(|n| moment(&JacobiSpec::central(&Poly::one()), n).to_string())
            .collect();
        assert_eq!(m, ["1", "3", "10", "35"]);
    }

    #[test]
    fn moment_examples() {
        assert_eq!(moment(&JacobiSpec::f_family(), 4), Poly::int(14));
        assert_eq!(moment(&JacobiSpec::g_family(), 3), Poly::int(14));
        assert_eq!(moment(&JacobiSpec::central(&Poly::b()), 2), p("b^2 + 3*b + 6"));
    }

    #[test]
    fn f_and_g_moments_are_catalan() {
        let f = moments(&JacobiSpec::f_family(), 16);
        let g = moments(&JacobiSpec::g_family(), 16);
        for n in 0..16 {
            assert_eq!(f[n], Poly::constant(from_bigint(catalan(n as u64))));
            assert_eq!(g[n], Poly::constant(from_bigint(catalan(n as u64 + 1))));
        }
    }

    #[test]
    fn orthogonality_through_the_functional() {
        let catalog = [
            JacobiSpec::fibonacci(),
            JacobiSpec::lucas(),
            JacobiSpec::f_family(),
            JacobiSpec::g_family(),
            JacobiSpec::shifted_catalan(&Poly::b()),
            JacobiSpec::central(&Poly::b()),
        ];
        for spec in &catalog {
            let ps = ortho_polys(spec, 12);
            for n in 0..=12 {
                for m in 0..=n {
                    let v = apply_functional(spec, &(&ps[n] * &ps[m]));
                    let expected = if n == m {
                        (0..n).map(|j| spec.t.at(j).clone()).product()
                    } else {
                        Poly::zero()
                    };
                    assert_eq!(v, expected, "spec {spec}, n={n}, m={m}");
                }
            }
        }
    }

    #[test]
    fn text_form_round_trips() {
        let spec = JacobiSpec::central(&Poly::b());
        let text = spec.to_string();
        assert_eq!(text, "s: [b + 2], 2; t: [-b + 2], 1");
        assert_eq!(text.parse::<JacobiSpec>().unwrap(), spec);
        let lit: JacobiSpec = "s: [b+1], 2; t: [], 1".parse().unwrap();
        assert_eq!(lit, JacobiSpec::shifted_catalan(&Poly::b()));
        assert!("s: [x], 2; t: [], 1".parse::<JacobiSpec>().is_err());
        assert!("s: 2; t: [], 1".parse::<JacobiSpec>().is_err());
    }
}
