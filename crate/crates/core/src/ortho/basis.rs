//! Monomials re-expanded in the Fibonacci and Lucas bases.

use std::str::FromStr;

use super::families::{fibonacci_closed, lucas_closed};
use super::triangle::{triangle_row, TriangleKind};
use crate::error::{Error, Result};
use crate::exact::scalar::binom_q;
use crate::exact::Poly;
use crate::report::{Cell, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisKind {
    /// `x^n = sum_k <n>_k F_{n-2k}(x)`.
    Fibonacci,
    /// `x^n = sum_k binom(n, k) L_{n-2k}(x)`.
    Lucas,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Fibonacci => "fibonacci",
            BasisKind::Lucas => "lucas",
        }
    }
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fibonacci" => Ok(BasisKind::Fibonacci),
            "lucas" => Ok(BasisKind::Lucas),
            _ => Err(Error::Parse(format!("unknown basis {s:?}"))),
        }
    }
}

/// The right-hand side sum, expanded symbolically.
pub fn basis_expansion(kind: BasisKind, n: usize) -> Poly {
    match kind {
        BasisKind::Fibonacci => triangle_row(TriangleKind::AngleBrackets, n)
            .into_iter()
            .enumerate()
            .map(|(k, c)| fibonacci_closed(n - 2 * k).scale(&c.into()))
            .sum(),
        BasisKind::Lucas => (0..=n / 2)
            .map(|k| lucas_closed(n - 2 * k).scale(&binom_q(n as i64, k as i64)))
            .sum(),
    }
}

pub fn verify_basis_expansion(kind: BasisKind, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("basis").grid("n_max", n_max);
    for n in 0..=n_max {
        let monomial = Poly::monomial(crate::exact::scalar::int(1), n, 0);
        report.push(Cell::new(n, 0, None, kind.name()).compare(&basis_expansion(kind, n), &monomial));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_expansions() {
        assert_eq!(basis_expansion(BasisKind::Fibonacci, 2).to_string(), "x^2");
        assert_eq!(basis_expansion(BasisKind::Lucas, 2).to_string(), "x^2");
        assert_eq!(basis_expansion(BasisKind::Lucas, 0), Poly::one());
    }

    #[test]
    fn both_bases_to_twelve() {
        for kind in [BasisKind::Fibonacci, BasisKind::Lucas] {
            let r = verify_basis_expansion(kind, 12);
            assert!(r.passed(), "{:?}", r.first_failure());
            assert_eq!(r.cells.len(), 13);
        }
    }
}
