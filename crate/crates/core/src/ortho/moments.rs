//! Closed-form moment sequences and their memoized numeric views.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use super::jacobi::JacobiSpec;
use crate::error::{Error, Result};
use crate::exact::scalar::{binom_q, catalan, from_bigint, int, ratio};
use crate::exact::{Poly, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceFamily {
    /// `C_n`.
    Catalan,
    /// `C_{n+1}`.
    ShiftedCatalan,
    /// `M_b(n) = sum_j ([n+j choose j] - [n+j choose j-1]) b^(n-j)`.
    Mb,
    /// `M(b, n) = sum_j binom(n+j, j) b^(n-j)`.
    Mcap,
    /// `binom(2n, n)`.
    Central,
    /// `binom(n, floor(n/2))`.
    Middle,
}

impl SequenceFamily {
    pub const ALL: [SequenceFamily; 6] = [
        SequenceFamily::Catalan,
        SequenceFamily::ShiftedCatalan,
        SequenceFamily::Mb,
        SequenceFamily::Mcap,
        SequenceFamily::Central,
        SequenceFamily::Middle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SequenceFamily::Catalan => "catalan",
            SequenceFamily::ShiftedCatalan => "shifted-catalan",
            SequenceFamily::Mb => "Mb",
            SequenceFamily::Mcap => "Mcap",
            SequenceFamily::Central => "central",
            SequenceFamily::Middle => "middle",
        }
    }

    pub fn needs_b(self) -> bool {
        matches!(self, SequenceFamily::Mb | SequenceFamily::Mcap)
    }

    /// The Jacobi spec whose moments are this sequence, where one exists in the catalog.
    pub fn jacobi_spec(self, b: &Poly) -> Option<JacobiSpec> {
        match self {
            SequenceFamily::Catalan => Some(JacobiSpec::f_family()),
            SequenceFamily::ShiftedCatalan => Some(JacobiSpec::g_family()),
            SequenceFamily::Mb => Some(JacobiSpec::shifted_catalan(b)),
            SequenceFamily::Mcap => Some(JacobiSpec::central(b)),
            SequenceFamily::Central => Some(JacobiSpec::central(&Poly::zero())),
            SequenceFamily::Middle => None,
        }
    }
}

impl fmt::Display for SequenceFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SequenceFamily {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SequenceFamily::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown sequence family {s:?}")))
    }
}

/// Catalan-triangle entry `[n, k] = binom(n+k, k) - binom(n+k, k-1)`.
pub fn ballot(n: i64, k: i64) -> Scalar {
    binom_q(n + k, k) - binom_q(n + k, k - 1)
}

/// Term `n` as a polynomial in a formal `b` (constant for the `b`-free families).
pub fn sequence_term_formal(family: SequenceFamily, n: usize) -> Poly {
    let n_i = n as i64;
    match family {
        SequenceFamily::Catalan => Poly::constant(from_bigint(catalan(n as u64))),
        SequenceFamily::ShiftedCatalan => Poly::constant(from_bigint(catalan(n as u64 + 1))),
        SequenceFamily::Mb => Poly::from_b_coeffs((0..=n_i).rev().map(|j| ballot(n_i, j))),
        SequenceFamily::Mcap => Poly::from_b_coeffs((0..=n_i).rev().map(|j| binom_q(n_i + j, j))),
        SequenceFamily::Central => Poly::constant(binom_q(2 * n_i, n_i)),
        SequenceFamily::Middle => Poly::constant(binom_q(n_i, n_i / 2)),
    }
}

/// Closed-form term `n`; `b` is required for `Mb` and `Mcap` and ignored otherwise.
pub fn sequence_term(family: SequenceFamily, b: Option<&Scalar>, n: usize) -> Result<Scalar> {
    let bv = match (family.needs_b(), b) {
        (true, None) => return Err(Error::MissingParameter(family.name())),
        (_, Some(b)) => b.clone(),
        (false, None) => int(0),
    };
    Ok(sequence_term_formal(family, n).eval(&bv, &int(0)))
}

/// `r(b, n, k) = sum_{j=0}^{n-k} binom(n+k+1+j, j) (n+k+1-j)/(n+k+1+j) b^(n-k-j)`.
pub fn r_closed(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let (n, k) = (n as i64, k as i64);
    let m = n + k + 1;
    Poly::from_b_coeffs((0..=n - k).rev().map(|j| binom_q(m + j, j) * ratio(m - j, m + j)))
}

/// `s(n, k) = sum_{j=0}^{n-k} binom(n+k+j, j) b^(n-k-j)`.
pub fn s_closed(n: usize, k: usize) -> Poly {
    if k > n {
        return Poly::zero();
    }
    let (n, k) = (n as i64, k as i64);
    Poly::from_b_coeffs((0..=n - k).rev().map(|j| binom_q(n + k + j, j)))
}

/// A numeric moment sequence with an append-only memo safe for concurrent readers.
#[derive(Debug)]
pub struct MomentSequence {
    family: SequenceFamily,
    b: Option<Scalar>,
    memo: RwLock<Vec<Scalar>>,
}

impl MomentSequence {
    pub fn new(family: SequenceFamily, b: Option<Scalar>) -> Result<Self> {
        if family.needs_b() && b.is_none() {
            return Err(Error::MissingParameter(family.name()));
        }
        let b = if family.needs_b() { b } else { None };
        Ok(MomentSequence {
            family,
            b,
            memo: RwLock::new(Vec::new()),
        })
    }

    pub fn catalan() -> Self {
        MomentSequence::new(SequenceFamily::Catalan, None).unwrap()
    }

    pub fn family(&self) -> SequenceFamily {
        self.family
    }

    pub fn b(&self) -> Option<&Scalar> {
        self.b.as_ref()
    }

    pub fn term(&self, n: usize) -> Scalar {
        if let Some(v) = self.memo.read().unwrap().get(n) {
            return v.clone();
        }
        let mut memo = self.memo.write().unwrap();
        while memo.len() <= n {
            let next =
                sequence_term(self.family, self.b.as_ref(), memo.len()).expect("b presence checked at construction");
            memo.push(next);
        }
        memo[n].clone()
    }

    pub fn terms(&self, count: usize) -> Vec<Scalar> {
        (0..count).map(|n| self.term(n)).collect()
    }
}

impl Clone for MomentSequence {
    fn clone(&self) -> Self {
        MomentSequence {
            family: self.family,
            b: self.b.clone(),
            memo: RwLock::new(self.memo.read().unwrap().clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ortho::jacobi::{expansion_table, moments};

    fn strs(v: &[Scalar]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(
            sequence_term_formal(SequenceFamily::Mb, 3).to_string(),
            "b^3 + 3*b^2 + 5*b + 5"
        );
        let fine = MomentSequence::new(SequenceFamily::Mb, Some(int(-1))).unwrap();
        assert_eq!(strs(&fine.terms(8)), ["1", "0", "1", "2", "6", "18", "57", "186"]);
        assert_eq!(sequence_term(SequenceFamily::Mcap, Some(&int(2)), 3).unwrap(), int(64));
        assert_eq!(sequence_term(SequenceFamily::Mb, Some(&int(2)), 2).unwrap(), int(10));
        assert_eq!(
            sequence_term(SequenceFamily::Mb, None, 2),
            Err(Error::MissingParameter("Mb"))
        );
        let middle = MomentSequence::new(SequenceFamily::Middle, None).unwrap();
        assert_eq!(strs(&middle.terms(7)), ["1", "1", "2", "3", "6", "10", "20"]);
    }

    #[test]
    fn first_terms_of_mb() {
        let got: Vec<String> = (0..5)
            .map(|n| sequence_term_formal(SequenceFamily::Mb, n).to_string())
            .collect();
        assert_eq!(
            got,
            [
                "1",
                "b + 1",
                "b^2 + 2*b + 2",
                "b^3 + 3*b^2 + 5*b + 5",
                "b^4 + 4*b^3 + 9*b^2 + 14*b + 14"
            ]
        );
    }

    #[test]
    fn recurrence_moments_match_closed_forms() {
        let b = Poly::b();
        let mb = moments(&JacobiSpec::shifted_catalan(&b), 11);
        let mcap = moments(&JacobiSpec::central(&b), 11);
        for n in 0..=10 {
            assert_eq!(mb[n], sequence_term_formal(SequenceFamily::Mb, n), "Mb({n})");
            assert_eq!(mcap[n], sequence_term_formal(SequenceFamily::Mcap, n), "Mcap({n})");
        }
    }

    #[test]
    fn expansion_coefficients_match_closed_forms() {
        let b = Poly::b();
        let r = expansion_table(&JacobiSpec::shifted_catalan(&b), 10);
        let s = expansion_table(&JacobiSpec::central(&b), 10);
        for n in 0..=10 {
            for k in 0..=n {
                assert_eq!(r[n][k], r_closed(n, k), "r({n},{k})");
                assert_eq!(s[n][k], s_closed(n, k), "s({n},{k})");
            }
        }
    }

    #[test]
    fn special_b_values() {
        // M_0 = C_n, M_1 = C_{n+1}, M_2 = binom(2n+1, n), M(1, n) = binom(2n+1, n)
        for n in 0..12usize {
            let ni = n as i64;
            let at = |f, b: i64| sequence_term(f, Some(&int(b)), n).unwrap();
            assert_eq!(at(SequenceFamily::Mb, 0), from_bigint(catalan(n as u64)));
            assert_eq!(at(SequenceFamily::Mb, 1), from_bigint(catalan(n as u64 + 1)));
            assert_eq!(at(SequenceFamily::Mb, 2), binom_q(2 * ni + 1, ni));
            assert_eq!(at(SequenceFamily::Mcap, 1), binom_q(2 * ni + 1, ni));
            assert_eq!(at(SequenceFamily::Mcap, 0), binom_q(2 * ni, ni));
        }
    }

    #[test]
    fn concurrent_readers_agree() {
        let seq = MomentSequence::new(SequenceFamily::Mcap, Some(ratio(-3, 2))).unwrap();
        let expected: Vec<Scalar> = (0..30)
            .map(|n| sequence_term(SequenceFamily::Mcap, Some(&ratio(-3, 2)), n).unwrap())
            .collect();
        std::thread::scope(|scope| {
            for t in 0..4 {
                let seq = &seq;
                let expected = &expected;
                scope.spawn(move || {
                    for n in (0..30).rev().skip(t) {
                        assert_eq!(&seq.term(n), &expected[n]);
                    }
                });
            }
        });
    }
}
