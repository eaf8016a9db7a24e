//! The three number triangles: ballot numbers (A009766), the Fibonacci expansion
//! coefficients `<n>_k` (A008315) and `binom(n+j, j)` (A046899).

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::scalar::binomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TriangleKind {
    /// `[n, k] = binom(n+k, k) - binom(n+k, k-1)`, `0 <= k <= n`.
    Catalan,
    /// `<n>_k = binom(n, k) - binom(n, k-1)`, `0 <= 2k <= n`.
    AngleBrackets,
    /// `[n, j] = binom(n+j, j)`, `0 <= j <= n`.
    A046899,
}

impl TriangleKind {
    pub const ALL: [TriangleKind; 3] = [
        TriangleKind::Catalan,
        TriangleKind::AngleBrackets,
        TriangleKind::A046899,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TriangleKind::Catalan => "catalan",
            TriangleKind::AngleBrackets => "angle-brackets",
            TriangleKind::A046899 => "a046899",
        }
    }

    /// Largest `k` in row `n`.
    pub fn row_end(self, n: usize) -> usize {
        match self {
            TriangleKind::AngleBrackets => n / 2,
            _ => n,
        }
    }

    /// Closed-form entry, without range checks.
    pub fn closed(self, n: usize, k: usize) -> BigInt {
        let (n, k) = (n as i64, k as i64);
        match self {
            TriangleKind::Catalan => binomial(n + k, k) - binomial(n + k, k - 1),
            TriangleKind::AngleBrackets => binomial(n, k) - binomial(n, k - 1),
            TriangleKind::A046899 => binomial(n + k, k),
        }
    }
}

impl fmt::Display for TriangleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TriangleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TriangleKind::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown triangle {s:?}")))
    }
}

/// Rows `0..=n_max` built from the defining recurrences alone.
pub fn triangle_by_recurrence(kind: TriangleKind, n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let end = kind.row_end(n);
        let mut row: Vec<BigInt> = Vec::with_capacity(end + 1);
        for k in 0..=end {
            let above = |kk: usize| -> BigInt {
                if n == 0 {
                    return BigInt::zero();
                }
                rows[n - 1].get(kk).cloned().unwrap_or_else(BigInt::zero)
            };
            let v = match kind {
                TriangleKind::Catalan => {
                    if k == 0 {
                        BigInt::one()
                    } else {
                        &row[k - 1] + above(k)
                    }
                }
                TriangleKind::AngleBrackets => {
                    if n == 0 {
                        BigInt::one()
                    } else {
                        let left = if k == 0 { BigInt::zero() } else { above(k - 1) };
                        left + above(k)
                    }
                }
                TriangleKind::A046899 => {
                    if k == 0 {
                        BigInt::one()
                    } else if k < n {
                        &row[k - 1] + above(k)
                    } else {
                        BigInt::from(2) * &row[k - 1]
                    }
                }
            };
            row.push(v);
        }
        rows.push(row);
    }
    rows
}

/// Entry `(n, k)`, computed by closed form and by recurrence; the two must agree.
pub fn triangle_entry(kind: TriangleKind, n: usize, k: usize) -> Result<BigInt> {
    if k > kind.row_end(n) {
        return Err(Error::OutOfSupport {
            triangle: kind.name(),
            n,
            k,
        });
    }
    let closed = kind.closed(n, k);
    let rec = triangle_by_recurrence(kind, n).swap_remove(n).swap_remove(k);
    assert_eq!(closed, rec, "{kind} triangle ({n}, {k}): closed form vs recurrence");
    Ok(closed)
}

pub fn triangle_row(kind: TriangleKind, n: usize) -> Vec<BigInt> {
    let rec = triangle_by_recurrence(kind, n).swap_remove(n);
    for (k, v) in rec.iter().enumerate() {
        assert_eq!(v, &kind.closed(n, k), "{kind} triangle ({n}, {k})");
    }
    rec
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::catalan;
    use crate::exact::Poly;
    use crate::ortho::jacobi::{expansion_table, JacobiSpec};

    fn row(kind: TriangleKind, n: usize) -> Vec<i64> {
        triangle_row(kind, n)
            .into_iter()
            .map(|v| v.try_into().unwrap())
            .collect()
    }

    #[test]
    fn displayed_rows() {
        assert_eq!(row(TriangleKind::Catalan, 4), [1, 4, 9, 14, 14]);
        assert_eq!(row(TriangleKind::A046899, 4), [1, 5, 15, 35, 70]);
        assert_eq!(row(TriangleKind::AngleBrackets, 6), [1, 5, 9, 5]);
        assert_eq!(row(TriangleKind::AngleBrackets, 7), [1, 6, 14, 14]);
    }

    #[test]
    fn out_of_support() {
        assert!(matches!(
            triangle_entry(TriangleKind::Catalan, 3, 4),
            Err(Error::OutOfSupport { .. })
        ));
        assert!(triangle_entry(TriangleKind::AngleBrackets, 5, 3).is_err());
        assert_eq!(
            triangle_entry(TriangleKind::AngleBrackets, 6, 3).unwrap(),
            BigInt::from(5)
        );
    }

    #[test]
    fn row_sums_and_partial_sums() {
        for n in 0..=12usize {
            let sum: BigInt = triangle_row(TriangleKind::Catalan, n).into_iter().sum();
            assert_eq!(sum, catalan(n as u64 + 1));
            let a = triangle_row(TriangleKind::A046899, n);
            let next = triangle_row(TriangleKind::A046899, n + 1);
            let mut partial = BigInt::zero();
            for (k, v) in a.iter().enumerate() {
                partial += v;
                assert_eq!(partial, next[k], "partial sum n={n} k={k}");
            }
        }
    }

    #[test]
    fn angle_brackets_are_fibonacci_expansion_coefficients() {
        let c = expansion_table(&JacobiSpec::fibonacci(), 12);
        for n in 0..=12usize {
            for (k, v) in triangle_row(TriangleKind::AngleBrackets, n).into_iter().enumerate() {
                assert_eq!(c[n][n - 2 * k], Poly::constant(v.into()));
            }
            // odd-offset coefficients vanish
            for k in 0..=n {
                if (n - k) % 2 == 1 {
                    assert!(c[n][k].is_zero());
                }
            }
        }
    }
}
