//! Condensation identities for the polynomial families, and rebuilding a
//! shifted Hankel table from its boundary rows.

use num_traits::{One, Zero};

use super::closed_forms::PolyKind;
use super::table::HankelGrid;
use crate::error::{Error, Result};
use crate::exact::scalar::int;
use crate::exact::{Poly, Scalar};
use crate::report::{Cell, VerificationReport};

/// Residual of the condensation identity at index `n`:
/// `P_n(x) P_{n+2}(x-2) - P_n(x-1) P_{n+2}(x-1) + P_{n+1}(x-1)^2`,
/// with the first term multiplied by `(-1)^n` for `h`.
pub fn condensation_residual(kind: PolyKind, n: usize) -> Poly {
    let p = |m: usize| kind.member(m);
    let (pn, pn1, pn2) = (p(n), p(n + 1), p(n + 2));
    let at = |q: &Poly, s: i64| q.shift_x(&int(s));
    let mut first = &pn * &at(&pn2, -2);
    if kind == PolyKind::Little && n % 2 == 1 {
        first = -first;
    }
    let second = at(&pn, -1) * at(&pn2, -1);
    let third = at(&pn1, -1).pow(2);
    first - second + third
}

pub fn condensation_check(kind: PolyKind, n_max: usize) -> VerificationReport {
    let mut report = VerificationReport::new("condensation")
        .grid("n_max", n_max)
        .grid("family", kind.name());
    for n in 0..=n_max {
        report.push(Cell::new(n, 0, None, kind.name()).compare(&condensation_residual(kind, n), &Poly::zero()));
    }
    report
}

fn is_integer_list(v: &[Scalar]) -> bool {
    v.iter().all(|s| s.is_integer())
}

/// Fill `u(m, K)` for `m <= n_max`, `K <= k_max` from `u(0, .)`, `u(1, .)` and
/// `u(., 1)`, using `u(m, K) = (u(m-2, K+1) u(m, K-1) + u(m-1, K)^2) / u(m-2, K)`.
///
/// Rows are swept in increasing `m`; row `m` is filled for `K` up to
/// `k_max + n_max - m`, which is exactly what the later rows consume.
/// `row0` and `row1` need `k_max + n_max + 1` entries (`u(., 0) = 1` included),
/// `col1` needs `n_max + 1`.
pub fn condensation_reconstruct(
    row0: &[Scalar],
    row1: &[Scalar],
    col1: &[Scalar],
    n_max: usize,
    k_max: usize,
) -> Result<HankelGrid> {
    let width = k_max + n_max + 1;
    if row0.len() < width || row1.len() < width {
        return Err(Error::InvalidArgument(format!(
            "boundary rows need {width} entries, got {} and {}",
            row0.len(),
            row1.len()
        )));
    }
    if col1.len() < n_max + 1 {
        return Err(Error::InvalidArgument(format!(
            "boundary column needs {} entries, got {}",
            n_max + 1,
            col1.len()
        )));
    }
    for (row, name) in [(row0, "row 0"), (row1, "row 1")] {
        if !row[0].is_one() {
            return Err(Error::InvalidArgument(format!("{name} must start with u(., 0) = 1")));
        }
    }
    if row0[1] != col1[0] || (n_max >= 1 && row1[1] != col1[1]) {
        return Err(Error::InvalidArgument(
            "boundary rows disagree with the column at k = 1".into(),
        ));
    }
    let integral = is_integer_list(row0) && is_integer_list(row1) && is_integer_list(col1);

    let mut u: Vec<Vec<Scalar>> = vec![row0[..width].to_vec(), row1[..width].to_vec()];
    for m in 2..=n_max {
        let len = width - m;
        let mut row = Vec::with_capacity(len);
        row.push(int(1));
        row.push(col1[m].clone());
        for k in 2..len {
            let divisor = &u[m - 2][k];
            if divisor.is_zero() {
                return Err(Error::ZeroDivisor { n: m - 2, k });
            }
            let num = &u[m - 2][k + 1] * &row[k - 1] + &u[m - 1][k] * &u[m - 1][k];
            let v = num / divisor;
            if integral && !v.is_integer() {
                return Err(Error::NonExactDivision { n: m, k });
            }
            row.push(v);
        }
        u.push(row);
    }
    u.truncate(n_max + 1);
    Ok(HankelGrid {
        values: u.into_iter().map(|r| r.into_iter().take(k_max + 1).collect()).collect(),
    })
}

/// Boundary data `(u(0, .), u(1, .), u(., 1))` read off a sequence.
pub fn boundary_from_sequence(
    seq: &crate::ortho::moments::MomentSequence,
    n_max: usize,
    k_max: usize,
) -> (Vec<Scalar>, Vec<Scalar>, Vec<Scalar>) {
    let width = k_max + n_max + 1;
    let row = |n: usize| (0..width).map(|k| super::table::hankel_det(seq, n, k)).collect();
    (row(0), row(1), seq.terms(n_max + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hankel::table::HankelTable;
    use crate::ortho::moments::{MomentSequence, SequenceFamily};

    #[test]
    fn residuals_vanish() {
        for kind in PolyKind::ALL {
            let n_max = if matches!(kind, PolyKind::Hb | PolyKind::V) {
                3
            } else {
                5
            };
            let r = condensation_check(kind, n_max);
            assert!(r.passed(), "{kind}: {:?}", r.first_failure());
        }
    }

    #[test]
    fn h_first_residual_by_hand() {
        assert!(condensation_residual(PolyKind::H, 0).is_zero());
        assert!(condensation_residual(PolyKind::Little, 0).is_zero());
    }

    #[test]
    fn catalan_reconstruction() {
        let c = MomentSequence::catalan();
        let (r0, r1, col) = boundary_from_sequence(&c, 6, 6);
        let g = condensation_reconstruct(&r0, &r1, &col, 6, 6).unwrap();
        assert_eq!(g.get(2, 2), Some(&int(3)));
        let direct = HankelTable::new(c).grid(6, 6);
        assert_eq!(g, direct);
    }

    #[test]
    fn mb3_reconstruction() {
        let s = MomentSequence::new(SequenceFamily::Mb, Some(int(3))).unwrap();
        let (r0, r1, col) = boundary_from_sequence(&s, 4, 4);
        let g = condensation_reconstruct(&r0, &r1, &col, 4, 4).unwrap();
        assert_eq!(g, HankelTable::new(s).grid(4, 4));
    }

    #[test]
    fn constant_sequence_hits_zero_divisor() {
        // a_n = 1: u(n, k) = [k <= 1]
        let w = 3 + 3 + 1;
        let row: Vec<Scalar> = (0..w).map(|k| int((k <= 1) as i64)).collect();
        let col = vec![int(1); 4];
        let err = condensation_reconstruct(&row, &row, &col, 3, 3).unwrap_err();
        assert!(matches!(err, Error::ZeroDivisor { n: 0, k: 2 }), "{err}");
    }

    #[test]
    fn bad_boundary_is_rejected() {
        let row = vec![int(1); 3];
        assert!(condensation_reconstruct(&row, &row, &[int(1)], 2, 2).is_err());
    }
}
