//! Nonintersecting path counts: the determinant of single-path counts, and a
//! brute-force oracle for it.

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::paths::{Model, Point, Step};
use crate::error::{Error, Result};
use crate::exact::matrix::det_integer;
use crate::exact::scalar::binomial;

/// Number of single `model` paths from `a` to `e`. Dyck paths stay at height
/// `>= 0`; the count is the reflection-principle difference.
pub fn single_count(a: Point, e: Point, model: Model) -> BigInt {
    let (dx, dy) = (e.0 - a.0, e.1 - a.1);
    match model {
        Model::Hv => {
            if dx < 0 || dy > 0 {
                return BigInt::zero();
            }
            binomial(dx - dy, dx)
        }
        Model::Dyck => {
            if dx < 0 || a.1 < 0 || e.1 < 0 || (dx + dy) % 2 != 0 || dy.abs() > dx {
                return BigInt::zero();
            }
            let ups = (dx + dy) / 2;
            let reflected_ups = (dx + e.1 + a.1 + 2) / 2;
            binomial(dx, ups) - binomial(dx, reflected_ups)
        }
    }
}

/// `det(c(A_i, E_j))`.
pub fn lgv_count(starts: &[Point], ends: &[Point], model: Model) -> Result<BigInt> {
    if starts.len() != ends.len() {
        return Err(Error::InvalidArgument(format!(
            "{} start points but {} end points",
            starts.len(),
            ends.len()
        )));
    }
    let rows = starts
        .iter()
        .map(|&a| ends.iter().map(|&e| single_count(a, e, model)).collect())
        .collect();
    Ok(det_integer(rows))
}

/// Every single path from `a` to `e`, as its vertex list.
pub fn all_paths(a: Point, e: Point, model: Model) -> Vec<Vec<Point>> {
    fn walk(p: Point, e: Point, model: Model, cur: &mut Vec<Point>, out: &mut Vec<Vec<Point>>) {
        if p == e {
            out.push(cur.clone());
            return;
        }
        for s in model.steps() {
            let (dx, dy) = s.delta();
            let q = (p.0 + dx, p.1 + dy);
            let feasible = match s {
                Step::U | Step::D => q.1 >= 0 && q.0 <= e.0 && (q.1 - e.1).abs() <= e.0 - q.0,
                Step::H => q.0 <= e.0,
                Step::V => q.1 >= e.1,
            };
            if feasible {
                cur.push(q);
                walk(q, e, model, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if !single_count(a, e, model).is_zero() {
        walk(a, e, model, &mut vec![a], &mut out);
    }
    out
}

/// Count vertex-disjoint families pairing `A_i` with `E_i` by enumeration.
/// Refuses when the number of candidate tuples (product of single counts)
/// exceeds `cap`.
pub fn count_nonintersecting_brute(starts: &[Point], ends: &[Point], model: Model, cap: u64) -> Result<BigInt> {
    if starts.len() != ends.len() {
        return Err(Error::InvalidArgument("start and end lists differ in length".into()));
    }
    let candidates: BigInt = starts
        .iter()
        .zip(ends)
        .map(|(&a, &e)| single_count(a, e, model))
        .product();
    if candidates > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            candidates: candidates.to_string(),
            cap,
        });
    }
    let choices: Vec<Vec<Vec<Point>>> = starts.iter().zip(ends).map(|(&a, &e)| all_paths(a, e, model)).collect();

    fn go(level: usize, choices: &[Vec<Vec<Point>>], used: &mut HashSet<Point>) -> u64 {
        if level == choices.len() {
            return 1;
        }
        let mut total = 0;
        for path in &choices[level] {
            if path.iter().any(|p| used.contains(p)) {
                continue;
            }
            used.extend(path.iter().copied());
            total += go(level + 1, choices, used);
            for p in path {
                used.remove(p);
            }
        }
        total
    }
    Ok(BigInt::from(go(0, &choices, &mut HashSet::new())))
}

/// Candidate-tuple count as `u64`, saturating.
pub fn candidate_tuples(starts: &[Point], ends: &[Point], model: Model) -> u64 {
    let p: BigInt = starts
        .iter()
        .zip(ends)
        .map(|(&a, &e)| single_count(a, e, model))
        .product();
    p.to_u64().unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::catalan;
    use crate::staircase::dyck::{dyck_ends, dyck_starts};
    use crate::staircase::hv::{hv_ends, hv_starts};

    #[test]
    fn single_counts() {
        for n in 0..8 {
            assert_eq!(single_count((0, 0), (2 * n, 0), Model::Dyck), catalan(n as u64));
            assert_eq!(
                all_paths((0, 0), (2 * n, 0), Model::Dyck).len(),
                usize::try_from(catalan(n as u64)).unwrap()
            );
        }
        assert_eq!(single_count((-1, 3), (3, 1), Model::Hv), 15.into());
        assert_eq!(all_paths((-1, 3), (3, 1), Model::Hv).len(), 15);
        assert_eq!(single_count((0, 0), (3, 0), Model::Dyck), 0.into());
    }

    #[test]
    fn lgv_examples() {
        assert_eq!(
            lgv_count(&dyck_starts(2), &dyck_ends(2, 2), Model::Dyck).unwrap(),
            3.into()
        );
        assert_eq!(lgv_count(&hv_starts(2, 2), &hv_ends(2), Model::Hv).unwrap(), 3.into());
        assert_eq!(lgv_count(&[(0, 0)], &[(6, 0)], Model::Dyck).unwrap(), 5.into());
        assert!(lgv_count(&[(0, 0)], &[], Model::Dyck).is_err());
    }

    #[test]
    fn brute_matches_lgv() {
        let cases = [
            (dyck_starts(2), dyck_ends(2, 2), Model::Dyck),
            (hv_starts(3, 1), hv_ends(3), Model::Hv),
            (hv_starts(4, 2), hv_ends(4), Model::Hv),
            (vec![(0, 0)], vec![(8, 0)], Model::Dyck),
        ];
        for (a, e, m) in cases {
            let brute = count_nonintersecting_brute(&a, &e, m, 100_000).unwrap();
            assert_eq!(brute, lgv_count(&a, &e, m).unwrap());
        }
        assert_eq!(
            count_nonintersecting_brute(&hv_starts(3, 1), &hv_ends(3), Model::Hv, 100).unwrap(),
            5.into()
        );
    }

    #[test]
    fn cap_is_enforced() {
        let err = count_nonintersecting_brute(&dyck_starts(3), &dyck_ends(4, 3), Model::Dyck, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { .. }));
    }
}
