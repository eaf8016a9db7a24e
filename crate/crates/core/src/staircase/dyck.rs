//! Plane partitions to families of `k` nonintersecting Dyck paths.
//!
//! For threshold `t = s + 1` the cells with entry `>= t` form an order ideal of
//! the staircase. Its boundary is the Dyck path of semilength `n` with heights
//! `h(x) = min(x, 2n - x) - 2 * #{ideal cells on diagonal j - i = x - n}`:
//! the empty ideal gives `U^n D^n` and the full staircase gives `(UD)^n`.
//! Path `s` is that boundary lifted by `2s`, padded as `U^{2s} w D^{2s}` and
//! started at `(-2s, 0)`.

use super::partition::PlanePartition;
use super::paths::{LatticePath, Model, PathFamily, Point, Step};
use crate::error::{Error, Result};

pub fn dyck_starts(k: usize) -> Vec<Point> {
    (0..k as i64).map(|s| (-2 * s, 0)).collect()
}

pub fn dyck_ends(n: usize, k: usize) -> Vec<Point> {
    (0..k as i64).map(|s| (2 * n as i64 + 2 * s, 0)).collect()
}

/// Cells `(i, j)` (0-based) on diagonal `d = j - i`, top row first.
fn diagonal(n: usize, d: i64) -> Vec<(usize, usize)> {
    (0..n.saturating_sub(1))
        .filter_map(|i| {
            let j = i as i64 + d;
            (j >= 0 && (j as usize) < n - 1 - i).then_some((i, j as usize))
        })
        .collect()
}

fn heights_to_steps(h: &[i64]) -> Vec<Step> {
    h.windows(2)
        .map(|w| if w[1] > w[0] { Step::U } else { Step::D })
        .collect()
}

fn level_curve(p: &PlanePartition, t: u32) -> Vec<Step> {
    let n = p.n() as i64;
    let h: Vec<i64> = (0..=2 * n)
        .map(|x| {
            let inside = diagonal(p.n(), x - n)
                .into_iter()
                .filter(|&(i, j)| p.get(i, j) >= t)
                .count() as i64;
            x.min(2 * n - x) - 2 * inside
        })
        .collect();
    heights_to_steps(&h)
}

pub fn pp_to_dyck(p: &PlanePartition) -> PathFamily {
    let k = p.k() as usize;
    let paths = (0..k)
        .map(|s| {
            let mut steps = vec![Step::U; 2 * s];
            steps.extend(level_curve(p, s as u32 + 1));
            steps.extend(std::iter::repeat_n(Step::D, 2 * s));
            LatticePath::new((-2 * s as i64, 0), steps)
        })
        .collect();
    PathFamily::new(Model::Dyck, paths)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(format!("not a valid level-curve family: {}", msg.into()))
}

/// Inverse of [`pp_to_dyck`]; `n` fixes the staircase (it cannot be read off
/// an empty family).
pub fn dyck_to_pp(f: &PathFamily, n: usize) -> Result<PlanePartition> {
    if n == 0 {
        return Err(Error::InvalidArgument("staircase size n must be at least 1".into()));
    }
    if f.model != Model::Dyck {
        return Err(invalid("paths are not Dyck paths"));
    }
    let k = f.paths.len();
    f.validate(&dyck_starts(k), &dyck_ends(n, k))
        .map_err(|e| invalid(e.to_string()))?;
    let ni = n as i64;
    let mut rows: Vec<Vec<u32>> = (0..n - 1).map(|i| vec![0; n - 1 - i]).collect();
    for (s, path) in f.paths.iter().enumerate() {
        let pad = 2 * s;
        let steps = &path.steps;
        if steps[..pad].iter().any(|&x| x != Step::U) || steps[steps.len() - pad..].iter().any(|&x| x != Step::D) {
            return Err(invalid(format!("path {s} lacks its U^{pad} ... D^{pad} padding")));
        }
        let mid = LatticePath::new((0, 0), steps[pad..steps.len() - pad].to_vec());
        for (x, (_, y)) in mid.points().into_iter().enumerate() {
            let x = x as i64;
            let drop = x.min(2 * ni - x) - y;
            let cells = diagonal(n, x - ni);
            if drop < 0 || drop % 2 != 0 || (drop / 2) as usize > cells.len() {
                return Err(invalid(format!("path {s} has no matching order ideal at x = {x}")));
            }
            for &(i, j) in &cells[..(drop / 2) as usize] {
                rows[i][j] += 1;
            }
        }
    }
    let p = PlanePartition::new(n, k as u32, rows).map_err(|e| invalid(e.to_string()))?;
    if &pp_to_dyck(&p) != f {
        return Err(invalid("paths are not the level curves of one plane partition"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::partition::enumerate_pp;
    use std::collections::HashSet;

    #[test]
    fn semilength_two() {
        let images: HashSet<String> = enumerate_pp(2, 1)
            .unwrap()
            .map(|p| pp_to_dyck(&p).to_string())
            .collect();
        let expected: HashSet<String> = ["(0,0) UUDD", "(0,0) UDUD"].iter().map(|s| s.to_string()).collect();
        assert_eq!(images, expected);
    }

    #[test]
    fn trivial_staircase() {
        let p = PlanePartition::zero(1, 2);
        let f = pp_to_dyck(&p);
        assert_eq!(f.to_string(), "(0,0) UD; (-2,0) UUUDDD");
        assert_eq!(dyck_to_pp(&f, 1).unwrap(), p);
    }

    #[test]
    fn round_trip_and_injective() {
        for (n, k) in [(3, 1), (3, 2), (4, 3)] {
            let mut seen = HashSet::new();
            for p in enumerate_pp(n, k).unwrap() {
                let f = pp_to_dyck(&p);
                f.validate(&dyck_starts(k as usize), &dyck_ends(n, k as usize)).unwrap();
                assert_eq!(dyck_to_pp(&f, n).unwrap(), p);
                assert!(seen.insert(f));
            }
        }
    }

    #[test]
    fn rejects_crossing_family() {
        let f = PathFamily::parse("(0,0) UDUD; (-2,0) UUUDUDDD", Model::Dyck).unwrap();
        // the second path touches the first at (1,1)
        let crossing = PathFamily::parse("(0,0) UUDD; (-2,0) UUDUDUDD", Model::Dyck).unwrap();
        assert!(dyck_to_pp(&crossing, 2).is_err());
        assert!(dyck_to_pp(&f, 2).is_ok());
    }
}
