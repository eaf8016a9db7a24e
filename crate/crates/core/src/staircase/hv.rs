//! Plane partitions to families of `n` nonintersecting `H`/`V` paths with
//! `A_i = (-1, k+i-1)` and `E_i = (2i-1, i-1)`.
//!
//! Path 0 is `V^k`. For `i >= 1`, path `i` encodes row `n - i` (1-based, `i`
//! entries): its `2i` horizontal steps sit at heights `k + i - 1` (the first
//! `i`) and `pi + i - 1` for the row entries in order, with vertical steps
//! filling in and a final descent to `i - 1`.

use super::partition::PlanePartition;
use super::paths::{LatticePath, Model, PathFamily, Point, Step};
use crate::error::{Error, Result};

pub fn hv_starts(n: usize, k: usize) -> Vec<Point> {
    (0..n as i64).map(|i| (-1, k as i64 + i - 1)).collect()
}

pub fn hv_ends(n: usize) -> Vec<Point> {
    (0..n as i64).map(|i| (2 * i - 1, i - 1)).collect()
}

fn path_from_heights(start_y: i64, heights: &[i64], end_y: i64) -> LatticePath {
    let mut y = start_y;
    let mut steps = Vec::new();
    for &h in heights {
        steps.extend(std::iter::repeat_n(Step::V, (y - h) as usize));
        steps.push(Step::H);
        y = h;
    }
    steps.extend(std::iter::repeat_n(Step::V, (y - end_y) as usize));
    LatticePath::new((-1, start_y), steps)
}

pub fn pp_to_hv(p: &PlanePartition) -> PathFamily {
    let (n, k) = (p.n(), p.k() as i64);
    let paths = (0..n)
        .map(|i| {
            let ii = i as i64;
            let mut heights = vec![k + ii - 1; i];
            if i > 0 {
                heights.extend(p.rows()[n - 1 - i].iter().map(|&v| v as i64 + ii - 1));
            }
            path_from_heights(k + ii - 1, &heights, ii - 1)
        })
        .collect();
    PathFamily::new(Model::Hv, paths)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamily(format!("not a valid row-path family: {}", msg.into()))
}

/// Heights of the horizontal steps, in order.
fn h_heights(path: &LatticePath) -> Vec<i64> {
    let pts = path.points();
    path.steps
        .iter()
        .zip(pts)
        .filter(|(s, _)| **s == Step::H)
        .map(|(_, p)| p.1)
        .collect()
}

/// Inverse of [`pp_to_hv`]; `n` is the number of paths and `k` is read off
/// the start of path 0.
pub fn hv_to_pp(f: &PathFamily) -> Result<PlanePartition> {
    if f.model != Model::Hv {
        return Err(invalid("paths are not H/V paths"));
    }
    let n = f.paths.len();
    if n == 0 {
        return Err(invalid("empty family"));
    }
    let k = f.paths[0].start.1 + 1;
    if k < 0 {
        return Err(invalid("path 0 starts below (-1, -1)"));
    }
    f.validate(&hv_starts(n, k as usize), &hv_ends(n))
        .map_err(|e| invalid(e.to_string()))?;
    let mut rows: Vec<Vec<u32>> = vec![Vec::new(); n - 1];
    for (i, path) in f.paths.iter().enumerate().skip(1) {
        let ii = i as i64;
        let hs = h_heights(path);
        if hs[..i].iter().any(|&h| h != k + ii - 1) {
            return Err(invalid(format!(
                "path {i} does not open with {i} steps at height {}",
                k + ii - 1
            )));
        }
        rows[n - 1 - i] = hs[i..]
            .iter()
            .map(|&h| {
                u32::try_from(h - (ii - 1)).map_err(|_| invalid(format!("path {i} dips below height {}", ii - 1)))
            })
            .collect::<Result<_>>()?;
    }
    let p = PlanePartition::new(n, k as u32, rows).map_err(|e| invalid(e.to_string()))?;
    if &pp_to_hv(&p) != f {
        return Err(invalid("paths do not come from one plane partition"));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::staircase::partition::enumerate_pp;
    use std::collections::HashSet;

    #[test]
    fn example_shape() {
        let p = PlanePartition::parse("1,0;0", 2).unwrap();
        let f = pp_to_hv(&p);
        assert_eq!(f.to_string(), "(-1,1) VV; (-1,2) HVVH; (-1,3) HHVHVH");
        assert_eq!(hv_to_pp(&f).unwrap(), p);
    }

    #[test]
    fn step_counts() {
        for p in enumerate_pp(4, 2).unwrap() {
            for (i, path) in pp_to_hv(&p).paths.iter().enumerate() {
                assert_eq!(path.count(Step::H), 2 * i);
                assert_eq!(path.count(Step::V), 2);
            }
        }
    }

    #[test]
    fn image_sizes_and_round_trip() {
        for (n, k, expected) in [(3, 1, 5), (2, 2, 3), (3, 2, 14), (4, 2, 84)] {
            let mut seen = HashSet::new();
            for p in enumerate_pp(n, k).unwrap() {
                let f = pp_to_hv(&p);
                f.validate(&hv_starts(n, k as usize), &hv_ends(n)).unwrap();
                assert_eq!(hv_to_pp(&f).unwrap(), p);
                seen.insert(f);
            }
            assert_eq!(seen.len(), expected, "n={n} k={k}");
        }
    }

    #[test]
    fn rejects_bad_families() {
        let wrong_end = PathFamily::parse("(-1,1) V; (-1,2) HVVHV", Model::Hv).unwrap();
        assert!(hv_to_pp(&wrong_end).is_err());
        let dyck = PathFamily::parse("(0,0) UD", Model::Dyck).unwrap();
        assert!(hv_to_pp(&dyck).is_err());
    }
}
