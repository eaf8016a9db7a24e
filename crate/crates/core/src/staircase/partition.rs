//! Plane partitions of staircase shape `(n-1, n-2, ..., 1)` with entries in `[0, k]`.

use std::fmt;

use crate::error::{Error, Result};

/// Row `i` (0-based) holds `n - 1 - i` entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PlanePartition {
    n: usize,
    k: u32,
    rows: Vec<Vec<u32>>,
}

impl PlanePartition {
    pub fn new(n: usize, k: u32, rows: Vec<Vec<u32>>) -> Result<Self> {
        let p = PlanePartition { n, k, rows };
        p.validate()?;
        Ok(p)
    }

    /// The all-zero partition.
    pub fn zero(n: usize, k: u32) -> Self {
        PlanePartition {
            n,
            k,
            rows: (0..n.saturating_sub(1)).map(|i| vec![0; n - 1 - i]).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    /// Upper bound for cell `(i, j)` given its left and upper neighbours.
    fn bound(&self, i: usize, j: usize) -> u32 {
        let mut b = self.k;
        if j > 0 {
            b = b.min(self.rows[i][j - 1]);
        }
        if i > 0 {
            b = b.min(self.rows[i - 1][j]);
        }
        b
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidArgument("staircase size n must be at least 1".into()));
        }
        if self.rows.len() != self.n - 1 {
            return Err(Error::InvalidArgument(format!(
                "expected {} rows for n = {}, got {}",
                self.n - 1,
                self.n,
                self.rows.len()
            )));
        }
        for (i, row) in self.rows.iter().enumerate() {
            if row.len() != self.n - 1 - i {
                return Err(Error::InvalidArgument(format!(
                    "row {} has {} entries, expected {}",
                    i + 1,
                    row.len(),
                    self.n - 1 - i
                )));
            }
            for j in 0..row.len() {
                if row[j] > self.bound(i, j) {
                    return Err(Error::InvalidArgument(format!(
                        "entry ({}, {}) = {} breaks the bound or monotonicity",
                        i + 1,
                        j + 1,
                        row[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Parse `5,5,5,3,2;5,4,3,3;2,2,2;2,1;0`. The number of rows fixes `n`;
    /// the empty string is the `n = 1` partition.
    pub fn parse(text: &str, k: u32) -> Result<Self> {
        let text = text.trim();
        let rows: Vec<Vec<u32>> = if text.is_empty() {
            Vec::new()
        } else {
            text.split(';')
                .map(|row| {
                    row.split(',')
                        .map(|e| {
                            e.trim()
                                .parse::<u32>()
                                .map_err(|_| Error::Parse(format!("bad partition entry {e:?}")))
                        })
                        .collect()
                })
                .collect::<Result<_>>()?
        };
        PlanePartition::new(rows.len() + 1, k, rows)
    }

    pub fn cells(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }
}

impl fmt::Display for PlanePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        f.write_str(&rows.join(";"))
    }
}

/// All partitions for `(n, k)` in lexicographic order of the row-major entries.
pub struct PartitionIter {
    current: Option<PlanePartition>,
}

impl Iterator for PartitionIter {
    type Item = PlanePartition;

    fn next(&mut self) -> Option<PlanePartition> {
        let out = self.current.take()?;
        let mut next = out.clone();
        // rightmost cell that can still grow; everything after it resets to 0
        let cells: Vec<(usize, usize)> = (0..next.rows.len())
            .flat_map(|i| (0..next.rows[i].len()).map(move |j| (i, j)))
            .collect();
        for (pos, &(i, j)) in cells.iter().enumerate().rev() {
            if next.rows[i][j] < next.bound(i, j) {
                next.rows[i][j] += 1;
                for &(a, c) in &cells[pos + 1..] {
                    next.rows[a][c] = 0;
                }
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

pub fn enumerate_pp(n: usize, k: u32) -> Result<PartitionIter> {
    if n == 0 {
        return Err(Error::InvalidArgument("staircase size n must be at least 1".into()));
    }
    Ok(PartitionIter {
        current: Some(PlanePartition::zero(n, k)),
    })
}

pub fn count_pp(n: usize, k: u32) -> Result<u64> {
    Ok(enumerate_pp(n, k)?.count() as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(count_pp(2, 1).unwrap(), 2);
        assert_eq!(count_pp(3, 1).unwrap(), 5);
        assert_eq!(count_pp(4, 1).unwrap(), 14);
        assert_eq!(count_pp(1, 7).unwrap(), 1);
        assert_eq!(count_pp(3, 2).unwrap(), 14);
        assert_eq!(count_pp(4, 0).unwrap(), 1);
        assert!(count_pp(0, 1).is_err());
    }

    #[test]
    fn lexicographic_and_valid() {
        let all: Vec<_> = enumerate_pp(4, 2).unwrap().collect();
        for w in all.windows(2) {
            assert!(w[0].rows < w[1].rows);
        }
        for p in &all {
            p.validate().unwrap();
        }
        assert_eq!(all[0], PlanePartition::zero(4, 2));
    }

    #[test]
    fn text_round_trip() {
        let s = "5,5,5,3,2;5,4,3,3;2,2,2;2,1;0";
        let p = PlanePartition::parse(s, 5).unwrap();
        assert_eq!(p.n(), 6);
        assert_eq!(p.to_string(), s);
        let empty = PlanePartition::parse("", 3).unwrap();
        assert_eq!(empty.n(), 1);
        assert_eq!(empty.to_string(), "");
    }

    #[test]
    fn invalid_partitions() {
        assert!(PlanePartition::parse("1,2;0", 3).is_err());
        assert!(PlanePartition::parse("2,1;3", 3).is_err());
        assert!(PlanePartition::parse("4,1;0", 3).is_err());
        assert!(PlanePartition::parse("1;0", 3).is_err());
        assert!(PlanePartition::parse("a", 3).is_err());
    }

    #[test]
    fn monotone_in_n_and_k() {
        for n in 1..=4 {
            for k in 0..=3 {
                let c = count_pp(n, k).unwrap();
                assert!(c <= count_pp(n, k + 1).unwrap());
                assert!(c <= count_pp(n + 1, k).unwrap());
            }
        }
    }
}
