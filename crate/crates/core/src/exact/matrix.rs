//! Square matrices and exact determinants.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::Poly;
use super::scalar::{common_denominator, Scalar};
use crate::error::{Error, Result};

/// Polynomial determinants up to this size use memoized cofactor expansion.
pub const COFACTOR_MAX_DIM: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<T> {
    dim: usize,
    entries: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::InvalidArgument("matrix is not square".into()));
        }
        Ok(Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.dim + j]
    }

    pub fn map<U>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(&mut f).collect(),
        }
    }

    fn into_rows(self) -> Vec<Vec<T>> {
        let dim = self.dim;
        let mut it = self.entries.into_iter();
        (0..dim).map(|_| it.by_ref().take(dim).collect()).collect()
    }
}

/// Fraction-free Bareiss elimination on an integer matrix, with row pivoting.
pub fn det_integer(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = rows;
    let mut negate = false;
    let mut prev = BigInt::one();
    for p in 0..n - 1 {
        if m[p][p].is_zero() {
            match (p + 1..n).find(|&r| !m[r][p].is_zero()) {
                Some(r) => {
                    m.swap(p, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let v = (&m[i][j] * &m[p][p] - &m[i][p] * &m[p][j]) / &prev;
                m[i][j] = v;
            }
            m[i][p] = BigInt::zero();
        }
        prev = m[p][p].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Exact determinant of a rational matrix; the empty matrix has determinant 1.
///
/// Each row is scaled by the lcm of its denominators, the resulting integer matrix
/// goes through Bareiss, and the scaling is divided back out.
pub fn det_exact(m: &Matrix<Scalar>) -> Scalar {
    let mut scale = BigInt::one();
    let rows: Vec<Vec<BigInt>> = m
        .clone()
        .into_rows()
        .into_iter()
        .map(|row| {
            let d = common_denominator(row.iter());
            scale *= &d;
            row.iter().map(|v| v.numer() * (&d / v.denom())).collect()
        })
        .collect();
    Scalar::new(det_integer(rows), scale)
}

/// Exact symbolic determinant over Q[b, x].
pub fn det_poly(m: &Matrix<Poly>) -> Poly {
    if m.dim() <= COFACTOR_MAX_DIM {
        det_poly_cofactor(m)
    } else {
        det_poly_bareiss(m)
    }
}

/// Laplace expansion along rows, memoized over the set of still-unused columns.
pub fn det_poly_cofactor(m: &Matrix<Poly>) -> Poly {
    let n = m.dim();
    if n == 0 {
        return Poly::one();
    }
    assert!(n < usize::BITS as usize, "matrix too large for cofactor expansion");
    // minors[mask] = det of rows (n - |mask|)..n restricted to the columns in mask
    let mut minors: Vec<Option<Poly>> = vec![None; 1 << n];
    minors[0] = Some(Poly::one());
    let mut masks: Vec<usize> = (1..1usize << n).collect();
    masks.sort_by_key(|s| s.count_ones());
    for mask in masks {
        let row = n - mask.count_ones() as usize;
        let mut acc = Poly::zero();
        for (pos, col) in (0..n).filter(|c| mask >> c & 1 == 1).enumerate() {
            let entry = m.get(row, col);
            if entry.is_zero() {
                continue;
            }
            let term = entry * minors[mask & !(1 << col)].as_ref().expect("smaller minor");
            if pos % 2 == 0 {
                acc += &term;
            } else {
                acc -= &term;
            }
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().expect("full minor")
}

/// Bareiss elimination over Q[b, x] with exact polynomial division and column pivoting.
pub fn det_poly_bareiss(m: &Matrix<Poly>) -> Poly {
    let n = m.dim();
    if n == 0 {
        return Poly::one();
    }
    let mut a = m.clone().into_rows();
    let mut negate = false;
    let mut prev = Poly::one();
    for p in 0..n - 1 {
        if a[p][p].is_zero() {
            match (p + 1..n).find(|&c| !a[p][c].is_zero()) {
                Some(c) => {
                    for row in a.iter_mut() {
                        row.swap(p, c);
                    }
                    negate = !negate;
                }
                None => return Poly::zero(),
            }
        }
        for i in p + 1..n {
            for j in p + 1..n {
                let num = &(&a[i][j] * &a[p][p]) - &(&a[i][p] * &a[p][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss quotient is exact over an integral domain");
            }
            a[i][p] = Poly::zero();
        }
        prev = a[p][p].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}
