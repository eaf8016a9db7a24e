//! Shifted Hankel determinants `u(n, k) = det(a_{n+i+j})_{i,j<k}`.

use std::collections::HashMap;
use std::sync::RwLock;

use crate::exact::{det_exact, det_poly, Matrix, Poly, Scalar};
use crate::ortho::jacobi::{moments, ortho_poly, JacobiSpec};
use crate::ortho::moments::{sequence_term_formal, MomentSequence, SequenceFamily};

pub fn hankel_det(seq: &MomentSequence, n: usize, k: usize) -> Scalar {
    det_exact(&Matrix::from_fn(k, |i, j| seq.term(n + i + j)))
}

/// The same determinant with `b` kept formal.
pub fn hankel_det_formal(family: SequenceFamily, n: usize, k: usize) -> Poly {
    det_poly(&Matrix::from_fn(k, |i, j| sequence_term_formal(family, n + i + j)))
}

/// Shifted Hankel determinant of an arbitrary list of polynomial moments.
pub fn hankel_det_of(moments: &[Poly], n: usize, k: usize) -> Poly {
    det_poly(&Matrix::from_fn(k, |i, j| moments[n + i + j].clone()))
}

/// Memoized `u(n, k)` over one moment sequence. Readers run concurrently;
/// insertion takes the write lock briefly.
#[derive(Debug)]
pub struct HankelTable {
    seq: MomentSequence,
    memo: RwLock<HashMap<(usize, usize), Scalar>>,
}

impl HankelTable {
    pub fn new(seq: MomentSequence) -> Self {
        HankelTable {
            seq,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn sequence(&self) -> &MomentSequence {
        &self.seq
    }

    pub fn get(&self, n: usize, k: usize) -> Scalar {
        if let Some(v) = self.memo.read().unwrap().get(&(n, k)) {
            return v.clone();
        }
        let v = hankel_det(&self.seq, n, k);
        self.memo.write().unwrap().insert((n, k), v.clone());
        v
    }

    pub fn grid(&self, n_max: usize, k_max: usize) -> HankelGrid {
        HankelGrid {
            values: (0..=n_max)
                .map(|n| (0..=k_max).map(|k| self.get(n, k)).collect())
                .collect(),
        }
    }
}

/// Dense `(n, k)` table of determinant values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HankelGrid {
    pub values: Vec<Vec<Scalar>>,
}

impl HankelGrid {
    pub fn get(&self, n: usize, k: usize) -> Option<&Scalar> {
        self.values.get(n).and_then(|r| r.get(k))
    }

    pub fn n_max(&self) -> usize {
        self.values.len().saturating_sub(1)
    }
}

/// `(prod_{i=1}^{n-1} prod_{j<i} t_j, (-1)^n p_n(0) prod prod t_j)`, checked against
/// the direct determinants `det(M(i+j))` and `det(M(i+j+1))` of its moments.
pub fn first_hankels_from_jacobi(spec: &JacobiSpec, n: usize) -> (Poly, Poly) {
    let weight: Poly = (1..n).flat_map(|i| 0..i).map(|j| spec.t.at(j).clone()).product();
    let p0 = ortho_poly(spec, n).eval_x(&Scalar::from_integer(0.into()));
    let signed = if n.is_multiple_of(2) { p0 } else { -p0 };
    let second = &signed * &weight;
    let m = moments(spec, 2 * n + 1);
    assert_eq!(hankel_det_of(&m, 0, n), weight, "det(M(i+j)) for n={n}");
    assert_eq!(hankel_det_of(&m, 1, n), second, "det(M(i+j+1)) for n={n}");
    (weight, second)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::int;

    #[test]
    fn catalan_examples() {
        let c = MomentSequence::catalan();
        assert_eq!(hankel_det(&c, 2, 2), int(3));
        assert_eq!(hankel_det(&c, 3, 2), int(14));
        assert_eq!(hankel_det(&c, 5, 0), int(1));
        assert_eq!(hankel_det(&c, 0, 7), int(1));
        for k in 0..=10 {
            assert_eq!(hankel_det(&c, 0, k), int(1));
            assert_eq!(hankel_det(&c, 1, k), int(1));
        }
    }

    #[test]
    fn table_invariants() {
        let t = HankelTable::new(MomentSequence::new(SequenceFamily::Mb, Some(int(3))).unwrap());
        for n in 0..6 {
            assert_eq!(t.get(n, 0), int(1));
            assert_eq!(t.get(n, 1), t.sequence().term(n));
        }
        let g = t.grid(3, 3);
        assert_eq!(g.get(2, 2), Some(&t.get(2, 2)));
        assert_eq!(g.get(4, 0), None);
    }

    #[test]
    fn formal_central_hankel() {
        let d = hankel_det_formal(SequenceFamily::Mcap, 0, 3);
        assert_eq!(d, "(2 - b)^2".parse().unwrap());
    }

    #[test]
    fn first_hankels() {
        for n in 0..6 {
            let (a, c) = first_hankels_from_jacobi(&JacobiSpec::f_family(), n);
            assert_eq!((a, c), (Poly::one(), Poly::one()));
        }
        let (a, c) = first_hankels_from_jacobi(&JacobiSpec::central(&Poly::b()), 3);
        assert_eq!(a, "(2 - b)^2".parse().unwrap());
        assert_eq!(c, "(2 - b)^2 * (2 + 5*b)".parse().unwrap());
        assert_eq!(
            first_hankels_from_jacobi(&JacobiSpec::lucas(), 0),
            (Poly::one(), Poly::one())
        );
    }
}
