//! Named verification suites, each producing one deterministic report.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact::scalar::{catalan, from_bigint, int};
use crate::exact::{Poly, PowerSeries, Scalar};
use crate::hankel::closed_forms::PolyKind;
use crate::hankel::condensation::{boundary_from_sequence, condensation_check, condensation_reconstruct};
use crate::hankel::table::HankelTable;
use crate::hankel::theorem10::theorem10_check;
use crate::hankel::verify::{default_bs, verify_theorem, Grid, TheoremTag};
use crate::ortho::basis::{verify_basis_expansion, BasisKind};
use crate::ortho::genfunc::{catalan_residual, catalan_series, gf_coeffs, GfFamily};
use crate::ortho::jacobi::{moment, JacobiSpec};
use crate::ortho::moments::{sequence_term, MomentSequence, SequenceFamily};
use crate::ortho::triangle::{triangle_by_recurrence, TriangleKind};
use crate::report::{Cell, VerificationReport};
use crate::staircase::checks::{verify_bijections, verify_pp_counts};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Theorem(TheoremTag),
    Th10,
    Condensation,
    Gf,
    Basis,
    PpCount,
    BijectionRoundtrip,
}

impl Suite {
    pub fn all() -> Vec<Suite> {
        let mut v: Vec<Suite> = TheoremTag::ALL.into_iter().map(Suite::Theorem).collect();
        v.extend([
            Suite::Th10,
            Suite::Condensation,
            Suite::Gf,
            Suite::Basis,
            Suite::PpCount,
            Suite::BijectionRoundtrip,
        ]);
        v
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem(t) => t.name(),
            Suite::Th10 => "th10",
            Suite::Condensation => "condensation",
            Suite::Gf => "gf",
            Suite::Basis => "basis",
            Suite::PpCount => "pp-count",
            Suite::BijectionRoundtrip => "bijection-roundtrip",
        }
    }

    /// Grid used when the caller gives none.
    pub fn default_params(self) -> SuiteParams {
        let (n_max, k_max) = match self {
            Suite::Theorem(TheoremTag::Th1 | TheoremTag::Th2) => (8, 8),
            Suite::Theorem(TheoremTag::Th5) => (8, 10),
            Suite::Theorem(TheoremTag::Lemma8) => (10, 6),
            Suite::Theorem(TheoremTag::Cor7) => (5, 5),
            Suite::Theorem(TheoremTag::H1Shift) => (8, 0),
            Suite::Theorem(_) => (6, 6),
            Suite::Th10 => (8, 6),
            Suite::Condensation => (6, 6),
            Suite::Gf => (20, 0),
            Suite::Basis => (12, 0),
            Suite::PpCount => (5, 4),
            Suite::BijectionRoundtrip => (4, 3),
        };
        SuiteParams {
            n_max,
            k_max,
            bs: None,
            cap: 100_000,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if let Ok(t) = s.parse::<TheoremTag>() {
            return Ok(Suite::Theorem(t));
        }
        Suite::all()
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteParams {
    pub n_max: usize,
    pub k_max: usize,
    /// `None` selects each suite's own `b` list.
    pub bs: Option<Vec<Scalar>>,
    /// Brute-force limit on candidate path tuples.
    pub cap: u64,
}

/// `M_{-1}(n)` for `n < 8`: the Fine numbers.
pub const FINE: [i64; 8] = [1, 0, 1, 2, 6, 18, 57, 186];

fn condensation_suite(p: &SuiteParams) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("condensation")
        .grid("n_max", p.n_max)
        .grid("k_max", p.k_max);
    let reports: Vec<VerificationReport> = PolyKind::ALL
        .par_iter()
        .map(|&kind| condensation_check(kind, p.n_max))
        .collect();
    for rep in reports {
        r.extend(rep.cells);
    }
    let seqs = [
        (MomentSequence::catalan(), "reconstruct-catalan"),
        (MomentSequence::new(SequenceFamily::Mb, Some(int(3)))?, "reconstruct-Mb"),
    ];
    for (seq, case) in seqs {
        let b = seq.b().cloned();
        let (r0, r1, col) = boundary_from_sequence(&seq, p.n_max, p.k_max);
        let direct = HankelTable::new(seq);
        match condensation_reconstruct(&r0, &r1, &col, p.n_max, p.k_max) {
            Ok(g) => {
                for n in 0..=p.n_max {
                    for k in 0..=p.k_max {
                        r.push(Cell::new(n, k, b.as_ref(), case).compare(&g.values[n][k], &direct.get(n, k)));
                    }
                }
            }
            Err(e) => r.push(Cell::new(0, 0, b.as_ref(), case).with_status(
                crate::report::Status::Fail,
                e.to_string(),
                "reconstruction".into(),
            )),
        }
    }
    Ok(r)
}

fn gf_suite(p: &SuiteParams) -> Result<VerificationReport> {
    let order = p.n_max.max(1);
    let bs = p.bs.clone().unwrap_or_else(|| vec![int(-1), int(2), int(3)]);
    let mut r = VerificationReport::new("gf")
        .grid("order", order)
        .grid("b", bs.iter().map(ToString::to_string).collect::<Vec<_>>());
    let c = catalan_series(order);
    let residual = catalan_residual(&c)?;
    r.push(Cell::new(order, 0, None, "catalan-residual").compare(&residual, &PowerSeries::zero(order)));
    for n in 0..order {
        r.push(Cell::new(n, 0, None, "catalan").compare(&c.coeff(n), &from_bigint(catalan(n as u64))));
    }
    for b in &bs {
        let series = gf_coeffs(&GfFamily::Moments(b.clone()), order)?;
        for n in 0..order {
            let closed = sequence_term(SequenceFamily::Mb, Some(b), n)?;
            r.push(Cell::new(n, 0, Some(b), "moments").compare(&series.coeff(n), &closed));
        }
    }
    let minus_one = int(-1);
    let spec = JacobiSpec::shifted_catalan(&Poly::constant(minus_one.clone()));
    for (n, &v) in FINE.iter().enumerate() {
        let closed = sequence_term(SequenceFamily::Mb, Some(&minus_one), n)?;
        r.push(Cell::new(n, 0, Some(&minus_one), "fine").compare(&closed, &int(v)));
        r.push(Cell::new(n, 0, Some(&minus_one), "fine-recurrence").compare(&moment(&spec, n), &Poly::int(v)));
    }
    Ok(r)
}

fn basis_suite(p: &SuiteParams) -> VerificationReport {
    let mut r = VerificationReport::new("basis").grid("n_max", p.n_max);
    for kind in [BasisKind::Fibonacci, BasisKind::Lucas] {
        r.extend(verify_basis_expansion(kind, p.n_max).cells);
    }
    for kind in TriangleKind::ALL {
        let rows = triangle_by_recurrence(kind, p.n_max + 1);
        for n in 0..=p.n_max {
            let closed: Vec<BigInt> = (0..=kind.row_end(n)).map(|k| kind.closed(n, k)).collect();
            let rec_row = format!("{:?}", rows[n]);
            r.push(
                Cell::new(n, 0, None, &format!("{}-recurrence", kind.name())).compare(&rec_row, &format!("{closed:?}")),
            );
        }
    }
    for n in 0..=p.n_max {
        let sum: BigInt = (0..=n).map(|k| TriangleKind::Catalan.closed(n, k)).sum();
        r.push(Cell::new(n, 0, None, "catalan-row-sum").compare(&sum, &catalan(n as u64 + 1)));
        let mut partial = BigInt::zero();
        let partials: Vec<BigInt> = (0..=n)
            .map(|k| {
                partial += TriangleKind::A046899.closed(n, k);
                partial.clone()
            })
            .collect();
        let next: Vec<BigInt> = (0..=n).map(|k| TriangleKind::A046899.closed(n + 1, k)).collect();
        r.push(Cell::new(n, 0, None, "a046899-partial-sums").compare(&format!("{partials:?}"), &format!("{next:?}")));
    }
    r
}

/// Run one suite. Cells come back sorted by `(n, k, b, case)`.
pub fn run_suite(suite: Suite, p: &SuiteParams) -> Result<VerificationReport> {
    let mut r = match suite {
        Suite::Theorem(tag) => {
            let grid = Grid::new(p.n_max, p.k_max).with_bs(p.bs.clone().unwrap_or_else(default_bs));
            verify_theorem(tag, &grid)
        }
        Suite::Th10 => theorem10_check(p.n_max, p.k_max),
        Suite::Condensation => condensation_suite(p)?,
        Suite::Gf => gf_suite(p)?,
        Suite::Basis => basis_suite(p),
        Suite::PpCount => verify_pp_counts(p.n_max, p.k_max)?,
        Suite::BijectionRoundtrip => verify_bijections(p.n_max, p.k_max, p.cap)?,
    };
    r.sort();
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for s in Suite::all() {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!(Suite::all().len(), 14);
        assert!("th3".parse::<Suite>().is_err());
    }

    #[test]
    fn small_runs_pass() {
        for s in Suite::all() {
            let mut p = s.default_params();
            p.n_max = p.n_max.min(3);
            p.k_max = p.k_max.min(3);
            let r = run_suite(s, &p).unwrap();
            assert!(r.passed(), "{s}: {:?}", r.first_failure());
            assert!(!r.cells.is_empty(), "{s}");
        }
    }

    #[test]
    fn deterministic_json() {
        let p = Suite::PpCount.default_params();
        let small = SuiteParams {
            n_max: 3,
            k_max: 2,
            ..p
        };
        let a = run_suite(Suite::PpCount, &small).unwrap().to_json(None).to_string();
        let b = run_suite(Suite::PpCount, &small).unwrap().to_json(None).to_string();
        assert_eq!(a, b);
    }
}
