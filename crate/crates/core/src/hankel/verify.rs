//! Grid checks of the determinant evaluations, one report per identity.

use std::fmt;
use std::str::FromStr;

use super::closed_forms::{
    det_poly_hb, product_form_h2, product_forms_h, product_poly_h, v_by_determinant, v_by_substitution, v_poly,
};
use super::normalized::{central_rhs, normalized_shifted, Normalized};
use super::table::{hankel_det_formal, HankelTable};
use crate::error::{Error, Result};
use crate::exact::scalar::{binom_q, format_scalar, int, ratio};
use crate::exact::{det_exact, Matrix, Poly, Scalar};
use crate::ortho::jacobi::{expansion_coeffs, moment, ortho_poly, JacobiSpec};
use crate::ortho::moments::{s_closed, sequence_term_formal, MomentSequence, SequenceFamily};
use crate::report::{Cell, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremTag {
    Th1,
    Th2,
    Th4,
    Th5,
    Cor7,
    Lemma8,
    Eq1_6,
    H1Shift,
}

impl TheoremTag {
    pub const ALL: [TheoremTag; 8] = [
        TheoremTag::Th1,
        TheoremTag::Th2,
        TheoremTag::Th4,
        TheoremTag::Th5,
        TheoremTag::Cor7,
        TheoremTag::Lemma8,
        TheoremTag::Eq1_6,
        TheoremTag::H1Shift,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TheoremTag::Th1 => "th1",
            TheoremTag::Th2 => "th2",
            TheoremTag::Th4 => "th4",
            TheoremTag::Th5 => "th5",
            TheoremTag::Cor7 => "cor7",
            TheoremTag::Lemma8 => "lemma8",
            TheoremTag::Eq1_6 => "eq1_6",
            TheoremTag::H1Shift => "h1-shift",
        }
    }
}

impl fmt::Display for TheoremTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for TheoremTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        if s == "h1_equals_h0_shift" {
            return Ok(TheoremTag::H1Shift);
        }
        TheoremTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity tag {s:?}")))
    }
}

/// Grid bounds shared by the checks. `bs` is used where a numeric `b` is swept.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grid {
    pub n_max: usize,
    pub k_max: usize,
    pub bs: Vec<Scalar>,
}

impl Grid {
    pub fn new(n_max: usize, k_max: usize) -> Self {
        Grid {
            n_max,
            k_max,
            bs: default_bs(),
        }
    }

    pub fn with_bs(mut self, bs: Vec<Scalar>) -> Self {
        self.bs = bs;
        self
    }
}

/// `{-2, -1, -3/2, 0, 1/2, 1, 2, 3, 4}`.
pub fn default_bs() -> Vec<Scalar> {
    vec![
        int(-2),
        int(-1),
        ratio(-3, 2),
        int(0),
        ratio(1, 2),
        int(1),
        int(2),
        int(3),
        int(4),
    ]
}

/// `det(binom(k+i+j, 2j))_{i,j<n}` over the integers.
pub fn binomial_det(n: usize, k: usize) -> Scalar {
    det_exact(&Matrix::from_fn(n, |i, j| binom_q((k + i + j) as i64, 2 * j as i64)))
}

fn at(p: &Poly, b: &Scalar, k: usize) -> Scalar {
    p.eval(b, &int(k as i64))
}

/// `H_2(b, x)` and `H_3(b, x)` as displayed in factored form.
pub fn displayed_hb() -> [(usize, Poly); 2] {
    [
        (2, "1/6*(1 + x)*(6 + b*(b + 6)*x + 2*b^2*x^2)".parse().unwrap()),
        (
            3,
            "1/180*(1 + x)*(2 + x)*(3 + 2*x)*(30 + b*(b^2 + 6*b + 30)*x + 3*b^2*(b + 4)*x^2 + 2*b^3*x^3)"
                .parse()
                .unwrap(),
        ),
    ]
}

fn th1(g: &Grid, r: &mut VerificationReport) {
    let cat = HankelTable::new(MomentSequence::catalan());
    for n in 0..=g.n_max {
        let forms = product_forms_h(n);
        for (i, f) in forms.iter().enumerate().skip(1) {
            r.push(Cell::new(n, i, None, "forms").compare(f, &forms[0]));
        }
        let h = product_poly_h(n);
        for k in 0..=g.k_max {
            r.push(Cell::new(n, k, None, "value").compare(&cat.get(n, k), &at(&h, &int(0), k)));
        }
    }
}

fn th2(g: &Grid, r: &mut VerificationReport) {
    for n in 0..=g.n_max {
        let h = product_poly_h(n);
        for k in 0..=g.k_max {
            r.push(Cell::new(n, k, None, "value").compare(&binomial_det(n, k), &at(&h, &int(0), k)));
        }
    }
}

fn th4(g: &Grid, r: &mut VerificationReport) {
    for b in &g.bs {
        let t = HankelTable::new(MomentSequence::new(SequenceFamily::Mb, Some(b.clone())).unwrap());
        for n in 0..=g.n_max {
            let hb = det_poly_hb(n);
            for k in 0..=g.k_max {
                r.push(Cell::new(n, k, Some(b), "value").compare(&t.get(n, k), &at(&hb, b, k)));
            }
        }
    }
    for (n, shown) in displayed_hb() {
        r.push(Cell::new(n, 0, None, "display").compare(&det_poly_hb(n), &shown));
    }
}

fn th5(g: &Grid, r: &mut VerificationReport) {
    for n in 0..=g.n_max {
        let product = product_form_h2(n);
        let hb = det_poly_hb(n);
        r.push(Cell::new(n, 0, None, "b2").compare(&product, &hb.specialize_b(&int(2))));
        let shifted = hb
            .specialize_b(&int(1))
            .shift_x(&ratio(-1, 2))
            .scale(&int(2).pow(n as i32));
        r.push(Cell::new(n, 0, None, "shift").compare(&product, &shifted));
    }
    for n in 0..=g.k_max {
        let v = at(&product_form_h2(n), &int(0), 1);
        r.push(Cell::new(n, 1, None, "at-one").compare(&v, &binom_q(2 * n as i64 + 1, n as i64)));
    }
}

fn cor7(g: &Grid, r: &mut VerificationReport) {
    let two_minus_b: Poly = "2 - b".parse().unwrap();
    for n in 0..=g.n_max {
        r.push(Cell::new(n, 0, None, "routes").compare(&v_by_substitution(n), &v_by_determinant(n)));
        let v = v_poly(n);
        for k in 1..=g.k_max {
            let lhs = two_minus_b.pow(k as u32 - 1) * v.eval_x(&int(k as i64));
            let rhs = hankel_det_formal(SequenceFamily::Mcap, n, k);
            if k >= 2 {
                let vanish = rhs.specialize_b(&int(2));
                r.push(Cell::new(n, k, Some(&int(2)), "vanish").compare(&vanish, &Poly::zero()));
            }
            r.push(Cell::new(n, k, None, "symbolic").compare(&lhs, &rhs));
            for b in &g.bs {
                let cell = Cell::new(n, k, Some(b), "ratio");
                r.push(match normalized_shifted(SequenceFamily::Mcap, Some(b), n, k) {
                    Ok(Normalized::Value(x)) => cell.compare(&x, &at(&v, b, k)),
                    Ok(Normalized::Indeterminate) => {
                        cell.with_status(Status::Indeterminate, "0/0".into(), format_scalar(&at(&v, b, k)))
                    }
                    Err(e) => cell.with_status(Status::Fail, e.to_string(), String::new()),
                });
            }
        }
    }
    let m2 = MomentSequence::new(SequenceFamily::Mcap, Some(int(2))).unwrap();
    for n in 0..=g.n_max.max(12) {
        r.push(Cell::new(n, 1, Some(&int(2)), "four-power").compare(&m2.term(n), &int(4).pow(n as i32)));
    }
}

fn lemma8(g: &Grid, r: &mut VerificationReport) {
    let spec = JacobiSpec::central(&Poly::b());
    for n in 0..=g.n_max {
        r.push(
            Cell::new(n, 0, None, "moments").compare(&moment(&spec, n), &sequence_term_formal(SequenceFamily::Mcap, n)),
        );
        let c = expansion_coeffs(&spec, n);
        for (k, ck) in c.iter().enumerate() {
            r.push(Cell::new(n, k, None, "coefficients").compare(ck, &s_closed(n, k)));
        }
        if n == 0 {
            continue;
        }
        let p0 = ortho_poly(&spec, n).eval_x(&int(0));
        let signed = if n % 2 == 0 { p0 } else { -p0 };
        let expected = Poly::int(2) + Poly::b().scale(&int(2 * n as i64 - 1));
        r.push(Cell::new(n, 0, None, "p-at-zero").compare(&signed, &expected));
    }
    let two_minus_b: Poly = "2 - b".parse().unwrap();
    for k in 1..=g.k_max {
        r.push(Cell::new(0, k, None, "base").compare(
            &hankel_det_formal(SequenceFamily::Mcap, 0, k),
            &two_minus_b.pow(k as u32 - 1),
        ));
    }
}

fn eq1_6(g: &Grid, r: &mut VerificationReport) {
    for n in 1..=g.n_max {
        for k in 1..=g.k_max {
            let cell = Cell::new(n, k, None, "value");
            r.push(match normalized_shifted(SequenceFamily::Central, None, n, k) {
                Ok(Normalized::Value(v)) => cell.compare(&v, &central_rhs(n, k)),
                other => cell.with_status(Status::Fail, format!("{other:?}"), format_scalar(&central_rhs(n, k))),
            });
        }
    }
}

fn h1_shift(g: &Grid, r: &mut VerificationReport) {
    for n in 0..=g.n_max {
        let lhs = det_poly_hb(n).specialize_b(&int(1));
        let rhs = det_poly_hb(n + 1).specialize_b(&int(0));
        r.push(Cell::new(n, 0, None, "shift").compare(&lhs, &rhs));
    }
}

pub fn verify_theorem(tag: TheoremTag, grid: &Grid) -> VerificationReport {
    let mut r = VerificationReport::new(tag.name())
        .grid("n_max", grid.n_max)
        .grid("k_max", grid.k_max);
    if matches!(tag, TheoremTag::Th4 | TheoremTag::Cor7) {
        r = r.grid("b", grid.bs.iter().map(format_scalar).collect::<Vec<_>>());
    }
    match tag {
        TheoremTag::Th1 => th1(grid, &mut r),
        TheoremTag::Th2 => th2(grid, &mut r),
        TheoremTag::Th4 => th4(grid, &mut r),
        TheoremTag::Th5 => th5(grid, &mut r),
        TheoremTag::Cor7 => cor7(grid, &mut r),
        TheoremTag::Lemma8 => lemma8(grid, &mut r),
        TheoremTag::Eq1_6 => eq1_6(grid, &mut r),
        TheoremTag::H1Shift => h1_shift(grid, &mut r),
    }
    r.sort();
    r
}
