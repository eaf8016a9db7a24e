//! Counting and bijection reports over the staircase plane partitions.

use std::collections::HashSet;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::dyck::{dyck_ends, dyck_starts, dyck_to_pp, pp_to_dyck};
use super::hv::{hv_ends, hv_starts, hv_to_pp, pp_to_hv};
use super::lgv::{candidate_tuples, count_nonintersecting_brute, lgv_count};
use super::partition::{enumerate_pp, PlanePartition};
use super::paths::{Model, PathFamily, Point};
use crate::error::Result;
use crate::exact::scalar::{from_bigint, int};
use crate::hankel::closed_forms::product_poly_h;
use crate::hankel::table::hankel_det;
use crate::hankel::verify::binomial_det;
use crate::ortho::moments::MomentSequence;
use crate::report::{Cell, Status, VerificationReport};

pub fn endpoints(model: Model, n: usize, k: usize) -> (Vec<Point>, Vec<Point>) {
    match model {
        Model::Dyck => (dyck_starts(k), dyck_ends(n, k)),
        Model::Hv => (hv_starts(n, k), hv_ends(n)),
    }
}

pub fn forward(model: Model, p: &PlanePartition) -> PathFamily {
    match model {
        Model::Dyck => pp_to_dyck(p),
        Model::Hv => pp_to_hv(p),
    }
}

pub fn inverse(model: Model, f: &PathFamily, n: usize) -> Result<PlanePartition> {
    match model {
        Model::Dyck => dyck_to_pp(f, n),
        Model::Hv => hv_to_pp(f),
    }
}

fn count_cells(n: usize, k: usize) -> Result<Vec<Cell>> {
    let count = enumerate_pp(n, k as u32)?.count() as i64;
    let h = product_poly_h(n).eval(&int(0), &int(k as i64));
    let lgv = |m: Model| {
        let (a, e) = endpoints(m, n, k);
        lgv_count(&a, &e, m).map(from_bigint)
    };
    Ok(vec![
        Cell::new(n, k, None, "enumeration").compare(&int(count), &h),
        Cell::new(n, k, None, "binomial-det").compare(&binomial_det(n, k), &h),
        Cell::new(n, k, None, "catalan-hankel").compare(&hankel_det(&MomentSequence::catalan(), n, k), &h),
        Cell::new(n, k, None, "lgv-dyck").compare(&lgv(Model::Dyck)?, &h),
        Cell::new(n, k, None, "lgv-hv").compare(&lgv(Model::Hv)?, &h),
    ])
}

/// Enumeration count, `H_n(k)`, `det(binom(k+i+j, 2j))` and `det(C_{n+i+j})`
/// (plus both path-model determinants) for one `(n, k)`.
pub fn count_pp_vs_formulas(n: usize, k: usize) -> Result<VerificationReport> {
    let mut r = VerificationReport::new("pp-count").grid("n", n).grid("k", k);
    r.extend(count_cells(n, k)?);
    Ok(r)
}

/// [`count_pp_vs_formulas`] over `1 <= n <= n_max`, `0 <= k <= k_max`.
pub fn verify_pp_counts(n_max: usize, k_max: usize) -> Result<VerificationReport> {
    let grid: Vec<(usize, usize)> = (1..=n_max).flat_map(|n| (0..=k_max).map(move |k| (n, k))).collect();
    let cells: Vec<Vec<Cell>> = grid
        .par_iter()
        .map(|&(n, k)| count_cells(n, k))
        .collect::<Result<_>>()?;
    let mut r = VerificationReport::new("pp-count")
        .grid("n_max", n_max)
        .grid("k_max", k_max);
    r.extend(cells.into_iter().flatten());
    r.sort();
    Ok(r)
}

/// One line of a bijection listing.
#[derive(Clone, Debug)]
pub struct BijectionRow {
    pub partition: PlanePartition,
    pub family: PathFamily,
    pub valid: bool,
    pub round_trip: bool,
}

pub fn bijection_rows(model: Model, n: usize, k: usize) -> Result<Vec<BijectionRow>> {
    let (a, e) = endpoints(model, n, k);
    enumerate_pp(n, k as u32)?
        .map(|p| {
            let f = forward(model, &p);
            let valid = f.validate(&a, &e).is_ok();
            let round_trip = inverse(model, &f, n).as_ref() == Ok(&p);
            Ok(BijectionRow {
                partition: p,
                family: f,
                valid,
                round_trip,
            })
        })
        .collect()
}

fn bijection_cells(model: Model, n: usize, k: usize) -> Result<Vec<Cell>> {
    let rows = bijection_rows(model, n, k)?;
    let total = rows.len();
    let valid = rows.iter().filter(|r| r.valid).count();
    let round = rows.iter().filter(|r| r.round_trip).count();
    let distinct = rows.iter().map(|r| &r.family).collect::<HashSet<_>>().len();
    let (a, e) = endpoints(model, n, k);
    let lgv = lgv_count(&a, &e, model)?;
    let m = model.name();
    Ok(vec![
        Cell::new(n, k, None, &format!("{m}-valid")).compare(&valid, &total),
        Cell::new(n, k, None, &format!("{m}-round-trip")).compare(&round, &total),
        Cell::new(n, k, None, &format!("{m}-injective")).compare(&distinct, &total),
        Cell::new(n, k, None, &format!("{m}-onto")).compare(&BigInt::from(distinct), &lgv),
    ])
}

fn brute_cell(model: Model, n: usize, k: usize, cap: u64) -> Result<Cell> {
    let (a, e) = endpoints(model, n, k);
    let lgv = lgv_count(&a, &e, model)?;
    let cell = Cell::new(n, k, None, &format!("{}-lgv-brute", model.name()));
    Ok(match count_nonintersecting_brute(&a, &e, model, cap) {
        Ok(brute) => cell.compare(&brute, &lgv),
        Err(_) => cell.with_status(
            Status::Indeterminate,
            format!("{} candidates > cap", candidate_tuples(&a, &e, model)),
            lgv.to_string(),
        ),
    })
}

/// Exhaustive validity, round-trip, injectivity and image-size checks for both
/// path models over `1 <= n <= n_max`, `0 <= k <= k_max`, and LGV against
/// brute force wherever the candidate count is within `cap`.
pub fn verify_bijections(n_max: usize, k_max: usize, cap: u64) -> Result<VerificationReport> {
    let grid: Vec<(Model, usize, usize)> = [Model::Dyck, Model::Hv]
        .into_iter()
        .flat_map(|m| (1..=n_max).flat_map(move |n| (0..=k_max).map(move |k| (m, n, k))))
        .collect();
    let cells: Vec<Vec<Cell>> = grid
        .par_iter()
        .map(|&(m, n, k)| {
            let mut c = bijection_cells(m, n, k)?;
            c.push(brute_cell(m, n, k, cap)?);
            Ok(c)
        })
        .collect::<Result<_>>()?;
    let mut r = VerificationReport::new("bijection-roundtrip")
        .grid("n_max", n_max)
        .grid("k_max", k_max)
        .grid("cap", cap);
    r.extend(cells.into_iter().flatten());
    r.sort();
    Ok(r)
}
