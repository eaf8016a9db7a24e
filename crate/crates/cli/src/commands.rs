use std::collections::HashSet;

use rayon::prelude::*;
use serde_json::{json, Value};

use hankel_core::error::{Error, Result};
use hankel_core::exact::{Poly, Scalar};
use hankel_core::hankel::{HankelTable, PolyKind};
use hankel_core::ortho::{MomentSequence, SequenceFamily};
use hankel_core::report::VerificationReport;
use hankel_core::staircase::checks::{bijection_rows, endpoints};
use hankel_core::staircase::{enumerate_pp, lgv_count, Model};
use hankel_core::suites::{run_suite, Suite};

use crate::args::{Command, Format, IndexRange};

pub struct Output {
    pub text: String,
    pub failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn meta() -> Value {
    json!({"tool": "hankel", "version": env!("CARGO_PKG_VERSION")})
}

fn with_meta(mut v: Value) -> Value {
    if let Value::Object(map) = &mut v {
        map.insert("meta".into(), meta());
    }
    v
}

fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

fn csv_text<R: AsRef<[u8]>>(header: &[&str], rows: impl IntoIterator<Item = Vec<R>>) -> Result<String> {
    let io = |e: csv::Error| Error::InvalidArgument(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidArgument(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

fn b_json(b: Option<&Scalar>) -> Value {
    b.map_or(Value::Null, |b| Value::String(b.to_string()))
}

fn sequence(family: SequenceFamily, b: Option<&Scalar>) -> Result<MomentSequence> {
    if b.is_some() && !family.needs_b() {
        return Err(Error::InvalidArgument(format!(
            "--b does not apply to the {family} family"
        )));
    }
    MomentSequence::new(family, b.cloned())
}

pub fn run(cmd: &Command, format: Format) -> Result<Output> {
    match cmd {
        Command::Moments { family, b, count } => moments(*family, b.as_ref(), *count, format),
        Command::Poly { which, n, b, x } => poly(*which, *n, b.as_ref(), x.as_ref(), format),
        Command::Hankel { family, b, n, k } => hankel(*family, b.as_ref(), *n, *k, format),
        Command::Verify {
            suite,
            n_max,
            k_max,
            b,
            cap,
        } => verify(*suite, *n_max, *k_max, b.clone(), *cap, format),
        Command::EnumeratePp { n, k, list } => enumerate(*n, *k, *list, format),
        Command::Bijection { n, k, which } => bijection(*n, *k, *which, format),
    }
}

fn moments(family: SequenceFamily, b: Option<&Scalar>, count: usize, format: Format) -> Result<Output> {
    let terms: Vec<String> = sequence(family, b)?
        .terms(count)
        .iter()
        .map(ToString::to_string)
        .collect();
    let text = match format {
        Format::Text => format!("{}\n", terms.join(" ")),
        Format::Json => json_text(&with_meta(json!({
            "family": family.name(),
            "b": b_json(b),
            "terms": terms,
        }))),
        Format::Csv => csv_text(
            &["n", "value"],
            terms.iter().enumerate().map(|(n, t)| vec![n.to_string(), t.clone()]),
        )?,
    };
    Ok(Output::ok(text))
}

fn poly(which: PolyKind, n: IndexRange, b: Option<&Scalar>, x: Option<&Scalar>, format: Format) -> Result<Output> {
    let members: Vec<(usize, Poly)> = n
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|i| {
            let mut p = which.member(i);
            if let Some(b) = b {
                p = p.specialize_b(b);
            }
            if let Some(x) = x {
                p = p.eval_x(x);
            }
            (i, p)
        })
        .collect();
    let text = match format {
        Format::Text if n.is_single() => format!("{}\n", members[0].1),
        Format::Text => members.iter().map(|(i, p)| format!("{which}_{i} = {p}\n")).collect(),
        Format::Json => json_text(&with_meta(json!({
            "which": which.name(),
            "b": b_json(b),
            "x": b_json(x),
            "polys": members
                .iter()
                .map(|(i, p)| json!({"n": i, "poly": p.to_string()}))
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => csv_text(
            &["n", "poly"],
            members.iter().map(|(i, p)| vec![i.to_string(), p.to_string()]),
        )?,
    };
    Ok(Output::ok(text))
}

fn hankel(family: SequenceFamily, b: Option<&Scalar>, n: IndexRange, k: IndexRange, format: Format) -> Result<Output> {
    let table = HankelTable::new(sequence(family, b)?);
    let grid: Vec<(usize, usize)> = n.iter().flat_map(|i| k.iter().map(move |j| (i, j))).collect();
    // collect() keeps grid order
    let values: Vec<String> = grid.par_iter().map(|&(i, j)| table.get(i, j).to_string()).collect();
    let text = match format {
        Format::Text => {
            let mut out = String::from("n\\k");
            for j in k.iter() {
                out.push_str(&format!("\t{j}"));
            }
            out.push('\n');
            for (row, i) in values.chunks(k.hi - k.lo + 1).zip(n.iter()) {
                out.push_str(&i.to_string());
                for v in row {
                    out.push('\t');
                    out.push_str(v);
                }
                out.push('\n');
            }
            out
        }
        Format::Json => json_text(&with_meta(json!({
            "family": family.name(),
            "b": b_json(b),
            "values": grid
                .iter()
                .zip(&values)
                .map(|(&(i, j), v)| json!({"n": i, "k": j, "value": v}))
                .collect::<Vec<_>>(),
        }))),
        Format::Csv => csv_text(
            &["n", "k", "value"],
            grid.iter()
                .zip(&values)
                .map(|(&(i, j), v)| vec![i.to_string(), j.to_string(), v.clone()]),
        )?,
    };
    Ok(Output::ok(text))
}

fn report_text(r: &VerificationReport) -> String {
    let s = r.summary();
    let mut out = r.to_lines();
    for (key, value) in &r.findings {
        out.push_str(&format!("finding {key}: {value}\n"));
    }
    out.push_str(&format!(
        "{}: {} pass, {} fail, {} indeterminate\n",
        r.suite, s.pass, s.fail, s.indeterminate
    ));
    out
}

fn verify(
    suite: Suite,
    n_max: Option<usize>,
    k_max: Option<usize>,
    bs: Option<Vec<Scalar>>,
    cap: u64,
    format: Format,
) -> Result<Output> {
    let mut p = suite.default_params();
    p.n_max = n_max.unwrap_or(p.n_max);
    p.k_max = k_max.unwrap_or(p.k_max);
    p.bs = bs;
    p.cap = cap;
    let r = run_suite(suite, &p)?;
    let text = match format {
        Format::Text => report_text(&r),
        Format::Json => json_text(&r.to_json(Some(meta()))),
        Format::Csv => csv_text(
            &["suite", "n", "k", "b", "status", "lhs", "rhs"],
            r.records().into_iter().map(Vec::from),
        )?,
    };
    Ok(Output {
        text,
        failed: r.summary().fail > 0,
    })
}

fn enumerate(n: usize, k: usize, list: bool, format: Format) -> Result<Output> {
    let parts: Vec<String> = enumerate_pp(n, k as u32)?.map(|p| p.to_string()).collect();
    let text = match format {
        Format::Text => {
            let mut out = format!("{}\n", parts.len());
            if list {
                for p in &parts {
                    out.push_str(p);
                    out.push('\n');
                }
            }
            out
        }
        Format::Json => {
            let mut v = json!({"n": n, "k": k, "count": parts.len()});
            if list {
                v["partitions"] = json!(parts);
            }
            json_text(&with_meta(v))
        }
        Format::Csv if list => csv_text(&["partition"], parts.iter().map(|p| vec![p.as_str()]))?,
        Format::Csv => csv_text(
            &["n", "k", "count"],
            [vec![n.to_string(), k.to_string(), parts.len().to_string()]],
        )?,
    };
    Ok(Output::ok(text))
}

fn bijection(n: usize, k: usize, model: Model, format: Format) -> Result<Output> {
    let rows = bijection_rows(model, n, k)?;
    let (a, e) = endpoints(model, n, k);
    let lgv = lgv_count(&a, &e, model)?;
    let valid = rows.iter().filter(|r| r.valid).count();
    let round_trip = rows.iter().filter(|r| r.round_trip).count();
    let distinct = rows.iter().map(|r| &r.family).collect::<HashSet<_>>().len();
    let failed = valid < rows.len() || round_trip < rows.len() || distinct < rows.len() || lgv != distinct.into();
    let flag = |ok: bool, yes: &'static str, no: &'static str| if ok { yes } else { no };
    let text = match format {
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                out.push_str(&format!(
                    "{}\t{}\t{}\t{}\n",
                    r.partition,
                    r.family,
                    flag(r.valid, "valid", "invalid"),
                    flag(r.round_trip, "round-trip", "no-round-trip"),
                ));
            }
            out.push_str(&format!(
                "{}: {} partitions, {valid} valid, {round_trip} round-trip, {distinct} distinct, lgv {lgv}\n",
                model.name(),
                rows.len()
            ));
            out
        }
        Format::Json => json_text(&with_meta(json!({
            "n": n,
            "k": k,
            "which": model.name(),
            "rows": rows
                .iter()
                .map(|r| json!({
                    "partition": r.partition.to_string(),
                    "family": r.family.to_string(),
                    "valid": r.valid,
                    "round_trip": r.round_trip,
                }))
                .collect::<Vec<_>>(),
            "summary": {
                "partitions": rows.len(),
                "valid": valid,
                "round_trip": round_trip,
                "distinct": distinct,
                "lgv": lgv.to_string(),
            },
        }))),
        Format::Csv => csv_text(
            &["partition", "family", "valid", "round_trip"],
            rows.iter().map(|r| {
                vec![
                    r.partition.to_string(),
                    r.family.to_string(),
                    r.valid.to_string(),
                    r.round_trip.to_string(),
                ]
            }),
        )?,
    };
    Ok(Output { text, failed })
}
