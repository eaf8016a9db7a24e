//! Cell-by-cell verification reports and their serialized forms.

use std::collections::BTreeMap;
use std::fmt::Display;

use serde_json::{json, Map, Value};

use crate::exact::scalar::format_scalar;
use crate::exact::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Status {
    Pass,
    Fail,
    Indeterminate,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Indeterminate => "indeterminate",
        }
    }
}

/// One checked grid point. `case` distinguishes sub-checks sharing `(n, k, b)`
/// (e.g. the polynomial family in a condensation sweep); it is empty when unused.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub n: u32,
    pub k: u32,
    pub b: Option<Scalar>,
    pub case: String,
    pub status: Status,
    pub lhs: String,
    pub rhs: String,
}

impl Cell {
    pub fn new(n: usize, k: usize, b: Option<&Scalar>, case: &str) -> CellBuilder {
        CellBuilder {
            n: n as u32,
            k: k as u32,
            b: b.cloned(),
            case: case.to_string(),
        }
    }

    fn sort_key(&self) -> (u32, u32, Option<&Scalar>, &str) {
        (self.n, self.k, self.b.as_ref(), &self.case)
    }
}

pub struct CellBuilder {
    n: u32,
    k: u32,
    b: Option<Scalar>,
    case: String,
}

impl CellBuilder {
    /// Pass iff `lhs == rhs`.
    pub fn compare<T: PartialEq + Display + ?Sized>(self, lhs: &T, rhs: &T) -> Cell {
        let status = if lhs == rhs { Status::Pass } else { Status::Fail };
        self.with_status(status, lhs.to_string(), rhs.to_string())
    }

    pub fn with_status(self, status: Status, lhs: String, rhs: String) -> Cell {
        Cell {
            n: self.n,
            k: self.k,
            b: self.b,
            case: self.case,
            status,
            lhs,
            rhs,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: BTreeMap<String, Value>,
    pub cells: Vec<Cell>,
    /// Free-form conclusions drawn from the whole grid (e.g. a fitted sign law).
    pub findings: BTreeMap<String, String>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub indeterminate: usize,
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>) -> Self {
        VerificationReport {
            suite: suite.into(),
            grid: BTreeMap::new(),
            cells: Vec::new(),
            findings: BTreeMap::new(),
        }
    }

    pub fn grid(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.grid.insert(key.to_string(), value.into());
        self
    }

    pub fn push(&mut self, cell: Cell) {
        self.cells.push(cell);
    }

    pub fn extend(&mut self, cells: impl IntoIterator<Item = Cell>) {
        self.cells.extend(cells);
    }

    pub fn finding(&mut self, key: &str, value: impl Into<String>) {
        self.findings.insert(key.to_string(), value.into());
    }

    /// Restores canonical `(n, k, b, case)` order, independent of how cells were produced.
    pub fn sort(&mut self) {
        self.cells.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for c in &self.cells {
            match c.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Indeterminate => s.indeterminate += 1,
            }
        }
        s
    }

    /// No failing cells. An empty report passes.
    pub fn passed(&self) -> bool {
        self.summary().fail == 0
    }

    pub fn first_failure(&self) -> Option<&Cell> {
        self.cells.iter().find(|c| c.status == Status::Fail)
    }

    /// JSON value with sorted keys; `meta` is attached verbatim when given.
    pub fn to_json(&self, meta: Option<Value>) -> Value {
        let cells: Vec<Value> = self
            .cells
            .iter()
            .map(|c| {
                json!({
                    "n": c.n,
                    "k": c.k,
                    "b": c.b.as_ref().map(format_scalar),
                    "case": c.case,
                    "status": c.status.as_str(),
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                })
            })
            .collect();
        let s = self.summary();
        let mut obj = Map::new();
        obj.insert("suite".into(), Value::String(self.suite.clone()));
        obj.insert("grid".into(), Value::Object(self.grid.clone().into_iter().collect()));
        obj.insert("cells".into(), Value::Array(cells));
        obj.insert(
            "summary".into(),
            json!({"pass": s.pass, "fail": s.fail, "indeterminate": s.indeterminate}),
        );
        if !self.findings.is_empty() {
            obj.insert(
                "findings".into(),
                Value::Object(
                    self.findings
                        .iter()
                        .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                        .collect(),
                ),
            );
        }
        if let Some(meta) = meta {
            obj.insert("meta".into(), meta);
        }
        Value::Object(obj)
    }

    /// Line records `suite, n, k, b, status, lhs, rhs`. The suite column carries
    /// `suite:case` when a case label is present.
    pub fn records(&self) -> Vec<[String; 7]> {
        self.cells
            .iter()
            .map(|c| {
                let suite = if c.case.is_empty() {
                    self.suite.clone()
                } else {
                    format!("{}:{}", self.suite, c.case)
                };
                [
                    suite,
                    c.n.to_string(),
                    c.k.to_string(),
                    c.b.as_ref().map(format_scalar).unwrap_or_default(),
                    c.status.as_str().to_string(),
                    c.lhs.clone(),
                    c.rhs.clone(),
                ]
            })
            .collect()
    }

    /// Tab-separated rendering of [`records`](Self::records), one cell per line.
    pub fn to_lines(&self) -> String {
        let mut out = String::new();
        for r in self.records() {
            out.push_str(&r.join("\t"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{int, ratio};

    #[test]
    fn summary_and_json() {
        let mut r = VerificationReport::new("demo").grid("n_max", 2);
        r.push(Cell::new(1, 0, None, "").compare(&int(3), &int(3)));
        r.push(Cell::new(0, 2, Some(&ratio(-3, 2)), "x").compare(&int(1), &int(2)));
        r.sort();
        assert_eq!(r.cells[0].n, 0);
        assert!(!r.passed());
        assert_eq!(r.first_failure().unwrap().b, Some(ratio(-3, 2)));
        let text = serde_json::to_string(&r.to_json(None)).unwrap();
        let reparsed: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(serde_json::to_string(&reparsed).unwrap(), text);
        assert!(text.contains("\"b\":\"-3/2\""));
        assert!(text.contains("\"summary\":{\"fail\":1,\"indeterminate\":0,\"pass\":1}"));
        assert_eq!(r.to_lines().lines().next().unwrap(), "demo:x\t0\t2\t-3/2\tfail\t1\t2");
    }
}
