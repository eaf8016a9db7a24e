//! Lattice paths over the Dyck alphabet `U = (1, 1)`, `D = (1, -1)` or the
//! monotone alphabet `H = (1, 0)`, `V = (0, -1)`.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub type Point = (i64, i64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Dyck,
    Hv,
}

impl Model {
    pub fn name(self) -> &'static str {
        match self {
            Model::Dyck => "dyck",
            Model::Hv => "hv",
        }
    }

    /// Step vectors, in the order used for enumeration.
    pub fn steps(self) -> [Step; 2] {
        match self {
            Model::Dyck => [Step::U, Step::D],
            Model::Hv => [Step::H, Step::V],
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Model {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "dyck" => Ok(Model::Dyck),
            "hv" => Ok(Model::Hv),
            _ => Err(Error::Parse(format!("unknown path model {s:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    U,
    D,
    H,
    V,
}

impl Step {
    pub fn delta(self) -> Point {
        match self {
            Step::U => (1, 1),
            Step::D => (1, -1),
            Step::H => (1, 0),
            Step::V => (0, -1),
        }
    }

    pub fn model(self) -> Model {
        match self {
            Step::U | Step::D => Model::Dyck,
            Step::H | Step::V => Model::Hv,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::H => 'H',
            Step::V => 'V',
        }
    }

    pub fn from_letter(c: char) -> Result<Step> {
        match c {
            'U' => Ok(Step::U),
            'D' => Ok(Step::D),
            'H' => Ok(Step::H),
            'V' => Ok(Step::V),
            _ => Err(Error::Parse(format!("unknown step {c:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: Point,
    pub steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Every lattice point visited, start included.
    pub fn points(&self) -> Vec<Point> {
        let mut p = self.start;
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        out.push(p);
        for s in &self.steps {
            let (dx, dy) = s.delta();
            p = (p.0 + dx, p.1 + dy);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> Point {
        *self.points().last().unwrap()
    }

    pub fn count(&self, step: Step) -> usize {
        self.steps.iter().filter(|&&s| s == step).count()
    }

    /// Steps all from `model`'s alphabet; Dyck paths also stay at height `>= 0`.
    pub fn check_model(&self, model: Model) -> Result<()> {
        if let Some(s) = self.steps.iter().find(|s| s.model() != model) {
            return Err(Error::InvalidFamily(format!(
                "step {} is not a {model} step",
                s.letter()
            )));
        }
        if model == Model::Dyck && self.points().iter().any(|p| p.1 < 0) {
            return Err(Error::InvalidFamily(format!("path {self} goes below the axis")));
        }
        Ok(())
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.start.0, self.start.1)?;
        if !self.steps.is_empty() {
            let s: String = self.steps.iter().map(|s| s.letter()).collect();
            write!(f, " {s}")?;
        }
        Ok(())
    }
}

impl FromStr for LatticePath {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad path {s:?}; expected \"(x,y) STEPS\""));
        let inner = s.strip_prefix('(').ok_or_else(bad)?;
        let (coords, rest) = inner.split_once(')').ok_or_else(bad)?;
        let (x, y) = coords.split_once(',').ok_or_else(bad)?;
        let x: i64 = x.trim().parse().map_err(|_| bad())?;
        let y: i64 = y.trim().parse().map_err(|_| bad())?;
        let steps = rest.trim().chars().map(Step::from_letter).collect::<Result<_>>()?;
        Ok(LatticePath::new((x, y), steps))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub model: Model,
    pub paths: Vec<LatticePath>,
}

impl PathFamily {
    pub fn new(model: Model, paths: Vec<LatticePath>) -> Self {
        PathFamily { model, paths }
    }

    /// No two paths share a lattice point.
    pub fn is_nonintersecting(&self) -> bool {
        let mut seen: HashSet<Point> = HashSet::new();
        for p in &self.paths {
            for q in p.points() {
                if !seen.insert(q) {
                    return false;
                }
            }
        }
        true
    }

    /// Model, endpoints (in order) and vertex-disjointness.
    pub fn validate(&self, starts: &[Point], ends: &[Point]) -> Result<()> {
        if self.paths.len() != starts.len() || self.paths.len() != ends.len() {
            return Err(Error::InvalidFamily(format!(
                "expected {} paths, got {}",
                starts.len(),
                self.paths.len()
            )));
        }
        for (i, p) in self.paths.iter().enumerate() {
            p.check_model(self.model)?;
            if p.start != starts[i] || p.end() != ends[i] {
                return Err(Error::InvalidFamily(format!(
                    "path {i} runs {:?} -> {:?}, expected {:?} -> {:?}",
                    p.start,
                    p.end(),
                    starts[i],
                    ends[i]
                )));
            }
        }
        if !self.is_nonintersecting() {
            return Err(Error::InvalidFamily("paths intersect".into()));
        }
        Ok(())
    }
}

impl fmt::Display for PathFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.paths.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("; "))
    }
}

impl PathFamily {
    /// Parse paths separated by `;`. The model is taken from the first step
    /// letter found, falling back to `default` for step-free input.
    pub fn parse(text: &str, default: Model) -> Result<Self> {
        let paths: Vec<LatticePath> = if text.trim().is_empty() {
            Vec::new()
        } else {
            text.split(';').map(str::parse).collect::<Result<_>>()?
        };
        let model = paths
            .iter()
            .flat_map(|p| p.steps.first())
            .next()
            .map_or(default, |s| s.model());
        Ok(PathFamily::new(model, paths))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_text() {
        let p: LatticePath = "(-1,4) HVVHV".parse().unwrap();
        assert_eq!(p.start, (-1, 4));
        assert_eq!(p.end(), (1, 1));
        assert_eq!(p.to_string(), "(-1,4) HVVHV");
        let bare: LatticePath = "(0,0)".parse().unwrap();
        assert!(bare.steps.is_empty());
        assert!("(0,0) X".parse::<LatticePath>().is_err());
        assert!("0,0 UD".parse::<LatticePath>().is_err());
    }

    #[test]
    fn dyck_floor() {
        let p: LatticePath = "(0,0) UDDU".parse().unwrap();
        assert!(p.check_model(Model::Dyck).is_err());
        assert!(p.check_model(Model::Hv).is_err());
    }

    #[test]
    fn family_checks() {
        let f = PathFamily::parse("(0,0) UD; (-2,0) UUUDDD", Model::Dyck).unwrap();
        assert_eq!(f.model, Model::Dyck);
        f.validate(&[(0, 0), (-2, 0)], &[(2, 0), (4, 0)]).unwrap();
        let crossing = PathFamily::parse("(0,0) UD; (-2,0) UUDDUD", Model::Dyck).unwrap();
        assert!(crossing.validate(&[(0, 0), (-2, 0)], &[(2, 0), (4, 0)]).is_err());
        assert_eq!(f.to_string(), "(0,0) UD; (-2,0) UUUDDD");
    }
}
