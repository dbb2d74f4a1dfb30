//! One namespace for every problem id: benchmarks `F1`..`F23` plus the
//! constrained problems `PV` and `HB`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::{self, Benchmark, BenchmarkId};
use crate::constrained::{ConstrainedId, ConstrainedProblem, PenalizedProblem, PenaltyConfig};
use crate::error::{Error, Result};
use crate::problem::Objective;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProblemId {
    Benchmark(BenchmarkId),
    Constrained(ConstrainedId),
}

impl fmt::Display for ProblemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Benchmark(id) => id.fmt(f),
            Self::Constrained(id) => id.fmt(f),
        }
    }
}

impl FromStr for ProblemId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if let Ok(id) = s.parse::<BenchmarkId>() {
            return Ok(Self::Benchmark(id));
        }
        if let Ok(id) = s.parse::<ConstrainedId>() {
            return Ok(Self::Constrained(id));
        }
        Err(Error::NotFound(format!("unknown problem {s}")))
    }
}

/// Parses a comma-separated problem list. Items may be ranges such as `F1..F13`.
pub fn parse_problem_list(text: &str) -> Result<Vec<ProblemId>> {
    let mut out = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        if let Some((a, b)) = item.split_once("..") {
            let lo: BenchmarkId = a.trim().parse()?;
            let hi: BenchmarkId = b.trim().parse()?;
            if lo > hi {
                return Err(Error::InvalidArgument(format!("empty range {item}")));
            }
            out.extend(
                BenchmarkId::ALL
                    .iter()
                    .filter(|&&id| id >= lo && id <= hi)
                    .map(|&id| ProblemId::Benchmark(id)),
            );
        } else {
            out.push(item.parse()?);
        }
    }
    if out.is_empty() {
        return Err(Error::InvalidArgument("no problems given".into()));
    }
    Ok(out)
}

/// Builds the objective for an id. Constrained problems are wrapped with `penalty`.
pub fn build_problem<T: Scalar>(
    id: ProblemId,
    dim: Option<usize>,
    penalty: PenaltyConfig<T>,
) -> Result<Box<dyn Objective<T> + Send + Sync>> {
    match id {
        ProblemId::Benchmark(b) => {
            let bench = match dim {
                Some(d) => Benchmark::with_dim(b, d)?,
                None => Benchmark::new(b),
            };
            Ok(Box::new(bench))
        }
        ProblemId::Constrained(c) => {
            if dim.is_some() {
                return Err(Error::InvalidArgument(format!("{c} has a fixed dimension")));
            }
            Ok(Box::new(PenalizedProblem::new(ConstrainedProblem::new(c), penalty)))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Range {
    Uniform([f64; 2]),
    PerDimension(Vec<[f64; 2]>),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub id: String,
    pub name: String,
    pub family: String,
    pub dim: usize,
    pub range: Range,
    pub fmin: Option<f64>,
    pub stochastic: bool,
}

/// Machine-readable listing of every problem.
pub fn catalog() -> Vec<CatalogEntry> {
    let mut out: Vec<CatalogEntry> = benchmarks::catalog()
        .into_iter()
        .map(|s| CatalogEntry {
            id: s.id.to_string(),
            name: s.name,
            family: match s.id.number() {
                1..=7 => "unimodal",
                8..=13 => "multimodal",
                _ => "fixed-dimension multimodal",
            }
            .to_string(),
            dim: s.dim,
            range: Range::Uniform([s.lower, s.upper]),
            fmin: Some(s.fmin),
            stochastic: s.stochastic,
        })
        .collect();
    for id in ConstrainedId::ALL {
        let p = ConstrainedProblem::<f64>::new(id);
        out.push(CatalogEntry {
            id: id.to_string(),
            name: match id {
                ConstrainedId::PressureVessel => "pressure vessel design",
                ConstrainedId::Himmelblau => "himmelblau nonlinear problem",
            }
            .to_string(),
            family: "constrained".to_string(),
            dim: p.space().dim(),
            range: Range::PerDimension(
                p.space()
                    .lower()
                    .iter()
                    .zip(p.space().upper())
                    .map(|(&lo, &hi)| [lo, hi])
                    .collect(),
            ),
            fmin: None,
            stochastic: false,
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_ids_and_ranges() {
        assert_eq!(parse_problem_list("F1..F23").unwrap().len(), 23);
        let l = parse_problem_list("F16, pv,F1..F3").unwrap();
        assert_eq!(l.len(), 5);
        assert_eq!(l[1], ProblemId::Constrained(ConstrainedId::PressureVessel));
        assert!(parse_problem_list("F3..F1").is_err());
        assert!(parse_problem_list("F99").is_err());
        assert!(parse_problem_list("").is_err());
    }

    #[test]
    fn unknown_problem_message() {
        let err = "F99".parse::<ProblemId>().unwrap_err();
        assert_eq!(err.to_string(), "not found: unknown problem F99");
    }

    #[test]
    fn catalog_has_all_problems() {
        let c = catalog();
        assert_eq!(c.len(), 25);
        let json = serde_json::to_string(&c).unwrap();
        let back: Vec<CatalogEntry> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn builds_each_problem() {
        for e in catalog() {
            let id: ProblemId = e.id.parse().unwrap();
            let p = build_problem::<f64>(id, None, PenaltyConfig::default()).unwrap();
            assert_eq!(p.dim(), e.dim);
        }
        assert!(build_problem::<f64>("F9".parse().unwrap(), Some(2), PenaltyConfig::default()).is_ok());
        assert!(build_problem::<f64>("PV".parse().unwrap(), Some(2), PenaltyConfig::default()).is_err());
    }
}
