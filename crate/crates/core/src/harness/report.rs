use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Source, TrialSummary};
use crate::error::{invalid, io_at, Result};

pub const REPORT_SCHEMA: &str = "bso-compare-report/v1";

/// Problems as rows, algorithms as column groups.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonReport {
    pub schema: String,
    pub algorithms: Vec<String>,
    pub problems: Vec<String>,
    pub rows: Vec<ReportRow>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub problem: String,
    pub cells: Vec<ReportCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportCell {
    pub algorithm: String,
    pub source: Source,
    pub n_trials: usize,
    pub ave: f64,
    pub std: f64,
    pub ave_time_s: f64,
    pub best: f64,
}

/// Benchmarks sort by number, anything else after them by name.
fn problem_key(id: &str) -> (u8, usize, String) {
    match id.strip_prefix('F').and_then(|d| d.parse::<usize>().ok()) {
        Some(n) => (0, n, String::new()),
        None => (1, 0, id.to_string()),
    }
}

impl ComparisonReport {
    pub fn build(summaries: &[TrialSummary]) -> Result<Self> {
        if summaries.is_empty() {
            return Err(invalid("no summaries to report"));
        }
        let mut algorithms: Vec<String> = Vec::new();
        let mut sets: HashMap<&str, BTreeSet<&str>> = HashMap::new();
        let mut cells: HashMap<(&str, &str), &TrialSummary> = HashMap::new();
        for s in summaries {
            if !algorithms.contains(&s.algorithm) {
                algorithms.push(s.algorithm.clone());
            }
            sets.entry(&s.algorithm).or_default().insert(&s.problem);
            if cells.insert((&s.algorithm, &s.problem), s).is_some() {
                return Err(invalid(format!(
                    "duplicate summary for {} on {}",
                    s.algorithm, s.problem
                )));
            }
        }
        let reference = &sets[algorithms[0].as_str()];
        for alg in &algorithms[1..] {
            let set = &sets[alg.as_str()];
            if set != reference {
                let missing: Vec<_> = reference.difference(set).collect();
                let extra: Vec<_> = set.difference(reference).collect();
                return Err(invalid(format!(
                    "problem sets differ: {alg} lacks {missing:?} and adds {extra:?} relative to {}",
                    algorithms[0]
                )));
            }
        }
        let mut problems: Vec<String> = reference.iter().map(|p| p.to_string()).collect();
        problems.sort_by_key(|p| problem_key(p));
        let rows = problems
            .iter()
            .map(|p| ReportRow {
                problem: p.clone(),
                cells: algorithms
                    .iter()
                    .map(|a| {
                        let s = cells[&(a.as_str(), p.as_str())];
                        ReportCell {
                            algorithm: a.clone(),
                            source: s.source,
                            n_trials: s.n_trials,
                            ave: s.ave,
                            std: s.std,
                            ave_time_s: s.ave_time_s,
                            best: s.best,
                        }
                    })
                    .collect(),
            })
            .collect();
        Ok(Self {
            schema: REPORT_SCHEMA.to_string(),
            algorithms,
            problems,
            rows,
        })
    }

    /// Aligned plain-text table. Numbers use the shortest representation that
    /// parses back to the same f64, so the text and JSON forms agree exactly.
    pub fn to_text(&self) -> String {
        const COLS: [&str; 3] = ["ave", "std", "ave_time(s)"];
        let mut table: Vec<Vec<String>> = Vec::new();
        let mut head1 = vec!["F".to_string()];
        let mut head2 = vec![String::new()];
        for a in &self.algorithms {
            let literature = self
                .rows
                .first()
                .and_then(|r| r.cells.iter().find(|c| &c.algorithm == a))
                .is_some_and(|c| c.source == Source::Literature);
            let label = if literature { format!("{a} (literature)") } else { a.clone() };
            head1.extend([label, String::new(), String::new()]);
            head2.extend(COLS.iter().map(|c| c.to_string()));
        }
        table.push(head1);
        table.push(head2);
        for row in &self.rows {
            let mut line = vec![row.problem.clone()];
            for c in &row.cells {
                line.extend([format!("{:e}", c.ave), format!("{:e}", c.std), format!("{:e}", c.ave_time_s)]);
            }
            table.push(line);
        }
        let ncols = table[0].len();
        let widths: Vec<usize> = (0..ncols)
            .map(|j| table.iter().map(|r| r[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for r in &table {
            let cells: Vec<String> = r
                .iter()
                .zip(&widths)
                .map(|(c, &w)| format!("{c:<w$}"))
                .collect();
            let _ = writeln!(out, "{}", cells.join("  ").trim_end());
        }
        out
    }

    /// Parses the numeric body of [`ComparisonReport::to_text`] back into
    /// `(problem, [ave, std, ave_time_s] per algorithm)`.
    pub fn parse_text(text: &str) -> Result<Vec<(String, Vec<[f64; 3]>)>> {
        let mut out = Vec::new();
        for line in text.lines().skip(2).filter(|l| !l.trim().is_empty()) {
            let mut parts = line.split_whitespace();
            let problem = parts.next().ok_or_else(|| invalid("empty report line"))?.to_string();
            let nums: Vec<f64> = parts
                .map(|p| p.parse::<f64>().map_err(|_| invalid(format!("bad number {p:?}"))))
                .collect::<Result<_>>()?;
            if nums.len() % 3 != 0 {
                return Err(invalid(format!("row {problem} has {} numbers", nums.len())));
            }
            out.push((problem, nums.chunks(3).map(|c| [c[0], c[1], c[2]]).collect()));
        }
        Ok(out)
    }
}

/// Writes `report.json` and `report.txt` into `dir` and returns the report.
pub fn compare_report(summaries: &[TrialSummary], dir: impl AsRef<Path>) -> Result<ComparisonReport> {
    let report = ComparisonReport::build(summaries)?;
    let dir = dir.as_ref();
    fs::create_dir_all(dir).map_err(io_at(dir))?;
    let json_path = dir.join("report.json");
    fs::write(&json_path, serde_json::to_string_pretty(&report)?).map_err(io_at(&json_path))?;
    let text_path = dir.join("report.txt");
    fs::write(&text_path, report.to_text()).map_err(io_at(&text_path))?;
    Ok(report)
}

/// Loads externally supplied summaries (a JSON array of [`TrialSummary`]) and marks them as literature rows.
pub fn load_literature(path: impl AsRef<Path>) -> Result<Vec<TrialSummary>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(io_at(path))?;
    let mut rows: Vec<TrialSummary> = serde_json::from_str(&text)?;
    for r in &mut rows {
        r.source = Source::Literature;
    }
    Ok(rows)
}
