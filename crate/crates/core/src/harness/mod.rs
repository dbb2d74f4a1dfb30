//! Repeated-trial experiments, summary statistics, and CSV/JSON/text export.

mod export;
mod report;

pub use export::{export_convergence, export_trajectory, read_convergence};
pub use report::{compare_report, load_literature, ComparisonReport, ReportCell, ReportRow, REPORT_SCHEMA};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bas::{run_bas, BasConfig};
use crate::bso::{run_bso, BsoConfig};
use crate::error::{invalid, Error, Result};
use crate::problem::Objective;
use crate::pso::{run_pso, PsoConfig};
use crate::record::RunRecord;
use crate::scalar::Scalar;

/// An optimizer together with its configuration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "algorithm", rename_all = "lowercase", bound = "T: Scalar")]
pub enum Algorithm<T> {
    Bso(BsoConfig<T>),
    Pso(PsoConfig<T>),
    Bas(BasConfig<T>),
}

impl<T: Scalar> Algorithm<T> {
    pub fn id(&self) -> &'static str {
        match self {
            Self::Bso(_) => "bso",
            Self::Pso(_) => "pso",
            Self::Bas(_) => "bas",
        }
    }

    pub fn seed(&self) -> u64 {
        match self {
            Self::Bso(c) => c.seed,
            Self::Pso(c) => c.seed,
            Self::Bas(c) => c.seed,
        }
    }

    pub fn with_seed(&self, seed: u64) -> Self {
        let mut out = self.clone();
        match &mut out {
            Self::Bso(c) => c.seed = seed,
            Self::Pso(c) => c.seed = seed,
            Self::Bas(c) => c.seed = seed,
        }
        out
    }

    pub fn run(&self, problem: &dyn Objective<T>) -> Result<RunRecord<T>> {
        match self {
            Self::Bso(c) => run_bso(problem, c),
            Self::Pso(c) => run_pso(problem, c),
            Self::Bas(c) => run_bas(problem, c),
        }
    }
}

impl std::str::FromStr for Algorithm<f64> {
    type Err = Error;

    /// Default-configured algorithm from its id.
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bso" => Ok(Self::Bso(BsoConfig::default())),
            "pso" => Ok(Self::Pso(PsoConfig::default())),
            "bas" => Ok(Self::Bas(BasConfig::default())),
            _ => Err(Error::NotFound(format!("unknown algorithm {s}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    #[default]
    Measured,
    /// Numbers quoted from published results rather than produced here.
    Literature,
}

/// Statistics over the final best fitness of repeated trials.
///
/// `std` is the sample standard deviation (divisor n - 1), and 0 for a single trial.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialSummary {
    pub problem: String,
    pub algorithm: String,
    #[serde(default)]
    pub source: Source,
    pub n_trials: usize,
    pub ave: f64,
    pub std: f64,
    pub ave_time_s: f64,
    pub best: f64,
    #[serde(default)]
    pub median: f64,
    #[serde(default)]
    pub seeds: Vec<u64>,
    #[serde(default)]
    pub finals: Vec<f64>,
}

impl TrialSummary {
    /// Builds a summary from per-trial results. Statistics are computed on the
    /// sorted finals so they do not depend on trial order.
    pub fn from_finals(
        problem: impl Into<String>,
        algorithm: impl Into<String>,
        finals: &[f64],
        times: &[f64],
        seeds: Vec<u64>,
    ) -> Result<Self> {
        if finals.is_empty() {
            return Err(invalid("summary needs at least one trial"));
        }
        let n = finals.len();
        let mut sorted = finals.to_vec();
        sorted.sort_by(f64::total_cmp);
        let ave = sorted.iter().sum::<f64>() / n as f64;
        let std = if n == 1 {
            0.0
        } else {
            (sorted.iter().map(|v| (v - ave) * (v - ave)).sum::<f64>() / (n - 1) as f64).sqrt()
        };
        let median = if n % 2 == 1 {
            sorted[n / 2]
        } else {
            0.5 * (sorted[n / 2 - 1] + sorted[n / 2])
        };
        let ave_time_s = if times.is_empty() {
            0.0
        } else {
            times.iter().sum::<f64>() / times.len() as f64
        };
        // rounding in the mean can land just below the smallest final
        let best = sorted[0].min(ave);
        Ok(Self {
            problem: problem.into(),
            algorithm: algorithm.into(),
            source: Source::Measured,
            n_trials: n,
            ave,
            std,
            ave_time_s,
            best,
            median,
            seeds,
            finals: finals.to_vec(),
        })
    }

    pub fn from_records<T: Scalar>(records: &[RunRecord<T>]) -> Result<Self> {
        let first = records.first().ok_or_else(|| invalid("no trial records"))?;
        let finals: Vec<f64> = records.iter().map(|r| r.best_f.as_f64()).collect();
        let times: Vec<f64> = records.iter().map(|r| r.wall_time_s).collect();
        let seeds = records.iter().map(|r| r.seed).collect();
        Self::from_finals(first.problem.clone(), first.algorithm.clone(), &finals, &times, seeds)
    }

    /// True if every statistic except timing matches `other` exactly.
    pub fn same_statistics(&self, other: &Self) -> bool {
        self.problem == other.problem
            && self.algorithm == other.algorithm
            && self.n_trials == other.n_trials
            && self.ave.to_bits() == other.ave.to_bits()
            && self.std.to_bits() == other.std.to_bits()
            && self.best.to_bits() == other.best.to_bits()
            && self.median.to_bits() == other.median.to_bits()
            && self.seeds == other.seeds
    }
}

/// Seed of trial `i`.
pub fn trial_seed(base_seed: u64, i: usize) -> u64 {
    base_seed.wrapping_add(i as u64)
}

/// Runs `n_trials` independent runs with seeds `base_seed + i`, one after another.
pub fn collect_trials<T: Scalar>(
    algorithm: &Algorithm<T>,
    problem: &dyn Objective<T>,
    n_trials: usize,
    base_seed: u64,
) -> Result<Vec<RunRecord<T>>> {
    if n_trials == 0 {
        return Err(invalid("n_trials must be at least 1"));
    }
    (0..n_trials)
        .map(|i| algorithm.with_seed(trial_seed(base_seed, i)).run(problem))
        .collect()
}

/// Parallel version of [`collect_trials`] on the current rayon pool. Results
/// are returned in trial order and are identical to the serial ones.
pub fn collect_trials_parallel<T: Scalar>(
    algorithm: &Algorithm<T>,
    problem: &(dyn Objective<T> + Sync),
    n_trials: usize,
    base_seed: u64,
) -> Result<Vec<RunRecord<T>>> {
    if n_trials == 0 {
        return Err(invalid("n_trials must be at least 1"));
    }
    (0..n_trials)
        .into_par_iter()
        .map(|i| algorithm.with_seed(trial_seed(base_seed, i)).run(problem))
        .collect()
}

pub fn run_trials<T: Scalar>(
    algorithm: &Algorithm<T>,
    problem: &dyn Objective<T>,
    n_trials: usize,
    base_seed: u64,
) -> Result<TrialSummary> {
    TrialSummary::from_records(&collect_trials(algorithm, problem, n_trials, base_seed)?)
}

pub fn run_trials_parallel<T: Scalar>(
    algorithm: &Algorithm<T>,
    problem: &(dyn Objective<T> + Sync),
    n_trials: usize,
    base_seed: u64,
) -> Result<TrialSummary> {
    TrialSummary::from_records(&collect_trials_parallel(algorithm, problem, n_trials, base_seed)?)
}
