use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Outcome of one optimizer run.
///
/// Equality ignores `wall_time_s`; everything else is reproducible from the seed.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct RunRecord<T> {
    pub algorithm: String,
    pub problem: String,
    pub seed: u64,
    /// Best-so-far fitness after each iteration; entry 0 is the initial state.
    pub curve: Vec<T>,
    pub best_x: Vec<T>,
    pub best_f: T,
    pub wall_time_s: f64,
    /// True if the step schedule ever had to be floored.
    pub stalled: bool,
    /// Effective configuration, sufficient to reproduce the run.
    pub config: serde_json::Value,
    /// Positions per iteration (entry 0 is the initial population), when recording was requested.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trajectory: Option<Vec<Vec<Vec<T>>>>,
}

impl<T: Scalar> RunRecord<T> {
    pub fn iterations(&self) -> usize {
        self.curve.len().saturating_sub(1)
    }

    pub fn is_monotone(&self) -> bool {
        self.curve.windows(2).all(|w| w[1] <= w[0])
    }
}

impl<T: Scalar> PartialEq for RunRecord<T> {
    fn eq(&self, other: &Self) -> bool {
        fn bits<T: Scalar>(v: &[T]) -> Vec<u64> {
            v.iter().map(|x| x.as_f64().to_bits()).collect()
        }
        self.algorithm == other.algorithm
            && self.problem == other.problem
            && self.seed == other.seed
            && bits(&self.curve) == bits(&other.curve)
            && bits(&self.best_x) == bits(&other.best_x)
            && self.best_f.as_f64().to_bits() == other.best_f.as_f64().to_bits()
            && self.stalled == other.stalled
            && self.config == other.config
            && self.trajectory == other.trajectory
    }
}
