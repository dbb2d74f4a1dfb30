//! Global-best PSO with linearly decreasing inertia.
//!
//! Runs on the swarm engine of [`crate::bso`] with the antenna term switched
//! off (`lambda = 1`, `delta0 = 0`). No probes are evaluated, so no random
//! draws are spent on them and the draw order matches plain PSO.

use serde::{Deserialize, Serialize};

use crate::bso::{run_swarm, BsoConfig};
use crate::error::Result;
use crate::problem::Objective;
use crate::record::RunRecord;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", default, deny_unknown_fields)]
pub struct PsoConfig<T> {
    pub population: usize,
    pub max_iters: usize,
    pub a1: T,
    pub a2: T,
    pub omega_max: T,
    pub omega_min: T,
    pub v_fraction: T,
    pub v_max: Option<T>,
    pub v_min: Option<T>,
    pub componentwise_r: bool,
    pub seed: u64,
    pub record_positions: bool,
}

impl<T: Scalar> Default for PsoConfig<T> {
    fn default() -> Self {
        let b = BsoConfig::<T>::default();
        Self {
            population: b.population,
            max_iters: b.max_iters,
            a1: b.a1,
            a2: b.a2,
            omega_max: b.omega_max,
            omega_min: b.omega_min,
            v_fraction: b.v_fraction,
            v_max: b.v_max,
            v_min: b.v_min,
            componentwise_r: b.componentwise_r,
            seed: b.seed,
            record_positions: b.record_positions,
        }
    }
}

impl<T: Scalar> PsoConfig<T> {
    /// The equivalent swarm configuration with the antenna term disabled.
    pub fn as_bso(&self) -> BsoConfig<T> {
        BsoConfig {
            population: self.population,
            max_iters: self.max_iters,
            lambda: T::one(),
            a1: self.a1,
            a2: self.a2,
            omega_max: self.omega_max,
            omega_min: self.omega_min,
            delta0: T::zero(),
            v_fraction: self.v_fraction,
            v_max: self.v_max,
            v_min: self.v_min,
            componentwise_r: self.componentwise_r,
            seed: self.seed,
            record_positions: self.record_positions,
            ..BsoConfig::default()
        }
    }
}

pub fn run_pso<T: Scalar>(problem: &dyn Objective<T>, config: &PsoConfig<T>) -> Result<RunRecord<T>> {
    let snapshot = serde_json::to_value(config)?;
    run_swarm(problem, &config.as_bso(), "pso", snapshot)
}
