//! Beetle swarm optimization (BSO), beetle antennae search (BAS) and a
//! global-best PSO baseline, with the classic 23-function benchmark suite,
//! penalty-handled engineering problems and a repeated-trial harness.
//!
//! Everything is generic over [`Scalar`] (`f32` or `f64`); the `*64` and
//! `*32` aliases below fix the type.
//!
//! ```
//! use bso_core::{run_bso, Benchmark, BenchmarkId, BsoConfig64};
//!
//! let problem = Benchmark::<f64>::new(BenchmarkId::F16);
//! let config = BsoConfig64 { max_iters: 200, seed: 7, ..Default::default() };
//! let record = run_bso(&problem, &config).unwrap();
//! assert!(record.best_f < -1.03);
//! ```

pub mod bas;
pub mod benchmarks;
pub mod bso;
pub mod catalog;
pub mod constrained;
mod error;
pub mod harness;
pub mod problem;
pub mod pso;
mod record;
pub mod rng;
mod scalar;
pub mod schedule;
pub mod space;

pub use bas::{run_bas, BasConfig, BasState};
pub use benchmarks::{Benchmark, BenchmarkId, BenchmarkSpec};
pub use bso::{run_bso, BsoConfig, SwarmState};
pub use catalog::ProblemId;
pub use constrained::{ConstrainedId, ConstrainedProblem, PenalizedProblem, PenaltyConfig};
pub use error::{Error, Result};
pub use harness::{run_trials, Algorithm, TrialSummary};
pub use problem::{FnProblem, Objective};
pub use pso::{run_pso, PsoConfig};
pub use record::RunRecord;
pub use rng::RandomStream;
pub use scalar::Scalar;
pub use schedule::{ScheduleKind, StepSchedule};
pub use space::{clamp_to_bounds, uniform_in_space, SearchSpace};

pub type SearchSpace64 = SearchSpace<f64>;
pub type SearchSpace32 = SearchSpace<f32>;
pub type BsoConfig64 = BsoConfig<f64>;
pub type BsoConfig32 = BsoConfig<f32>;
pub type PsoConfig64 = PsoConfig<f64>;
pub type PsoConfig32 = PsoConfig<f32>;
pub type BasConfig64 = BasConfig<f64>;
pub type BasConfig32 = BasConfig<f32>;
pub type RunRecord64 = RunRecord<f64>;
pub type RunRecord32 = RunRecord<f32>;
pub type Benchmark64 = Benchmark<f64>;
pub type Benchmark32 = Benchmark<f32>;
pub type Algorithm64 = Algorithm<f64>;
pub type PenaltyConfig64 = PenaltyConfig<f64>;
pub type ConstrainedProblem64 = ConstrainedProblem<f64>;
