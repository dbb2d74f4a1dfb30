//! Beetle antennae search: a single beetle probes the objective at two antenna
//! tips and steps toward the lower reading.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::problem::Objective;
use crate::record::RunRecord;
use crate::rng::{RandomStream, GENERATOR_NAME};
use crate::scalar::Scalar;
use crate::schedule::{ScheduleKind, StepSchedule};
use crate::space::uniform_in_space;

/// Default initial step as a fraction of the widest box side.
pub const DEFAULT_STEP_FRACTION: f64 = 0.3;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", default, deny_unknown_fields)]
pub struct BasConfig<T> {
    /// Initial step; `None` means 30% of the widest box side.
    pub delta0: Option<T>,
    pub eta: T,
    pub c2_ratio: T,
    pub schedule: ScheduleKind,
    pub c1: T,
    pub delta_floor: T,
    pub max_iters: usize,
    pub seed: u64,
    pub record_positions: bool,
}

impl<T: Scalar> Default for BasConfig<T> {
    fn default() -> Self {
        Self {
            delta0: None,
            eta: T::lit(0.95),
            c2_ratio: T::lit(5.0),
            schedule: ScheduleKind::Geometric,
            c1: T::lit(0.5),
            delta_floor: T::zero(),
            max_iters: 1000,
            seed: 0,
            record_positions: false,
        }
    }
}

impl<T: Scalar> BasConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if !(self.eta > T::zero() && self.eta <= T::one()) {
            return Err(invalid(format!("eta must lie in (0, 1], got {}", self.eta)));
        }
        if !(self.c2_ratio > T::zero()) {
            return Err(invalid(format!("c2_ratio must be positive, got {}", self.c2_ratio)));
        }
        if let Some(d) = self.delta0 {
            if !(d > T::zero()) {
                return Err(invalid(format!("delta0 must be positive, got {d}")));
            }
        }
        Ok(())
    }

    pub fn step_schedule(&self) -> StepSchedule<T> {
        StepSchedule {
            kind: self.schedule,
            eta: self.eta,
            c1: self.c1,
            delta_floor: self.delta_floor,
            c2_ratio: self.c2_ratio,
        }
    }

    pub fn initial_step(&self, problem: &dyn Objective<T>) -> T {
        self.delta0
            .unwrap_or_else(|| T::lit(DEFAULT_STEP_FRACTION) * problem.space().max_width())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BasState<T> {
    pub x: Vec<T>,
    pub delta: T,
    pub d: T,
    pub t: usize,
    pub best_x: Vec<T>,
    pub best_f: T,
}

/// Scales a raw draw to unit length; `None` for the all-zero vector.
pub fn normalize_direction<T: Scalar>(raw: &[T]) -> Option<Vec<T>> {
    let norm = raw.iter().fold(T::zero(), |acc, &v| acc + v * v).sqrt();
    if norm > T::zero() && norm.is_finite() {
        Some(raw.iter().map(|&v| v / norm).collect())
    } else {
        None
    }
}

/// Random unit search direction: i.i.d. components uniform in [-1, 1), normalized.
pub fn sample_direction<T: Scalar>(rng: &mut RandomStream, dim: usize) -> Vec<T> {
    assert!(dim >= 1, "direction needs at least one dimension");
    loop {
        let raw: Vec<T> = (0..dim).map(|_| rng.symmetric()).collect();
        if let Some(b) = normalize_direction(&raw) {
            return b;
        }
    }
}

/// Antenna tips `x ± (d/2)·b`, returned as `(right, left)`.
pub fn antennae<T: Scalar>(x: &[T], b: &[T], d: T) -> (Vec<T>, Vec<T>) {
    let half = d / T::lit(2.0);
    let right = x.iter().zip(b).map(|(&xi, &bi)| xi + half * bi).collect();
    let left = x.iter().zip(b).map(|(&xi, &bi)| xi - half * bi).collect();
    (right, left)
}

/// Moves `x` by `-delta·b·sign(f_right - f_left)`: toward the lower antenna.
pub fn detect_move<T: Scalar>(x: &[T], b: &[T], delta: T, f_right: T, f_left: T) -> Vec<T> {
    let s = (f_right - f_left).signum0();
    x.iter().zip(b).map(|(&xi, &bi)| xi - delta * bi * s).collect()
}

fn consider<T: Scalar>(state: &mut BasState<T>, x: &[T], f: T) {
    if f < state.best_f {
        state.best_f = f;
        state.best_x = x.to_vec();
    }
}

/// One probe-and-move iteration (without the schedule update).
///
/// Probe points count toward the best-so-far only when they lie inside the box.
pub fn bas_step<T: Scalar>(
    mut state: BasState<T>,
    problem: &dyn Objective<T>,
    rng: &mut RandomStream,
) -> BasState<T> {
    let space = problem.space();
    let b = sample_direction::<T>(rng, space.dim());
    let (mut right, mut left) = antennae(&state.x, &b, state.d);
    if problem.clamp_probes() {
        space.clamp_in_place(&mut right);
        space.clamp_in_place(&mut left);
    }
    let f_right = problem.evaluate(&right, rng);
    let f_left = problem.evaluate(&left, rng);
    let mut next = detect_move(&state.x, &b, state.delta, f_right, f_left);
    space.clamp_in_place(&mut next);
    let f_next = problem.evaluate(&next, rng);

    if space.contains(&right) {
        consider(&mut state, &right, f_right);
    }
    if space.contains(&left) {
        consider(&mut state, &left, f_left);
    }
    consider(&mut state, &next, f_next);
    state.x = next;
    state.t += 1;
    state
}

pub fn run_bas<T: Scalar>(problem: &dyn Objective<T>, config: &BasConfig<T>) -> Result<RunRecord<T>> {
    config.validate()?;
    let started = Instant::now();
    let schedule = config.step_schedule();
    let mut rng = RandomStream::new(config.seed);
    let x0 = uniform_in_space(&mut rng, problem.space());
    let f0 = problem.evaluate(&x0, &mut rng);
    let delta = config.initial_step(problem);
    let mut state = BasState {
        best_x: x0.clone(),
        best_f: f0,
        x: x0,
        delta,
        d: schedule.spacing(delta),
        t: 0,
    };
    let mut curve = Vec::with_capacity(config.max_iters + 1);
    curve.push(state.best_f);
    let mut trajectory = config.record_positions.then(|| vec![vec![state.x.clone()]]);
    let mut stalled = false;

    for _ in 0..config.max_iters {
        state = bas_step(state, problem, &mut rng);
        let next = schedule.advance(state.delta);
        state.delta = next.delta;
        state.d = next.spacing;
        stalled |= next.stalled;
        curve.push(state.best_f);
        if let Some(traj) = trajectory.as_mut() {
            traj.push(vec![state.x.clone()]);
        }
    }

    let mut snapshot = serde_json::to_value(config)?;
    snapshot["delta0"] = serde_json::to_value(delta)?;
    snapshot["dim"] = serde_json::json!(problem.dim());
    snapshot["rng"] = serde_json::json!(GENERATOR_NAME);

    Ok(RunRecord {
        algorithm: "bas".to_string(),
        problem: problem.id().to_string(),
        seed: config.seed,
        curve,
        best_x: state.best_x,
        best_f: state.best_f,
        wall_time_s: started.elapsed().as_secs_f64(),
        stalled,
        config: snapshot,
        trajectory,
    })
}
