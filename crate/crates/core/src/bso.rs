//! Beetle swarm optimization.
//!
//! Every beetle carries a PSO velocity. Each iteration it also probes the
//! objective at `X ± V·d/2`, using its velocity as the antenna axis, and
//! derives an increment `ξ = -δ·V·sign(f(X_r) - f(X_l))`. The new position
//! blends both moves: `X' = X + λ·V' + (1 - λ)·ξ`.
//!
//! Per-iteration order: inertia weight, antenna spacing, then for each beetle
//! probe, increment, velocity and position; afterwards all beetles are
//! evaluated, personal and global bests refreshed, and the step contracted.
//!
//! Random draws are taken in a fixed order: initial positions (beetle-major),
//! initial velocities, then per iteration and per beetle the probe evaluations
//! (only stochastic objectives draw there) followed by `r1` and `r2`, and
//! finally the fitness evaluations in beetle order.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::problem::Objective;
use crate::record::RunRecord;
use crate::rng::{RandomStream, GENERATOR_NAME};
use crate::scalar::Scalar;
use crate::schedule::{ScheduleKind, StepSchedule};
use crate::space::{uniform_in_space, SearchSpace};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", default, deny_unknown_fields)]
pub struct BsoConfig<T> {
    /// Number of beetles.
    pub population: usize,
    /// Iteration budget K.
    pub max_iters: usize,
    /// Weight of the velocity move against the antenna increment, in [0, 1].
    /// Defaults to 0.3.
    pub lambda: T,
    /// Cognitive acceleration (attraction to the personal best).
    pub a1: T,
    /// Social acceleration (attraction to the global best).
    pub a2: T,
    pub omega_max: T,
    pub omega_min: T,
    pub eta: T,
    /// Initial step factor δ⁰, a multiplier on the velocity. Zero disables the antenna term.
    pub delta0: T,
    /// Antenna spacing divisor: `d = δ / c2_ratio`.
    pub c2_ratio: T,
    pub schedule: ScheduleKind,
    pub c1: T,
    pub delta_floor: T,
    /// Velocity limit as a fraction of each box side, used when `v_max` is unset.
    pub v_fraction: T,
    pub v_max: Option<T>,
    pub v_min: Option<T>,
    /// Draw `r1`, `r2` per component (default) instead of once per beetle.
    pub componentwise_r: bool,
    pub seed: u64,
    pub record_positions: bool,
}

impl<T: Scalar> Default for BsoConfig<T> {
    fn default() -> Self {
        Self {
            population: 50,
            max_iters: 1000,
            lambda: T::lit(DEFAULT_LAMBDA),
            a1: T::lit(2.0),
            a2: T::lit(2.0),
            omega_max: T::lit(0.9),
            omega_min: T::lit(0.4),
            eta: T::lit(DEFAULT_ETA),
            delta0: T::lit(DEFAULT_DELTA0),
            c2_ratio: T::lit(DEFAULT_C2_RATIO),
            schedule: ScheduleKind::Geometric,
            c1: T::lit(0.5),
            delta_floor: T::zero(),
            v_fraction: T::lit(DEFAULT_V_FRACTION),
            v_max: None,
            v_min: None,
            componentwise_r: true,
            seed: 0,
            record_positions: false,
        }
    }
}

pub const DEFAULT_LAMBDA: f64 = 0.3;
pub const DEFAULT_ETA: f64 = 0.998;
pub const DEFAULT_DELTA0: f64 = 2.0;
pub const DEFAULT_V_FRACTION: f64 = 0.1;
pub const DEFAULT_C2_RATIO: f64 = 5.0;

impl<T: Scalar> BsoConfig<T> {
    pub fn validate(&self) -> Result<()> {
        if self.population < 2 {
            return Err(invalid(format!("population must be at least 2, got {}", self.population)));
        }
        if !(self.lambda >= T::zero() && self.lambda <= T::one()) {
            return Err(invalid(format!("lambda must lie in [0, 1], got {}", self.lambda)));
        }
        if !(self.omega_min <= self.omega_max) {
            return Err(invalid(format!(
                "omega_min {} exceeds omega_max {}",
                self.omega_min, self.omega_max
            )));
        }
        if !(self.eta > T::zero() && self.eta <= T::one()) {
            return Err(invalid(format!("eta must lie in (0, 1], got {}", self.eta)));
        }
        if !(self.delta0 >= T::zero()) {
            return Err(invalid(format!("delta0 must be non-negative, got {}", self.delta0)));
        }
        if !(self.c2_ratio > T::zero()) {
            return Err(invalid(format!("c2_ratio must be positive, got {}", self.c2_ratio)));
        }
        if !(self.v_fraction > T::zero()) {
            return Err(invalid(format!("v_fraction must be positive, got {}", self.v_fraction)));
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

    /// Per-dimension velocity limits `(v_min, v_max)` for a given box.
    pub fn velocity_bounds(&self, space: &SearchSpace<T>) -> Result<(Vec<T>, Vec<T>)> {
        let widths = space.widths();
        let v_max: Vec<T> = widths
            .iter()
            .map(|&w| self.v_max.unwrap_or(self.v_fraction * w))
            .collect();
        let v_min: Vec<T> = v_max.iter().map(|&hi| self.v_min.unwrap_or(-hi)).collect();
        for (lo, hi) in v_min.iter().zip(&v_max) {
            if !(lo < hi) {
                return Err(invalid(format!("v_min {lo} must be below v_max {hi}")));
            }
        }
        Ok((v_min, v_max))
    }

    /// The antenna term contributes only when it has weight and a step.
    pub fn beetle_term_active(&self) -> bool {
        self.lambda < T::one() && self.delta0 > T::zero()
    }
}

/// Positions, velocities and bests of the whole swarm.
#[derive(Debug, Clone, PartialEq)]
pub struct SwarmState<T> {
    pub positions: Vec<Vec<T>>,
    pub velocities: Vec<Vec<T>>,
    pub personal_best: Vec<Vec<T>>,
    pub personal_best_f: Vec<T>,
    pub global_best: Vec<T>,
    pub global_best_f: T,
    pub delta: T,
    pub spacing: T,
    pub iteration: usize,
}

impl<T: Scalar> SwarmState<T> {
    /// Index of the lowest personal best; ties go to the lowest index.
    pub fn best_index(&self) -> usize {
        let mut best = 0;
        for (i, &f) in self.personal_best_f.iter().enumerate().skip(1) {
            if f < self.personal_best_f[best] {
                best = i;
            }
        }
        best
    }

    fn refresh_global(&mut self) {
        let i = self.best_index();
        self.global_best = self.personal_best[i].clone();
        self.global_best_f = self.personal_best_f[i];
    }
}

/// Linearly decreasing inertia weight: `ω_max - (ω_max - ω_min)·k/K`.
pub fn inertia_weight<T: Scalar>(k: usize, max_iters: usize, omega_min: T, omega_max: T) -> T {
    assert!(max_iters >= 1, "inertia schedule needs K >= 1");
    omega_max - (omega_max - omega_min) * T::lit(k as f64) / T::lit(max_iters as f64)
}

/// Coefficients of the velocity update.
#[derive(Debug, Clone, Copy)]
pub struct VelocityParams<'a, T> {
    pub omega: T,
    pub a1: T,
    pub a2: T,
    pub v_min: &'a [T],
    pub v_max: &'a [T],
}

/// Draws `(r1, r2)`: one scalar each, or one per component when `componentwise`.
pub fn draw_attraction<T: Scalar>(
    rng: &mut RandomStream,
    dim: usize,
    componentwise: bool,
) -> (Vec<T>, Vec<T>) {
    let n = if componentwise { dim } else { 1 };
    let r1 = (0..n).map(|_| rng.uniform_t()).collect();
    let r2 = (0..n).map(|_| rng.uniform_t()).collect();
    (r1, r2)
}

/// `V' = ω·V + a1·r1·(P - X) + a2·r2·(G - X)`, clamped per component to `[v_min, v_max]`.
///
/// `r1` and `r2` hold either one value (broadcast) or one per component.
pub fn update_velocity<T: Scalar>(
    v: &[T],
    x: &[T],
    personal: &[T],
    global: &[T],
    params: &VelocityParams<'_, T>,
    r1: &[T],
    r2: &[T],
) -> Vec<T> {
    let pick = |r: &[T], s: usize| r[s.min(r.len() - 1)];
    (0..v.len())
        .map(|s| {
            let raw = params.omega * v[s]
                + params.a1 * pick(r1, s) * (personal[s] - x[s])
                + params.a2 * pick(r2, s) * (global[s] - x[s]);
            raw.max(params.v_min[s]).min(params.v_max[s])
        })
        .collect()
}

/// Antenna probes along the velocity, `(X + V·d/2, X - V·d/2)`.
pub fn velocity_antennae<T: Scalar>(x: &[T], v: &[T], d: T) -> (Vec<T>, Vec<T>) {
    crate::bas::antennae(x, v, d)
}

/// Increment `ξ = -δ·V·sign(f(X_r) - f(X_l))`, which points toward the lower probe.
pub fn beetle_increment<T: Scalar>(
    x: &[T],
    v: &[T],
    delta: T,
    d: T,
    problem: &dyn Objective<T>,
    rng: &mut RandomStream,
) -> Vec<T> {
    let (mut right, mut left) = velocity_antennae(x, v, d);
    if problem.clamp_probes() {
        problem.space().clamp_in_place(&mut right);
        problem.space().clamp_in_place(&mut left);
    }
    let f_right = problem.evaluate(&right, rng);
    let f_left = problem.evaluate(&left, rng);
    increment_from_probes(v, delta, f_right, f_left)
}

/// The increment given the two probe readings.
pub fn increment_from_probes<T: Scalar>(v: &[T], delta: T, f_right: T, f_left: T) -> Vec<T> {
    let s = (f_right - f_left).signum0();
    v.iter().map(|&vi| -delta * vi * s).collect()
}

/// `clamp(X + λ·V' + (1 - λ)·ξ)`.
pub fn update_position<T: Scalar>(
    x: &[T],
    v_new: &[T],
    xi: &[T],
    lambda: T,
    space: &SearchSpace<T>,
) -> Vec<T> {
    let mu = T::one() - lambda;
    let mut next: Vec<T> = x
        .iter()
        .zip(v_new)
        .zip(xi)
        .map(|((&xs, &vs), &xis)| xs + lambda * vs + mu * xis)
        .collect();
    space.clamp_in_place(&mut next);
    next
}

pub fn run_bso<T: Scalar>(problem: &dyn Objective<T>, config: &BsoConfig<T>) -> Result<RunRecord<T>> {
    let snapshot = serde_json::to_value(config)?;
    run_swarm(problem, config, "bso", snapshot)
}

/// Shared swarm loop behind both BSO and the PSO baseline.
pub(crate) fn run_swarm<T: Scalar>(
    problem: &dyn Objective<T>,
    config: &BsoConfig<T>,
    algorithm: &str,
    mut snapshot: serde_json::Value,
) -> Result<RunRecord<T>> {
    config.validate()?;
    let started = Instant::now();
    let space = problem.space();
    let dim = space.dim();
    let n = config.population;
    let (v_min, v_max) = config.velocity_bounds(space)?;
    let schedule = config.step_schedule();
    let beetle = config.beetle_term_active();
    let mut rng = RandomStream::new(config.seed);

    let positions: Vec<Vec<T>> = (0..n).map(|_| uniform_in_space(&mut rng, space)).collect();
    let velocities: Vec<Vec<T>> = (0..n)
        .map(|_| {
            v_min
                .iter()
                .zip(&v_max)
                .map(|(&lo, &hi)| rng.uniform_in(lo, hi))
                .collect()
        })
        .collect();
    let fitness: Vec<T> = positions.iter().map(|x| problem.evaluate(x, &mut rng)).collect();

    let mut state = SwarmState {
        personal_best: positions.clone(),
        personal_best_f: fitness,
        positions,
        velocities,
        global_best: Vec::new(),
        global_best_f: T::infinity(),
        delta: config.delta0,
        spacing: schedule.spacing(config.delta0),
        iteration: 0,
    };
    state.refresh_global();

    let mut curve = Vec::with_capacity(config.max_iters + 1);
    curve.push(state.global_best_f);
    let mut trajectory = config.record_positions.then(|| vec![state.positions.clone()]);
    let mut stalled = false;
    let zeros = vec![T::zero(); dim];

    for k in 0..config.max_iters {
        let omega = inertia_weight(k, config.max_iters, config.omega_min, config.omega_max);
        state.spacing = schedule.spacing(state.delta);
        let params = VelocityParams {
            omega,
            a1: config.a1,
            a2: config.a2,
            v_min: &v_min,
            v_max: &v_max,
        };
        for i in 0..n {
            let x = &state.positions[i];
            let v = &state.velocities[i];
            let xi = if beetle {
                beetle_increment(x, v, state.delta, state.spacing, problem, &mut rng)
            } else {
                zeros.clone()
            };
            let (r1, r2) = draw_attraction::<T>(&mut rng, dim, config.componentwise_r);
            let v_new = update_velocity(
                v,
                x,
                &state.personal_best[i],
                &state.global_best,
                &params,
                &r1,
                &r2,
            );
            let x_new = update_position(x, &v_new, &xi, config.lambda, space);
            state.velocities[i] = v_new;
            state.positions[i] = x_new;
        }

        for i in 0..n {
            let f = problem.evaluate(&state.positions[i], &mut rng);
            if f < state.personal_best_f[i] {
                state.personal_best_f[i] = f;
                state.personal_best[i] = state.positions[i].clone();
            }
        }
        state.refresh_global();
        debug_assert!(state.positions.iter().all(|x| space.contains(x)));
        debug_assert!(state
            .personal_best_f
            .iter()
            .all(|&f| !(f < state.global_best_f)));

        let next = schedule.advance(state.delta);
        state.delta = next.delta;
        stalled |= next.stalled;
        state.iteration = k + 1;

        curve.push(state.global_best_f);
        if let Some(traj) = trajectory.as_mut() {
            traj.push(state.positions.clone());
        }
    }

    snapshot["dim"] = serde_json::json!(dim);
    snapshot["rng"] = serde_json::json!(GENERATOR_NAME);

    Ok(RunRecord {
        algorithm: algorithm.to_string(),
        problem: problem.id().to_string(),
        seed: config.seed,
        curve,
        best_x: state.global_best,
        best_f: state.global_best_f,
        wall_time_s: started.elapsed().as_secs_f64(),
        stalled,
        config: snapshot,
        trajectory,
    })
}
