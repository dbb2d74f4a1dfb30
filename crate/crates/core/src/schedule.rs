//! Step-length and antenna-spacing schedules shared by BAS and BSO.

use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Smallest step kept alive when an affine schedule drives the step non-positive.
pub const STEP_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScheduleKind {
    /// `delta' = eta * delta`
    #[default]
    Geometric,
    /// `delta' = c1 * delta + delta_floor`
    Affine,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepSchedule<T> {
    pub kind: ScheduleKind,
    pub eta: T,
    pub c1: T,
    pub delta_floor: T,
    /// Divisor linking step to antenna spacing: `d = delta / c2_ratio`.
    pub c2_ratio: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScheduleStep<T> {
    pub delta: T,
    pub spacing: T,
    /// Set when the update produced a non-positive step that had to be floored.
    pub stalled: bool,
}

impl<T: Scalar> StepSchedule<T> {
    pub fn spacing(&self, delta: T) -> T {
        delta / self.c2_ratio
    }

    /// One contraction of the step, together with the matching antenna spacing.
    ///
    /// A step of exactly zero stays zero (the beetle term is switched off).
    pub fn advance(&self, delta: T) -> ScheduleStep<T> {
        if delta == T::zero() {
            return ScheduleStep {
                delta,
                spacing: T::zero(),
                stalled: false,
            };
        }
        let next = match self.kind {
            ScheduleKind::Geometric => self.eta * delta,
            ScheduleKind::Affine => self.c1 * delta + self.delta_floor,
        };
        // negated so NaN also counts as stalled
        let (delta, stalled) = if !(next > T::zero()) {
            (T::lit(STEP_FLOOR), true)
        } else {
            (next, false)
        };
        ScheduleStep {
            delta,
            spacing: self.spacing(delta),
            stalled,
        }
    }
}

/// Free-function form of [`StepSchedule::advance`].
pub fn update_schedules<T: Scalar>(delta: T, schedule: &StepSchedule<T>) -> ScheduleStep<T> {
    schedule.advance(delta)
}
