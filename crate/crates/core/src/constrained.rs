//! Constrained engineering problems handled with a static exterior penalty:
//! pressure vessel design (mixed discrete/continuous) and Himmelblau's
//! nonlinear problem.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::problem::Objective;
use crate::rng::RandomStream;
use crate::scalar::Scalar;
use crate::space::SearchSpace;

/// Plate thickness increment of the pressure vessel.
pub const PLATE_STEP: f64 = 0.0625;
pub const PLATE_MAX_MULTIPLE: u32 = 99;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstrainedId {
    #[serde(rename = "PV")]
    PressureVessel,
    #[serde(rename = "HB")]
    Himmelblau,
}

impl ConstrainedId {
    pub const ALL: [ConstrainedId; 2] = [Self::PressureVessel, Self::Himmelblau];

    pub fn code(self) -> &'static str {
        match self {
            Self::PressureVessel => "PV",
            Self::Himmelblau => "HB",
        }
    }
}

impl fmt::Display for ConstrainedId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for ConstrainedId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pv" => Ok(Self::PressureVessel),
            "hb" => Ok(Self::Himmelblau),
            _ => Err(Error::NotFound(format!("unknown problem {s}"))),
        }
    }
}

/// Acceptable range of one constraint value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub enum ConstraintBound<T> {
    /// Satisfied iff `g(x) <= 0`.
    AtMostZero,
    /// Satisfied iff `lo <= g(x) <= hi`.
    Interval { lo: T, hi: T },
}

impl<T: Scalar> ConstraintBound<T> {
    /// Amount by which `g` misses the bound; zero when satisfied.
    pub fn violation(&self, g: T) -> T {
        match *self {
            Self::AtMostZero => g.max(T::zero()),
            Self::Interval { lo, hi } => (lo - g).max(g - hi).max(T::zero()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub enum VariableKind<T> {
    Continuous,
    /// Value restricted to `k·step` for `k` in `min_multiple..=max_multiple`.
    DiscreteMultiple { step: T, min_multiple: u32, max_multiple: u32 },
}

/// Rounds discrete components to the nearest admissible multiple; continuous ones pass through.
pub fn snap_discrete<T: Scalar>(x: &[T], kinds: &[VariableKind<T>]) -> Vec<T> {
    x.iter()
        .zip(kinds)
        .map(|(&v, kind)| match *kind {
            VariableKind::Continuous => v,
            VariableKind::DiscreteMultiple { step, min_multiple, max_multiple } => {
                let lo = T::lit(min_multiple as f64);
                let hi = T::lit(max_multiple as f64);
                let k = (v / step).round();
                let k = if k.is_nan() { lo } else { k.max(lo).min(hi) };
                k * step
            }
        })
        .collect()
}

/// Pressure vessel cost and constraints `g1..g4` (feasible iff all `<= 0`).
///
/// Variables: shell thickness, head thickness, inner radius, cylinder length.
pub fn pressure_vessel<T: Scalar>(x: &[T]) -> (T, [T; 4]) {
    let (x1, x2, x3, x4) = (x[0], x[1], x[2], x[3]);
    let c = T::lit;
    let pi = c(std::f64::consts::PI);
    let cost = c(0.6224) * x1 * x3 * x4
        + c(1.7781) * x2 * x3 * x3
        + c(3.1661) * x1 * x1 * x4
        + c(19.84) * x1 * x1 * x3;
    let g = [
        -x1 + c(0.0193) * x3,
        -x2 + c(0.00954) * x3,
        -pi * x3 * x3 * x4 - c(4.0 / 3.0) * pi * x3 * x3 * x3 + c(1_296_000.0),
        x4 - c(240.0),
    ];
    (cost, g)
}

/// Himmelblau's objective and the three constraint functions `g1..g3`.
pub fn himmelblau<T: Scalar>(x: &[T]) -> (T, [T; 3]) {
    let (x1, x2, x3, x4, x5) = (x[0], x[1], x[2], x[3], x[4]);
    let c = T::lit;
    let f = c(5.3578547) * x3 * x3 + c(0.8356891) * x1 * x5 + c(37.29329) * x1 - c(40792.141);
    let g1 = c(85.334407) + c(0.0056858) * x2 * x5 + c(0.00026) * x1 * x4 - c(0.0022053) * x3 * x5;
    let g2 = c(80.51249) + c(0.0071317) * x2 * x5 + c(0.0029955) * x1 * x2 + c(0.0021813) * x3 * x3;
    let g3 = c(9.300961) + c(0.0047026) * x3 * x5 + c(0.0012547) * x1 * x3 + c(0.0019085) * x3 * x4;
    (f, [g1, g2, g3])
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar", default, deny_unknown_fields)]
pub struct PenaltyConfig<T> {
    pub weight: T,
    pub exponent: T,
}

impl<T: Scalar> Default for PenaltyConfig<T> {
    fn default() -> Self {
        Self {
            weight: T::lit(1e6),
            exponent: T::one(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConstrainedProblem<T> {
    id: ConstrainedId,
    space: SearchSpace<T>,
    kinds: Vec<VariableKind<T>>,
    bounds: Vec<ConstraintBound<T>>,
    eval: fn(&[T]) -> (T, Vec<T>),
}

impl<T: Scalar> ConstrainedProblem<T> {
    pub fn new(id: ConstrainedId) -> Self {
        match id {
            ConstrainedId::PressureVessel => Self::pressure_vessel(),
            ConstrainedId::Himmelblau => Self::himmelblau(),
        }
    }

    pub fn pressure_vessel() -> Self {
        let plate = VariableKind::DiscreteMultiple {
            step: T::lit(PLATE_STEP),
            min_multiple: 1,
            max_multiple: PLATE_MAX_MULTIPLE,
        };
        let c = T::lit;
        let thick_hi = PLATE_STEP * PLATE_MAX_MULTIPLE as f64;
        Self {
            id: ConstrainedId::PressureVessel,
            space: SearchSpace::new(
                vec![c(PLATE_STEP), c(PLATE_STEP), c(10.0), c(10.0)],
                vec![c(thick_hi), c(thick_hi), c(200.0), c(200.0)],
            )
            .expect("valid box"),
            kinds: vec![plate, plate, VariableKind::Continuous, VariableKind::Continuous],
            bounds: vec![ConstraintBound::AtMostZero; 4],
            eval: |x| {
                let (f, g) = pressure_vessel(x);
                (f, g.to_vec())
            },
        }
    }

    pub fn himmelblau() -> Self {
        let c = T::lit;
        Self {
            id: ConstrainedId::Himmelblau,
            space: SearchSpace::new(
                vec![c(78.0), c(33.0), c(27.0), c(27.0), c(27.0)],
                vec![c(102.0), c(45.0), c(45.0), c(45.0), c(45.0)],
            )
            .expect("valid box"),
            kinds: vec![VariableKind::Continuous; 5],
            bounds: vec![
                ConstraintBound::Interval { lo: c(0.0), hi: c(92.0) },
                ConstraintBound::Interval { lo: c(90.0), hi: c(110.0) },
                ConstraintBound::Interval { lo: c(20.0), hi: c(25.0) },
            ],
            eval: |x| {
                let (f, g) = himmelblau(x);
                (f, g.to_vec())
            },
        }
    }

    pub fn problem_id(&self) -> ConstrainedId {
        self.id
    }

    pub fn space(&self) -> &SearchSpace<T> {
        &self.space
    }

    pub fn kinds(&self) -> &[VariableKind<T>] {
        &self.kinds
    }

    pub fn bounds(&self) -> &[ConstraintBound<T>] {
        &self.bounds
    }

    pub fn raw_objective(&self, x: &[T]) -> T {
        (self.eval)(x).0
    }

    pub fn constraints(&self, x: &[T]) -> Vec<T> {
        (self.eval)(x).1
    }

    pub fn violations(&self, x: &[T]) -> Vec<T> {
        self.constraints(x)
            .into_iter()
            .zip(&self.bounds)
            .map(|(g, b)| b.violation(g))
            .collect()
    }

    pub fn is_feasible(&self, x: &[T]) -> bool {
        self.violations(x).iter().all(|&v| v == T::zero())
    }

    pub fn snap(&self, x: &[T]) -> Vec<T> {
        snap_discrete(x, &self.kinds)
    }

    /// Full report for a candidate: snapped point, objective, constraints and penalty.
    pub fn assess(&self, x: &[T], penalty: &PenaltyConfig<T>) -> Assessment<T> {
        let snapped = self.snap(x);
        let (objective, constraints) = (self.eval)(&snapped);
        let violations: Vec<T> = constraints
            .iter()
            .zip(&self.bounds)
            .map(|(&g, b)| b.violation(g))
            .collect();
        let feasible = violations.iter().all(|&v| v == T::zero());
        Assessment {
            penalized: objective + penalty_term(&violations, penalty),
            x: snapped,
            objective,
            constraints,
            feasible,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct Assessment<T> {
    pub x: Vec<T>,
    pub objective: T,
    pub constraints: Vec<T>,
    pub penalized: T,
    pub feasible: bool,
}

fn penalty_term<T: Scalar>(violations: &[T], cfg: &PenaltyConfig<T>) -> T {
    let total = violations
        .iter()
        .filter(|&&v| v > T::zero())
        .fold(T::zero(), |acc, &v| acc + v.powf(cfg.exponent));
    if total == T::zero() {
        T::zero()
    } else {
        cfg.weight * total
    }
}

/// `raw(x) + weight·Σ max(0, violation_j)^exponent`, evaluated at `x` as given.
pub fn penalized_fitness<T: Scalar>(problem: &ConstrainedProblem<T>, x: &[T], cfg: &PenaltyConfig<T>) -> T {
    let (raw, g) = (problem.eval)(x);
    let violations: Vec<T> = g.iter().zip(&problem.bounds).map(|(&g, b)| b.violation(g)).collect();
    raw + penalty_term(&violations, cfg)
}

/// Objective view of a constrained problem: snap discrete variables, then penalize.
#[derive(Debug, Clone)]
pub struct PenalizedProblem<T> {
    problem: ConstrainedProblem<T>,
    penalty: PenaltyConfig<T>,
}

impl<T: Scalar> PenalizedProblem<T> {
    pub fn new(problem: ConstrainedProblem<T>, penalty: PenaltyConfig<T>) -> Self {
        Self { problem, penalty }
    }

    pub fn inner(&self) -> &ConstrainedProblem<T> {
        &self.problem
    }

    pub fn penalty(&self) -> &PenaltyConfig<T> {
        &self.penalty
    }
}

impl<T: Scalar> Objective<T> for PenalizedProblem<T> {
    fn id(&self) -> &str {
        self.problem.id.code()
    }

    fn space(&self) -> &SearchSpace<T> {
        &self.problem.space
    }

    fn evaluate(&self, x: &[T], _rng: &mut RandomStream) -> T {
        let snapped = self.problem.snap(x);
        penalized_fitness(&self.problem, &snapped, &self.penalty)
    }

    fn clamp_probes(&self) -> bool {
        true
    }
}
