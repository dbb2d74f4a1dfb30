//! The 23-function benchmark suite: unimodal F1-F7, multimodal F8-F13 and
//! fixed-dimension multimodal F14-F23.

mod constants;
pub mod functions;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};
use crate::problem::Objective;
use crate::rng::RandomStream;
use crate::scalar::Scalar;
use crate::space::SearchSpace;

pub use constants::{
    FOXHOLES, HARTMANN3_A, HARTMANN3_P, HARTMANN6_A, HARTMANN6_P, HARTMANN_C, KOWALIK_A,
    KOWALIK_B_INV, SHEKEL_A, SHEKEL_C,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BenchmarkId {
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    F10,
    F11,
    F12,
    F13,
    F14,
    F15,
    F16,
    F17,
    F18,
    F19,
    F20,
    F21,
    F22,
    F23,
}

impl BenchmarkId {
    pub const ALL: [BenchmarkId; 23] = [
        Self::F1,
        Self::F2,
        Self::F3,
        Self::F4,
        Self::F5,
        Self::F6,
        Self::F7,
        Self::F8,
        Self::F9,
        Self::F10,
        Self::F11,
        Self::F12,
        Self::F13,
        Self::F14,
        Self::F15,
        Self::F16,
        Self::F17,
        Self::F18,
        Self::F19,
        Self::F20,
        Self::F21,
        Self::F22,
        Self::F23,
    ];

    /// 1-based function number.
    pub fn number(self) -> usize {
        self as usize + 1
    }

    pub fn from_number(n: usize) -> Option<Self> {
        n.checked_sub(1).and_then(|i| Self::ALL.get(i).copied())
    }

    /// F1-F13 accept any dimension; F14-F23 are fixed.
    pub fn is_scalable(self) -> bool {
        self.number() <= 13
    }

    pub fn is_stochastic(self) -> bool {
        self == Self::F7
    }

    pub fn name(self) -> &'static str {
        use BenchmarkId::*;
        match self {
            F1 => "sphere",
            F2 => "schwefel 2.22",
            F3 => "schwefel 1.2",
            F4 => "schwefel 2.21",
            F5 => "rosenbrock",
            F6 => "step",
            F7 => "noisy quartic",
            F8 => "schwefel 2.26",
            F9 => "rastrigin",
            F10 => "ackley",
            F11 => "griewank",
            F12 => "penalized 1",
            F13 => "penalized 2",
            F14 => "shekel foxholes",
            F15 => "kowalik",
            F16 => "six-hump camel",
            F17 => "branin",
            F18 => "goldstein-price",
            F19 => "hartmann 3",
            F20 => "hartmann 6",
            F21 => "shekel 5",
            F22 => "shekel 7",
            F23 => "shekel 10",
        }
    }
}

impl fmt::Display for BenchmarkId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}", self.number())
    }
}

impl FromStr for BenchmarkId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let digits = s
            .strip_prefix('F')
            .or_else(|| s.strip_prefix('f'))
            .ok_or_else(|| Error::NotFound(format!("unknown problem {s}")))?;
        digits
            .parse::<usize>()
            .ok()
            .and_then(Self::from_number)
            .ok_or_else(|| Error::NotFound(format!("unknown problem {s}")))
    }
}

/// Dimension, range and known minimum of one benchmark.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchmarkSpec {
    pub id: BenchmarkId,
    pub name: String,
    pub dim: usize,
    pub lower: f64,
    pub upper: f64,
    pub fmin: f64,
    pub stochastic: bool,
}

/// Tabulated dimension, range and minimum.
pub fn spec(id: BenchmarkId) -> BenchmarkSpec {
    use BenchmarkId::*;
    let (dim, lower, upper, fmin) = match id {
        F1 => (30, -100.0, 100.0, 0.0),
        F2 => (30, -10.0, 10.0, 0.0),
        F3 => (30, -100.0, 100.0, 0.0),
        F4 => (30, -100.0, 100.0, 0.0),
        F5 => (30, -30.0, 30.0, 0.0),
        F6 => (30, -100.0, 100.0, 0.0),
        F7 => (30, -1.28, 1.28, 0.0),
        F8 => (30, -500.0, 500.0, SCHWEFEL_FMIN_PER_DIM * 30.0),
        F9 => (30, -5.12, 5.12, 0.0),
        F10 => (30, -32.0, 32.0, 0.0),
        F11 => (30, -600.0, 600.0, 0.0),
        F12 => (30, -50.0, 50.0, 0.0),
        F13 => (30, -50.0, 50.0, 0.0),
        F14 => (2, -65.0, 65.0, 0.9980),
        F15 => (4, -5.0, 5.0, 0.00030),
        F16 => (2, -5.0, 5.0, -1.0316),
        F17 => (2, -5.0, 5.0, 0.398),
        F18 => (2, -2.0, 2.0, 3.0),
        F19 => (3, 1.0, 3.0, -3.86),
        F20 => (6, 0.0, 1.0, -3.32),
        F21 => (4, 0.0, 10.0, -10.1532),
        F22 => (4, 0.0, 10.0, -10.4028),
        F23 => (4, 0.0, 10.0, -10.5363),
    };
    BenchmarkSpec {
        id,
        name: id.name().to_string(),
        dim,
        lower,
        upper,
        fmin,
        stochastic: id.is_stochastic(),
    }
}

/// Looks a benchmark up by its textual id (`F1`..`F23`).
pub fn spec_by_name(name: &str) -> Result<BenchmarkSpec> {
    Ok(spec(name.parse()?))
}

/// Per-dimension minimum of F8; the total minimum is this times the dimension.
pub const SCHWEFEL_FMIN_PER_DIM: f64 = -418.9829;

/// Evaluates benchmark `id` at `x`. F7 needs `rng` for its noise draw.
pub fn evaluate<T: Scalar>(id: BenchmarkId, x: &[T], rng: Option<&mut RandomStream>) -> Result<T> {
    let expected = spec(id).dim;
    if id.is_scalable() {
        if x.is_empty() {
            return Err(invalid(format!("{id} needs at least one coordinate")));
        }
    } else if x.len() != expected {
        return Err(invalid(format!("{id} expects dimension {expected}, got {}", x.len())));
    }
    if id == BenchmarkId::F7 {
        let rng = rng.ok_or_else(|| invalid("F7 is stochastic and needs a random stream"))?;
        return Ok(noisy_quartic(x, rng));
    }
    Ok(evaluate_deterministic(id, x))
}

/// F7: weighted quartic plus one fresh uniform draw in [0, 1).
pub fn noisy_quartic<T: Scalar>(x: &[T], rng: &mut RandomStream) -> T {
    functions::quartic(x) + rng.uniform_t::<T>()
}

fn evaluate_deterministic<T: Scalar>(id: BenchmarkId, x: &[T]) -> T {
    use functions::*;
    use BenchmarkId::*;
    match id {
        F1 => sphere(x),
        F2 => schwefel_2_22(x),
        F3 => schwefel_1_2(x),
        F4 => schwefel_2_21(x),
        F5 => rosenbrock(x),
        F6 => step(x),
        F7 => quartic(x),
        F8 => schwefel_2_26(x),
        F9 => rastrigin(x),
        F10 => ackley(x),
        F11 => griewank(x),
        F12 => penalized_1(x),
        F13 => penalized_2(x),
        F14 => foxholes(x),
        F15 => kowalik(x),
        F16 => six_hump_camel(x),
        F17 => branin(x),
        F18 => goldstein_price(x),
        F19 => hartmann3(x),
        F20 => hartmann6(x),
        F21 => shekel(x, 5),
        F22 => shekel(x, 7),
        F23 => shekel(x, 10),
    }
}

/// A benchmark bound to a concrete dimension, usable as an [`Objective`].
#[derive(Debug, Clone)]
pub struct Benchmark<T> {
    id: BenchmarkId,
    label: String,
    space: SearchSpace<T>,
    fmin: T,
}

impl<T: Scalar> Benchmark<T> {
    /// Benchmark at its tabulated dimension.
    pub fn new(id: BenchmarkId) -> Self {
        let s = spec(id);
        Self::build(id, s.dim)
    }

    /// Overrides the dimension. Only F1-F13 are scalable.
    pub fn with_dim(id: BenchmarkId, dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(invalid("dimension must be positive"));
        }
        if !id.is_scalable() && dim != spec(id).dim {
            return Err(invalid(format!(
                "{id} has fixed dimension {}, cannot use {dim}",
                spec(id).dim
            )));
        }
        Ok(Self::build(id, dim))
    }

    fn build(id: BenchmarkId, dim: usize) -> Self {
        let s = spec(id);
        let fmin = if id == BenchmarkId::F8 {
            SCHWEFEL_FMIN_PER_DIM * dim as f64
        } else {
            s.fmin
        };
        Self {
            id,
            label: id.to_string(),
            space: SearchSpace::uniform(dim, T::lit(s.lower), T::lit(s.upper))
                .expect("tabulated ranges are valid"),
            fmin: T::lit(fmin),
        }
    }

    pub fn benchmark_id(&self) -> BenchmarkId {
        self.id
    }
}

impl<T: Scalar> Objective<T> for Benchmark<T> {
    fn id(&self) -> &str {
        &self.label
    }

    fn space(&self) -> &SearchSpace<T> {
        &self.space
    }

    fn evaluate(&self, x: &[T], rng: &mut RandomStream) -> T {
        if self.id == BenchmarkId::F7 {
            noisy_quartic(x, rng)
        } else {
            evaluate_deterministic(self.id, x)
        }
    }

    fn known_fmin(&self) -> Option<T> {
        Some(self.fmin)
    }

    fn is_stochastic(&self) -> bool {
        self.id.is_stochastic()
    }
}

/// Known minimizers. For F14-F23 these are local refinements of the published
/// argmins; the values they produce are what the tables round.
pub fn argmin_witness(id: BenchmarkId, dim: usize) -> Vec<f64> {
    use BenchmarkId::*;
    match id {
        F1 | F2 | F3 | F4 | F6 | F7 | F9 | F10 | F11 => vec![0.0; dim],
        F5 | F13 => vec![1.0; dim],
        F12 => vec![-1.0; dim],
        F8 => vec![SCHWEFEL_ARGMIN; dim],
        F14 => vec![-31.97833495762107, -31.978328496668112],
        F15 => vec![0.19283345300460386, 0.190836230510791, 0.12311729104531036, 0.13576598633929812],
        F16 => vec![0.08984201492945389, -0.712656402369394],
        F17 => vec![std::f64::consts::PI, 2.275],
        F18 => vec![0.0, -1.0],
        F19 => vec![0.11461434256750598, 0.555648851025697, 0.8525469528860454],
        F20 => vec![
            0.2016895128922905,
            0.15001069323742897,
            0.4768739767611768,
            0.2753324307839508,
            0.31165161848739587,
            0.6573005349989142,
        ],
        F21 => vec![4.000037152376549, 4.000133278657566, 4.000037151057555, 4.000133277090425],
        F22 => vec![4.000572914277084, 4.000689366040889, 3.9994897107938447, 3.9996061600067923],
        F23 => vec![4.000746533201553, 4.000592934538832, 3.9996633972202558, 3.9995098012852255],
    }
}

/// Per-coordinate minimizer of F8 on [-500, 500].
pub const SCHWEFEL_ARGMIN: f64 = 420.968_748_391_970_6;

/// Machine-readable catalog of every benchmark at its tabulated dimension.
pub fn catalog() -> Vec<BenchmarkSpec> {
    BenchmarkId::ALL.iter().map(|&id| spec(id)).collect()
}
