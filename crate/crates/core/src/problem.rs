use crate::rng::RandomStream;
use crate::scalar::Scalar;
use crate::space::SearchSpace;

/// Minimization objective over a box.
///
/// `evaluate` is deterministic unless [`Objective::is_stochastic`] returns true,
/// in which case it draws from the run's stream. Deterministic objectives must
/// not touch `rng`.
pub trait Objective<T: Scalar> {
    fn id(&self) -> &str;

    fn space(&self) -> &SearchSpace<T>;

    fn evaluate(&self, x: &[T], rng: &mut RandomStream) -> T;

    fn known_fmin(&self) -> Option<T> {
        None
    }

    fn is_stochastic(&self) -> bool {
        false
    }

    /// Whether antenna probe points are projected onto the box before evaluation.
    /// Benchmarks are total on R^n and leave probes unclamped.
    fn clamp_probes(&self) -> bool {
        false
    }

    fn dim(&self) -> usize {
        self.space().dim()
    }
}

/// Objective backed by a closure; handy for ad hoc problems and tests.
pub struct FnProblem<T, F> {
    id: String,
    space: SearchSpace<T>,
    known_fmin: Option<T>,
    func: F,
}

impl<T: Scalar, F: Fn(&[T]) -> T> FnProblem<T, F> {
    pub fn new(id: impl Into<String>, space: SearchSpace<T>, func: F) -> Self {
        Self {
            id: id.into(),
            space,
            known_fmin: None,
            func,
        }
    }

    pub fn with_fmin(mut self, fmin: T) -> Self {
        self.known_fmin = Some(fmin);
        self
    }
}

impl<T: Scalar, F: Fn(&[T]) -> T> Objective<T> for FnProblem<T, F> {
    fn id(&self) -> &str {
        &self.id
    }

    fn space(&self) -> &SearchSpace<T> {
        &self.space
    }

    fn evaluate(&self, x: &[T], _rng: &mut RandomStream) -> T {
        (self.func)(x)
    }

    fn known_fmin(&self) -> Option<T> {
        self.known_fmin
    }
}
