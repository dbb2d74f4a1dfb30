use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::rng::RandomStream;
use crate::scalar::Scalar;

/// Axis-aligned box the search is confined to.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct SearchSpace<T> {
    lower: Vec<T>,
    upper: Vec<T>,
}

impl<T: Scalar> SearchSpace<T> {
    /// Builds a box from per-dimension bounds. Requires `lower[i] < upper[i]` and at least one dimension.
    pub fn new(lower: Vec<T>, upper: Vec<T>) -> Result<Self> {
        if lower.is_empty() {
            return Err(invalid("search space needs at least one dimension"));
        }
        if lower.len() != upper.len() {
            return Err(invalid(format!(
                "bound lengths differ: {} lower vs {} upper",
                lower.len(),
                upper.len()
            )));
        }
        for (i, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            // written negated so that NaN bounds are rejected too
            if !(lo < hi) {
                return Err(invalid(format!("dimension {i}: lower {lo} is not below upper {hi}")));
            }
        }
        Ok(Self { lower, upper })
    }

    /// Same interval `[lo, hi]` in every dimension.
    pub fn uniform(dim: usize, lo: T, hi: T) -> Result<Self> {
        Self::new(vec![lo; dim], vec![hi; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[T] {
        &self.lower
    }

    pub fn upper(&self) -> &[T] {
        &self.upper
    }

    /// Per-dimension side length `upper - lower`.
    pub fn widths(&self) -> Vec<T> {
        self.lower.iter().zip(&self.upper).map(|(&lo, &hi)| hi - lo).collect()
    }

    pub fn max_width(&self) -> T {
        self.widths().into_iter().fold(T::zero(), T::max)
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim()
            && x
                .iter()
                .zip(self.lower.iter().zip(&self.upper))
                .all(|(&v, (&lo, &hi))| v >= lo && v <= hi)
    }

    /// In-place projection onto the box. Panics on length mismatch; use [`clamp_to_bounds`] for a checked version.
    pub fn clamp_in_place(&self, x: &mut [T]) {
        assert_eq!(x.len(), self.dim(), "dimension mismatch");
        for ((v, &lo), &hi) in x.iter_mut().zip(&self.lower).zip(&self.upper) {
            if *v < lo {
                *v = lo;
            } else if *v > hi {
                *v = hi;
            }
        }
    }
}

/// Projects `x` onto the box. Components already inside are returned unchanged.
pub fn clamp_to_bounds<T: Scalar>(x: &[T], space: &SearchSpace<T>) -> Result<Vec<T>> {
    if x.len() != space.dim() {
        return Err(invalid(format!(
            "vector has length {} but search space has dimension {}",
            x.len(),
            space.dim()
        )));
    }
    let mut out = x.to_vec();
    space.clamp_in_place(&mut out);
    Ok(out)
}

/// Uniform sample from the box, consuming exactly `dim` draws: `u * (hi - lo) + lo`.
pub fn uniform_in_space<T: Scalar>(rng: &mut RandomStream, space: &SearchSpace<T>) -> Vec<T> {
    space
        .lower
        .iter()
        .zip(&space.upper)
        .map(|(&lo, &hi)| rng.uniform_in(lo, hi))
        .collect()
}

/// Affine map of a given unit draw into `[lo, hi)`; exposed so the mapping can be checked directly.
pub fn scale_unit<T: Scalar>(u: T, lo: T, hi: T) -> T {
    u * (hi - lo) + lo
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square(lo: f64, hi: f64) -> SearchSpace<f64> {
        SearchSpace::uniform(2, lo, hi).unwrap()
    }

    #[test]
    fn rejects_bad_bounds() {
        assert!(SearchSpace::<f64>::new(vec![], vec![]).is_err());
        assert!(SearchSpace::new(vec![0.0], vec![0.0]).is_err());
        assert!(SearchSpace::new(vec![1.0], vec![0.0]).is_err());
        assert!(SearchSpace::new(vec![0.0, 0.0], vec![1.0]).is_err());
        assert!(SearchSpace::new(vec![f64::NAN], vec![1.0]).is_err());
    }

    #[test]
    fn clamp_examples() {
        assert_eq!(clamp_to_bounds(&[150.0, 0.0], &square(-100.0, 100.0)).unwrap(), vec![100.0, 0.0]);
        assert_eq!(clamp_to_bounds(&[5.0, 5.0], &square(-10.0, 10.0)).unwrap(), vec![5.0, 5.0]);
        let line = SearchSpace::uniform(1, -5.0, 5.0).unwrap();
        assert_eq!(clamp_to_bounds(&[-7.3], &line).unwrap(), vec![-5.0]);
    }

    #[test]
    fn clamp_dimension_mismatch() {
        let err = clamp_to_bounds(&[1.0, 2.0, 3.0], &square(-1.0, 1.0)).unwrap_err();
        assert!(matches!(err, crate::Error::InvalidArgument(_)));
    }

    #[test]
    fn unit_map_examples() {
        assert_eq!(scale_unit(0.5, -1.0, 1.0), 0.0);
        assert_eq!(scale_unit(0.0, -100.0, 100.0), -100.0);
    }

    #[test]
    fn uniform_sample_mean_near_center() {
        let space = square(-5.0, 5.0);
        let mut rng = RandomStream::new(2024);
        let n = 1000;
        let mut sum = [0.0; 2];
        for _ in 0..n {
            let x = uniform_in_space(&mut rng, &space);
            assert!(space.contains(&x));
            sum[0] += x[0];
            sum[1] += x[1];
        }
        for s in sum {
            assert!((s / n as f64).abs() < 0.5);
        }
    }

    #[test]
    fn uniform_sample_consumes_dim_draws() {
        let space = SearchSpace::uniform(7, 0.0, 1.0).unwrap();
        let mut a = RandomStream::new(5);
        let mut b = RandomStream::new(5);
        let _ = uniform_in_space(&mut a, &space);
        for _ in 0..7 {
            b.uniform();
        }
        assert_eq!(a.next_u64(), b.next_u64());
    }

    #[test]
    fn f32_space_works() {
        let space = SearchSpace::<f32>::uniform(3, -1.0, 1.0).unwrap();
        let mut rng = RandomStream::new(1);
        for _ in 0..1000 {
            assert!(space.contains(&uniform_in_space(&mut rng, &space)));
        }
    }
}
