//! Formulas of the 23 benchmark functions. All are total on R^n.

use super::constants::*;
use crate::scalar::Scalar;

fn c<T: Scalar>(v: f64) -> T {
    T::lit(v)
}

fn pi<T: Scalar>() -> T {
    T::lit(std::f64::consts::PI)
}

pub fn sphere<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, &v| acc + v * v)
}

pub fn schwefel_2_22<T: Scalar>(x: &[T]) -> T {
    let sum = x.iter().fold(T::zero(), |acc, &v| acc + v.abs());
    let prod = x.iter().fold(T::one(), |acc, &v| acc * v.abs());
    sum + prod
}

pub fn schwefel_1_2<T: Scalar>(x: &[T]) -> T {
    let mut prefix = T::zero();
    let mut total = T::zero();
    for &v in x {
        prefix += v;
        total += prefix * prefix;
    }
    total
}

pub fn schwefel_2_21<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, &v| acc.max(v.abs()))
}

pub fn rosenbrock<T: Scalar>(x: &[T]) -> T {
    x.windows(2).fold(T::zero(), |acc, w| {
        let a = w[1] - w[0] * w[0];
        let b = w[0] - T::one();
        acc + c::<T>(100.0) * a * a + b * b
    })
}

pub fn step<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, &v| {
        let s = (v + c(0.5)).floor();
        acc + s * s
    })
}

/// Weighted quartic part of the noisy quartic function: `sum i * x_i^4`.
pub fn quartic<T: Scalar>(x: &[T]) -> T {
    x.iter().enumerate().fold(T::zero(), |acc, (i, &v)| {
        let v2 = v * v;
        acc + T::lit((i + 1) as f64) * v2 * v2
    })
}

pub fn schwefel_2_26<T: Scalar>(x: &[T]) -> T {
    x.iter().fold(T::zero(), |acc, &v| acc - v * v.abs().sqrt().sin())
}

pub fn rastrigin<T: Scalar>(x: &[T]) -> T {
    let two_pi = c::<T>(2.0) * pi();
    x.iter().fold(T::zero(), |acc, &v| {
        acc + v * v - c::<T>(10.0) * (two_pi * v).cos() + c(10.0)
    })
}

pub fn ackley<T: Scalar>(x: &[T]) -> T {
    let n = T::lit(x.len() as f64);
    let two_pi = c::<T>(2.0) * pi();
    let sq = x.iter().fold(T::zero(), |acc, &v| acc + v * v);
    let cs = x.iter().fold(T::zero(), |acc, &v| acc + (two_pi * v).cos());
    -c::<T>(20.0) * (-c::<T>(0.2) * (sq / n).sqrt()).exp() - (cs / n).exp()
        + c(20.0)
        + c(std::f64::consts::E)
}

pub fn griewank<T: Scalar>(x: &[T]) -> T {
    let sum = x.iter().fold(T::zero(), |acc, &v| acc + v * v) / c(4000.0);
    let prod = x
        .iter()
        .enumerate()
        .fold(T::one(), |acc, (i, &v)| acc * (v / T::lit((i + 1) as f64).sqrt()).cos());
    sum - prod + T::one()
}

/// Boundary penalty `u(x, a, k, m)` shared by the two penalized functions.
pub fn boundary_penalty<T: Scalar>(v: T, a: T, k: T, m: i32) -> T {
    if v > a {
        k * (v - a).powi(m)
    } else if v < -a {
        k * (-v - a).powi(m)
    } else {
        T::zero()
    }
}

fn penalty_sum<T: Scalar>(x: &[T], a: f64) -> T {
    x.iter()
        .fold(T::zero(), |acc, &v| acc + boundary_penalty(v, c(a), c(100.0), 4))
}

pub fn penalized_1<T: Scalar>(x: &[T]) -> T {
    let n = x.len();
    let p = pi::<T>();
    let y: Vec<T> = x.iter().map(|&v| T::one() + (v + T::one()) / c(4.0)).collect();
    let first = (p * y[0]).sin();
    let mut body = c::<T>(10.0) * first * first;
    for i in 0..n - 1 {
        let s = (p * y[i + 1]).sin();
        let d = y[i] - T::one();
        body += d * d * (T::one() + c::<T>(10.0) * s * s);
    }
    let last = y[n - 1] - T::one();
    body += last * last;
    p / T::lit(n as f64) * body + penalty_sum(x, 10.0)
}

pub fn penalized_2<T: Scalar>(x: &[T]) -> T {
    let n = x.len();
    let p = pi::<T>();
    let three_pi = c::<T>(3.0) * p;
    let first = (three_pi * x[0]).sin();
    let mut body = first * first;
    for i in 0..n - 1 {
        let s = (three_pi * x[i + 1]).sin();
        let d = x[i] - T::one();
        body += d * d * (T::one() + s * s);
    }
    let s = (c::<T>(2.0) * p * x[n - 1]).sin();
    let d = x[n - 1] - T::one();
    body += d * d * (T::one() + s * s);
    c::<T>(0.1) * body + penalty_sum(x, 5.0)
}

pub fn foxholes<T: Scalar>(x: &[T]) -> T {
    let mut acc = T::zero();
    for j in 0..25 {
        let mut inner = T::lit((j + 1) as f64);
        for (i, &xi) in x.iter().enumerate().take(2) {
            inner += (xi - c(FOXHOLES[i][j])).powi(6);
        }
        acc += inner.recip();
    }
    (c::<T>(1.0 / 500.0) + acc).recip()
}

pub fn kowalik<T: Scalar>(x: &[T]) -> T {
    KOWALIK_A
        .iter()
        .zip(KOWALIK_B_INV)
        .fold(T::zero(), |acc, (&a, b_inv)| {
            let b = T::one() / c::<T>(b_inv);
            let num = x[0] * (b * b + b * x[1]);
            let den = b * b + b * x[2] + x[3];
            let r = c::<T>(a) - num / den;
            acc + r * r
        })
}

pub fn six_hump_camel<T: Scalar>(x: &[T]) -> T {
    let (a, b) = (x[0], x[1]);
    let a2 = a * a;
    let b2 = b * b;
    c::<T>(4.0) * a2 - c::<T>(2.1) * a2 * a2 + a2 * a2 * a2 / c(3.0) + a * b - c::<T>(4.0) * b2
        + c::<T>(4.0) * b2 * b2
}

pub fn branin<T: Scalar>(x: &[T]) -> T {
    let p = pi::<T>();
    let (a, b) = (x[0], x[1]);
    let t = b - c::<T>(5.1) / (c::<T>(4.0) * p * p) * a * a + c::<T>(5.0) / p * a - c(6.0);
    t * t + c::<T>(10.0) * (T::one() - T::one() / (c::<T>(8.0) * p)) * a.cos() + c(10.0)
}

pub fn goldstein_price<T: Scalar>(x: &[T]) -> T {
    let (a, b) = (x[0], x[1]);
    let s = a + b + T::one();
    let left = T::one()
        + s * s
            * (c::<T>(19.0) - c::<T>(14.0) * a + c::<T>(3.0) * a * a - c::<T>(14.0) * b
                + c::<T>(6.0) * a * b
                + c::<T>(3.0) * b * b);
    let t = c::<T>(2.0) * a - c::<T>(3.0) * b;
    let right = c::<T>(30.0)
        + t * t
            * (c::<T>(18.0) - c::<T>(32.0) * a + c::<T>(12.0) * a * a + c::<T>(48.0) * b
                - c::<T>(36.0) * a * b
                + c::<T>(27.0) * b * b);
    left * right
}

fn hartmann<T: Scalar, const D: usize>(x: &[T], a: &[[f64; D]; 4], p: &[[f64; D]; 4]) -> T {
    let mut acc = T::zero();
    for i in 0..4 {
        let mut inner = T::zero();
        for j in 0..D {
            let d = x[j] - c(p[i][j]);
            inner += c::<T>(a[i][j]) * d * d;
        }
        acc -= c::<T>(HARTMANN_C[i]) * (-inner).exp();
    }
    acc
}

pub fn hartmann3<T: Scalar>(x: &[T]) -> T {
    hartmann(x, &HARTMANN3_A, &HARTMANN3_P)
}

pub fn hartmann6<T: Scalar>(x: &[T]) -> T {
    hartmann(x, &HARTMANN6_A, &HARTMANN6_P)
}

/// Shekel family with the first `m` of the ten terms (m = 5, 7, 10).
pub fn shekel<T: Scalar>(x: &[T], m: usize) -> T {
    let mut acc = T::zero();
    for (row, &ci) in SHEKEL_A.iter().zip(&SHEKEL_C).take(m) {
        let mut sq = c::<T>(ci);
        for (&xj, &aj) in x.iter().zip(row) {
            let d = xj - c(aj);
            sq += d * d;
        }
        acc -= sq.recip();
    }
    acc
}
