//! Matrix-free power iteration for the dominant eigenpair of a symmetric
//! positive-semidefinite operator.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::{Error, Real, Result};

pub const DEFAULT_POWER_ITERATIONS: usize = 100_000;

#[derive(Debug, Clone, PartialEq)]
pub struct Eigenpair<T> {
    pub value: T,
    /// Unit-norm final iterate.
    pub vector: Vec<T>,
    pub iterations: usize,
    /// `‖A v − λ v‖` for the returned pair.
    pub residual: T,
}

fn norm<T: Real>(v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, &x| acc + x * x).sqrt()
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |acc, (&x, &y)| acc + x * y)
}

/// Dominant eigenpair of the operator `apply(x, out)` (writes `A x` into `out`).
///
/// Converged once the relative Rayleigh-quotient change stays below `tol` for
/// two consecutive iterations and the residual `‖A v − λ v‖` is at most
/// `10·tol·max(1, |λ|)`. The start vector is uniform on `[−1, 1]^dim` drawn
/// from a ChaCha8 stream seeded with `seed`.
pub fn power_iteration_top_eigenvalue<T, F>(apply: F, dim: usize, tol: T, seed: u64) -> Result<Eigenpair<T>>
where
    T: Real,
    F: FnMut(&[T], &mut [T]),
{
    power_iteration_with_budget(apply, dim, tol, seed, DEFAULT_POWER_ITERATIONS)
}

pub fn power_iteration_with_budget<T, F>(
    mut apply: F,
    dim: usize,
    tol: T,
    seed: u64,
    max_iter: usize,
) -> Result<Eigenpair<T>>
where
    T: Real,
    F: FnMut(&[T], &mut [T]),
{
    if dim == 0 {
        return Err(Error::DimensionMismatch { expected: 1, actual: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<T> = (0..dim).map(|_| T::lit(rng.gen_range(-1.0..1.0))).collect();
    let n0 = norm(&v);
    if n0 == T::zero() {
        v[0] = T::one();
    } else {
        v.iter_mut().for_each(|x| *x = *x / n0);
    }

    let mut w = vec![T::zero(); dim];
    apply(&v, &mut w);
    let mut lambda = dot(&v, &w);
    let mut calm = 0;
    let bound = T::lit(10.0) * tol;

    for it in 1..=max_iter {
        let nw = norm(&w);
        if nw == T::zero() {
            return Ok(Eigenpair { value: T::zero(), vector: v, iterations: it, residual: T::zero() });
        }
        v.iter_mut().zip(&w).for_each(|(x, &y)| *x = y / nw);
        apply(&v, &mut w);
        let next = dot(&v, &w);
        let change = (next - lambda).abs() / next.abs().max(T::min_positive_value());
        lambda = next;
        calm = if change < tol { calm + 1 } else { 0 };
        if calm >= 2 {
            let residual =
                v.iter().zip(&w).fold(T::zero(), |acc, (&x, &y)| acc + (y - lambda * x) * (y - lambda * x)).sqrt();
            if residual <= bound * lambda.abs().max(T::one()) {
                return Ok(Eigenpair { value: lambda, vector: v, iterations: it, residual });
            }
        }
    }
    Err(Error::NoConvergence { method: "power iteration", iterations: max_iter })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity() {
        let p = power_iteration_top_eigenvalue(|x: &[f64], y: &mut [f64]| y.copy_from_slice(x), 3, 1e-14, 7).unwrap();
        assert!((p.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn diagonal() {
        let d = [1.0, 2.0, 3.0];
        let apply = |x: &[f64], y: &mut [f64]| {
            for i in 0..3 {
                y[i] = d[i] * x[i];
            }
        };
        let p = power_iteration_top_eigenvalue(apply, 3, 1e-13, 1).unwrap();
        assert!((p.value - 3.0).abs() < 1e-12);
        assert!(p.vector[2].abs() > 1.0 - 1e-12);
        assert!(p.residual <= 100.0 * 1e-13);
    }

    #[test]
    fn reproducible_for_fixed_seed() {
        let apply = |x: &[f64], y: &mut [f64]| {
            for i in 0..x.len() {
                y[i] = (i as f64 + 1.0) * x[i]
                    + if i > 0 { 0.5 * x[i - 1] } else { 0.0 }
                    + if i + 1 < x.len() { 0.5 * x[i + 1] } else { 0.0 };
            }
        };
        let a = power_iteration_top_eigenvalue(apply, 10, 1e-13, 42).unwrap();
        let b = power_iteration_top_eigenvalue(apply, 10, 1e-13, 42).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn zero_operator() {
        let p = power_iteration_top_eigenvalue(|_: &[f64], y: &mut [f64]| y.fill(0.0), 4, 1e-12, 0).unwrap();
        assert_eq!(p.value, 0.0);
    }

    #[test]
    fn budget() {
        let d = [1.0, 0.999_999, 0.5];
        let apply = |x: &[f64], y: &mut [f64]| {
            for i in 0..3 {
                y[i] = d[i] * x[i];
            }
        };
        let r = power_iteration_with_budget(apply, 3, 1e-15, 3, 10);
        assert!(matches!(r, Err(Error::NoConvergence { .. })));
    }

    #[test]
    fn empty_dimension() {
        assert!(power_iteration_top_eigenvalue(|_: &[f64], _: &mut [f64]| {}, 0, 1e-12, 0).is_err());
    }
}
