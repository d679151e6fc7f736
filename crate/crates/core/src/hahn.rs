//! Continuous dual Hahn polynomials and the smallest zero of
//! `S_n(x²; 1/2, 1/2, 1/2)`.
//!
//! With `t = x²`,
//!
//! ```text
//! S_n(t; a, b, c) = (a+b)_n (a+c)_n Σ_{ν=0}^n (−n)_ν (a+ix)_ν (a−ix)_ν / (ν! (a+b)_ν (a+c)_ν)
//! ```
//!
//! and `(a+ix)_ν (a−ix)_ν = Π_{m<ν} ((a+m)² + t)` is a real polynomial in `t`.
//! The monic three-term recurrence
//! `t p_k = p_{k+1} + (A_k + C_k − a²) p_k + A_{k−1} C_k p_{k−1}`,
//! `A_k = (k+a+b)(k+a+c)`, `C_k = k(k+b+c−1)`, gives the Jacobi matrix whose
//! eigenvalues are the zeros in `t`. For `a = b = c = 1/2` it has diagonal
//! `(k+1)² + k² − 1/4` and off-diagonal `k²`.
//!
//! The discrete Hardy constant is `d_n = 4 / (1 + 4 x_{n,1}²)` where `x_{n,1}`
//! is the smallest positive zero.

use crate::discrete::{DiscreteNormReport, NormMethod};
use crate::kernel::{tridiag_eigenvalue_bisection, TridiagonalSymmetric};
use crate::{Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HahnParams<T> {
    pub a: T,
    pub b: T,
    pub c: T,
}

impl<T: Real> HahnParams<T> {
    pub fn new(a: T, b: T, c: T) -> Result<Self> {
        if [a, b, c].iter().all(|&p| p > T::zero() && p.is_finite()) {
            Ok(Self { a, b, c })
        } else {
            Err(Error::InvalidParams)
        }
    }

    /// `a = b = c = 1/2`, the family tied to the discrete Hardy constant.
    pub fn half() -> Self {
        let h = T::lit(0.5);
        Self { a: h, b: h, c: h }
    }
}

/// `S_n(t; a, b, c)` by direct summation of the terminating series.
///
/// The alternating sum loses accuracy for large `n`; it is meant as an
/// independent check of the Jacobi-matrix route for `n ≤ 64`.
pub fn cdh_eval<T: Real>(n: usize, t: T, p: HahnParams<T>) -> T {
    let nf = T::from_index(n);
    let ab = p.a + p.b;
    let ac = p.a + p.c;
    let mut term = T::one();
    let mut sum = T::one();
    let mut norm = T::one();
    for nu in 0..n {
        let v = T::from_index(nu);
        let am = p.a + v;
        term = term * (v - nf) * (am * am + t) / ((v + T::one()) * (ab + v) * (ac + v));
        sum = sum + term;
        norm = norm * (ab + v) * (ac + v);
    }
    norm * sum
}

#[derive(Debug, Clone, PartialEq)]
pub struct JacobiMatrixSpec<T> {
    pub n: usize,
    pub params: HahnParams<T>,
    pub tridiag: TridiagonalSymmetric<T>,
}

pub fn jacobi_matrix<T: Real>(n: usize, p: HahnParams<T>) -> Result<JacobiMatrixSpec<T>> {
    if n == 0 {
        return Err(Error::InvalidDegree(n));
    }
    let up = |k: T| (k + p.a + p.b) * (k + p.a + p.c);
    let down = |k: T| k * (k + p.b + p.c - T::one());
    let diag = (0..n)
        .map(|k| {
            let k = T::from_index(k);
            up(k) + down(k) - p.a * p.a
        })
        .collect();
    let offdiag = (1..n)
        .map(|k| {
            let k = T::from_index(k);
            (up(k - T::one()) * down(k)).sqrt()
        })
        .collect();
    Ok(JacobiMatrixSpec { n, params: p, tridiag: TridiagonalSymmetric::new(diag, offdiag)? })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallestZeroReport<T> {
    pub n: usize,
    /// Smallest zero in `t = x²`.
    pub t1: T,
    pub x1: T,
    /// `4 (1 − 4x₁²/(1 + 4x₁²)) = 4 / (1 + 4x₁²)`.
    pub d_from_zero: T,
    pub iterations: usize,
    pub bracket_width: T,
}

pub fn smallest_zero<T: Real>(n: usize) -> Result<SmallestZeroReport<T>> {
    let j = jacobi_matrix(n, HahnParams::<T>::half())?;
    let b = tridiag_eigenvalue_bisection(&j.tridiag, 0, T::min_positive_value())?;
    let t1 = b.value;
    Ok(SmallestZeroReport {
        n,
        t1,
        x1: t1.sqrt(),
        d_from_zero: T::lit(4.0) / (T::one() + T::lit(4.0) * t1),
        iterations: b.iterations,
        bracket_width: b.width,
    })
}

pub fn dn_hahn<T: Real>(n: usize) -> Result<DiscreteNormReport<T>> {
    let z = smallest_zero::<T>(n)?;
    Ok(DiscreteNormReport {
        n,
        d_n: z.d_from_zero,
        method: NormMethod::Hahn,
        iterations: z.iterations,
        residual: z.bracket_width,
    })
}
