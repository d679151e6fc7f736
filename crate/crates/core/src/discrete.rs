//! The finite discrete inequality `Σ_k ((1/k) Σ_{j≤k} a_j)² ≤ d_n Σ_k a_k²`.
//!
//! `d_n = ‖H‖²` for the averaging matrix `H` of order `n`. `H` and `HᵀH` are
//! only ever applied through prefix and suffix sums, never stored.

use crate::alpha::{alpha_solve, constant_from_alpha, AlphaRoot};
use crate::kernel::power_iteration_top_eigenvalue;
use crate::{Error, Real, Result};

/// Above this length the prefix/suffix sums switch to compensated summation.
pub const COMPENSATED_SUM_THRESHOLD: usize = 100_000;

pub const DEFAULT_SEED: u64 = 0x5eed;

/// Default relative Rayleigh-quotient tolerance for [`dn_eigen`].
pub fn default_eigen_tol<T: Real>() -> T {
    T::epsilon() * T::lit(45.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HardyOperator {
    n: usize,
}

impl HardyOperator {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooSmall { n, min: 1 });
        }
        Ok(Self { n })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    fn check<T>(&self, a: &[T]) -> Result<()> {
        if a.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, actual: a.len() });
        }
        Ok(())
    }

    /// `y_k = (1/k) Σ_{j≤k} a_j` written into `out`.
    pub fn apply_into<T: Real>(&self, a: &[T], out: &mut [T]) {
        let mut acc = Accumulator::new(self.n > COMPENSATED_SUM_THRESHOLD);
        for (k, (y, &x)) in out.iter_mut().zip(a).enumerate() {
            acc.add(x);
            *y = acc.value() / T::from_index(k + 1);
        }
    }

    /// `HᵀH a` written into `out`: forward prefix pass, then
    /// `z_j = Σ_{k≥j} y_k / k` as a suffix pass.
    pub fn gram_apply_into<T: Real>(&self, a: &[T], out: &mut [T]) {
        self.apply_into(a, out);
        let mut acc = Accumulator::new(self.n > COMPENSATED_SUM_THRESHOLD);
        for k in (0..self.n).rev() {
            acc.add(out[k] / T::from_index(k + 1));
            out[k] = acc.value();
        }
    }
}

/// Running sum, Neumaier-compensated when `compensated` is set.
struct Accumulator<T> {
    sum: T,
    carry: T,
    compensated: bool,
}

impl<T: Real> Accumulator<T> {
    fn new(compensated: bool) -> Self {
        Self { sum: T::zero(), carry: T::zero(), compensated }
    }

    #[inline]
    fn add(&mut self, x: T) {
        if self.compensated {
            let t = self.sum + x;
            if self.sum.abs() >= x.abs() {
                self.carry = self.carry + ((self.sum - t) + x);
            } else {
                self.carry = self.carry + ((x - t) + self.sum);
            }
            self.sum = t;
        } else {
            self.sum = self.sum + x;
        }
    }

    #[inline]
    fn value(&self) -> T {
        self.sum + self.carry
    }
}

pub fn hardy_apply<T: Real>(op: HardyOperator, a: &[T]) -> Result<Vec<T>> {
    op.check(a)?;
    let mut out = vec![T::zero(); op.n];
    op.apply_into(a, &mut out);
    Ok(out)
}

pub fn hardy_gram_apply<T: Real>(op: HardyOperator, a: &[T]) -> Result<Vec<T>> {
    op.check(a)?;
    let mut out = vec![T::zero(); op.n];
    op.gram_apply_into(a, &mut out);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NormMethod {
    /// Top eigenvalue of `HᵀH` by power iteration.
    Eigen,
    /// Smallest zero of the continuous dual Hahn polynomial.
    Hahn,
}

impl NormMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            NormMethod::Eigen => "eigen",
            NormMethod::Hahn => "hahn",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteNormReport<T> {
    pub n: usize,
    pub d_n: T,
    pub method: NormMethod,
    pub iterations: usize,
    /// Eigen: `‖HᵀH v − d_n v‖`. Hahn: width of the final bisection bracket in `t`.
    pub residual: T,
}

pub fn dn_eigen<T: Real>(n: usize, tol: T, seed: u64) -> Result<DiscreteNormReport<T>> {
    let op = HardyOperator::new(n)?;
    let pair = power_iteration_top_eigenvalue(|x: &[T], y: &mut [T]| op.gram_apply_into(x, y), n, tol, seed)?;
    Ok(DiscreteNormReport {
        n,
        d_n: pair.value,
        method: NormMethod::Eigen,
        iterations: pair.iterations,
        residual: pair.residual,
    })
}

/// Same as [`dn_eigen`], also returning the unit-norm maximizer.
pub fn dn_eigen_with_vector<T: Real>(n: usize, tol: T, seed: u64) -> Result<(DiscreteNormReport<T>, Vec<T>)> {
    let op = HardyOperator::new(n)?;
    let pair = power_iteration_top_eigenvalue(|x: &[T], y: &mut [T]| op.gram_apply_into(x, y), n, tol, seed)?;
    let report = DiscreteNormReport {
        n,
        d_n: pair.value,
        method: NormMethod::Eigen,
        iterations: pair.iterations,
        residual: pair.residual,
    };
    Ok((report, pair.vector))
}

#[derive(Debug, Clone, PartialEq)]
pub struct AlmostExtremalSequence<T> {
    pub n: usize,
    /// Root for `L = ln(n + 1)`.
    pub root: AlphaRoot<T>,
    /// `a_1, …, a_n` with `a_k = ∫_k^{k+1} h`.
    pub values: Vec<T>,
    pub rayleigh: T,
}

impl<T: Real> AlmostExtremalSequence<T> {
    /// `4 / (1 + 4α²)`, the lower bound the sequence certifies.
    pub fn lower_bound(&self) -> T {
        constant_from_alpha(self.root.alpha)
    }
}

/// `Σ_{j≤k} a_j = 2√(k+1) sin(α ln(k+1))`.
#[inline]
pub fn partial_sum_closed_form<T: Real>(alpha: T, k: usize) -> T {
    let x = T::from_index(k + 1);
    T::lit(2.0) * x.sqrt() * (alpha * x.ln()).sin()
}

/// `2√(k+1) sin(α ln(k+1)) − 2√k sin(α ln k)`, rearranged as
/// `2 sin A/(√(k+1)+√k) + 4√k cos((A+B)/2) sin((A−B)/2)` with
/// `A − B = α ln(1 + 1/k)` so that no two large terms cancel.
fn telescoped_term<T: Real>(alpha: T, k: usize) -> T {
    let two = T::lit(2.0);
    let kf = T::from_index(k);
    let k1 = kf + T::one();
    let a = alpha * k1.ln();
    let b = alpha * kf.ln();
    let diff = alpha * (T::one() / kf).ln_1p();
    let root_k = kf.sqrt();
    two * a.sin() / (k1.sqrt() + root_k) + T::lit(4.0) * root_k * ((a + b) / two).cos() * (diff / two).sin()
}

pub fn almost_extremal<T: Real>(n: usize) -> Result<AlmostExtremalSequence<T>> {
    if n == 0 {
        return Err(Error::TooSmall { n, min: 1 });
    }
    let root = alpha_solve(T::from_index(n + 1).ln())?;
    let values: Vec<T> = (1..=n).map(|k| telescoped_term(root.alpha, k)).collect();
    let rayleigh = rayleigh_quotient(&values)?;
    Ok(AlmostExtremalSequence { n, root, values, rayleigh })
}

/// `Σ_k ((1/k) Σ_{j≤k} a_j)² / Σ_k a_k²`.
pub fn rayleigh_quotient<T: Real>(a: &[T]) -> Result<T> {
    let op = HardyOperator::new(a.len()).map_err(|_| Error::ZeroVector)?;
    let den = a.iter().fold(T::zero(), |acc, &x| acc + x * x);
    if den == T::zero() {
        return Err(Error::ZeroVector);
    }
    let y = hardy_apply(op, a)?;
    let num = y.iter().fold(T::zero(), |acc, &x| acc + x * x);
    Ok(num / den)
}

/// All `M_i = (1/a_i) Σ_{k=i}^n P_k / k²`, `P_k = Σ_{j≤k} a_j`.
pub fn certificate_values<T: Real>(a: &[T]) -> Result<Vec<T>> {
    if a.is_empty() {
        return Err(Error::ZeroVector);
    }
    if let Some(index) = a.iter().position(|&x| !(x > T::zero())) {
        return Err(Error::NonPositiveEntry { index });
    }
    let n = a.len();
    let mut tail = vec![T::zero(); n];
    let mut prefix = Accumulator::new(n > COMPENSATED_SUM_THRESHOLD);
    for (k, &x) in a.iter().enumerate() {
        prefix.add(x);
        let kf = T::from_index(k + 1);
        tail[k] = prefix.value() / (kf * kf);
    }
    let mut suffix = Accumulator::new(n > COMPENSATED_SUM_THRESHOLD);
    for i in (0..n).rev() {
        suffix.add(tail[i]);
        tail[i] = suffix.value() / a[i];
    }
    Ok(tail)
}

/// `min_i M_i`, a lower bound for `d_n` whenever all `a_i > 0`.
pub fn certificate_lower<T: Real>(a: &[T]) -> Result<T> {
    Ok(certificate_values(a)?.into_iter().fold(T::infinity(), T::min))
}

/// `(4 − 16π²/ln²(n+1), 4 − 32/(ln n + 4)²)`, valid for `n ≥ 3`.
pub fn corollary2_bounds<T: Real>(n: usize) -> Result<(T, T)> {
    if n < 3 {
        return Err(Error::TooSmall { n, min: 3 });
    }
    let four = T::lit(4.0);
    let pi2 = T::PI() * T::PI();
    let l1 = T::from_index(n + 1).ln();
    let ln = T::from_index(n).ln() + four;
    Ok((four - T::lit(16.0) * pi2 / (l1 * l1), four - T::lit(32.0) / (ln * ln)))
}
