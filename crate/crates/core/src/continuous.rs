//! Sharp constant of the integral inequality
//! `∫_a^b (x⁻¹ ∫_a^x f)² dx ≤ d(a, b) ∫_a^b f²` on a finite interval.
//!
//! Everything is computed after the change of variables `x = a·v`, which maps
//! `(a, b)` to `(1, B)` with `B = b/a`. The constant depends on `(a, b)` only
//! through `L = ln B`, and the function attaining equality on `(a, b)` is
//! `h(x/a)` with
//!
//! ```text
//! h(v) = v^{-1/2} (2α cos(α ln v) + sin(α ln v)),   ∫_1^v h = 2√v sin(α ln v).
//! ```

use crate::alpha::{alpha_solve, constant_from_alpha, constant_gap_from_alpha, AlphaRoot};
use crate::kernel::integrate_adaptive;
use crate::{Error, Real, Result};

/// Quadrature tolerance used by [`weight_certificate`].
pub const CERTIFICATE_QUAD_TOL: f64 = 1e-11;

/// Smallest admissible `b/a − 1`; below this the α bracket collapses numerically.
pub const MIN_RELATIVE_LENGTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalSpec<T> {
    a: T,
    b: T,
}

impl<T: Real> IntervalSpec<T> {
    pub fn new(a: T, b: T) -> Result<Self> {
        let ok = a > T::zero()
            && a < b
            && b.is_finite()
            && b / a >= T::one() + T::lit(MIN_RELATIVE_LENGTH).max(T::epsilon());
        if !ok {
            return Err(Error::InvalidInterval { a: a.as_f64(), b: b.as_f64() });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> T {
        self.a
    }

    pub fn b(&self) -> T {
        self.b
    }

    /// `B = b/a`, the right end point after normalization.
    pub fn ratio(&self) -> T {
        self.b / self.a
    }

    /// `L = ln(b/a)`.
    pub fn log_length(&self) -> T {
        self.ratio().ln()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpConstantReport<T> {
    pub interval: IntervalSpec<T>,
    pub log_length: T,
    pub root: AlphaRoot<T>,
    pub d: T,
}

pub fn sharp_constant<T: Real>(iv: IntervalSpec<T>) -> Result<SharpConstantReport<T>> {
    let log_length = iv.log_length();
    let root = alpha_solve(log_length)?;
    Ok(SharpConstantReport { interval: iv, log_length, root, d: constant_from_alpha(root.alpha) })
}

/// `h(v)` in normalized coordinates.
#[inline]
pub fn extremal_normalized<T: Real>(alpha: T, v: T) -> T {
    let (s, c) = (alpha * v.ln()).sin_cos();
    (T::lit(2.0) * alpha * c + s) / v.sqrt()
}

/// `∫_1^v h = 2√v sin(α ln v)`.
#[inline]
pub fn extremal_antiderivative<T: Real>(alpha: T, v: T) -> T {
    T::lit(2.0) * v.sqrt() * (alpha * v.ln()).sin()
}

/// The extremal function `f_{a,b}(x) = h(x/a)` on `[a, b]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremalFunctionSpec<T> {
    pub interval: IntervalSpec<T>,
    pub root: AlphaRoot<T>,
}

impl<T: Real> ExtremalFunctionSpec<T> {
    pub fn new(iv: IntervalSpec<T>) -> Result<Self> {
        Ok(Self { interval: iv, root: alpha_solve(iv.log_length())? })
    }

    pub fn eval(&self, x: T) -> Result<T> {
        extremal_eval(self, x)
    }
}

pub fn extremal_eval<T: Real>(spec: &ExtremalFunctionSpec<T>, x: T) -> Result<T> {
    let (a, b) = (spec.interval.a, spec.interval.b);
    if !(x >= a && x <= b) {
        return Err(Error::OutOfDomain { x: x.as_f64(), lo: a.as_f64(), hi: b.as_f64() });
    }
    Ok(extremal_normalized(spec.root.alpha, x / a))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualityCheckReport<T> {
    /// `∫_a^b (x⁻¹ ∫_a^x f)² dx` for the extremal `f`.
    pub lhs: T,
    /// `d · ∫_a^b f²`.
    pub rhs: T,
    pub ratio: T,
    /// Relative error bound on `ratio` implied by the two quadrature estimates.
    pub quad_error: T,
}

/// Evaluates both sides of the inequality at the extremal function.
///
/// The inner integral uses its closed form, so the left side is the single
/// quadrature `a ∫_1^B (2√v sin(α ln v)/v)² dv`; the right side is
/// `d · a ∫_1^B h(v)² dv`.
pub fn verify_equality<T: Real>(iv: IntervalSpec<T>, quad_tol: T) -> Result<EqualityCheckReport<T>> {
    let report = sharp_constant(iv)?;
    let alpha = report.root.alpha;
    let upper = iv.ratio();
    let lhs_q = integrate_adaptive(
        |v: T| {
            let inner = extremal_antiderivative(alpha, v) / v;
            inner * inner
        },
        T::one(),
        upper,
        quad_tol,
    )?;
    let rhs_q = integrate_adaptive(
        |v: T| {
            let h = extremal_normalized(alpha, v);
            h * h
        },
        T::one(),
        upper,
        quad_tol,
    )?;
    let lhs = iv.a * lhs_q.value;
    let rhs = report.d * iv.a * rhs_q.value;
    let quad_error = lhs_q.error_estimate / lhs_q.value.abs() + rhs_q.error_estimate / rhs_q.value.abs();
    Ok(EqualityCheckReport { lhs, rhs, ratio: lhs / rhs, quad_error })
}

/// `M(g, t) = g⁻²(t) ∫_t^B x⁻² (∫_1^x g²) dx` in normalized coordinates.
///
/// Nested quadrature; the inner tolerance is a tenth of `tol`.
pub fn certificate_functional<T: Real, G: Fn(T) -> T>(upper: T, g_squared: &G, t: T, tol: T) -> Result<T> {
    let gt = g_squared(t);
    if !(gt > T::zero()) || !gt.is_finite() {
        return Err(Error::NonPositiveWeight(t.as_f64()));
    }
    let inner_tol = tol / T::lit(10.0);
    let mut failure = None;
    let outer = integrate_adaptive(
        |x: T| match integrate_adaptive(g_squared, T::one(), x, inner_tol) {
            Ok(q) => q.value / (x * x),
            Err(e) => {
                failure.get_or_insert(e);
                T::zero()
            }
        },
        t,
        upper,
        tol,
    )?;
    if let Some(e) = failure {
        return Err(e);
    }
    Ok(outer.value / gt)
}

/// `(t_i, M(g, t_i))` on the log-uniform grid `t_i = B^{i/(grid_size+1)}`,
/// `i = 1..=grid_size`, strictly inside `(1, B)`.
pub fn certificate_profile<T: Real, G: Fn(T) -> T>(
    iv: IntervalSpec<T>,
    g_squared: G,
    grid_size: usize,
) -> Result<Vec<(T, T)>> {
    if grid_size < 16 {
        return Err(Error::TooSmall { n: grid_size, min: 16 });
    }
    let upper = iv.ratio();
    let log_b = iv.log_length();
    let tol = T::lit(CERTIFICATE_QUAD_TOL);
    let step = log_b / T::from_index(grid_size + 1);
    (1..=grid_size)
        .map(|i| {
            let t = (step * T::from_index(i)).exp();
            certificate_functional(upper, &g_squared, t, tol).map(|m| (t, m))
        })
        .collect()
}

/// Upper bound `max_t M(g, t) ≥ d(a, b)` for a positive weight `g²` given in
/// normalized coordinates on `(1, b/a)`.
///
/// The grid maximum is refined by golden-section search in `ln t` between the
/// neighbouring grid points.
pub fn weight_certificate<T: Real, G: Fn(T) -> T>(iv: IntervalSpec<T>, g_squared: G, grid_size: usize) -> Result<T> {
    let profile = certificate_profile(iv, &g_squared, grid_size)?;
    let (best_i, &(_, best_m)) = profile
        .iter()
        .enumerate()
        .max_by(|x, y| x.1 .1.partial_cmp(&y.1 .1).unwrap_or(std::cmp::Ordering::Equal))
        .expect("grid is non-empty");
    let lo = profile[best_i.saturating_sub(1)].0.ln();
    let hi = profile[(best_i + 1).min(profile.len() - 1)].0.ln();
    let upper = iv.ratio();
    let tol = T::lit(CERTIFICATE_QUAD_TOL);
    let m_at = |s: T| certificate_functional(upper, &g_squared, s.exp(), tol);
    let refined = golden_max(m_at, lo, hi, 40)?;
    Ok(best_m.max(refined))
}

fn golden_max<T: Real, F: Fn(T) -> Result<T>>(f: F, mut lo: T, mut hi: T, iterations: usize) -> Result<T> {
    let ratio = T::lit(0.618_033_988_749_894_8);
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = f(x1)?;
    let mut f2 = f(x2)?;
    for _ in 0..iterations {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = f(x2)?;
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = f(x1)?;
        }
    }
    Ok(f1.max(f2))
}

/// `(min, max)` of `(4 − d(1, e^L))·L²` over the given lengths (each `L ≥ 10`).
pub fn corollary1_check<T: Real>(l_values: &[T]) -> Result<(T, T)> {
    let mut lo = T::infinity();
    let mut hi = T::neg_infinity();
    for &l in l_values {
        if !(l >= T::lit(10.0)) {
            return Err(Error::InvalidLength(l.as_f64()));
        }
        let root = alpha_solve(l)?;
        let scaled = constant_gap_from_alpha(root.alpha) * l * l;
        lo = lo.min(scaled);
        hi = hi.max(scaled);
    }
    Ok((lo, hi))
}
