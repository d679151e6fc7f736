//! The characteristic root `α(L)`.
//!
//! For a logarithmic length `L > 0`, `α` is the unique root of
//! `tan(αL) + 2α = 0` in `(π/(2L), π/L)`. Multiplying through by `cos(αL)`,
//! which does not vanish on that open interval, gives the smooth form
//! `F(α) = 2α cos(αL) + sin(αL)`. `F(π/(2L)) = 1`, `F(π/L) = −2π/L` and `F` is
//! strictly decreasing in between, so plain bisection always converges.

use crate::kernel::{solve_bracketed, BracketedProblem};
use crate::{Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaRoot<T> {
    /// `L = ln(b/a)` (continuous case) or `ln(n + 1)` (discrete case).
    pub log_length: T,
    pub alpha: T,
    /// `|F(α)|` re-evaluated at the returned root.
    pub residual: T,
    pub bracket_lo: T,
    pub bracket_hi: T,
}

/// `F(α) = 2α cos(αL) + sin(αL)`.
#[inline]
pub fn characteristic<T: Real>(alpha: T, log_length: T) -> T {
    let (s, c) = (alpha * log_length).sin_cos();
    T::lit(2.0) * alpha * c + s
}

pub fn alpha_solve<T: Real>(log_length: T) -> Result<AlphaRoot<T>> {
    if !(log_length > T::zero()) || !log_length.is_finite() {
        return Err(Error::InvalidLength(log_length.as_f64()));
    }
    let pi = T::PI();
    let lo = pi / (T::lit(2.0) * log_length);
    let hi = pi / log_length;
    let tol_x = T::lit(4.0) * T::epsilon() * lo;
    let problem = BracketedProblem::new(lo, hi, |a| characteristic(a, log_length)).tol_x(tol_x);
    let alpha = solve_bracketed(&problem)?;
    Ok(AlphaRoot {
        log_length,
        alpha,
        residual: characteristic(alpha, log_length).abs(),
        bracket_lo: lo,
        bracket_hi: hi,
    })
}

/// `4 / (1 + 4α²)`.
#[inline]
pub fn constant_from_alpha<T: Real>(alpha: T) -> T {
    T::lit(4.0) / (T::one() + T::lit(4.0) * alpha * alpha)
}

/// `4 − 4/(1 + 4α²) = 16α² / (1 + 4α²)`, without the cancellation of the
/// subtraction when `α` is small.
#[inline]
pub fn constant_gap_from_alpha<T: Real>(alpha: T) -> T {
    let a2 = alpha * alpha;
    T::lit(16.0) * a2 / (T::one() + T::lit(4.0) * a2)
}

pub fn alpha_to_constant<T: Real>(root: &AlphaRoot<T>) -> T {
    constant_from_alpha(root.alpha)
}
