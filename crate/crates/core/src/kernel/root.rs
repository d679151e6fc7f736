//! Bracketed scalar root finding.

use crate::{Error, Real, Result};

pub const DEFAULT_ROOT_ITERATIONS: usize = 200;

/// A continuous function together with a sign-changing bracket.
#[derive(Debug, Clone)]
pub struct BracketedProblem<T, F> {
    pub lo: T,
    pub hi: T,
    pub f: F,
    /// Stop once the bracket is at most this wide.
    pub tol_x: T,
    /// Residual accepted when the bracket cannot shrink any further.
    pub tol_f: T,
    pub max_iter: usize,
}

impl<T: Real, F: Fn(T) -> T> BracketedProblem<T, F> {
    pub fn new(lo: T, hi: T, f: F) -> Self {
        let scale = lo.abs().max(hi.abs()).max(T::one());
        Self {
            lo,
            hi,
            f,
            tol_x: T::epsilon() * T::lit(4.0) * scale,
            tol_f: T::epsilon() * T::lit(450.0),
            max_iter: DEFAULT_ROOT_ITERATIONS,
        }
    }

    pub fn tol_x(mut self, tol: T) -> Self {
        self.tol_x = tol;
        self
    }

    pub fn tol_f(mut self, tol: T) -> Self {
        self.tol_f = tol;
        self
    }

    pub fn max_iter(mut self, n: usize) -> Self {
        self.max_iter = n;
        self
    }
}

/// Bisection on a sign-changing bracket.
///
/// The returned point lies strictly inside `(lo, hi)`. Iteration stops when the
/// bracket is no wider than `tol_x`, when `f` vanishes exactly, or when the
/// bracket cannot be split any further in floating point (then the residual
/// must be within `tol_f`).
pub fn solve_bracketed<T: Real, F: Fn(T) -> T>(p: &BracketedProblem<T, F>) -> Result<T> {
    let (mut lo, mut hi) = (p.lo, p.hi);
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::InvalidBracket { lo: lo.as_f64(), hi: hi.as_f64() });
    }
    let f_lo = (p.f)(lo);
    let f_hi = (p.f)(hi);
    if !(f_lo * f_hi < T::zero()) {
        return Err(Error::NoSignChange { lo: lo.as_f64(), hi: hi.as_f64(), f_lo: f_lo.as_f64(), f_hi: f_hi.as_f64() });
    }
    let neg_lo = f_lo < T::zero();
    let two = T::lit(2.0);

    for _ in 0..p.max_iter {
        let mid = lo + (hi - lo) / two;
        if mid <= lo || mid >= hi {
            // Adjacent floats: pick the interior end point with the smaller residual.
            let candidates = [lo, hi]
                .into_iter()
                .filter(|&x| x > p.lo && x < p.hi)
                .map(|x| (x, (p.f)(x).abs()))
                .min_by(|a, b| a.1.partial_cmp(&b.1).unwrap_or(std::cmp::Ordering::Equal));
            return match candidates {
                Some((x, r)) if r <= p.tol_f => Ok(x),
                _ => Err(Error::NoConvergence { method: "bisection", iterations: p.max_iter }),
            };
        }
        let f_mid = (p.f)(mid);
        if f_mid == T::zero() {
            return Ok(mid);
        }
        if (f_mid < T::zero()) == neg_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= p.tol_x {
            let r = lo + (hi - lo) / two;
            if r > p.lo && r < p.hi {
                return Ok(r);
            }
        }
    }
    Err(Error::NoConvergence { method: "bisection", iterations: p.max_iter })
}
