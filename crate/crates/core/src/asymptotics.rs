//! Large-`n` behaviour of the smallest dual Hahn zero and of `d_n`.
//!
//! For `a = b = c = 1/2`, `A(z) = Γ(1/2 − z)³ / Γ(1 − 2z)` and
//! `arg A(ix) = 3 arg Γ(1/2 − ix) − arg Γ(1 − 2ix) ≈ (γ + ln 64)·x` near zero,
//! which places the smallest zero at `x_{n,1} ≈ π / (γ + ln 64 + ln n)`.

use num_complex::Complex;

use crate::alpha::constant_from_alpha;
use crate::kernel::log_gamma_complex;
use crate::{euler_gamma, Error, Real, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaArgReport<T> {
    pub x: T,
    /// `arg A(ix)` in radians (continuous branch).
    pub arg_a: T,
    /// `arg_a / x`; at `x = 0` the limit `γ + ln 64`.
    pub slope_estimate: T,
}

/// `γ + ln 64`.
pub fn slope_constant<T: Real>() -> T {
    euler_gamma::<T>() + T::lit(64.0).ln()
}

/// `2γ + ln 128`, the coefficient used to normalize [`difference_law`].
pub fn difference_coefficient<T: Real>() -> T {
    T::lit(2.0) * euler_gamma::<T>() + T::lit(128.0).ln()
}

fn check_range<T: Real>(x: T) -> Result<()> {
    let limit = T::lit(0.5);
    if !(x.abs() < limit) {
        return Err(Error::OutOfRange { x: x.as_f64(), limit: 0.5 });
    }
    Ok(())
}

/// `arg Γ(1/2 − ix) = Im log Γ(1/2 − ix)`.
pub fn arg_gamma_half<T: Real>(x: T) -> Result<T> {
    Ok(log_gamma_complex(Complex::new(T::lit(0.5), -x))?.im)
}

/// `arg Γ(1 − 2ix) = Im log Γ(1 − 2ix)`.
pub fn arg_gamma_one<T: Real>(x: T) -> Result<T> {
    Ok(log_gamma_complex(Complex::new(T::one(), -T::lit(2.0) * x))?.im)
}

pub fn arg_a<T: Real>(x: T) -> Result<GammaArgReport<T>> {
    check_range(x)?;
    let value = T::lit(3.0) * arg_gamma_half(x)? - arg_gamma_one(x)?;
    let slope_estimate = if x == T::zero() { slope_constant() } else { value / x };
    Ok(GammaArgReport { x, arg_a: value, slope_estimate })
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { n, min });
    }
    Ok(())
}

/// `π / (γ + ln 64 + ln n)`.
pub fn zero_asymptote<T: Real>(n: usize) -> Result<T> {
    check_n(n, 2)?;
    Ok(T::PI() / (slope_constant::<T>() + T::from_index(n).ln()))
}

/// `4 − 16π² / (4π² + (γ + 6 ln 2 + ln n)²)`.
pub fn dn_asymptote<T: Real>(n: usize) -> Result<T> {
    check_n(n, 2)?;
    let pi2 = T::PI() * T::PI();
    let four = T::lit(4.0);
    let s = euler_gamma::<T>() + T::lit(6.0) * T::LN_2() + T::from_index(n).ln();
    Ok(four - T::lit(16.0) * pi2 / (four * pi2 + s * s))
}

/// `dn_asymptote(n)` evaluated through the zero: `4 / (1 + 4 x²)`.
pub fn dn_from_zero_asymptote<T: Real>(n: usize) -> Result<T> {
    Ok(constant_from_alpha(zero_asymptote::<T>(n)?))
}

/// `(dn_asymptote(n) − (4 − 16π²/ln²(n+1))) · ln³ n / (16π² (2γ + ln 128))`.
///
/// The gap is evaluated as `16π² (1/ln²(n+1) − 1/(4π² + s²))` to avoid
/// subtracting two numbers close to 4.
pub fn difference_law<T: Real>(n: usize) -> Result<T> {
    check_n(n, 3)?;
    let pi2 = T::PI() * T::PI();
    let sixteen_pi2 = T::lit(16.0) * pi2;
    let s = euler_gamma::<T>() + T::lit(6.0) * T::LN_2() + T::from_index(n).ln();
    let l1 = T::from_index(n + 1).ln();
    let gap = sixteen_pi2 * (T::one() / (l1 * l1) - T::one() / (T::lit(4.0) * pi2 + s * s));
    let ln = T::from_index(n).ln();
    Ok(gap * ln * ln * ln / (sixteen_pi2 * difference_coefficient::<T>()))
}
