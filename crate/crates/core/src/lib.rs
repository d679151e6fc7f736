//! Sharp constants in Hardy's integral inequality on a finite interval `(a, b)`
//! and in the finite discrete Hardy inequality of order `n`.
//!
//! The continuous constant is `d(a, b) = 4 / (1 + 4α²)`, where `α` is the root
//! of `tan(α ln(b/a)) + 2α = 0` in `(π / (2 ln(b/a)), π / ln(b/a))`. The
//! discrete constant `d_n` is computed two independent ways: as the squared
//! operator norm of the averaging matrix (power iteration on `HᵀH`) and from
//! the smallest zero of the continuous dual Hahn polynomial
//! `S_n(x²; 1/2, 1/2, 1/2)` (a Jacobi-matrix eigenvalue).
//!
//! All routines are generic over [`Real`] (`f32` or `f64`). The aliases at the
//! crate root fix the scalar to `f64`, which is what the tolerances quoted in
//! the documentation refer to.

// `!(x > 0)` is used on purpose so that NaN fails the check.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod acceptance;
pub mod alpha;
pub mod asymptotics;
pub mod continuous;
pub mod discrete;
mod error;
pub mod hahn;
pub mod kernel;
mod scalar;

pub use error::{Error, Result};
pub use scalar::{euler_gamma, Real};

pub use alpha::{alpha_solve, alpha_to_constant, constant_from_alpha};
pub use asymptotics::{arg_a, difference_law, dn_asymptote, zero_asymptote};
pub use continuous::{corollary1_check, extremal_eval, sharp_constant, verify_equality, weight_certificate};
pub use discrete::{
    almost_extremal, certificate_lower, corollary2_bounds, dn_eigen, hardy_apply, hardy_gram_apply, rayleigh_quotient,
    HardyOperator, NormMethod,
};
pub use hahn::{cdh_eval, dn_hahn, jacobi_matrix, smallest_zero};

pub type AlphaRoot = alpha::AlphaRoot<f64>;
pub type IntervalSpec = continuous::IntervalSpec<f64>;
pub type SharpConstantReport = continuous::SharpConstantReport<f64>;
pub type ExtremalFunctionSpec = continuous::ExtremalFunctionSpec<f64>;
pub type EqualityCheckReport = continuous::EqualityCheckReport<f64>;
pub type DiscreteNormReport = discrete::DiscreteNormReport<f64>;
pub type AlmostExtremalSequence = discrete::AlmostExtremalSequence<f64>;
pub type HahnParams = hahn::HahnParams<f64>;
pub type JacobiMatrixSpec = hahn::JacobiMatrixSpec<f64>;
pub type SmallestZeroReport = hahn::SmallestZeroReport<f64>;
pub type GammaArgReport = asymptotics::GammaArgReport<f64>;
pub type TridiagonalSymmetric = kernel::TridiagonalSymmetric<f64>;
pub type QuadratureResult = kernel::QuadratureResult<f64>;
