//! Problem-agnostic numeric kernels.

mod gamma;
mod power;
mod quadrature;
mod root;
mod tridiag;

pub use gamma::log_gamma_complex;
pub use power::{power_iteration_top_eigenvalue, power_iteration_with_budget, Eigenpair, DEFAULT_POWER_ITERATIONS};
pub use quadrature::{integrate_adaptive, integrate_adaptive_with, QuadratureResult, DEFAULT_MAX_SEGMENTS};
pub use root::{solve_bracketed, BracketedProblem, DEFAULT_ROOT_ITERATIONS};
pub use tridiag::{
    tridiag_eigenvalue_bisection, tridiag_eigenvalues, tridiag_smallest_eigenvalue, EigenvalueBisection,
    TridiagonalSymmetric, DEFAULT_BISECTION_ITERATIONS,
};
