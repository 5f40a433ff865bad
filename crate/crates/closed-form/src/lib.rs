//! Exact solutions of the capital-labor ratio dynamics for Cobb-Douglas
//! production: the two labor laws, the Bernoulli-substitution solution of
//! the exponential-labor model, the integral-form solution of the
//! saturating-labor model, and the linear (alpha = 1) branches of both.
//!
//! Branch selection compares `alpha` and `n` against 1 exactly; parameters
//! merely close to the degenerate values stay on the general formulas,
//! which evaluate stably there via `expm1`-style forms and log-space
//! powers.

mod bertalanffy;
mod branch;
mod classical;
mod error;
mod labor;
mod trajectory;

pub use bertalanffy::{
    bertalanffy_integrand, bertalanffy_solution, k_bertalanffy, k_bertalanffy_alpha_one,
    k_bertalanffy_alpha_one_hypergeometric,
};
pub use branch::ClosedFormBranch;
pub use classical::{classical_solution, k_classical, k_classical_alpha_one};
pub use error::ClosedFormError;
pub use labor::{labor_bertalanffy, labor_exponential};
pub use trajectory::trajectory_closed_form;

pub type Result<T> = std::result::Result<T, ClosedFormError>;

/// `expm1(x)/x`, finite and accurate for every x (limit 1 at x = 0).
pub(crate) fn expm1_over_x(x: f64) -> f64 {
    if x == 0.0 {
        1.0
    } else {
        x.exp_m1() / x
    }
}
