//! Independent numerical machinery for the growth models: the raw ODE
//! right-hand sides, an adaptive embedded Runge-Kutta integrator used as
//! the oracle against the exact solutions, adaptive Gauss-Kronrod
//! quadrature, and a real-argument Gauss hypergeometric evaluator.
//!
//! Everything here is deliberately independent of the closed-form crate:
//! the two paths only meet in tests and verification reports.

mod error;
mod gamma;
mod hyp2f1;
mod ode;
mod quad;
mod rhs;

pub use error::NumericsError;
pub use hyp2f1::{hyp2f1, hyp2f1_pfaff, hyp2f1_series};
pub use ode::{
    integrate, integrate_bertalanffy, integrate_classical, integrate_fixed_step,
    IntegrationReport, OdeProblem,
};
pub use quad::{quad_adaptive, QuadEstimate};
pub use rhs::{
    rhs_cobb_bertalanffy, rhs_cobb_classical, rhs_general_bertalanffy, rhs_general_classical,
};

pub type Result<T> = std::result::Result<T, NumericsError>;
