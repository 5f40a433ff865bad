//! Domain types for Solow-Swan growth scenarios with non-constant returns
//! to scale, plus numerical verification of the structural properties of
//! the Cobb-Douglas production function.
//!
//! The capital stock `K`, labor force `L`, and their ratio `k = K/L` are
//! plain `f64` quantities restricted to the positive orthant. All types are
//! immutable values after construction and every operation is a pure
//! function of its inputs, so everything here may be used concurrently
//! without synchronization.

mod checks;
mod error;
mod params;
mod production;
mod tolerances;
mod trajectory;

pub use checks::{
    check_homogeneity, check_inada, Axis, HomogeneityCheck, InadaReport, SignCheck, SignKind,
    TrendCheck, TrendDirection, DEFAULT_FD_STEP,
};
pub use error::GrowthError;
pub use params::{BertalanffyParams, ClassicalParams, ModelKind, ModelParams};
pub use production::CobbDouglas;
pub use tolerances::Tolerances;
pub use trajectory::{Method, Trajectory};

/// Convenience alias used throughout the workspace.
pub type Result<T> = std::result::Result<T, GrowthError>;
