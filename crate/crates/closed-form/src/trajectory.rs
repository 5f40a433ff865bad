use crate::{
    bertalanffy_solution, classical_solution, labor_bertalanffy, labor_exponential, Result,
};
use growth_core::{Method, ModelParams, Tolerances, Trajectory};

/// Samples the exact solution of either model on the given time grid.
///
/// The grid must be nonnegative and strictly increasing; an empty grid
/// yields an empty trajectory. Evaluation failures surface with the
/// offending time attached.
pub fn trajectory_closed_form(
    model: &ModelParams,
    grid: &[f64],
    tol: &Tolerances,
) -> Result<Trajectory> {
    if grid.is_empty() {
        return Ok(Trajectory::empty(Method::ClosedForm));
    }
    let mut ratio = Vec::with_capacity(grid.len());
    let mut labor = Vec::with_capacity(grid.len());
    for &t in grid {
        match model {
            ModelParams::Classical(p) => {
                ratio.push(classical_solution(t, p)?);
                labor.push(labor_exponential(t, p)?);
            }
            ModelParams::Bertalanffy(p) => {
                ratio.push(bertalanffy_solution(t, p, tol)?);
                labor.push(labor_bertalanffy(t, p)?);
            }
        }
    }
    Ok(Trajectory::new(grid.to_vec(), ratio, labor, Method::ClosedForm)?)
}
