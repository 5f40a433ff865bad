/// Which exact-solution formula a parameter set selects. The rule is a
/// pure function of `(alpha, n)` under exact floating-point comparison:
/// tolerance-based dispatch would make results depend on how close to the
/// boundary a caller happens to land.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ClosedFormBranch {
    /// `n != 1` and `alpha != 1`: the Bernoulli-substitution formulas.
    General,
    /// `alpha = 1`: the dynamics are linear in `k`.
    AlphaOne,
    /// `n = 1` with `alpha != 1`: constant returns to scale. Handled by
    /// the general formula (nothing in it degenerates); the tag records
    /// the regime.
    NOne,
}

impl ClosedFormBranch {
    pub fn select(alpha: f64, n: f64) -> Self {
        if alpha == 1.0 {
            ClosedFormBranch::AlphaOne
        } else if n == 1.0 {
            ClosedFormBranch::NOne
        } else {
            ClosedFormBranch::General
        }
    }
}
