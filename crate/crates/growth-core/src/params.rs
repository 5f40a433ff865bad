use crate::{CobbDouglas, GrowthError, Result};

/// Scenario parameters for the exponential-labor model: the labor force
/// grows as `L(t) = L0 e^{gamma t}` and capital accumulates at rate
/// `s F(K, L)`.
///
/// A zero saving rate is admitted (the dynamics reduce to pure decay of
/// the ratio); all other quantities are strictly positive.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalParams {
    production: CobbDouglas,
    s: f64,
    gamma: f64,
    l0: f64,
    k0: f64,
}

impl ClassicalParams {
    pub fn new(production: CobbDouglas, s: f64, gamma: f64, l0: f64, k0: f64) -> Result<Self> {
        GrowthError::require_nonnegative("s", s)?;
        GrowthError::require_positive("gamma", gamma)?;
        GrowthError::require_positive("L0", l0)?;
        GrowthError::require_positive("k0", k0)?;
        Ok(Self {
            production,
            s,
            gamma,
            l0,
            k0,
        })
    }

    pub fn production(&self) -> &CobbDouglas {
        &self.production
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn l0(&self) -> f64 {
        self.l0
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    /// Same scenario started from a different initial ratio.
    pub fn with_k0(&self, k0: f64) -> Result<Self> {
        Self::new(self.production, self.s, self.gamma, self.l0, k0)
    }
}

/// Scenario parameters for the saturating-labor model: the labor force
/// follows `L(t) = Linf - (Linf - L0) e^{-r t}`, approaching the asymptote
/// `Linf` at rate `r`.
///
/// `L0` must be strictly positive and no larger than `Linf`; the exact
/// solution's integrand is singular at `L0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BertalanffyParams {
    production: CobbDouglas,
    s: f64,
    r: f64,
    l_inf: f64,
    l0: f64,
    k0: f64,
}

impl BertalanffyParams {
    pub fn new(
        production: CobbDouglas,
        s: f64,
        r: f64,
        l_inf: f64,
        l0: f64,
        k0: f64,
    ) -> Result<Self> {
        GrowthError::require_nonnegative("s", s)?;
        GrowthError::require_positive("r", r)?;
        GrowthError::require_positive("Linf", l_inf)?;
        GrowthError::require_positive("L0", l0)?;
        GrowthError::require_positive("k0", k0)?;
        if l0 > l_inf {
            return Err(GrowthError::OutOfRange {
                name: "L0",
                value: l0,
                constraint: "<= Linf",
            });
        }
        Ok(Self {
            production,
            s,
            r,
            l_inf,
            l0,
            k0,
        })
    }

    pub fn production(&self) -> &CobbDouglas {
        &self.production
    }

    pub fn s(&self) -> f64 {
        self.s
    }

    pub fn r(&self) -> f64 {
        self.r
    }

    pub fn l_inf(&self) -> f64 {
        self.l_inf
    }

    pub fn l0(&self) -> f64 {
        self.l0
    }

    pub fn k0(&self) -> f64 {
        self.k0
    }

    pub fn with_k0(&self, k0: f64) -> Result<Self> {
        Self::new(self.production, self.s, self.r, self.l_inf, self.l0, k0)
    }
}

/// Which labor law a scenario uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    Classical,
    Bertalanffy,
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ModelKind::Classical => write!(f, "classical"),
            ModelKind::Bertalanffy => write!(f, "bertalanffy"),
        }
    }
}

/// A full parameter set for either model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelParams {
    Classical(ClassicalParams),
    Bertalanffy(BertalanffyParams),
}

impl ModelParams {
    pub fn kind(&self) -> ModelKind {
        match self {
            ModelParams::Classical(_) => ModelKind::Classical,
            ModelParams::Bertalanffy(_) => ModelKind::Bertalanffy,
        }
    }

    pub fn production(&self) -> &CobbDouglas {
        match self {
            ModelParams::Classical(p) => p.production(),
            ModelParams::Bertalanffy(p) => p.production(),
        }
    }

    pub fn k0(&self) -> f64 {
        match self {
            ModelParams::Classical(p) => p.k0(),
            ModelParams::Bertalanffy(p) => p.k0(),
        }
    }

    pub fn with_k0(&self, k0: f64) -> Result<Self> {
        Ok(match self {
            ModelParams::Classical(p) => ModelParams::Classical(p.with_k0(k0)?),
            ModelParams::Bertalanffy(p) => ModelParams::Bertalanffy(p.with_k0(k0)?),
        })
    }
}
