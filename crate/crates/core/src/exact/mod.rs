//! Closed-form quasi-stationary solutions of the dissipative SQG equation.
//!
//! Two families are provided. [`EigenmodeSolution`] superposes a product
//! eigen-group `sin/cos(nx)·sin/cos(my)` with an axis-aligned group
//! `sin/cos(kx)`, `sin/cos(ky)`; the advection term vanishes when both groups
//! share the eigenvalue `n² + m² = k²`. [`UnidirectionalSolution`] is a finite
//! Fourier series in the single phase `n x + m y`.
//!
//! Velocity and time derivative are evaluated analytically, so these types
//! act as oracles for the spectral operators and the time integrator.

mod eigenmode;
mod samples;
mod unidirectional;

use std::fmt;

use thiserror::Error;

use crate::spectral::{GridSpec, PhysicalField};

pub use eigenmode::EigenmodeSolution;
pub use samples::{builtin_samples, lookup_sample, DatumTerm, InitialDatum, Sample, Trig, SAMPLE_NAMES};
pub use unidirectional::{Mode, UnidirectionalSolution};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolutionError {
    #[error("not an exact solution: {0}")]
    InvalidSolution(ValidationReport),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// Eigenmode family requires `n·m ≠ 0`.
    ZeroProduct {
        n: i64,
        m: i64,
    },
    /// Both groups active but `n² + m² ≠ k²`.
    Pythagorean {
        n2_plus_m2: i64,
        k2: i64,
    },
    /// Axis-aligned group active with `k = 0`.
    ZeroAxisWavenumber,
    /// Unidirectional family requires `|n| + |m| ≠ 0`.
    ZeroDirection,
    DuplicateMode {
        k: i64,
    },
    Kappa(f64),
    Alpha(f64),
    NonFiniteCoefficient,
    /// A general datum mixing several eigenvalues off a single direction.
    MixedEigenvalues {
        eigenvalues: Vec<i64>,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroProduct { n, m } => write!(f, "n*m must be nonzero (n={n}, m={m})"),
            Violation::Pythagorean { n2_plus_m2, k2 } => {
                write!(f, "constraint n^2+m^2 = k^2 violated: {n2_plus_m2} != {k2}")
            }
            Violation::ZeroAxisWavenumber => write!(f, "k must be nonzero when c5..c8 are active"),
            Violation::ZeroDirection => write!(f, "direction (n, m) must be nonzero"),
            Violation::DuplicateMode { k } => write!(f, "mode k={k} listed more than once"),
            Violation::Kappa(k) => write!(f, "kappa must be positive and finite (got {k})"),
            Violation::Alpha(a) => write!(f, "alpha must lie in [0, 1) (got {a})"),
            Violation::NonFiniteCoefficient => write!(f, "coefficients must be finite"),
            Violation::MixedEigenvalues { eigenvalues } => write!(
                f,
                "mixes Laplacian eigenvalues {eigenvalues:?} without a common direction; advection does not vanish"
            ),
        }
    }
}

/// Outcome of checking a solution against the hypotheses of the existence
/// result. Empty `violations` means the closed form solves the equation.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    /// Assumptions applied while checking; informational only.
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub(crate) fn check_params(&mut self, kappa: f64, alpha: f64) {
        if !(kappa.is_finite() && kappa > 0.0) {
            self.violations.push(Violation::Kappa(kappa));
        }
        if !(0.0..1.0).contains(&alpha) {
            self.violations.push(Violation::Alpha(alpha));
        }
    }

    fn into_result(self) -> Result<(), SolutionError> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(SolutionError::InvalidSolution(self))
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

/// `exp(-κ E^α t)` with the `(-Δ)^0 = Id` convention at `E = 0`.
#[inline]
pub(crate) fn decay(kappa: f64, alpha: f64, eigenvalue: i64, t: f64) -> f64 {
    (-kappa * rate_symbol(eigenvalue, alpha) * t).exp()
}

#[inline]
pub(crate) fn rate_symbol(eigenvalue: i64, alpha: f64) -> f64 {
    if alpha == 0.0 {
        1.0
    } else {
        (eigenvalue as f64).powf(alpha)
    }
}

/// Either family, with a common evaluation interface.
#[derive(Debug, Clone, PartialEq)]
pub enum ExactSolution {
    Eigenmode(EigenmodeSolution),
    Unidirectional(UnidirectionalSolution),
}

impl From<EigenmodeSolution> for ExactSolution {
    fn from(s: EigenmodeSolution) -> Self {
        ExactSolution::Eigenmode(s)
    }
}

impl From<UnidirectionalSolution> for ExactSolution {
    fn from(s: UnidirectionalSolution) -> Self {
        ExactSolution::Unidirectional(s)
    }
}

impl ExactSolution {
    pub fn validate(&self) -> ValidationReport {
        match self {
            ExactSolution::Eigenmode(s) => s.validate(),
            ExactSolution::Unidirectional(s) => s.validate(),
        }
    }

    pub fn kappa(&self) -> f64 {
        match self {
            ExactSolution::Eigenmode(s) => s.kappa,
            ExactSolution::Unidirectional(s) => s.kappa,
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            ExactSolution::Eigenmode(s) => s.alpha,
            ExactSolution::Unidirectional(s) => s.alpha,
        }
    }

    /// Same closed form with different dissipation parameters.
    pub fn with_params(&self, kappa: f64, alpha: f64) -> Self {
        let mut out = self.clone();
        match &mut out {
            ExactSolution::Eigenmode(s) => {
                s.kappa = kappa;
                s.alpha = alpha;
            }
            ExactSolution::Unidirectional(s) => {
                s.kappa = kappa;
                s.alpha = alpha;
            }
        }
        out
    }

    pub fn theta_at(&self, x: f64, y: f64, t: f64) -> f64 {
        match self {
            ExactSolution::Eigenmode(s) => s.theta_at(x, y, t),
            ExactSolution::Unidirectional(s) => s.theta_at(x, y, t),
        }
    }

    pub fn velocity_at(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        match self {
            ExactSolution::Eigenmode(s) => s.velocity_at(x, y, t),
            ExactSolution::Unidirectional(s) => s.velocity_at(x, y, t),
        }
    }

    pub fn dtheta_dt_at(&self, x: f64, y: f64, t: f64) -> f64 {
        match self {
            ExactSolution::Eigenmode(s) => s.dtheta_dt_at(x, y, t),
            ExactSolution::Unidirectional(s) => s.dtheta_dt_at(x, y, t),
        }
    }

    /// Distinct squared wavenumber magnitudes carrying nonzero amplitude.
    pub fn eigenvalues(&self) -> Vec<i64> {
        match self {
            ExactSolution::Eigenmode(s) => s.eigenvalues(),
            ExactSolution::Unidirectional(s) => s.eigenvalues(),
        }
    }

    /// Largest `|kx|` and `|ky|` among the active Fourier modes.
    pub fn max_wavenumbers(&self) -> (i64, i64) {
        match self {
            ExactSolution::Eigenmode(s) => s.max_wavenumbers(),
            ExactSolution::Unidirectional(s) => s.max_wavenumbers(),
        }
    }

    pub fn is_single_eigenvalue(&self) -> bool {
        self.eigenvalues().len() == 1
    }

    /// Propagation direction `(n, m)` of a unidirectional solution.
    pub fn direction(&self) -> Option<(i64, i64)> {
        match self {
            ExactSolution::Eigenmode(_) => None,
            ExactSolution::Unidirectional(s) => Some((s.n, s.m)),
        }
    }

    pub fn eval_theta(&self, t: f64, grid: GridSpec) -> Result<PhysicalField, SolutionError> {
        self.validate().into_result()?;
        Ok(self.eval_theta_unchecked(t, grid))
    }

    pub fn eval_velocity(&self, t: f64, grid: GridSpec) -> Result<(PhysicalField, PhysicalField), SolutionError> {
        self.validate().into_result()?;
        Ok(self.eval_velocity_unchecked(t, grid))
    }

    pub fn eval_dtheta_dt(&self, t: f64, grid: GridSpec) -> Result<PhysicalField, SolutionError> {
        self.validate().into_result()?;
        Ok(self.eval_dtheta_dt_unchecked(t, grid))
    }

    /// Grid evaluation of the closed form without checking the hypotheses.
    /// Used to probe invalid combinations, whose formula is still defined.
    pub fn eval_theta_unchecked(&self, t: f64, grid: GridSpec) -> PhysicalField {
        PhysicalField::from_fn(grid, |x, y| self.theta_at(x, y, t))
    }

    pub fn eval_velocity_unchecked(&self, t: f64, grid: GridSpec) -> (PhysicalField, PhysicalField) {
        let (u, v): (Vec<f64>, Vec<f64>) = grid.nodes().map(|(_, _, x, y)| self.velocity_at(x, y, t)).unzip();
        (
            PhysicalField::new(grid, u).expect("grid-sized"),
            PhysicalField::new(grid, v).expect("grid-sized"),
        )
    }

    pub fn eval_dtheta_dt_unchecked(&self, t: f64, grid: GridSpec) -> PhysicalField {
        PhysicalField::from_fn(grid, |x, y| self.dtheta_dt_at(x, y, t))
    }
}
