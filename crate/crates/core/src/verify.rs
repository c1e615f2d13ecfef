//! Quantitative checks of the exact-solution claims: PDE residuals, decay
//! rates, pattern invariance and unidirectionality, and solver error against
//! the closed forms.

use thiserror::Error;

use crate::exact::{ExactSolution, SolutionError};
use crate::integrator::{simulate, SolverError, SolverParams, Trajectory};
use crate::spectral::{
    forward_transform, fractional_laplacian, inverse_transform, nonlinear_term, GridSpec, PhysicalField, SpectralError,
};

/// Round-off budget for residuals of exact solutions on grids up to 256².
pub const RESIDUAL_TOLERANCE: f64 = 1e-10;

/// Norms below this are treated as zero.
pub const NORM_FLOOR: f64 = 1e-300;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum VerifyError {
    #[error(transparent)]
    InvalidSolution(#[from] SolutionError),
    #[error(
        "grid {nx}x{ny} under-resolves modes up to ({kx}, {ky}); need at least 4x the largest wavenumber per axis"
    )]
    UnderResolved { nx: usize, ny: usize, kx: i64, ky: i64 },
    #[error("degenerate decay fit: {0}")]
    DegenerateFit(String),
    #[error("field norm below {NORM_FLOOR:e}")]
    ZeroField,
    #[error("direction (0, 0) is not a direction")]
    ZeroDirection,
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct ResidualReport {
    pub t: f64,
    pub l_inf: f64,
    /// Root-mean-square over the nodes.
    pub l2: f64,
    pub nonlinear_linf: f64,
    pub grid: GridSpec,
    /// Whether the solution passed validation.
    pub valid: bool,
}

impl ResidualReport {
    pub const CSV_HEADER: &'static str = "t,nx,ny,l_inf,l2,nonlinear_linf,valid";

    pub fn is_exact(&self) -> bool {
        self.valid && self.l_inf < RESIDUAL_TOLERANCE
    }

    pub fn to_csv_row(&self) -> String {
        format!(
            "{},{},{},{:e},{:e},{:e},{}",
            self.t,
            self.grid.nx(),
            self.grid.ny(),
            self.l_inf,
            self.l2,
            self.nonlinear_linf,
            self.valid
        )
    }
}

fn check_resolution(sol: &ExactSolution, grid: GridSpec) -> Result<(), VerifyError> {
    let (kx, ky) = sol.max_wavenumbers();
    if 4 * kx > grid.nx() as i64 || 4 * ky > grid.ny() as i64 {
        return Err(VerifyError::UnderResolved {
            nx: grid.nx(),
            ny: grid.ny(),
            kx,
            ky,
        });
    }
    Ok(())
}

/// `∂tθ + u·∇θ + κ(-Δ)^α θ` with the analytic time derivative and spectral
/// space operators, for a validated solution on a grid with 2x margin.
pub fn residual(
    sol: &ExactSolution,
    t: f64,
    grid: GridSpec,
    kappa: f64,
    alpha: f64,
) -> Result<ResidualReport, VerifyError> {
    let report = sol.validate();
    if !report.is_valid() {
        return Err(SolutionError::InvalidSolution(report).into());
    }
    check_resolution(sol, grid)?;
    raw_residual(sol, t, grid, kappa, alpha)
}

/// Same assembly as [`residual`] without the validation and resolution
/// gates, so broken closed forms can be measured.
pub fn raw_residual(
    sol: &ExactSolution,
    t: f64,
    grid: GridSpec,
    kappa: f64,
    alpha: f64,
) -> Result<ResidualReport, VerifyError> {
    let theta = forward_transform(&sol.eval_theta_unchecked(t, grid));
    let dtheta = forward_transform(&sol.eval_dtheta_dt_unchecked(t, grid));
    let advection = nonlinear_term(&theta, true);
    let dissipation = fractional_laplacian(&theta, alpha)?.scaled(kappa);
    let total = dtheta.add(&advection)?.add(&dissipation)?;

    let physical = inverse_transform(&total)?;
    Ok(ResidualReport {
        t,
        l_inf: physical.max_abs(),
        l2: physical.l2(),
        nonlinear_linf: inverse_transform(&advection)?.max_abs(),
        grid,
        valid: sol.validate().is_valid(),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct DecayFit {
    pub fitted_rate: f64,
    /// `κ E^α` for the tested eigenvalue `E`.
    pub expected_rate: f64,
    pub relative_error: f64,
    pub sample_times: Vec<f64>,
}

impl DecayFit {
    pub const CSV_HEADER: &'static str = "fitted_rate,expected_rate,relative_error,samples";

    pub fn to_csv_row(&self) -> String {
        format!(
            "{:e},{:e},{:e},{}",
            self.fitted_rate,
            self.expected_rate,
            self.relative_error,
            self.sample_times.len()
        )
    }
}

/// Least-squares slope of `log‖θ(t)‖₂` against `t`, compared with
/// `κ E^α`.
pub fn decay_rate_fit(
    traj: &Trajectory,
    expected_eigenvalue: f64,
    kappa: f64,
    alpha: f64,
) -> Result<DecayFit, VerifyError> {
    if traj.snapshots.len() < 3 {
        return Err(VerifyError::DegenerateFit(format!(
            "need at least 3 snapshots, got {}",
            traj.snapshots.len()
        )));
    }
    if let Some(s) = traj.snapshots.iter().find(|s| s.l2 < NORM_FLOOR) {
        return Err(VerifyError::DegenerateFit(format!(
            "norm {:e} at t = {} below floor; extend the snapshot window",
            s.l2, s.t
        )));
    }
    let ts: Vec<f64> = traj.times();
    let ls: Vec<f64> = traj.snapshots.iter().map(|s| s.l2.ln()).collect();
    let n = ts.len() as f64;
    let t_mean = ts.iter().sum::<f64>() / n;
    let l_mean = ls.iter().sum::<f64>() / n;
    let sxx: f64 = ts.iter().map(|t| (t - t_mean).powi(2)).sum();
    let sxy: f64 = ts.iter().zip(&ls).map(|(t, l)| (t - t_mean) * (l - l_mean)).sum();
    if sxx == 0.0 {
        return Err(VerifyError::DegenerateFit("snapshot times coincide".to_string()));
    }
    let fitted_rate = -sxy / sxx;
    let expected_rate = kappa
        * if alpha == 0.0 {
            1.0
        } else {
            expected_eigenvalue.powf(alpha)
        };
    Ok(DecayFit {
        fitted_rate,
        expected_rate,
        relative_error: (fitted_rate - expected_rate).abs() / expected_rate.abs(),
        sample_times: ts,
    })
}

/// Inner product of the mean-removed, unit-normalised fields.
pub fn pattern_correlation(a: &PhysicalField, b: &PhysicalField) -> Result<f64, VerifyError> {
    if a.grid() != b.grid() {
        return Err(SpectralError::GridMismatch {
            left: a.grid(),
            right: b.grid(),
        }
        .into());
    }
    let (ma, mb) = (a.mean(), b.mean());
    let (mut ab, mut aa, mut bb) = (0.0, 0.0, 0.0);
    for (x, y) in a.values().iter().zip(b.values()) {
        let (x, y) = (x - ma, y - mb);
        ab += x * y;
        aa += x * x;
        bb += y * y;
    }
    let (na, nb) = (aa.sqrt(), bb.sqrt());
    if na < NORM_FLOOR || nb < NORM_FLOOR {
        return Err(VerifyError::ZeroField);
    }
    Ok((ab / (na * nb)).clamp(-1.0, 1.0))
}

/// Fraction of spectral energy on wavevectors not parallel to `(n, m)`.
pub fn unidirectionality_check(f: &PhysicalField, n: i64, m: i64) -> Result<f64, VerifyError> {
    if n == 0 && m == 0 {
        return Err(VerifyError::ZeroDirection);
    }
    let s = forward_transform(f);
    let (mut total, mut off) = (0.0, 0.0);
    for (kx, ky, c) in s.modes() {
        let e = c.norm_sqr();
        total += e;
        if kx * m - ky * n != 0 {
            off += e;
        }
    }
    if total < NORM_FLOOR {
        return Err(VerifyError::ZeroField);
    }
    Ok(off / total)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorSample {
    pub t: f64,
    pub relative_l2: f64,
}

/// Simulates from the closed form at `t = 0` and reports the relative L2
/// error against the closed form at every snapshot. The reference uses the
/// dissipation parameters of `params`.
pub fn solver_vs_exact(
    sol: &ExactSolution,
    params: &SolverParams,
    grid: GridSpec,
) -> Result<Vec<ErrorSample>, VerifyError> {
    let sol = sol.with_params(params.kappa, params.alpha);
    let initial = sol.eval_theta(0.0, grid)?;
    let traj = simulate(&initial, params)?;
    traj.snapshots
        .iter()
        .map(|snap| {
            let exact = sol.eval_theta(snap.t, grid)?;
            let err = snap.field.sub(&exact)?.l2();
            let norm = exact.l2();
            Ok(ErrorSample {
                t: snap.t,
                relative_l2: if norm < NORM_FLOOR { err } else { err / norm },
            })
        })
        .collect()
}

pub fn max_relative_error(series: &[ErrorSample]) -> f64 {
    series.iter().fold(0.0, |m, s| m.max(s.relative_l2))
}
