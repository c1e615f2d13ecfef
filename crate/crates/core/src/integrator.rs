//! Integrating-factor RK4 time stepping for
//! `∂tθ̂ = -κ|k|^{2α} θ̂ - (u·∇θ)^`.
//!
//! The dissipation enters only through the diagonal factors
//! `exp(-κ|k|^{2α} h)`, so it is integrated exactly; the classical RK4
//! stages act on the advection term alone. When the advection term
//! vanishes (all exact solutions), one step is exactly the linear decay.

use thiserror::Error;

use crate::spectral::{
    check_alpha, forward_transform, fractional_symbol, inverse_transform, nonlinear_term, velocity_nodes, Complex64,
    GridSpec, PhysicalField, SpectralError, SpectralField,
};

/// Courant number for the advective stability guard.
pub const CFL_NUMBER: f64 = 0.5;

/// Growth of the max-norm over its initial value treated as blow-up.
pub const BLOWUP_FACTOR: f64 = 1e6;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("invalid solver parameters: {0}")]
    InvalidParams(String),
    #[error("time step {dt} exceeds the stability limit {limit:.6e} at t = {t}")]
    CflViolation { t: f64, dt: f64, limit: f64 },
    #[error("blow-up detected at t = {t}: {reason}")]
    BlowupDetected { t: f64, reason: String },
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolverParams {
    pub kappa: f64,
    pub alpha: f64,
    pub dt: f64,
    pub t_end: f64,
    pub dealias: bool,
    /// Times in `[0, t_end]` at which the state is recorded. `0` and `t_end`
    /// are always recorded.
    pub snapshot_times: Vec<f64>,
}

impl SolverParams {
    pub fn new(kappa: f64, alpha: f64, dt: f64, t_end: f64) -> Self {
        Self {
            kappa,
            alpha,
            dt,
            t_end,
            dealias: true,
            snapshot_times: Vec::new(),
        }
    }

    pub fn with_snapshots(mut self, times: Vec<f64>) -> Self {
        self.snapshot_times = times;
        self
    }

    pub fn with_dealias(mut self, dealias: bool) -> Self {
        self.dealias = dealias;
        self
    }

    pub fn validate(&self) -> Result<(), SolverError> {
        let bad = |msg: String| Err(SolverError::InvalidParams(msg));
        if !(self.kappa.is_finite() && self.kappa > 0.0) {
            return bad(format!("kappa must be positive (got {})", self.kappa));
        }
        if check_alpha(self.alpha).is_err() {
            return bad(format!("alpha must lie in [0, 1) (got {})", self.alpha));
        }
        if !(self.dt.is_finite() && self.dt > 0.0) {
            return bad(format!("dt must be positive (got {})", self.dt));
        }
        if !(self.t_end.is_finite() && self.t_end >= 0.0) {
            return bad(format!("t_end must be non-negative (got {})", self.t_end));
        }
        if self.t_end > 0.0 && self.dt > self.t_end {
            return bad(format!("dt = {} exceeds t_end = {}", self.dt, self.t_end));
        }
        if let Some(t) = self.snapshot_times.iter().find(|t| !(0.0..=self.t_end).contains(*t)) {
            return bad(format!("snapshot time {t} outside [0, {}]", self.t_end));
        }
        if self.snapshot_times.windows(2).any(|w| w[0] > w[1]) {
            return bad("snapshot times must be sorted".to_string());
        }
        Ok(())
    }

    /// Recording times after 0: the requested snapshots plus `t_end`,
    /// strictly increasing.
    fn targets(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self.snapshot_times.iter().copied().filter(|t| *t > 0.0).collect();
        if self.t_end > 0.0 {
            out.push(self.t_end);
        }
        out.dedup();
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Snapshot {
    pub t: f64,
    pub field: PhysicalField,
    pub l2: f64,
    pub linf: f64,
    pub mean: f64,
}

impl Snapshot {
    fn new(t: f64, field: PhysicalField) -> Self {
        Self {
            t,
            l2: field.l2(),
            linf: field.max_abs(),
            mean: field.mean(),
            field,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub snapshots: Vec<Snapshot>,
}

impl Trajectory {
    pub fn grid(&self) -> Option<GridSpec> {
        self.snapshots.first().map(|s| s.field.grid())
    }

    pub fn times(&self) -> Vec<f64> {
        self.snapshots.iter().map(|s| s.t).collect()
    }

    pub fn last(&self) -> &Snapshot {
        self.snapshots
            .last()
            .expect("a trajectory always holds the initial snapshot")
    }

    pub fn at(&self, t: f64) -> Option<&Snapshot> {
        self.snapshots.iter().find(|s| s.t == t)
    }
}

/// Precomputed integrating factors for one step size.
#[derive(Debug, Clone)]
pub struct IfRk4 {
    grid: GridSpec,
    dt: f64,
    dealias: bool,
    half: Vec<f64>,
    full: Vec<f64>,
}

impl IfRk4 {
    pub fn new(grid: GridSpec, kappa: f64, alpha: f64, dt: f64, dealias: bool) -> Self {
        let mut half = Vec::with_capacity(grid.len());
        let mut full = Vec::with_capacity(grid.len());
        for j in 0..grid.ny() {
            let ky = grid.ky(j);
            for i in 0..grid.nx() {
                let rate = kappa * fractional_symbol(grid.kx(i), ky, alpha);
                half.push((-rate * 0.5 * dt).exp());
                full.push((-rate * dt).exp());
            }
        }
        Self {
            grid,
            dt,
            dealias,
            half,
            full,
        }
    }

    pub fn dt(&self) -> f64 {
        self.dt
    }

    fn rhs(&self, s: &SpectralField) -> Vec<Complex64> {
        nonlinear_term(s, self.dealias)
            .coefficients()
            .iter()
            .map(|c| -c)
            .collect()
    }

    fn stage(&self, coeffs: Vec<Complex64>) -> SpectralField {
        SpectralField::from_coefficients(self.grid, coeffs).expect("grid-sized")
    }

    /// One step of length `dt`.
    pub fn advance(&self, state: &SpectralField) -> SpectralField {
        let h = self.dt;
        let y = state.coefficients();
        let (e, e2) = (&self.half, &self.full);
        let len = y.len();

        let k1 = self.rhs(state);
        let a: Vec<Complex64> = (0..len).map(|i| e[i] * (y[i] + 0.5 * h * k1[i])).collect();
        let k2 = self.rhs(&self.stage(a));
        let b: Vec<Complex64> = (0..len).map(|i| e[i] * y[i] + 0.5 * h * k2[i]).collect();
        let k3 = self.rhs(&self.stage(b));
        let c: Vec<Complex64> = (0..len).map(|i| e2[i] * y[i] + h * e[i] * k3[i]).collect();
        let k4 = self.rhs(&self.stage(c));

        let out = (0..len)
            .map(|i| e2[i] * y[i] + h / 6.0 * (e2[i] * k1[i] + 2.0 * e[i] * (k2[i] + k3[i]) + k4[i]))
            .collect();
        self.stage(out)
    }
}

/// A single integrating-factor RK4 step of length `params.dt`.
pub fn step(state: &SpectralField, params: &SolverParams) -> Result<SpectralField, SolverError> {
    params.validate()?;
    let stepper = IfRk4::new(state.grid(), params.kappa, params.alpha, params.dt, params.dealias);
    let next = stepper.advance(state);
    let guard = BlowupGuard::new(max_norm(state));
    guard.check(&next, params.dt)?;
    Ok(next)
}

/// Largest admissible step under `dt · max|u| · max|k| <= CFL_NUMBER`, where
/// `max|k|` is the largest retained wavenumber on either axis.
pub fn cfl_limit(state: &SpectralField, dealias: bool) -> f64 {
    let g = state.grid();
    let kmax = if dealias {
        g.dealias_cutoff_x().max(g.dealias_cutoff_y())
    } else {
        (g.nx().max(g.ny()) / 2) as i64
    };
    let theta = if dealias {
        crate::spectral::dealias(state)
    } else {
        state.clone()
    };
    let (u, v) = velocity_nodes(&theta);
    let speed = u
        .values()
        .iter()
        .zip(v.values())
        .fold(0.0f64, |m, (a, b)| m.max(a.hypot(*b)));
    if speed == 0.0 {
        f64::INFINITY
    } else {
        CFL_NUMBER / (speed * kmax as f64)
    }
}

fn check_cfl(state: &SpectralField, params: &SolverParams, t: f64) -> Result<(), SolverError> {
    let limit = cfl_limit(state, params.dealias);
    if params.dt > limit {
        return Err(SolverError::CflViolation {
            t,
            dt: params.dt,
            limit,
        });
    }
    Ok(())
}

fn max_norm(s: &SpectralField) -> f64 {
    crate::spectral::inverse_unchecked(s).max_abs()
}

struct BlowupGuard {
    threshold: f64,
}

impl BlowupGuard {
    fn new(initial_linf: f64) -> Self {
        Self {
            threshold: BLOWUP_FACTOR * initial_linf,
        }
    }

    fn check(&self, s: &SpectralField, t: f64) -> Result<(), SolverError> {
        if !s.is_finite() {
            return Err(SolverError::BlowupDetected {
                t,
                reason: "non-finite coefficient".to_string(),
            });
        }
        // Σ|c| bounds the max-norm from above; only transform when it might trip
        let bound: f64 = s.coefficients().iter().map(|c| c.norm()).sum();
        if bound > self.threshold {
            let linf = max_norm(s);
            if linf > self.threshold {
                return Err(SolverError::BlowupDetected {
                    t,
                    reason: format!("max-norm {linf:e} exceeds {:e}", self.threshold),
                });
            }
        }
        Ok(())
    }
}

/// Evolves `initial` to `params.t_end`, landing exactly on every snapshot
/// time (partial steps, never interpolation).
pub fn simulate(initial: &PhysicalField, params: &SolverParams) -> Result<Trajectory, SolverError> {
    params.validate()?;
    let grid = initial.grid();
    let mut state = forward_transform(initial);
    let guard = BlowupGuard::new(initial.max_abs());
    let stepper = IfRk4::new(grid, params.kappa, params.alpha, params.dt, params.dealias);

    let mut snapshots = vec![Snapshot::new(0.0, initial.clone())];
    if params.t_end == 0.0 {
        return Ok(Trajectory { snapshots });
    }
    check_cfl(&state, params, 0.0)?;

    let mut t = 0.0;
    for target in params.targets() {
        let span = target - t;
        let ratio = span / params.dt;
        let mut full_steps = (ratio + 1e-9).floor() as usize;
        let remainder = span - full_steps as f64 * params.dt;
        // last step length when it differs from dt
        let tail = if remainder.abs() <= 1e-9 * params.dt {
            if full_steps > 0 && remainder != 0.0 {
                full_steps -= 1;
                Some(params.dt + remainder)
            } else {
                None
            }
        } else {
            Some(remainder)
        };

        for n in 0..full_steps {
            state = stepper.advance(&state);
            guard.check(&state, t + (n + 1) as f64 * params.dt)?;
        }
        if let Some(h) = tail {
            let partial = IfRk4::new(grid, params.kappa, params.alpha, h, params.dealias);
            state = partial.advance(&state);
            guard.check(&state, target)?;
        }
        t = target;

        snapshots.push(Snapshot::new(t, inverse_transform(&state)?));
        if t < params.t_end {
            check_cfl(&state, params, t)?;
        }
    }
    Ok(Trajectory { snapshots })
}
