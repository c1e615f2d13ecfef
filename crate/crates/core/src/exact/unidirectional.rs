use super::{decay, rate_symbol, ValidationReport, Violation};

/// One term `a cos(kφ) + b sin(kφ)` of a unidirectional series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mode {
    pub k: i64,
    pub a: f64,
    pub b: f64,
}

impl Mode {
    pub fn new(k: i64, a: f64, b: f64) -> Self {
        Self { k, a, b }
    }
}

/// Finite series in the phase `φ = n x + m y`:
///
/// ```text
/// θ = Σ_k e^{-κ (k²(n²+m²))^α t} (a_k cos kφ + b_k sin kφ)
/// ```
///
/// Level sets are the parallel lines `n x + m y = const` for all time.
#[derive(Debug, Clone, PartialEq)]
pub struct UnidirectionalSolution {
    pub n: i64,
    pub m: i64,
    pub modes: Vec<Mode>,
    pub kappa: f64,
    pub alpha: f64,
}

impl UnidirectionalSolution {
    pub fn new(n: i64, m: i64, modes: Vec<Mode>, kappa: f64, alpha: f64) -> Self {
        Self {
            n,
            m,
            modes,
            kappa,
            alpha,
        }
    }

    fn direction_norm2(&self) -> i64 {
        self.n * self.n + self.m * self.m
    }

    fn mode_eigenvalue(&self, k: i64) -> i64 {
        k * k * self.direction_norm2()
    }

    fn active_modes(&self) -> impl Iterator<Item = &Mode> {
        self.modes.iter().filter(|md| md.a != 0.0 || (md.b != 0.0 && md.k != 0))
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.check_params(self.kappa, self.alpha);
        if self.n.abs() + self.m.abs() == 0 {
            report.violations.push(Violation::ZeroDirection);
        }
        if self.modes.iter().any(|md| !(md.a.is_finite() && md.b.is_finite())) {
            report.violations.push(Violation::NonFiniteCoefficient);
        }
        let mut seen = Vec::with_capacity(self.modes.len());
        for md in &self.modes {
            if seen.contains(&md.k) {
                report.violations.push(Violation::DuplicateMode { k: md.k });
            } else {
                seen.push(md.k);
            }
        }
        report
            .notes
            .push("finite mode list: sum |k|(a_k^2 + b_k^2) < inf holds trivially".to_string());
        if self.modes.iter().any(|md| md.k == 0 && md.a != 0.0) {
            report.notes.push(if self.alpha == 0.0 {
                "k = 0 mean mode decays as exp(-kappa t) under (-Laplacian)^0 = identity".to_string()
            } else {
                "k = 0 mean mode is constant in time".to_string()
            });
        }
        report
    }

    pub fn eigenvalues(&self) -> Vec<i64> {
        let mut out: Vec<i64> = self.active_modes().map(|md| self.mode_eigenvalue(md.k)).collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    pub fn max_wavenumbers(&self) -> (i64, i64) {
        self.active_modes().fold((0, 0), |(kx, ky), md| {
            (kx.max((md.k * self.n).abs()), ky.max((md.k * self.m).abs()))
        })
    }

    #[inline]
    fn phase(&self, x: f64, y: f64) -> f64 {
        self.n as f64 * x + self.m as f64 * y
    }

    pub fn theta_at(&self, x: f64, y: f64, t: f64) -> f64 {
        let phi = self.phase(x, y);
        self.modes
            .iter()
            .map(|md| {
                let (s, c) = (md.k as f64 * phi).sin_cos();
                decay(self.kappa, self.alpha, self.mode_eigenvalue(md.k), t) * (md.a * c + md.b * s)
            })
            .sum()
    }

    pub fn velocity_at(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        let phi = self.phase(x, y);
        // ∂φ of each mode, divided by √(k²(n²+m²)); (∂x, ∂y) = (n, m)∂φ
        let dphi_psi: f64 = self
            .modes
            .iter()
            .filter(|md| md.k != 0)
            .map(|md| {
                let k = md.k as f64;
                let (s, c) = (k * phi).sin_cos();
                let d = decay(self.kappa, self.alpha, self.mode_eigenvalue(md.k), t);
                let lam = 1.0 / (self.mode_eigenvalue(md.k) as f64).sqrt();
                d * lam * k * (-md.a * s + md.b * c)
            })
            .sum();
        (self.m as f64 * dphi_psi, -(self.n as f64) * dphi_psi)
    }

    pub fn dtheta_dt_at(&self, x: f64, y: f64, t: f64) -> f64 {
        let phi = self.phase(x, y);
        self.modes
            .iter()
            .map(|md| {
                let e = self.mode_eigenvalue(md.k);
                let (s, c) = (md.k as f64 * phi).sin_cos();
                -self.kappa * rate_symbol(e, self.alpha) * decay(self.kappa, self.alpha, e, t) * (md.a * c + md.b * s)
            })
            .sum()
    }
}
