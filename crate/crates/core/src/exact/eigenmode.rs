use super::{decay, rate_symbol, ValidationReport, Violation};

/// Product eigen-group plus axis-aligned group:
///
/// ```text
/// θ = e^{-κ(n²+m²)^α t} (c1 sin nx sin my + c2 cos nx sin my + c3 sin nx cos my + c4 cos nx cos my)
///   + e^{-κ|k|^{2α} t}  (c5 sin kx + c6 sin ky + c7 cos kx + c8 cos ky)
/// ```
#[derive(Debug, Clone, PartialEq)]
pub struct EigenmodeSolution {
    /// `c[0]` is `c1`, ..., `c[7]` is `c8`.
    pub c: [f64; 8],
    pub n: i64,
    pub m: i64,
    pub k: i64,
    pub kappa: f64,
    pub alpha: f64,
}

impl EigenmodeSolution {
    pub fn new(c: [f64; 8], n: i64, m: i64, k: i64, kappa: f64, alpha: f64) -> Self {
        Self {
            c,
            n,
            m,
            k,
            kappa,
            alpha,
        }
    }

    fn product_active(&self) -> bool {
        self.c[..4].iter().any(|c| *c != 0.0)
    }

    fn axis_active(&self) -> bool {
        self.c[4..].iter().any(|c| *c != 0.0)
    }

    pub fn product_eigenvalue(&self) -> i64 {
        self.n * self.n + self.m * self.m
    }

    pub fn axis_eigenvalue(&self) -> i64 {
        self.k * self.k
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        report.check_params(self.kappa, self.alpha);
        if self.c.iter().any(|c| !c.is_finite()) {
            report.violations.push(Violation::NonFiniteCoefficient);
        }
        if self.n * self.m == 0 {
            report.violations.push(Violation::ZeroProduct { n: self.n, m: self.m });
        }
        if self.axis_active() && self.k == 0 {
            report.violations.push(Violation::ZeroAxisWavenumber);
        }
        if self.product_active() && self.axis_active() && self.product_eigenvalue() != self.axis_eigenvalue() {
            report.violations.push(Violation::Pythagorean {
                n2_plus_m2: self.product_eigenvalue(),
                k2: self.axis_eigenvalue(),
            });
        }
        report.notes.push(
            "constraint n^2+m^2=k^2 enforced when (|c1|+..+|c4|)(|c5|+..+|c8|) != 0; \
             the guard's second factor is read as the c5..c8 group"
                .to_string(),
        );
        report
    }

    pub fn eigenvalues(&self) -> Vec<i64> {
        let mut out = Vec::new();
        if self.product_active() {
            out.push(self.product_eigenvalue());
        }
        if self.axis_active() && !out.contains(&self.axis_eigenvalue()) {
            out.push(self.axis_eigenvalue());
        }
        out.sort_unstable();
        out
    }

    pub fn max_wavenumbers(&self) -> (i64, i64) {
        let (mut kx, mut ky) = (0, 0);
        if self.product_active() {
            kx = self.n.abs();
            ky = self.m.abs();
        }
        if self.c[4] != 0.0 || self.c[6] != 0.0 {
            kx = kx.max(self.k.abs());
        }
        if self.c[5] != 0.0 || self.c[7] != 0.0 {
            ky = ky.max(self.k.abs());
        }
        (kx, ky)
    }

    fn decays(&self, t: f64) -> (f64, f64) {
        (
            decay(self.kappa, self.alpha, self.product_eigenvalue(), t),
            decay(self.kappa, self.alpha, self.axis_eigenvalue(), t),
        )
    }

    fn product_group(&self, x: f64, y: f64) -> f64 {
        let (sx, cx) = (self.n as f64 * x).sin_cos();
        let (sy, cy) = (self.m as f64 * y).sin_cos();
        let c = &self.c;
        c[0] * sx * sy + c[1] * cx * sy + c[2] * sx * cy + c[3] * cx * cy
    }

    fn axis_group(&self, x: f64, y: f64) -> f64 {
        let k = self.k as f64;
        let (sx, cx) = (k * x).sin_cos();
        let (sy, cy) = (k * y).sin_cos();
        let c = &self.c;
        c[4] * sx + c[5] * sy + c[6] * cx + c[7] * cy
    }

    pub fn theta_at(&self, x: f64, y: f64, t: f64) -> f64 {
        let (d1, d2) = self.decays(t);
        d1 * self.product_group(x, y) + d2 * self.axis_group(x, y)
    }

    /// `(∂_y ψ, -∂_x ψ)` with `ψ` each group divided by the root of its
    /// eigenvalue.
    pub fn velocity_at(&self, x: f64, y: f64, t: f64) -> (f64, f64) {
        let (d1, d2) = self.decays(t);
        let c = &self.c;
        let (mut u, mut v) = (0.0, 0.0);

        if self.product_active() {
            let (n, m) = (self.n as f64, self.m as f64);
            let (sx, cx) = (n * x).sin_cos();
            let (sy, cy) = (m * y).sin_cos();
            let dy = m * (c[0] * sx * cy + c[1] * cx * cy - c[2] * sx * sy - c[3] * cx * sy);
            let dx = n * (c[0] * cx * sy - c[1] * sx * sy + c[2] * cx * cy - c[3] * sx * cy);
            let scale = d1 / (self.product_eigenvalue() as f64).sqrt();
            u += scale * dy;
            v -= scale * dx;
        }
        if self.axis_active() && self.k != 0 {
            let k = self.k as f64;
            let (sx, cx) = (k * x).sin_cos();
            let (sy, cy) = (k * y).sin_cos();
            let dx = k * (c[4] * cx - c[6] * sx);
            let dy = k * (c[5] * cy - c[7] * sy);
            let scale = d2 / k.abs();
            u += scale * dy;
            v -= scale * dx;
        }
        (u, v)
    }

    pub fn dtheta_dt_at(&self, x: f64, y: f64, t: f64) -> f64 {
        let (d1, d2) = self.decays(t);
        let r1 = self.kappa * rate_symbol(self.product_eigenvalue(), self.alpha);
        let r2 = self.kappa * rate_symbol(self.axis_eigenvalue(), self.alpha);
        -r1 * d1 * self.product_group(x, y) - r2 * d2 * self.axis_group(x, y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn all(c: f64) -> [f64; 8] {
        [c; 8]
    }

    #[test]
    fn pythagorean_triple_is_valid() {
        assert!(EigenmodeSolution::new(all(1.0), 4, 3, 5, 0.1, 0.3)
            .validate()
            .is_valid());
    }

    #[test]
    fn constantin_datum_is_rejected() {
        let mut c = [0.0; 8];
        c[0] = 1.0;
        c[5] = 1.0;
        let r = EigenmodeSolution::new(c, 1, 1, 1, 0.1, 0.3).validate();
        assert_eq!(r.violations, vec![Violation::Pythagorean { n2_plus_m2: 2, k2: 1 }]);
        assert!(r.to_string().contains("2 != 1"));
    }

    #[test]
    fn constraint_vacuous_with_one_group() {
        let c = [1.0, 2.0, 3.0, 4.0, 0.0, 0.0, 0.0, 0.0];
        for k in [0, 1, 7] {
            assert!(EigenmodeSolution::new(c, 2, 1, k, 0.1, 0.0).validate().is_valid());
        }
        let c = [0.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0];
        assert!(EigenmodeSolution::new(c, 2, 1, 3, 0.1, 0.0).validate().is_valid());
    }

    #[test]
    fn structural_violations() {
        let r = EigenmodeSolution::new(all(1.0), 0, 3, 3, -1.0, 1.0).validate();
        assert!(r.violations.contains(&Violation::ZeroProduct { n: 0, m: 3 }));
        assert!(r.violations.contains(&Violation::Kappa(-1.0)));
        assert!(r.violations.contains(&Violation::Alpha(1.0)));
        let mut c = [0.0; 8];
        c[6] = 1.0;
        let r = EigenmodeSolution::new(c, 1, 1, 0, 1.0, 0.5).validate();
        assert_eq!(r.violations, vec![Violation::ZeroAxisWavenumber]);
    }

    #[test]
    fn single_axis_mode_velocity() {
        let mut c = [0.0; 8];
        c[4] = 0.7;
        let s = EigenmodeSolution::new(c, 1, 1, 3, 0.2, 0.4);
        let t = 1.3;
        let d = (-0.2 * 9f64.powf(0.4) * t).exp();
        for (x, y) in [(0.3, 1.1), (2.0, 5.0)] {
            let (u, v) = s.velocity_at(x, y, t);
            assert_eq!(u, 0.0);
            assert!((v + 0.7 * d * (3.0 * x).cos()).abs() < 1e-15);
        }
    }

    #[test]
    fn velocity_by_finite_differences() {
        // ψ = θ/√E for each group; compare against centred differences of θ
        let s = EigenmodeSolution::new([0.3, -1.0, 0.5, 0.25, 0.1, 0.9, -0.4, 0.2], 3, 4, -5, 0.5, 0.25);
        let h = 1e-5;
        let lam = 1.0 / 5.0;
        for (x, y) in [(0.1, 0.2), (1.7, 4.4), (PI, 0.5)] {
            let (u, v) = s.velocity_at(x, y, 0.8);
            let ty = (s.theta_at(x, y + h, 0.8) - s.theta_at(x, y - h, 0.8)) / (2.0 * h);
            let tx = (s.theta_at(x + h, y, 0.8) - s.theta_at(x - h, y, 0.8)) / (2.0 * h);
            assert!((u - lam * ty).abs() < 1e-8);
            assert!((v + lam * tx).abs() < 1e-8);
        }
    }

    #[test]
    fn time_derivative_by_finite_differences() {
        let s = EigenmodeSolution::new([1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0], 2, 1, 0, 0.7, 0.6);
        let h = 1e-5;
        let (x, y, t) = (0.4, 2.2, 1.5);
        let fd = (s.theta_at(x, y, t + h) - s.theta_at(x, y, t - h)) / (2.0 * h);
        assert!((s.dtheta_dt_at(x, y, t) - fd).abs() < 1e-9);
        let doubled = EigenmodeSolution {
            kappa: 1.4,
            ..s.clone()
        };
        let ratio = doubled.dtheta_dt_at(x, y, 0.0) / s.dtheta_dt_at(x, y, 0.0);
        assert!((ratio - 2.0).abs() < 1e-14);
    }

    #[test]
    fn eigenvalues_and_extent() {
        let s = EigenmodeSolution::new([1.0, 0.0, 0.0, 0.5, 0.5, 1.0, 0.0, 0.0], 4, 3, 5, 0.1, 0.1);
        assert_eq!(s.eigenvalues(), vec![25]);
        assert_eq!(s.max_wavenumbers(), (5, 5));
        let s = EigenmodeSolution::new([1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0], 1, 1, 1, 0.1, 0.1);
        assert_eq!(s.eigenvalues(), vec![1, 2]);
    }
}
