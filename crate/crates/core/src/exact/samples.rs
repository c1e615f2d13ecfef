//! Named sample solutions and the classic non-exact initial data.

use crate::spectral::{GridSpec, PhysicalField};

use super::{EigenmodeSolution, ExactSolution, Mode, UnidirectionalSolution, ValidationReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Trig {
    Sin,
    Cos,
}

impl Trig {
    #[inline]
    fn eval(self, arg: f64) -> f64 {
        match self {
            Trig::Sin => arg.sin(),
            Trig::Cos => arg.cos(),
        }
    }
}

/// `amplitude · fx(kx x) · fy(ky y)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DatumTerm {
    pub amplitude: f64,
    pub fx: Trig,
    pub kx: i64,
    pub fy: Trig,
    pub ky: i64,
}

impl DatumTerm {
    pub const fn new(amplitude: f64, fx: Trig, kx: i64, fy: Trig, ky: i64) -> Self {
        Self {
            amplitude,
            fx,
            kx,
            fy,
            ky,
        }
    }

    fn eval(&self, x: f64, y: f64) -> f64 {
        self.amplitude * self.fx.eval(self.kx as f64 * x) * self.fy.eval(self.ky as f64 * y)
    }

    fn is_zero(&self) -> bool {
        self.amplitude == 0.0 || (self.fx == Trig::Sin && self.kx == 0) || (self.fy == Trig::Sin && self.ky == 0)
    }
}

/// Trigonometric initial datum that is not claimed to be an exact solution.
#[derive(Debug, Clone, PartialEq)]
pub struct InitialDatum {
    pub name: String,
    pub terms: Vec<DatumTerm>,
    /// Same function written in the eigenmode family's coefficients, when it
    /// fits that shape; its validation then pinpoints the broken constraint.
    pub eigenmode_form: Option<EigenmodeSolution>,
}

impl InitialDatum {
    pub fn theta_at(&self, x: f64, y: f64) -> f64 {
        self.terms.iter().map(|t| t.eval(x, y)).sum()
    }

    pub fn field(&self, grid: GridSpec) -> PhysicalField {
        PhysicalField::from_fn(grid, |x, y| self.theta_at(x, y))
    }

    pub fn max_wavenumbers(&self) -> (i64, i64) {
        self.terms
            .iter()
            .filter(|t| !t.is_zero())
            .fold((0, 0), |(a, b), t| (a.max(t.kx.abs()), b.max(t.ky.abs())))
    }

    /// Whether the datum satisfies the hypotheses of either exact family:
    /// a single Laplacian eigenvalue, or all wavevectors on one line.
    pub fn validate(&self) -> ValidationReport {
        if let Some(form) = &self.eigenmode_form {
            return form.validate();
        }
        let mut report = ValidationReport::default();
        let active: Vec<&DatumTerm> = self.terms.iter().filter(|t| !t.is_zero()).collect();
        let mut eigenvalues: Vec<i64> = active.iter().map(|t| t.kx * t.kx + t.ky * t.ky).collect();
        eigenvalues.sort_unstable();
        eigenvalues.dedup();
        if eigenvalues.len() <= 1 {
            return report;
        }
        let vectors: Vec<(i64, i64)> = active
            .iter()
            .flat_map(|t| [(t.kx, t.ky), (t.kx, -t.ky)])
            .filter(|v| *v != (0, 0))
            .collect();
        let parallel = vectors
            .first()
            .map(|&(a, b)| vectors.iter().all(|&(c, d)| a * d - b * c == 0))
            .unwrap_or(true);
        if !parallel {
            report.violations.push(Violation::MixedEigenvalues { eigenvalues });
        }
        report
    }
}

/// A builtin entry: either an exact solution or a plain initial datum.
#[derive(Debug, Clone, PartialEq)]
pub enum Sample {
    Exact(ExactSolution),
    Datum(InitialDatum),
}

impl Sample {
    pub fn is_exact(&self) -> bool {
        matches!(self, Sample::Exact(_))
    }

    pub fn initial_field(&self, grid: GridSpec) -> PhysicalField {
        match self {
            Sample::Exact(s) => s.eval_theta_unchecked(0.0, grid),
            Sample::Datum(d) => d.field(grid),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        match self {
            Sample::Exact(s) => s.validate(),
            Sample::Datum(d) => d.validate(),
        }
    }

    pub fn max_wavenumbers(&self) -> (i64, i64) {
        match self {
            Sample::Exact(s) => s.max_wavenumbers(),
            Sample::Datum(d) => d.max_wavenumbers(),
        }
    }
}

pub const SAMPLE_NAMES: [&str; 6] = ["theta1", "theta2", "theta3", "con-1", "con-2", "con-3"];

/// θ₁, θ₂, θ₃ as exact solutions and the three non-exact data, for the
/// given dissipation parameters.
pub fn builtin_samples(kappa: f64, alpha: f64) -> Vec<(&'static str, Sample)> {
    SAMPLE_NAMES
        .iter()
        .map(|&name| (name, lookup_sample(name, kappa, alpha).expect("builtin name")))
        .collect()
}

pub fn lookup_sample(name: &str, kappa: f64, alpha: f64) -> Option<Sample> {
    use Trig::{Cos, Sin};
    let sample = match name {
        // sin 2x sin y + ½ cos 2x cos y
        "theta1" => Sample::Exact(
            EigenmodeSolution::new([1.0, 0.0, 0.0, 0.5, 0.0, 0.0, 0.0, 0.0], 2, 1, 0, kappa, alpha).into(),
        ),
        // sin 4x sin 3y + ½ cos 4x cos 3y + sin 5y + ½ sin 5x
        "theta2" => Sample::Exact(
            EigenmodeSolution::new([1.0, 0.0, 0.0, 0.5, 0.5, 1.0, 0.0, 0.0], 4, 3, 5, kappa, alpha).into(),
        ),
        // sin(x+y) + sin(2x+2y)
        "theta3" => Sample::Exact(
            UnidirectionalSolution::new(1, 1, vec![Mode::new(1, 0.0, 1.0), Mode::new(2, 0.0, 1.0)], kappa, alpha)
                .into(),
        ),
        "con-1" => Sample::Datum(InitialDatum {
            name: name.to_string(),
            terms: vec![DatumTerm::new(1.0, Sin, 1, Sin, 1), DatumTerm::new(1.0, Cos, 0, Cos, 1)],
            eigenmode_form: Some(EigenmodeSolution::new(
                [1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0],
                1,
                1,
                1,
                kappa,
                alpha,
            )),
        }),
        "con-2" => Sample::Datum(InitialDatum {
            name: name.to_string(),
            terms: vec![
                DatumTerm::new(-1.0, Cos, 2, Cos, 1),
                DatumTerm::new(1.0, Sin, 1, Sin, 1),
            ],
            eigenmode_form: None,
        }),
        "con-3" => Sample::Datum(InitialDatum {
            name: name.to_string(),
            terms: vec![
                DatumTerm::new(1.0, Cos, 2, Cos, 1),
                DatumTerm::new(1.0, Sin, 1, Sin, 1),
                DatumTerm::new(1.0, Cos, 2, Sin, 3),
            ],
            eigenmode_form: None,
        }),
        _ => return None,
    };
    Some(sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;
    use Trig::{Cos, Sin};

    #[test]
    fn theta1_point_value() {
        let Some(Sample::Exact(s)) = lookup_sample("theta1", 0.001, 0.001) else {
            panic!("theta1 missing")
        };
        assert!((s.theta_at(PI / 4.0, PI / 2.0, 0.0) - 1.0).abs() < 1e-15);
        let ratio = s.theta_at(0.3, 0.8, 7.0) / s.theta_at(0.3, 0.8, 0.0);
        assert!((ratio - (-(5f64.powf(0.001)) * 0.001 * 7.0).exp()).abs() < 1e-15);
    }

    #[test]
    fn theta2_coefficients() {
        let Some(Sample::Exact(ExactSolution::Eigenmode(s))) = lookup_sample("theta2", 0.1, 0.2) else {
            panic!("theta2 missing")
        };
        assert_eq!((s.n, s.m, s.k), (4, 3, 5));
        assert_eq!(s.c, [1.0, 0.0, 0.0, 0.5, 0.5, 1.0, 0.0, 0.0]);
        let (x, y): (f64, f64) = (0.37, 1.21);
        let expected = (4.0 * x).sin() * (3.0 * y).sin()
            + 0.5 * (4.0 * x).cos() * (3.0 * y).cos()
            + (5.0 * y).sin()
            + 0.5 * (5.0 * x).sin();
        assert!((s.theta_at(x, y, 0.0) - expected).abs() < 1e-15);
    }

    #[test]
    fn exact_samples_validate() {
        for (name, s) in builtin_samples(0.001, 0.001) {
            let exact = name.starts_with("theta");
            assert_eq!(s.is_exact(), exact, "{name}");
            assert_eq!(s.validate().is_valid(), exact, "{name}: {}", s.validate());
        }
    }

    #[test]
    fn constantin_first_datum() {
        let Some(Sample::Datum(d)) = lookup_sample("con-1", 0.001, 0.4) else {
            panic!("con-1 missing")
        };
        let (x, y): (f64, f64) = (0.9, 2.3);
        assert!((d.theta_at(x, y) - (x.sin() * y.sin() + y.cos())).abs() < 1e-15);
        let form = d.eigenmode_form.as_ref().unwrap();
        assert!((form.theta_at(x, y, 0.0) - d.theta_at(x, y)).abs() < 1e-15);
        assert_eq!(
            d.validate().violations,
            vec![Violation::Pythagorean { n2_plus_m2: 2, k2: 1 }]
        );
    }

    #[test]
    fn general_datum_validation() {
        let Some(Sample::Datum(d)) = lookup_sample("con-3", 0.001, 0.4) else {
            panic!()
        };
        assert_eq!(
            d.validate().violations,
            vec![Violation::MixedEigenvalues {
                eigenvalues: vec![2, 5, 13]
            }]
        );
        let single = InitialDatum {
            name: "single".into(),
            terms: vec![DatumTerm::new(1.0, Sin, 3, Cos, 4), DatumTerm::new(2.0, Cos, 0, Sin, 5)],
            eigenmode_form: None,
        };
        assert!(single.validate().is_valid());
        let axis = InitialDatum {
            name: "axis".into(),
            terms: vec![DatumTerm::new(1.0, Sin, 1, Cos, 0), DatumTerm::new(2.0, Cos, 3, Cos, 0)],
            eigenmode_form: None,
        };
        assert!(axis.validate().is_valid());
        assert!(lookup_sample("nope", 1.0, 0.0).is_none());
    }
}
