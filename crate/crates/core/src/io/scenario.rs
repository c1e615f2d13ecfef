//! Runs a parsed configuration: evaluates or simulates every listed
//! solution, writes the requested artifacts and collects pass/fail checks.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use super::config::{parse_config_with_overrides, ConfigError, Expectation, ScenarioConfig};
use super::csv::write_field_csv;
use super::ppm::render_contour;
use crate::exact::{ExactSolution, Sample};
use crate::integrator::{simulate, Trajectory};
use crate::spectral::PhysicalField;
use crate::verify::{decay_rate_fit, pattern_correlation, residual, unidirectionality_check, RESIDUAL_TOLERANCE};

/// Relative L2 error allowed between solver and closed form.
pub const SOLVER_TOLERANCE: f64 = 1e-8;
pub const DECAY_TOLERANCE: f64 = 1e-6;
pub const CORRELATION_TOLERANCE: f64 = 1e-10;
pub const UNIDIRECTIONAL_TOLERANCE: f64 = 1e-12;
/// Final-to-initial correlation below which a pattern counts as changed.
pub const PATTERN_CHANGE_THRESHOLD: f64 = 0.999;
/// Slack on step-to-step L2 growth.
pub const L2_GROWTH_SLACK: f64 = 1e-10;

pub const REPORT_FILE: &str = "report.csv";
pub const REPORT_HEADER: &str = "check,subject,t,value,tolerance,relation,pass,detail";

/// Process exit status of a scenario run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunStatus {
    Success,
    VerificationFailure,
    ConfigError,
    RuntimeError,
}

impl RunStatus {
    pub fn code(self) -> u8 {
        match self {
            RunStatus::Success => 0,
            RunStatus::VerificationFailure => 1,
            RunStatus::ConfigError => 2,
            RunStatus::RuntimeError => 3,
        }
    }

    /// The more severe of two statuses.
    pub fn worst(self, other: RunStatus) -> RunStatus {
        if other.code() > self.code() {
            other
        } else {
            self
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `value < tolerance`
    Below,
    /// `value <= tolerance`
    AtMost,
    /// `value > tolerance`
    Above,
}

impl Relation {
    fn holds(self, value: f64, tolerance: f64) -> bool {
        match self {
            Relation::Below => value < tolerance,
            Relation::AtMost => value <= tolerance,
            Relation::Above => value > tolerance,
        }
    }

    fn symbol(self) -> &'static str {
        match self {
            Relation::Below => "<",
            Relation::AtMost => "<=",
            Relation::Above => ">",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub subject: String,
    pub t: Option<f64>,
    pub value: f64,
    pub tolerance: f64,
    pub relation: Relation,
    pub pass: bool,
    pub detail: String,
}

impl Check {
    fn measured(name: &str, subject: &str, t: Option<f64>, value: f64, relation: Relation, tolerance: f64) -> Self {
        Self {
            name: name.to_string(),
            subject: subject.to_string(),
            t,
            value,
            tolerance,
            relation,
            pass: relation.holds(value, tolerance),
            detail: String::new(),
        }
    }

    fn failed(name: &str, subject: &str, t: Option<f64>, detail: String) -> Self {
        Self {
            name: name.to_string(),
            subject: subject.to_string(),
            t,
            value: f64::NAN,
            tolerance: f64::NAN,
            relation: Relation::Below,
            pass: false,
            detail,
        }
    }

    fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn to_csv_row(&self) -> String {
        let t = self.t.map(|t| t.to_string()).unwrap_or_default();
        let detail = self.detail.replace([',', '\n'], ";");
        format!(
            "{},{},{},{:e},{:e},{},{},{}",
            self.name,
            self.subject,
            t,
            self.value,
            self.tolerance,
            self.relation.symbol(),
            self.pass,
            detail
        )
    }
}

#[derive(Debug, Error)]
pub enum ScenarioError {
    #[error("configuration error:\n{0}")]
    Config(#[from] ConfigError),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}

impl ScenarioError {
    pub fn status(&self) -> RunStatus {
        match self {
            ScenarioError::Config(_) => RunStatus::ConfigError,
            ScenarioError::Io { .. } => RunStatus::RuntimeError,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> ScenarioError + '_ {
    move |source| ScenarioError::Io {
        path: path.to_path_buf(),
        source,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioOutcome {
    pub checks: Vec<Check>,
    pub artifacts: Vec<PathBuf>,
    pub status: RunStatus,
}

impl ScenarioOutcome {
    pub fn report_csv(&self) -> String {
        let mut out = format!("{REPORT_HEADER}\n");
        for c in &self.checks {
            writeln!(out, "{}", c.to_csv_row()).unwrap();
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Builtin scenario files, by name.
pub const BUILTIN_SCENARIOS: &[(&str, &str)] = &[
    (
        "figure1",
        "# theta1, theta2, theta3 contour plots at t = 0 and t = 100\n\
         solution = theta1, theta2, theta3\n\
         kappa = 0.001\n\
         alpha = 0.001\n\
         t_end = 100\n\
         grid = 256\n\
         mode = exact\n\
         [output]\n\
         outputs = ppm, report\n\
         levels = 21\n",
    ),
    (
        "constantin-negative",
        "# a sum of two eigenfunctions with different eigenvalues changes shape\n\
         solution = con-1\n\
         kappa = 0.001\n\
         alpha = 0.4\n\
         dt = 0.005\n\
         t_end = 5\n\
         grid = 128\n\
         snapshots = 1, 2, 3, 4\n\
         expect = pattern-change\n\
         [output]\n\
         outputs = ppm, report\n\
         levels = 21\n",
    ),
    (
        "theta1-decay",
        "# simulated theta1 against its closed form, with a decay-rate fit\n\
         solution = theta1\n\
         kappa = 0.001\n\
         alpha = 0.001\n\
         dt = 0.01\n\
         t_end = 10\n\
         grid = 64\n\
         snapshots = 2, 4, 6, 8\n\
         mode = both\n\
         [output]\n\
         outputs = csv, report\n",
    ),
];

pub fn builtin_scenario(name: &str) -> Option<&'static str> {
    BUILTIN_SCENARIOS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| *text)
}

/// Parses `text` with `overrides` and runs it.
pub fn run_scenario_text(text: &str, overrides: &[(String, String)]) -> Result<ScenarioOutcome, ScenarioError> {
    let config = parse_config_with_overrides(text, overrides)?;
    run_scenario(&config)
}

fn time_tag(t: f64) -> String {
    format!("t{t}")
}

struct Run<'a> {
    config: &'a ScenarioConfig,
    checks: Vec<Check>,
    artifacts: Vec<PathBuf>,
    runtime_failure: bool,
}

impl Run<'_> {
    fn write_field(&mut self, stem: &str, field: &PhysicalField, t: f64) -> Result<(), ScenarioError> {
        let dir = &self.config.output_dir;
        if self.config.outputs.csv {
            let path = dir.join(format!("{stem}.csv"));
            write_field_csv(field, t, &path).map_err(|e| match e {
                super::csv::FieldFileError::Io(source) => ScenarioError::Io {
                    path: path.clone(),
                    source,
                },
                other => ScenarioError::Io {
                    path: path.clone(),
                    source: std::io::Error::other(other.to_string()),
                },
            })?;
            self.artifacts.push(path);
        }
        if self.config.outputs.image {
            let path = dir.join(format!("{stem}.ppm"));
            render_contour(field, &path, self.config.levels).map_err(io_err(&path))?;
            self.artifacts.push(path);
        }
        Ok(())
    }

    fn exact_pass(&mut self, name: &str, sol: &ExactSolution) -> Result<(), ScenarioError> {
        let c = self.config;
        let times = c.output_times();
        let sol = sol.with_params(c.params.kappa, c.params.alpha);
        let initial = sol.eval_theta_unchecked(0.0, c.grid);
        for &t in &times {
            let field = sol.eval_theta_unchecked(t, c.grid);
            self.write_field(&format!("{name}_exact_{}", time_tag(t)), &field, t)?;

            let check = match residual(&sol, t, c.grid, c.params.kappa, c.params.alpha) {
                Ok(r) => Check::measured(
                    "residual_linf",
                    name,
                    Some(t),
                    r.l_inf,
                    Relation::Below,
                    RESIDUAL_TOLERANCE,
                )
                .with_detail(format!("nonlinear term max {:e}", r.nonlinear_linf)),
                Err(e) => Check::failed("residual_linf", name, Some(t), e.to_string()),
            };
            self.checks.push(check);

            if sol.is_single_eigenvalue() && t > 0.0 {
                let check = match pattern_correlation(&field, &initial) {
                    Ok(r) => Check::measured(
                        "pattern_correlation_defect",
                        name,
                        Some(t),
                        (1.0 - r).abs(),
                        Relation::Below,
                        CORRELATION_TOLERANCE,
                    ),
                    Err(e) => Check::failed("pattern_correlation_defect", name, Some(t), e.to_string()),
                };
                self.checks.push(check);
            }
            if let Some((n, m)) = sol.direction() {
                let check = match unidirectionality_check(&field, n, m) {
                    Ok(f) => Check::measured(
                        "off_direction_energy",
                        name,
                        Some(t),
                        f,
                        Relation::Below,
                        UNIDIRECTIONAL_TOLERANCE,
                    )
                    .with_detail(format!("direction ({n} {m})")),
                    Err(e) => Check::failed("off_direction_energy", name, Some(t), e.to_string()),
                };
                self.checks.push(check);
            }
        }
        Ok(())
    }

    fn simulate_pass(&mut self, name: &str, sample: &Sample) -> Result<(), ScenarioError> {
        let c = self.config;
        let initial = sample.initial_field(c.grid);
        let traj = match simulate(&initial, &c.params) {
            Ok(t) => t,
            Err(e) => {
                self.checks.push(Check::failed("simulation", name, None, e.to_string()));
                self.runtime_failure = true;
                return Ok(());
            }
        };
        for snap in &traj.snapshots {
            self.write_field(&format!("{name}_sim_{}", time_tag(snap.t)), &snap.field, snap.t)?;
        }

        if let Sample::Exact(sol) = sample {
            self.compare_with_exact(name, sol, &traj);
        }
        if c.params.dealias {
            let growth = traj
                .snapshots
                .windows(2)
                .map(|w| w[1].l2 - w[0].l2)
                .fold(f64::NEG_INFINITY, f64::max)
                .max(0.0);
            self.checks.push(Check::measured(
                "l2_growth",
                name,
                None,
                growth,
                Relation::AtMost,
                L2_GROWTH_SLACK,
            ));
        }
        if c.expect == Expectation::PatternChange {
            let check = match pattern_correlation(&traj.last().field, &initial) {
                Ok(r) => Check::measured(
                    "final_correlation",
                    name,
                    Some(traj.last().t),
                    r,
                    Relation::Below,
                    PATTERN_CHANGE_THRESHOLD,
                ),
                Err(e) => Check::failed("final_correlation", name, Some(traj.last().t), e.to_string()),
            };
            self.checks.push(check);
        }
        Ok(())
    }

    fn compare_with_exact(&mut self, name: &str, sol: &ExactSolution, traj: &Trajectory) {
        let c = self.config;
        let sol = sol.with_params(c.params.kappa, c.params.alpha);
        for snap in &traj.snapshots {
            let exact = sol.eval_theta_unchecked(snap.t, c.grid);
            let norm = exact.l2();
            let err = snap.field.sub(&exact).map(|d| d.l2()).unwrap_or(f64::NAN);
            let rel = if norm > 0.0 { err / norm } else { err };
            self.checks.push(Check::measured(
                "solver_relative_l2",
                name,
                Some(snap.t),
                rel,
                Relation::Below,
                SOLVER_TOLERANCE,
            ));
        }
        let eig = sol.eigenvalues();
        if eig.len() == 1 && traj.snapshots.len() >= 3 {
            let check = match decay_rate_fit(traj, eig[0] as f64, c.params.kappa, c.params.alpha) {
                Ok(fit) => Check::measured(
                    "decay_rate_error",
                    name,
                    None,
                    fit.relative_error,
                    Relation::Below,
                    DECAY_TOLERANCE,
                )
                .with_detail(format!("fitted {:e} expected {:e}", fit.fitted_rate, fit.expected_rate)),
                Err(e) => Check::failed("decay_rate_error", name, None, e.to_string()),
            };
            self.checks.push(check);
        }
    }
}

/// Runs every sample in `config`. Artifacts go to `config.output_dir`, which
/// is created if needed. Only I/O problems are returned as errors; solver
/// failures become failed checks with [`RunStatus::RuntimeError`].
pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioOutcome, ScenarioError> {
    fs::create_dir_all(&config.output_dir).map_err(io_err(&config.output_dir))?;
    let mut run = Run {
        config,
        checks: Vec::new(),
        artifacts: Vec::new(),
        runtime_failure: false,
    };
    for (name, sample) in &config.samples {
        let report = sample.validate();
        run.checks.push(
            match sample {
                Sample::Exact(_) => Check::measured(
                    "validation_violations",
                    name,
                    None,
                    report.violations.len() as f64,
                    Relation::AtMost,
                    0.0,
                ),
                Sample::Datum(_) => Check::measured(
                    "rejected_as_exact",
                    name,
                    None,
                    report.violations.len() as f64,
                    Relation::Above,
                    0.0,
                ),
            }
            .with_detail(report.to_string()),
        );

        if config.mode.exact() {
            if let Sample::Exact(sol) = sample {
                run.exact_pass(name, sol)?;
            }
        }
        if config.mode.simulate() {
            run.simulate_pass(name, sample)?;
        }
    }

    let mut outcome = ScenarioOutcome {
        status: if run.runtime_failure {
            RunStatus::RuntimeError
        } else if run.checks.iter().all(|c| c.pass) {
            RunStatus::Success
        } else {
            RunStatus::VerificationFailure
        },
        checks: run.checks,
        artifacts: run.artifacts,
    };
    if config.outputs.report {
        let path = config.output_dir.join(REPORT_FILE);
        fs::write(&path, outcome.report_csv()).map_err(io_err(&path))?;
        outcome.artifacts.push(path);
    }
    Ok(outcome)
}
