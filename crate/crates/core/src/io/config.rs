//! Line-oriented scenario configuration.
//!
//! ```text
//! # comment
//! solution = theta1, theta3     # builtin names, comma separated
//! kappa = 0.001
//! alpha = 0.001
//! dt = 0.01                     # required when simulating
//! t_end = 10
//! grid = 64                     # or nx = .. / ny = ..
//! snapshots = 1, 5
//! dealias = true
//! mode = exact | simulate | both
//! expect = auto | pattern-change
//!
//! [output]
//! output_dir = out
//! outputs = csv, ppm, report
//! levels = 21
//!
//! [solution]                    # explicit closed form, named "custom" by default
//! family = eigenmode            # c1..c8, n, m, k
//! family = unidirectional       # n, m, modes = k:a:b, k:a:b
//! ```
//!
//! Keys of the `run` and `output` groups may also appear before any section
//! header or under `[run]`.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::exact::{lookup_sample, EigenmodeSolution, ExactSolution, Mode, Sample, UnidirectionalSolution};
use crate::integrator::SolverParams;
use crate::spectral::GridSpec;

const RUN_KEYS: &[&str] = &[
    "solution",
    "kappa",
    "alpha",
    "dt",
    "t_end",
    "grid",
    "nx",
    "ny",
    "snapshots",
    "dealias",
    "mode",
    "expect",
];
const OUTPUT_KEYS: &[&str] = &["output_dir", "outputs", "levels"];
const SOLUTION_KEYS: &[&str] = &[
    "family", "name", "n", "m", "k", "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "modes",
];
const REQUIRED: &[&str] = &["solution", "kappa", "alpha", "t_end", "grid"];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IssueKind {
    Parse,
    UnknownKey,
    Missing,
    ConstraintViolation,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigIssue {
    pub line: Option<usize>,
    pub kind: IssueKind,
    pub message: String,
}

impl fmt::Display for ConfigIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            IssueKind::Parse => "parse error",
            IssueKind::UnknownKey => "unknown key",
            IssueKind::Missing => "missing key",
            IssueKind::ConstraintViolation => "constraint violation",
        };
        match self.line {
            Some(l) => write!(f, "line {l}: {kind}: {}", self.message),
            None => write!(f, "{kind}: {}", self.message),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub struct ConfigError {
    pub issues: Vec<ConfigIssue>,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self.issues.iter().map(|i| i.to_string()).collect();
        write!(f, "{}", lines.join("\n"))
    }
}

impl ConfigError {
    pub fn has(&self, kind: IssueKind) -> bool {
        self.issues.iter().any(|i| i.kind == kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RunMode {
    Exact,
    Simulate,
    Both,
}

impl RunMode {
    pub fn exact(self) -> bool {
        matches!(self, RunMode::Exact | RunMode::Both)
    }

    pub fn simulate(self) -> bool {
        matches!(self, RunMode::Simulate | RunMode::Both)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// Exactness checks for exact solutions; none for plain data.
    Auto,
    /// The final simulated pattern must decorrelate from the initial one.
    PatternChange,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Outputs {
    pub csv: bool,
    pub image: bool,
    pub report: bool,
}

impl Default for Outputs {
    fn default() -> Self {
        Self {
            csv: true,
            image: false,
            report: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScenarioConfig {
    pub samples: Vec<(String, Sample)>,
    pub params: SolverParams,
    pub grid: GridSpec,
    pub mode: RunMode,
    pub expect: Expectation,
    pub output_dir: PathBuf,
    pub outputs: Outputs,
    pub levels: usize,
}

impl ScenarioConfig {
    /// `0`, the requested snapshots and `t_end`, strictly increasing.
    pub fn output_times(&self) -> Vec<f64> {
        let mut ts = vec![0.0];
        ts.extend(self.params.snapshot_times.iter().copied());
        ts.push(self.params.t_end);
        ts.sort_by(f64::total_cmp);
        ts.dedup();
        ts
    }
}

#[derive(Debug, Clone)]
struct Entry {
    value: String,
    line: Option<usize>,
}

/// Key/value pairs grouped by section (`""` for run and output keys).
#[derive(Debug, Default, Clone)]
struct RawConfig {
    run: BTreeMap<String, Entry>,
    solution: BTreeMap<String, Entry>,
    solution_line: Option<usize>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

fn tokenize(text: &str, issues: &mut Vec<ConfigIssue>) -> RawConfig {
    let mut raw = RawConfig::default();
    let mut section = String::from("run");
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = strip_comment(line).trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix('[') {
            match rest.strip_suffix(']').map(str::trim) {
                Some(name @ ("run" | "output" | "solution")) => {
                    section = name.to_string();
                    if name == "solution" {
                        raw.solution_line = Some(lineno);
                    }
                }
                Some(other) => issues.push(ConfigIssue {
                    line: Some(lineno),
                    kind: IssueKind::UnknownKey,
                    message: format!("unknown section [{other}]"),
                }),
                None => issues.push(ConfigIssue {
                    line: Some(lineno),
                    kind: IssueKind::Parse,
                    message: format!("malformed section header '{line}'"),
                }),
            }
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            issues.push(ConfigIssue {
                line: Some(lineno),
                kind: IssueKind::Parse,
                message: format!("expected 'key = value', got '{line}'"),
            });
            continue;
        };
        let key = key.trim().to_string();
        let value = value.trim().to_string();
        let allowed = match section.as_str() {
            "solution" => SOLUTION_KEYS.contains(&key.as_str()),
            "output" => OUTPUT_KEYS.contains(&key.as_str()),
            _ => RUN_KEYS.contains(&key.as_str()) || OUTPUT_KEYS.contains(&key.as_str()),
        };
        if !allowed {
            issues.push(ConfigIssue {
                line: Some(lineno),
                kind: IssueKind::UnknownKey,
                message: format!("'{key}' in [{section}]"),
            });
            continue;
        }
        let target = if section == "solution" {
            &mut raw.solution
        } else {
            &mut raw.run
        };
        target.insert(
            key,
            Entry {
                value,
                line: Some(lineno),
            },
        );
    }
    raw
}

struct Reader<'a> {
    map: &'a BTreeMap<String, Entry>,
    issues: &'a mut Vec<ConfigIssue>,
}

impl Reader<'_> {
    fn issue(&mut self, key: &str, kind: IssueKind, message: String) {
        let line = self.map.get(key).and_then(|e| e.line);
        self.issues.push(ConfigIssue { line, kind, message });
    }

    fn raw(&self, key: &str) -> Option<&str> {
        self.map.get(key).map(|e| e.value.as_str())
    }

    fn parsed<T: std::str::FromStr>(&mut self, key: &str, what: &str) -> Option<T> {
        let value = self.raw(key)?.to_string();
        match value.parse::<T>() {
            Ok(v) => Some(v),
            Err(_) => {
                self.issue(key, IssueKind::Parse, format!("{key} = '{value}' is not {what}"));
                None
            }
        }
    }

    fn real(&mut self, key: &str) -> Option<f64> {
        let v: f64 = self.parsed(key, "a number")?;
        if !v.is_finite() {
            self.issue(key, IssueKind::Parse, format!("{key} must be finite"));
            return None;
        }
        Some(v)
    }

    fn int(&mut self, key: &str) -> Option<i64> {
        self.parsed(key, "an integer")
    }

    fn list(&self, key: &str) -> Option<Vec<String>> {
        self.raw(key).map(|v| {
            v.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        })
    }
}

pub fn parse_config(text: &str) -> Result<ScenarioConfig, ConfigError> {
    parse_config_with_overrides(text, &[])
}

/// Parses `text`, then replaces run/output keys with `overrides`.
pub fn parse_config_with_overrides(text: &str, overrides: &[(String, String)]) -> Result<ScenarioConfig, ConfigError> {
    let mut issues = Vec::new();
    let mut raw = tokenize(text, &mut issues);
    for (key, value) in overrides {
        if RUN_KEYS.contains(&key.as_str()) || OUTPUT_KEYS.contains(&key.as_str()) {
            raw.run.insert(
                key.clone(),
                Entry {
                    value: value.clone(),
                    line: None,
                },
            );
        } else {
            issues.push(ConfigIssue {
                line: None,
                kind: IssueKind::UnknownKey,
                message: format!("override '{key}'"),
            });
        }
    }
    let config = build(&raw, &mut issues);
    match config {
        Some(c) if issues.is_empty() => Ok(c),
        _ => Err(ConfigError { issues }),
    }
}

fn build(raw: &RawConfig, issues: &mut Vec<ConfigIssue>) -> Option<ScenarioConfig> {
    let has_explicit = !raw.solution.is_empty() || raw.solution_line.is_some();
    let missing: Vec<&str> = REQUIRED
        .iter()
        .copied()
        .filter(|k| !raw.run.contains_key(*k))
        .filter(|k| !(*k == "solution" && has_explicit))
        .filter(|k| !(*k == "grid" && raw.run.contains_key("nx") && raw.run.contains_key("ny")))
        .collect();
    if !missing.is_empty() {
        issues.push(ConfigIssue {
            line: None,
            kind: IssueKind::Missing,
            message: format!("required keys: {}", missing.join(", ")),
        });
    }

    let mut r = Reader { map: &raw.run, issues };
    let kappa = r.real("kappa");
    let alpha = r.real("alpha");
    let dt = r.real("dt");
    let t_end = r.real("t_end");
    if let Some(k) = kappa {
        if k <= 0.0 {
            r.issue(
                "kappa",
                IssueKind::ConstraintViolation,
                format!("kappa = {k} must be > 0"),
            );
        }
    }
    if let Some(a) = alpha {
        if !(0.0..1.0).contains(&a) {
            r.issue(
                "alpha",
                IssueKind::ConstraintViolation,
                format!("alpha = {a} outside [0, 1)"),
            );
        }
    }
    if let Some(t) = t_end {
        if t < 0.0 {
            r.issue(
                "t_end",
                IssueKind::ConstraintViolation,
                format!("t_end = {t} must be >= 0"),
            );
        }
    }

    let grid = {
        let (nx, ny) = match (r.int("grid"), r.int("nx"), r.int("ny")) {
            (_, Some(nx), Some(ny)) => (Some(nx), Some(ny)),
            (Some(n), nx, ny) => (Some(nx.unwrap_or(n)), Some(ny.unwrap_or(n))),
            _ => (None, None),
        };
        match (nx, ny) {
            (Some(nx), Some(ny)) if nx > 0 && ny > 0 => match GridSpec::new(nx as usize, ny as usize) {
                Ok(g) => Some(g),
                Err(e) => {
                    r.issue("grid", IssueKind::ConstraintViolation, e.to_string());
                    None
                }
            },
            (Some(nx), Some(ny)) => {
                r.issue(
                    "grid",
                    IssueKind::ConstraintViolation,
                    format!("grid {nx}x{ny} must be positive"),
                );
                None
            }
            _ => None,
        }
    };

    let snapshots: Vec<f64> = match r.list("snapshots") {
        Some(items) => {
            let mut out = Vec::new();
            for it in items {
                match it.parse::<f64>() {
                    Ok(v) if v.is_finite() => out.push(v),
                    _ => r.issue(
                        "snapshots",
                        IssueKind::Parse,
                        format!("snapshot time '{it}' is not a number"),
                    ),
                }
            }
            out.sort_by(f64::total_cmp);
            out
        }
        None => Vec::new(),
    };
    let dealias = match r.raw("dealias") {
        None => true,
        Some("true" | "on" | "yes" | "1") => true,
        Some("false" | "off" | "no" | "0") => false,
        Some(v) => {
            let v = v.to_string();
            r.issue("dealias", IssueKind::Parse, format!("dealias = '{v}' is not a boolean"));
            true
        }
    };
    let mode = match r.raw("mode") {
        None => None,
        Some("exact") => Some(RunMode::Exact),
        Some("simulate") => Some(RunMode::Simulate),
        Some("both") => Some(RunMode::Both),
        Some(v) => {
            let v = v.to_string();
            r.issue(
                "mode",
                IssueKind::Parse,
                format!("mode = '{v}' (expected exact, simulate or both)"),
            );
            None
        }
    };
    let expect = match r.raw("expect") {
        None | Some("auto") => Expectation::Auto,
        Some("pattern-change") => Expectation::PatternChange,
        Some(v) => {
            let v = v.to_string();
            r.issue(
                "expect",
                IssueKind::Parse,
                format!("expect = '{v}' (expected auto or pattern-change)"),
            );
            Expectation::Auto
        }
    };
    let output_dir = PathBuf::from(r.raw("output_dir").unwrap_or("."));
    let outputs = match r.list("outputs") {
        None => Outputs::default(),
        Some(items) => {
            let mut o = Outputs {
                csv: false,
                image: false,
                report: false,
            };
            for it in items {
                match it.as_str() {
                    "csv" => o.csv = true,
                    "ppm" | "pgm" | "image" => o.image = true,
                    "report" => o.report = true,
                    other => r.issue("outputs", IssueKind::Parse, format!("unknown output kind '{other}'")),
                }
            }
            o
        }
    };
    let levels = match r.int("levels") {
        None => 21,
        Some(l) if l >= 2 => l as usize,
        Some(l) => {
            r.issue(
                "levels",
                IssueKind::ConstraintViolation,
                format!("levels = {l} must be >= 2"),
            );
            21
        }
    };

    let (kappa, alpha, t_end, grid) = (kappa?, alpha?, t_end?, grid?);

    let mut samples = Vec::new();
    for name in r.list("solution").unwrap_or_default() {
        match lookup_sample(&name, kappa, alpha) {
            Some(s) => samples.push((name, s)),
            None => r.issue(
                "solution",
                IssueKind::ConstraintViolation,
                format!("unknown builtin solution '{name}'"),
            ),
        }
    }
    if has_explicit {
        if let Some(named) = parse_solution_section(raw, kappa, alpha, r.issues) {
            samples.push(named);
        }
    }
    if samples.is_empty() {
        r.issues.push(ConfigIssue {
            line: None,
            kind: IssueKind::Missing,
            message: "no solution given".to_string(),
        });
        return None;
    }

    let all_exact = samples.iter().all(|(_, s)| s.is_exact());
    let mode = mode.unwrap_or(match (dt.is_some(), all_exact) {
        (true, true) => RunMode::Both,
        (false, true) => RunMode::Exact,
        (_, false) => RunMode::Simulate,
    });
    if mode.exact() && !all_exact {
        r.issue(
            "mode",
            IssueKind::ConstraintViolation,
            "exact evaluation requested for an initial datum that is not an exact solution".to_string(),
        );
    }
    if mode.simulate() && dt.is_none() {
        r.issues.push(ConfigIssue {
            line: None,
            kind: IssueKind::Missing,
            message: "dt is required when simulating".to_string(),
        });
    }

    let params = SolverParams {
        kappa,
        alpha,
        dt: dt.unwrap_or(t_end.max(f64::MIN_POSITIVE)),
        t_end,
        dealias,
        snapshot_times: snapshots,
    };
    if mode.simulate() {
        if let Err(e) = params.validate() {
            r.issue("dt", IssueKind::ConstraintViolation, e.to_string());
        }
    } else if let Some(t) = params.snapshot_times.iter().find(|t| !(0.0..=t_end).contains(*t)) {
        r.issue(
            "snapshots",
            IssueKind::ConstraintViolation,
            format!("snapshot {t} outside [0, {t_end}]"),
        );
    }

    Some(ScenarioConfig {
        samples,
        params,
        grid,
        mode,
        expect,
        output_dir,
        outputs,
        levels,
    })
}

fn parse_solution_section(
    raw: &RawConfig,
    kappa: f64,
    alpha: f64,
    issues: &mut Vec<ConfigIssue>,
) -> Option<(String, Sample)> {
    let line = raw.solution_line;
    let mut r = Reader {
        map: &raw.solution,
        issues,
    };
    let name = r.raw("name").unwrap_or("custom").to_string();
    let family = r.raw("family").map(str::to_string);
    let (n, m) = (r.int("n"), r.int("m"));
    let solution: ExactSolution = match family.as_deref() {
        Some("eigenmode") => {
            let k = r.int("k").unwrap_or(0);
            let mut c = [0.0; 8];
            for (i, slot) in c.iter_mut().enumerate() {
                *slot = r.real(&format!("c{}", i + 1)).unwrap_or(0.0);
            }
            EigenmodeSolution::new(c, n?, m?, k, kappa, alpha).into()
        }
        Some("unidirectional") => {
            let mut modes = Vec::new();
            for item in r.list("modes").unwrap_or_default() {
                match parse_mode(&item) {
                    Some(md) => modes.push(md),
                    None => r.issue("modes", IssueKind::Parse, format!("mode '{item}' is not k:a:b")),
                }
            }
            UnidirectionalSolution::new(n?, m?, modes, kappa, alpha).into()
        }
        other => {
            r.issues.push(ConfigIssue {
                line,
                kind: IssueKind::Parse,
                message: format!("[solution] family must be eigenmode or unidirectional (got {other:?})"),
            });
            return None;
        }
    };
    let report = solution.validate();
    if !report.is_valid() {
        r.issues.push(ConfigIssue {
            line,
            kind: IssueKind::ConstraintViolation,
            message: report.to_string(),
        });
        return None;
    }
    Some((name, Sample::Exact(solution)))
}

fn parse_mode(item: &str) -> Option<Mode> {
    let mut parts = item.split(':').map(str::trim);
    let k = parts.next()?.parse().ok()?;
    let a: f64 = parts.next()?.parse().ok()?;
    let b: f64 = parts.next()?.parse().ok()?;
    if parts.next().is_some() || !a.is_finite() || !b.is_finite() {
        return None;
    }
    Some(Mode::new(k, a, b))
}

/// `[solution]` section text that parses back to `sol` (given the same
/// `kappa`/`alpha` at run level).
pub fn solution_to_config(name: &str, sol: &ExactSolution) -> String {
    let mut out = String::from("[solution]\n");
    out.push_str(&format!("name = {name}\n"));
    match sol {
        ExactSolution::Eigenmode(s) => {
            out.push_str("family = eigenmode\n");
            out.push_str(&format!("n = {}\nm = {}\nk = {}\n", s.n, s.m, s.k));
            for (i, c) in s.c.iter().enumerate() {
                out.push_str(&format!("c{} = {c:?}\n", i + 1));
            }
        }
        ExactSolution::Unidirectional(s) => {
            out.push_str("family = unidirectional\n");
            out.push_str(&format!("n = {}\nm = {}\n", s.n, s.m));
            let modes: Vec<String> = s
                .modes
                .iter()
                .map(|md| format!("{}:{:?}:{:?}", md.k, md.a, md.b))
                .collect();
            out.push_str(&format!("modes = {}\n", modes.join(", ")));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIGURE_PARAMS: &str = "solution = theta1\nkappa = 0.001\nalpha = 0.001\ndt = 0.01\nt_end = 10\ngrid = 64";

    #[test]
    fn parses_minimal_config() {
        let c = parse_config(FIGURE_PARAMS).unwrap();
        assert_eq!(c.samples.len(), 1);
        assert_eq!(c.samples[0].0, "theta1");
        assert_eq!(c.grid, GridSpec::square(64).unwrap());
        assert_eq!(c.params.kappa, 0.001);
        assert_eq!(c.params.dt, 0.01);
        assert_eq!(c.mode, RunMode::Both);
        assert!(c.params.dealias);
        assert_eq!(c.output_times(), vec![0.0, 10.0]);
    }

    #[test]
    fn alpha_out_of_range() {
        let text = FIGURE_PARAMS.replace("alpha = 0.001", "alpha = 1.5");
        let err = parse_config(&text).unwrap_err();
        assert!(err.has(IssueKind::ConstraintViolation));
        assert_eq!(err.issues[0].line, Some(3));
    }

    #[test]
    fn empty_file_lists_required_keys() {
        let err = parse_config("").unwrap_err();
        assert!(err.has(IssueKind::Missing));
        let msg = err.to_string();
        for key in REQUIRED {
            assert!(msg.contains(key), "{msg}");
        }
    }

    #[test]
    fn malformed_and_unknown() {
        let err = parse_config(&format!("{FIGURE_PARAMS}\nthis is not a pair\nwibble = 3\n[extra]")).unwrap_err();
        assert!(err
            .issues
            .iter()
            .any(|i| i.kind == IssueKind::Parse && i.line == Some(7)));
        assert!(err
            .issues
            .iter()
            .any(|i| i.kind == IssueKind::UnknownKey && i.line == Some(8)));
        assert!(err
            .issues
            .iter()
            .any(|i| i.kind == IssueKind::UnknownKey && i.line == Some(9)));
    }

    #[test]
    fn comments_sections_and_overrides() {
        let text = "# header\nsolution = theta3 # inline\nkappa = 0.5\nalpha=0.25\nt_end = 2\ngrid = 32\n\
                    [output]\nlevels = 9\noutputs = ppm, report\noutput_dir = /tmp/x\n";
        let c = parse_config(text).unwrap();
        assert_eq!(c.mode, RunMode::Exact);
        assert_eq!(c.levels, 9);
        assert!(c.outputs.image && c.outputs.report && !c.outputs.csv);
        let c =
            parse_config_with_overrides(text, &[("kappa".into(), "0.75".into()), ("dt".into(), "0.1".into())]).unwrap();
        assert_eq!(c.params.kappa, 0.75);
        assert_eq!(c.mode, RunMode::Both);
        assert!(parse_config_with_overrides(text, &[("bogus".into(), "1".into())]).is_err());
    }

    #[test]
    fn datum_requires_simulation() {
        let text = "solution = con-1\nkappa = 0.001\nalpha = 0.4\nt_end = 1\ngrid = 32\n";
        let err = parse_config(text).unwrap_err();
        assert!(err.to_string().contains("dt is required"));
        let c = parse_config(&format!("{text}dt = 0.01\n")).unwrap();
        assert_eq!(c.mode, RunMode::Simulate);
        assert!(parse_config(&format!("{text}dt = 0.01\nmode = exact\n")).is_err());
    }

    #[test]
    fn explicit_solutions() {
        let base = "kappa = 0.1\nalpha = 0.3\nt_end = 1\ngrid = 32\n";
        let text = format!("{base}[solution]\nfamily = eigenmode\nn = 3\nm = 4\nk = 5\nc1 = 1\nc6 = -0.5\n");
        let c = parse_config(&text).unwrap();
        assert_eq!(c.samples[0].0, "custom");
        assert!(c.samples[0].1.is_exact());

        let bad = format!("{base}[solution]\nfamily = eigenmode\nn = 1\nm = 1\nk = 1\nc1 = 1\nc8 = 1\n");
        let err = parse_config(&bad).unwrap_err();
        assert!(err.has(IssueKind::ConstraintViolation));
        assert!(err.to_string().contains("2 != 1"));

        let uni =
            format!("{base}[solution]\nfamily = unidirectional\nname = ray\nn = 1\nm = 2\nmodes = 1:0:1, 3:0.5:0\n");
        let c = parse_config(&uni).unwrap();
        assert_eq!(c.samples[0].0, "ray");
        let bad_mode = uni.replace("3:0.5:0", "3:0.5");
        assert!(parse_config(&bad_mode).unwrap_err().has(IssueKind::Parse));
    }

    #[test]
    fn solution_text_round_trip() {
        let base = "kappa = 0.1\nalpha = 0.3\nt_end = 1\ngrid = 32\n";
        for name in ["theta1", "theta2", "theta3"] {
            let Some(Sample::Exact(sol)) = lookup_sample(name, 0.1, 0.3) else {
                panic!()
            };
            let text = format!("{base}{}", solution_to_config(name, &sol));
            let c = parse_config(&text).unwrap();
            assert_eq!(c.samples, vec![(name.to_string(), Sample::Exact(sol))]);
        }
    }

    #[test]
    fn bad_grid() {
        let text = FIGURE_PARAMS.replace("grid = 64", "grid = 63");
        assert!(parse_config(&text).unwrap_err().has(IssueKind::ConstraintViolation));
        let text = FIGURE_PARAMS.replace("grid = 64", "grid = -4");
        assert!(parse_config(&text).is_err());
    }
}
