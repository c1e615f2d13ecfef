use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use clap::{Args, Parser, Subcommand};

use sqg::io::{
    builtin_scenario, read_field_csv, render_contour, run_scenario_text, RunStatus, ScenarioError, ScenarioOutcome,
    BUILTIN_SCENARIOS,
};

#[derive(Parser)]
#[command(
    name = "sqg",
    version,
    about = "Exact solutions and a spectral solver for dissipative SQG on the 2π torus"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate exact solutions on a grid and check their residuals.
    Eval(RunArgs),
    /// Time-step initial data with the spectral solver.
    Simulate(RunArgs),
    /// Evaluate and/or simulate, with every applicable check.
    Verify(RunArgs),
    /// Draw a contour image from a field file.
    Render {
        input: PathBuf,
        output: PathBuf,
        #[arg(long, default_value_t = 21)]
        levels: usize,
    },
    /// Run builtin scenarios (by name) or scenario files.
    Scenario {
        /// Names from `--list` or paths to config files.
        scenarios: Vec<String>,
        #[arg(long)]
        list: bool,
        /// Scenarios run concurrently; each writes to its own subdirectory.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value = "out")]
        out_dir: PathBuf,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Config file; flags below override its keys.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated builtin names (theta1, theta2, theta3, con-1, con-2, con-3).
    #[arg(long)]
    solution: Option<String>,
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long)]
    alpha: Option<String>,
    #[arg(long)]
    dt: Option<String>,
    #[arg(long)]
    t_end: Option<String>,
    #[arg(long)]
    grid: Option<String>,
    /// Comma-separated output times.
    #[arg(long)]
    snapshots: Option<String>,
    #[arg(long)]
    dealias: Option<String>,
    #[arg(long)]
    expect: Option<String>,
    #[arg(long)]
    output_dir: Option<String>,
    /// Comma-separated: csv, ppm, report.
    #[arg(long)]
    outputs: Option<String>,
    #[arg(long)]
    levels: Option<String>,
}

impl RunArgs {
    fn overrides(&self, mode: Option<&str>) -> Vec<(String, String)> {
        let pairs = [
            ("solution", &self.solution),
            ("kappa", &self.kappa),
            ("alpha", &self.alpha),
            ("dt", &self.dt),
            ("t_end", &self.t_end),
            ("grid", &self.grid),
            ("snapshots", &self.snapshots),
            ("dealias", &self.dealias),
            ("expect", &self.expect),
            ("output_dir", &self.output_dir),
            ("outputs", &self.outputs),
            ("levels", &self.levels),
        ];
        let mut out: Vec<(String, String)> = pairs
            .iter()
            .filter_map(|(k, v)| v.as_ref().map(|v| (k.to_string(), v.clone())))
            .collect();
        if let Some(m) = mode {
            out.push(("mode".to_string(), m.to_string()));
        }
        out
    }
}

fn summarize(label: &str, outcome: &ScenarioOutcome) {
    let passed = outcome.checks.iter().filter(|c| c.pass).count();
    println!("{label}: {passed}/{} checks passed", outcome.checks.len());
    for c in outcome.failures() {
        let t = c.t.map(|t| format!(" t={t}")).unwrap_or_default();
        let detail = if c.detail.is_empty() {
            String::new()
        } else {
            format!(" ({})", c.detail)
        };
        println!(
            "  FAIL {} {}{t}: {:e} vs {:e}{detail}",
            c.name, c.subject, c.value, c.tolerance
        );
    }
    for a in &outcome.artifacts {
        println!("  wrote {}", a.display());
    }
}

fn report_error(label: &str, e: &ScenarioError) -> RunStatus {
    eprintln!("{label}: {e}");
    e.status()
}

fn run_config(args: &RunArgs, mode: Option<&str>) -> RunStatus {
    let text = match &args.config {
        Some(path) => match fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => {
                eprintln!("{}: {e}", path.display());
                return RunStatus::ConfigError;
            }
        },
        None => String::new(),
    };
    match run_scenario_text(&text, &args.overrides(mode)) {
        Ok(outcome) => {
            summarize("run", &outcome);
            outcome.status
        }
        Err(e) => report_error("run", &e),
    }
}

fn render(input: &Path, output: &Path, levels: usize) -> RunStatus {
    if levels < 2 {
        eprintln!("levels must be at least 2");
        return RunStatus::ConfigError;
    }
    let field = match read_field_csv(input) {
        Ok((f, _)) => f,
        Err(e) => {
            eprintln!("{}: {e}", input.display());
            return RunStatus::ConfigError;
        }
    };
    match render_contour(&field, output, levels) {
        Ok(()) => RunStatus::Success,
        Err(e) => {
            eprintln!("{}: {e}", output.display());
            RunStatus::RuntimeError
        }
    }
}

/// Config text and output subdirectory name for a scenario argument.
fn resolve_scenario(arg: &str) -> Result<(String, String), String> {
    if let Some(text) = builtin_scenario(arg) {
        return Ok((text.to_string(), arg.to_string()));
    }
    let path = Path::new(arg);
    let text = fs::read_to_string(path).map_err(|e| format!("{arg}: not a builtin scenario and unreadable ({e})"))?;
    let stem = path
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "scenario".to_string());
    Ok((text, stem))
}

fn run_scenarios(names: &[String], jobs: usize, out_dir: &Path) -> RunStatus {
    let mut status = RunStatus::Success;
    let mut work = Vec::new();
    for arg in names {
        match resolve_scenario(arg) {
            Ok((text, dir)) => work.push((arg.clone(), text, out_dir.join(dir))),
            Err(msg) => {
                eprintln!("{msg}");
                status = status.worst(RunStatus::ConfigError);
            }
        }
    }

    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<ScenarioOutcome, ScenarioError>>>> =
        Mutex::new((0..work.len()).map(|_| None).collect());
    std::thread::scope(|scope| {
        for _ in 0..jobs.max(1).min(work.len().max(1)) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some((_, text, dir)) = work.get(i) else { break };
                let overrides = vec![("output_dir".to_string(), dir.display().to_string())];
                let r = run_scenario_text(text, &overrides);
                results.lock().expect("no panics while holding the lock")[i] = Some(r);
            });
        }
    });

    for ((name, _, _), result) in work.iter().zip(results.into_inner().expect("threads joined")) {
        match result.expect("every scenario ran") {
            Ok(outcome) => {
                summarize(name, &outcome);
                status = status.worst(outcome.status);
            }
            Err(e) => status = status.worst(report_error(name, &e)),
        }
    }
    status
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = match cli.command {
        Command::Eval(args) => run_config(&args, Some("exact")),
        Command::Simulate(args) => run_config(&args, Some("simulate")),
        Command::Verify(args) => run_config(&args, None),
        Command::Render { input, output, levels } => render(&input, &output, levels),
        Command::Scenario {
            scenarios,
            list,
            jobs,
            out_dir,
        } => {
            if list || scenarios.is_empty() {
                for (name, _) in BUILTIN_SCENARIOS {
                    println!("{name}");
                }
                RunStatus::Success
            } else {
                run_scenarios(&scenarios, jobs, &out_dir)
            }
        }
    };
    ExitCode::from(status.code())
}
