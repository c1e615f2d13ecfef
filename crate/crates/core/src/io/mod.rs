//! Configuration files, field files, contour images and scenario runs.

pub mod config;
pub mod csv;
pub mod ppm;
pub mod scenario;

pub use config::{
    parse_config, parse_config_with_overrides, solution_to_config, ConfigError, ConfigIssue, Expectation, IssueKind,
    Outputs, RunMode, ScenarioConfig,
};
pub use csv::{field_from_csv, field_to_csv, read_field_csv, write_field_csv, FieldFileError};
pub use ppm::{contour_image, render_contour};
pub use scenario::{
    builtin_scenario, run_scenario, run_scenario_text, Check, RunStatus, ScenarioError, ScenarioOutcome,
    BUILTIN_SCENARIOS,
};
