//! Scenario runner for the `pauli-pse` library.
//!
//! Each scenario reads a JSON [`RunConfig`], runs its checks, writes
//! `report.json` plus `series_*.csv` files and maps the outcome to an exit
//! status: 0 when every assertion holds, 1 on a failed assertion, 2 on a bad
//! config and 3 on I/O trouble.

pub mod config;
pub mod output;
pub mod report;
pub mod scenarios;

pub use config::{RunConfig, Scenario};
pub use report::{Assertion, Report};

use clap::Parser;
use output::OutputDir;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::path::PathBuf;
use std::time::{SystemTime, UNIX_EPOCH};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(String),
    #[error("{0}")]
    Io(String),
    #[error("{} assertion(s) failed: {}", .0.len(), .0.join(", "))]
    Assertions(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Assertions(_) => 1,
            CliError::Config(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<pauli_pse::Error> for CliError {
    fn from(e: pauli_pse::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

#[derive(Debug, Clone, Parser)]
#[command(name = "pauli-pse", version, about = "Run a verification scenario and write its report")]
pub struct Args {
    /// Scenario to run; may instead be given as `scenario` in the config.
    #[arg(value_enum)]
    pub scenario: Option<Scenario>,
    /// JSON config file.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Override a config value by dotted path, e.g. `--set physics.eps0=0.5`.
    #[arg(long = "set", value_name = "KEY=VALUE")]
    pub overrides: Vec<String>,
    #[arg(long)]
    pub output_dir: Option<PathBuf>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Leave the wall-clock time out of the report.
    #[arg(long)]
    pub no_timestamp: bool,
}

/// Resolves the config from the arguments. An absent or blank config file is
/// an error.
pub fn load_config(args: &Args) -> Result<(Scenario, RunConfig), CliError> {
    let path = args
        .config
        .as_ref()
        .ok_or_else(|| CliError::Config("no config given".into()))?;
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    if text.trim().is_empty() {
        return Err(CliError::Config(format!("{} is empty", path.display())));
    }
    let mut config = RunConfig::parse(&text, &args.overrides)?;
    if let Some(seed) = args.seed {
        config.seed = seed;
    }
    if let Some(dir) = &args.output_dir {
        config.output_dir = Some(dir.clone());
    }
    let scenario = match (args.scenario, config.scenario) {
        (Some(a), Some(c)) if a != c => {
            return Err(CliError::Config(format!(
                "scenario {a} on the command line but {c} in the config"
            )))
        }
        (Some(s), _) | (None, Some(s)) => s,
        (None, None) => return Err(CliError::Config("no scenario given".into())),
    };
    config.scenario = Some(scenario);
    Ok((scenario, config))
}

/// Runs one scenario and writes its files. The report is written even when
/// assertions fail.
pub fn run_scenario(scenario: Scenario, config: &RunConfig, timestamp: bool) -> Result<Report, CliError> {
    let dir = config
        .output_dir
        .clone()
        .ok_or_else(|| CliError::Config("no output directory (use --output-dir or output_dir)".into()))?;
    let mut out = OutputDir::create(&dir)?;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let outcome = scenarios::dispatch(scenario, config, &mut out, &mut rng)?;
    let passed = outcome.assertions.iter().all(|a| a.passed);
    let mut files = out.written().to_vec();
    files.push("report.json".into());
    let unix_time = timestamp.then(|| {
        SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    let report = Report {
        scenario,
        seed: config.seed,
        parameters: config.clone(),
        assertions: outcome.assertions,
        passed,
        results: serde_json::Value::Object(outcome.results),
        files,
        unix_time,
    };
    out.write_bytes("report.json", &output::to_json(&report)?)?;
    Ok(report)
}

/// Full command-line entry point; returns the process exit code.
pub fn main_with_args(args: Args) -> i32 {
    let result = load_config(&args).and_then(|(scenario, config)| {
        let report = run_scenario(scenario, &config, !args.no_timestamp)?;
        let failed: Vec<String> = report.failures().iter().map(|a| a.name.clone()).collect();
        for a in &report.assertions {
            println!("[{}] {}", if a.passed { "pass" } else { "FAIL" }, a.name);
        }
        if failed.is_empty() {
            Ok(())
        } else {
            Err(CliError::Assertions(failed))
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(e, CliError::Config(_)) {
                use clap::CommandFactory;
                eprintln!("\n{}", Args::command().render_help());
            }
            e.exit_code()
        }
    }
}
