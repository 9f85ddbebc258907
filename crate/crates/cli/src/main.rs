//! Command-line entry point.
//!
//! Exit codes: 0 when every verification passes, 1 when any verification
//! fails, 2 on input errors (bad files, schema violations, arithmetic
//! overflow, invalid bounds).

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use prochern_cli::scenario::{execute, parse_spec, ExecOptions};
use prochern_cli::suite::{run_suite, SuiteParams};
use prochern_cli::{catalog, CliError};

#[derive(Debug, Parser)]
#[command(name = "prochern", version, about = "Exact CSM and characteristic class computations for SNC arrangement complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a scenario file or a named catalog entry
    Compute {
        /// Path to a scenario JSON file, or a catalog entry name
        target: String,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,

        /// Write the report here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,

        /// Record wall-clock duration in the report (off by default so
        /// identical inputs give byte-identical reports)
        #[arg(long)]
        timings: bool,
    },
    /// Generate seeded random arrangements and verify the identity suite
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long = "max-dim", default_value_t = 3)]
        max_dim: u32,

        #[arg(long = "max-components", default_value_t = 4)]
        max_components: u32,

        #[arg(long = "max-multidegree", default_value_t = 3)]
        max_multidegree: i64,

        #[arg(long, default_value_t = 100)]
        count: u32,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,

        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List the built-in scenario catalog
    Catalog,
}

fn load_target(target: &str) -> Result<String, CliError> {
    if Path::new(target).is_file() {
        return Ok(std::fs::read_to_string(target)?);
    }
    match catalog::find(target) {
        Some(entry) => Ok(entry.json.to_string()),
        None => Err(CliError::UnknownScenario(target.to_string())),
    }
}

fn emit(rendered: &str, out: &Option<PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Compute {
            target,
            format,
            out,
            timings,
        } => {
            let json = load_target(&target)?;
            let spec = parse_spec(&json)?;
            let report = execute(&spec, &ExecOptions { timings })?;
            let rendered = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(&rendered, &out)?;
            Ok(report.all_pass)
        }
        Command::Verify {
            seed,
            max_dim,
            max_components,
            max_multidegree,
            count,
            format,
            out,
        } => {
            let report = run_suite(&SuiteParams {
                seed,
                max_dim,
                max_components,
                max_multidegree,
                count,
            })?;
            let rendered = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
            };
            emit(&rendered, &out)?;
            Ok(report.all_pass)
        }
        Command::Catalog => {
            print!("{}", catalog::listing());
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
