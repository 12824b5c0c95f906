//! Thin command-line front end over the library: parse instances, run the
//! solver and bound audits, generate families, and run oracle
//! cross-validation. Exit codes: 0 success, 1 input/solver error, 2 bound
//! violation or oracle deviation.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hypereigen::analysis::full_report;
use hypereigen::error::{Error, Result};
use hypereigen::families::{complete_uniform, generalized_power, star};
use hypereigen::graph::Hypergraph;
use hypereigen::render::{
    render_oracle_json, render_oracle_table, render_report_json, render_report_table,
    render_suite_json, render_suite_table,
};
use hypereigen::solver::SolverConfig;
use hypereigen::suite::{cross_validate, run_audit, OracleConfig, SuiteConfig};

const ORACLE_GATE: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "hypereigen",
    version,
    about = "Principal eigenpairs and spectral bound audits for general hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the principal eigenpair of an instance file and audit every bound
    Analyze {
        /// Hypergraph text file (one edge per line; optional %n=/%k= directives)
        path: PathBuf,
        /// Convergence tolerance on the eigenvalue bracket width
        #[arg(long = "tol", value_name = "float")]
        tol: Option<f64>,
        /// Iteration budget for the power method
        #[arg(long = "max-iter", value_name = "int")]
        max_iter: Option<usize>,
        /// Diagonal shift for the iteration (defaults to the maximum degree)
        #[arg(long = "shift", value_name = "float")]
        shift: Option<f64>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print a named family as an instance file: star:n, complete:n:k, power:base-path:s:r
    Generate {
        /// Family specification, e.g. star:4, complete:4:3, power:star3.hg:1:3
        spec: String,
    },
    /// Cross-validate the closed-form operator against literal enumeration
    Oracle {
        /// Hypergraph text file
        path: PathBuf,
        /// Number of random positive vectors
        #[arg(long, value_name = "int", default_value_t = 20)]
        trials: usize,
        /// Seed for the vector stream
        #[arg(long, value_name = "u64", default_value_t = 0)]
        seed: u64,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Audit every bound on the fixed catalog plus seeded random instances
    AuditSuite {
        /// Seed for the random instance stream
        #[arg(long, value_name = "u64", default_value_t = 0)]
        seed: u64,
        /// Number of random instances appended to the fixed catalog
        #[arg(long, value_name = "int", default_value_t = 100)]
        count: usize,
        /// Convergence tolerance on the eigenvalue bracket width
        #[arg(long = "tol", value_name = "float")]
        tol: Option<f64>,
        /// Iteration budget for the power method
        #[arg(long = "max-iter", value_name = "int")]
        max_iter: Option<usize>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

fn read_instance(path: &Path) -> Result<Hypergraph> {
    let text = fs::read_to_string(path).map_err(|err| {
        Error::InvalidParameter(format!("cannot read {}: {err}", path.display()))
    })?;
    Hypergraph::parse(&text)
}

fn solver_config(tol: Option<f64>, max_iter: Option<usize>, shift: Option<f64>) -> SolverConfig {
    let mut cfg = SolverConfig::default();
    if let Some(tol) = tol {
        cfg.tolerance = tol;
    }
    if let Some(max_iter) = max_iter {
        cfg.max_iterations = max_iter;
    }
    cfg.shift = shift;
    cfg
}

fn parse_usize(text: &str, what: &str) -> Result<usize> {
    text.parse()
        .map_err(|_| Error::InvalidParameter(format!("{what} must be an integer, got {text:?}")))
}

fn build_family(spec: &str) -> Result<Hypergraph> {
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        ["star", n] => star(parse_usize(n, "star size")?),
        ["complete", n, k] => complete_uniform(
            parse_usize(n, "vertex count")?,
            parse_usize(k, "edge size")?,
        ),
        ["power", path, s, r] => {
            let base = read_instance(Path::new(path))?;
            generalized_power(
                &base,
                parse_usize(s, "blowup factor s")?,
                parse_usize(r, "target size r")?,
            )
        }
        _ => Err(Error::InvalidParameter(format!(
            "family spec must be star:n, complete:n:k, or power:base-path:s:r, got {spec:?}"
        ))),
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Analyze {
            path,
            tol,
            max_iter,
            shift,
            format,
        } => {
            let h = read_instance(&path)?;
            let cfg = solver_config(tol, max_iter, shift);
            let report = full_report(&h, &cfg)?;
            match format {
                Format::Json => print!("{}", render_report_json(&report)),
                Format::Table => print!("{}", render_report_table(&report)),
            }
            Ok(if report.all_satisfied() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::Generate { spec } => {
            let h = build_family(&spec)?;
            print!("{}", h.to_text());
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle {
            path,
            trials,
            seed,
            format,
        } => {
            let h = read_instance(&path)?;
            let outcome = cross_validate(&h, &OracleConfig { trials, seed })?;
            match format {
                Format::Json => print!("{}", render_oracle_json(&outcome)),
                Format::Table => print!("{}", render_oracle_table(&outcome)),
            }
            Ok(if outcome.max_deviation <= ORACLE_GATE {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Command::AuditSuite {
            seed,
            count,
            tol,
            max_iter,
            format,
        } => {
            let cfg = SuiteConfig {
                seed,
                count,
                solver: solver_config(tol, max_iter, None),
            };
            let outcome = run_audit(&cfg)?;
            match format {
                Format::Json => print!("{}", render_suite_json(&outcome)),
                Format::Table => print!("{}", render_suite_table(&outcome)),
            }
            Ok(if outcome.all_satisfied() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
    }
}

fn main() -> ExitCode {
    // Usage errors are input errors (exit 1); help and version exit 0. Exit
    // code 2 is reserved for genuine bound violations and oracle deviations.
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(1)
        }
    }
}
