mod parse;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use polybound::{compute_all, find_roots, numerical_radius, run_suite, TrialConfig};

use render::OutputFormat;

/// Zero-inclusion radii, numerical radii and root finding for complex polynomials.
#[derive(Parser)]
#[command(name = "polybound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate every zero-inclusion radius of a polynomial
    Bounds {
        #[command(flatten)]
        poly: PolyArgs,
        /// Also locate the roots and report tightness value / max |z|
        #[arg(long)]
        with_roots: bool,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Numerical radius of a matrix read from a file ('-' for stdin)
    Radius {
        file: PathBuf,
        /// Bracket width at which the angular refinement stops
        #[arg(long, env = "POLYBOUND_TOL", default_value_t = 1e-10)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// All roots of a polynomial by Aberth-Ehrlich iteration
    Roots {
        #[command(flatten)]
        poly: PolyArgs,
        /// Stop once every correction is smaller than this
        #[arg(long, env = "POLYBOUND_TOL", default_value_t = 1e-12)]
        tol: f64,
        #[arg(long, default_value_t = 1000)]
        max_iter: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Check the numerical radius inequalities on seeded random matrices
    VerifyIneq {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 6)]
        max_dim: usize,
        /// Slack before an inequality counts as violated
        #[arg(long, env = "POLYBOUND_TOL", default_value_t = 1e-9, allow_hyphen_values = true)]
        tol: f64,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Bounds and actual max modulus for every polynomial in a file, as CSV
    CompareCorpus {
        /// One whitespace-separated coefficient list per line; '#' starts a comment
        file: PathBuf,
        #[arg(long)]
        ascending: bool,
    },
}

#[derive(Args)]
struct PolyArgs {
    /// Coefficients, leading first unless --ascending; complex as a+bi
    #[arg(required = true, num_args = 1..)]
    coefficients: Vec<String>,
    /// Read coefficients constant term first
    #[arg(long)]
    ascending: bool,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Numerical(String),
    #[error("{0}")]
    Output(String),
    #[error("{0} inequality violations")]
    Violations(u64),
}

impl From<polybound::Error> for CliError {
    fn from(e: polybound::Error) -> Self {
        match e {
            polybound::Error::Convergence { .. } => CliError::Numerical(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) | CliError::Output(_) => 1,
            CliError::Numerical(_) => 2,
            CliError::Violations(_) => 3,
        }
    }
}

fn read_input(path: &PathBuf) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::Input(format!("stdin: {e}")))
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Bounds { poly, with_roots, format } => {
            let p = parse::parse_polynomial(&poly.coefficients, poly.ascending)?;
            if p.degree() == 1 {
                return render::linear(&p, format);
            }
            render::bounds(&compute_all(&p, with_roots)?, format)
        }
        Command::Radius { file, tol, format } => {
            let t = parse::parse_matrix(&read_input(&file)?)?;
            render::radius(&numerical_radius(&t, tol)?, format)
        }
        Command::Roots { poly, tol, max_iter, format } => {
            let p = parse::parse_polynomial(&poly.coefficients, poly.ascending)?;
            let rs = find_roots(&p, tol, max_iter)?;
            let out = render::roots(&p, &rs, format)?;
            if rs.converged {
                Ok(out)
            } else {
                print!("{out}");
                Err(CliError::Numerical(format!("root finder did not converge in {max_iter} iterations")))
            }
        }
        Command::VerifyIneq { seed, trials, max_dim, tol, format } => {
            let cfg = TrialConfig { seed, trials, max_dim, tol, ..Default::default() };
            let report = run_suite(&cfg)?;
            let out = render::violations(&report, format)?;
            if report.total_violations() > 0 {
                print!("{out}");
                Err(CliError::Violations(report.total_violations()))
            } else if !report.failed_trials.is_empty() {
                print!("{out}");
                Err(CliError::Numerical(format!("{} trials failed numerically", report.failed_trials.len())))
            } else {
                Ok(out)
            }
        }
        Command::CompareCorpus { file, ascending } => {
            let text = read_input(&file)?;
            let reports: Vec<_> = text
                .lines()
                .enumerate()
                .filter_map(|(k, line)| {
                    let body = line.split('#').next().unwrap_or("");
                    let tokens: Vec<String> = body.split_whitespace().map(String::from).collect();
                    (!tokens.is_empty()).then_some((k + 1, tokens))
                })
                .map(|(line, tokens)| {
                    let r = parse::parse_polynomial(&tokens, ascending)
                        .and_then(|p| compute_all(&p, true).map_err(CliError::from))
                        .map_err(|e| e.to_string());
                    (line, r)
                })
                .collect();
            render::corpus(&reports)
        }
    }
}

fn main() -> ExitCode {
    let args = parse::protect_negative_literals(std::env::args().collect(), &["--tol", "--max-iter", "--format"]);
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
