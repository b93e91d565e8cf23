//! Command-line front end over `norlund-core`.
//!
//! [`run`] does all the work and returns the bytes for standard output and
//! the diagnostic stream, so the binary is a thin wrapper and tests can call
//! it in-process.
//!
//! Exit codes: 0 success, 1 a verified identity failed (or a construction
//! step that should be infallible broke), 2 usage error.

pub mod format;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use norlund_core::theorem::{run_suite, NorlundOracle, SuiteConfig};
use norlund_core::{bernoulli_table, compute_p, m_sequence, norlund_poly, stirling1};

use crate::format::Format;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "norlund", version, about = "Exact Stirling, Bernoulli and Norlund computations")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Also write standard output to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleArg {
    Stirling,
    LiuSrivastava,
}

impl From<OracleArg> for NorlundOracle {
    fn from(value: OracleArg) -> Self {
        match value {
            OracleArg::Stirling => NorlundOracle::Stirling,
            OracleArg::LiuSrivastava => NorlundOracle::LiuSrivastava,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the primitive polynomial P_n(x).
    Pk {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Print m_0 ..= m_max.
    Mseq {
        #[arg(long, allow_negative_numbers = true)]
        max: i64,
    },
    /// Print the signed Stirling number of the first kind s(n, k).
    Stirling {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        #[arg(long, allow_negative_numbers = true)]
        k: i64,
    },
    /// Print B_0 ..= B_max (B_1 = -1/2).
    Bernoulli {
        #[arg(long, allow_negative_numbers = true)]
        max: i64,
    },
    /// Print the Norlund polynomial B_n^(x).
    Norlund {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Check every identity over a parameter grid.
    Verify {
        #[arg(long, default_value_t = 25, allow_negative_numbers = true)]
        k_max: i64,
        #[arg(long, default_value_t = 120, allow_negative_numbers = true)]
        n_max: i64,
        /// Largest k for constant terms and degrees.
        #[arg(long, default_value_t = 40, allow_negative_numbers = true)]
        poly_k_max: i64,
        /// Largest n for the m_n checks.
        #[arg(long, default_value_t = 300, allow_negative_numbers = true)]
        m_max: i64,
        /// Largest n for the Stirling/Norlund bridge (stirling oracle).
        #[arg(long, default_value_t = 60, allow_negative_numbers = true)]
        bridge_n_max: i64,
        /// Independent oracle for the Norlund polynomials.
        #[arg(long, value_enum, default_value_t = OracleArg::Stirling)]
        oracle: OracleArg,
        /// Largest n for the composition-sum oracle.
        #[arg(long, default_value_t = 20, allow_negative_numbers = true)]
        composition_cap: i64,
        /// Stop after the first identity family with a failure.
        #[arg(long)]
        fail_fast: bool,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { code: EXIT_OK, stdout, stderr: String::new() }
    }

    fn usage(message: impl Into<String>) -> Self {
        let mut stderr = format!("error: {}\n", message.into());
        stderr.push_str("run `norlund --help` for usage\n");
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr }
    }

    fn failure(message: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

fn non_negative(name: &str, value: i64) -> Result<u64, Outcome> {
    u64::try_from(value).map_err(|_| Outcome::usage(format!("{name} must be non-negative, got {value}")))
}

/// Parses `args` (including the program name) and executes the command.
/// Does not touch the process streams; `--out` is handled by the caller via
/// [`Cli::out`] so the file gets exactly `Outcome::stdout`.
pub fn run<I, T>(args: I) -> (Option<PathBuf>, Outcome)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let outcome = if code == EXIT_OK {
                Outcome::ok(rendered)
            } else {
                Outcome { code, stdout: String::new(), stderr: rendered }
            };
            return (None, outcome);
        }
    };
    let out = cli.out.clone();
    (out, execute(&cli))
}

pub fn execute(cli: &Cli) -> Outcome {
    let fmt = cli.format;
    let result = match &cli.command {
        Command::Pk { n } => pk(*n, fmt),
        Command::Mseq { max } => mseq(*max, fmt),
        Command::Stirling { n, k } => stirling1(*n, *k)
            .map(|v| Outcome::ok(format::stirling(*n, *k, &v, fmt)))
            .map_err(|e| Outcome::usage(e.to_string())),
        Command::Bernoulli { max } => non_negative("--max", *max)
            .map(|max| Outcome::ok(format::bernoulli(bernoulli_table(max as usize).values(), fmt))),
        Command::Norlund { n } => non_negative("--n", *n).map(|n| {
            let b = norlund_poly(n as usize);
            Outcome::ok(format::norlund(b.n, &b.poly, fmt))
        }),
        Command::Verify {
            k_max,
            n_max,
            poly_k_max,
            m_max,
            bridge_n_max,
            oracle,
            composition_cap,
            fail_fast,
        } => (|| {
            let config = SuiteConfig {
                k_max: non_negative("--k-max", *k_max)?,
                n_max: non_negative("--n-max", *n_max)?,
                poly_k_max: non_negative("--poly-k-max", *poly_k_max)?,
                m_max: non_negative("--m-max", *m_max)?,
                bridge_n_max: non_negative("--bridge-n-max", *bridge_n_max)?,
                oracle: (*oracle).into(),
                composition_cap: non_negative("--composition-cap", *composition_cap)?,
                fail_fast: *fail_fast,
            };
            verify(&config, fmt)
        })(),
    };
    result.unwrap_or_else(|e| e)
}

fn pk(n: i64, fmt: Format) -> Result<Outcome, Outcome> {
    if n < 2 {
        return Err(Outcome::usage(format!("--n must be at least 2, got {n}")));
    }
    let p = compute_p(n as usize).map_err(Outcome::failure)?;
    Ok(Outcome::ok(format::primitive(p.n, &p.poly, fmt)))
}

fn mseq(max: i64, fmt: Format) -> Result<Outcome, Outcome> {
    let max = non_negative("--max", max)?;
    let seq = m_sequence(max).map_err(Outcome::failure)?;
    Ok(Outcome::ok(format::sequence("m", seq.values(), fmt)))
}

fn verify(config: &SuiteConfig, fmt: Format) -> Result<Outcome, Outcome> {
    config.validate().map_err(|e| Outcome::usage(e.to_string()))?;
    let outcome = run_suite(config).map_err(Outcome::failure)?;
    let code = if outcome.all_passed() { EXIT_OK } else { EXIT_FAILURE };
    Ok(Outcome { code, stdout: format::verification(&outcome, fmt), stderr: String::new() })
}
