//! Command-line front end for the `loopless` generators.
//!
//! ```text
//! loopless gen <kind> <params...> [--format full|delta|count]
//! loopless verify <kind> <params...>
//! loopless bench <kind> <params...> [--reps N]
//! ```
//!
//! Kinds are `perm <n>`, `comb <n> <r>`, `multiperm <n1> <n2> ...` and
//! `parking <n>`. Exit codes: 0 pass, 1 verification failure, 2 usage or
//! guard error.

pub mod bench;
pub mod error;
pub mod job;
pub mod stream;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

pub use bench::{bench, bench_grid, step_cost, SizeRow, StepCostReport};
pub use error::{CliError, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
pub use job::{Job, Kind};
pub use stream::{generate, replay, Format};
pub use verify::{verify, VerifyReport};

#[derive(Debug, Parser)]
#[command(
    name = "loopless",
    version,
    about = "Loopless combinatorial generation"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write every object to standard output.
    Gen {
        kind: Kind,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Full)]
        format: Format,
    },
    /// Check the generator against a brute-force oracle and its transition rules.
    Verify {
        kind: Kind,
        #[arg(required = true)]
        params: Vec<usize>,
    },
    /// Measure instrumented step cost and uninstrumented throughput.
    Bench {
        kind: Kind,
        #[arg(required = true)]
        params: Vec<usize>,
        #[arg(long, default_value_t = 1)]
        reps: usize,
    },
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(()) => match out.flush() {
            Ok(()) => EXIT_OK,
            Err(e) => report(err, &CliError::Io(e)),
        },
        Err(e) => {
            let _ = out.flush();
            report(err, &e)
        }
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "{e}");
    e.exit_code()
}

fn execute(command: &Command, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Gen {
            kind,
            params,
            format,
        } => {
            let job = Job::parse(*kind, params)?;
            generate(&job, *format, out)
        }
        Command::Verify { kind, params } => {
            let job = Job::parse(*kind, params)?;
            let report = verify(&job)?;
            writeln!(out, "{report}")?;
            Ok(())
        }
        Command::Bench { kind, params, reps } => {
            let job = Job::parse(*kind, params)?;
            let report = bench(&job, *reps)?;
            writeln!(out, "{report}")?;
            Ok(())
        }
    }
}
