use std::fmt;
use std::io;

/// Exit code for a clean run.
pub const EXIT_OK: i32 = 0;
/// Exit code when a verification or count check fails.
pub const EXIT_FAILURE: i32 = 1;
/// Exit code for bad arguments, refused sizes and I/O trouble.
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    /// A size past an oracle guard or a count past 64 bits.
    Refused(String),
    /// A generated stream broke one of its checks.
    Failed(String),
    Io(io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Failed(_) => EXIT_FAILURE,
            _ => EXIT_USAGE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Refused(m) => write!(f, "refused: {m}"),
            CliError::Failed(m) => write!(f, "FAIL: {m}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}
