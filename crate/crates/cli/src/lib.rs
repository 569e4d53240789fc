//! Command-line front end for `numrange-core`: argument parsing, JSON run
//! reports, CSV/SVG rendering and randomized verification suites.

pub mod cli;
pub mod commands;
pub mod error;
pub mod parse;
pub mod render;
pub mod report;
pub mod verify;

use std::path::Path;

use cli::{Cli, Command};
use commands::Outcome;
use error::{CliError, Result};

/// Environment variable capping the worker pool (0 or unset = automatic).
pub const THREADS_ENV: &str = "NUMRANGE_THREADS";

/// Parse a thread-count value.
pub fn parse_threads(value: &str) -> Result<usize> {
    value
        .trim()
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV} must be a non-negative integer, got `{value}`")))
}

/// Configure the global rayon pool from the environment.
pub fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n = parse_threads(&value)?;
    if n > 0 {
        // A pool configured earlier in the process is left as is.
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents).map_err(|source| CliError::Io { path: path.to_owned(), source })
}

/// Run a parsed command, writing any side files it requests.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let outcome = match &cli.command {
        Command::Radius(a) => commands::radius(a)?,
        Command::Boundary(a) => {
            let out = commands::boundary(a)?;
            if let Some(p) = &a.csv {
                write_file(p, &render::boundary_csv(&out.report)?)?;
            }
            if let Some(p) = &a.svg {
                write_file(p, &render::boundary_svg(&out.report)?)?;
            }
            out
        }
        Command::Poncelet(a) => commands::poncelet(a)?,
        Command::Kms(a) => commands::kms(a)?,
        Command::Angles(a) => commands::angles(a)?,
        Command::Verify(a) => verify::verify(a),
    };
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn thread_values() {
        assert_eq!(parse_threads("0").unwrap(), 0);
        assert_eq!(parse_threads(" 4 ").unwrap(), 4);
        assert_eq!(parse_threads("-1").unwrap_err().exit_code(), 2);
        assert!(parse_threads("many").is_err());
    }
}
