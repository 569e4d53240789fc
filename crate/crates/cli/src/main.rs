use std::io::Write;
use std::process::ExitCode;

use clap::Parser;
use numrange::cli::Cli;
use numrange::{configure_threads, run, write_file};

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = configure_threads().and_then(|()| run(&cli)).and_then(|out| {
        let json = out.report.to_json();
        match &cli.output {
            Some(path) => write_file(path, &json)?,
            None => {
                let _ = std::io::stdout().write_all(json.as_bytes());
            }
        }
        Ok(out.certified)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("numrange: certification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("numrange: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
