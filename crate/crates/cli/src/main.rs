use std::process::ExitCode;

use clap::Parser;
use dce_cli::{run, Args, RunConfig};

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = RunConfig::try_from(args).and_then(|cfg| run(&cfg));
    match result {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("dce: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
