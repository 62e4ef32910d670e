//! Tables and verification reports for Dirac-Coulomb radial expectation
//! values.

pub mod config;
pub mod error;
pub mod output;
pub mod table;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};

pub use config::{Args, Format, Mode, RunConfig};
pub use error::{CliError, Result};
pub use table::{run_ground_table, run_table, TableRow};
pub use verify::{run_verify, verify_state, Tolerances};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "DCE_THREADS";

fn sink(cfg: &RunConfig) -> Result<Box<dyn Write>> {
    Ok(match &cfg.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn threads() -> Result<Option<usize>> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::Config(format!(
                "{THREADS_ENV} = '{v}' is not a positive integer"
            ))),
        },
    }
}

fn execute(cfg: &RunConfig) -> Result<i32> {
    let mut w = sink(cfg)?;
    let code = match cfg.mode {
        Mode::Table => {
            output::write_table(&mut w, &run_table(cfg)?, cfg.format)?;
            0
        }
        Mode::GroundTable => {
            output::write_table(&mut w, &run_ground_table(cfg)?, cfg.format)?;
            0
        }
        Mode::Verify => {
            let records = run_verify(cfg)?;
            output::write_records(&mut w, &records, cfg.format)?;
            i32::from(records.iter().any(|r| !r.pass))
        }
    };
    w.flush()?;
    Ok(code)
}

/// Runs the configured mode and returns the process exit status:
/// 0 on success, 1 if any verification record fails.
pub fn run(cfg: &RunConfig) -> Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = threads()? {
        pool = pool.num_threads(n);
    }
    let pool = pool
        .build()
        .map_err(|e| CliError::Config(format!("cannot start worker threads: {e}")))?;
    pool.install(|| execute(cfg))
}
