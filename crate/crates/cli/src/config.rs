//! Command-line arguments and the validated run configuration.

use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use dce_core::units::ALPHA_FS;
use dce_core::LengthUnit;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Table,
    Verify,
    GroundTable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum UnitArg {
    Compton,
    Bohr,
    Natural,
}

impl From<UnitArg> for LengthUnit {
    fn from(u: UnitArg) -> Self {
        match u {
            UnitArg::Compton => LengthUnit::Compton,
            UnitArg::Bohr => LengthUnit::Bohr,
            UnitArg::Natural => LengthUnit::Natural,
        }
    }
}

/// Radial expectation values of Dirac-Coulomb bound states.
#[derive(Debug, Clone, Parser)]
#[command(name = "dce", version, about)]
pub struct Args {
    /// Nuclear charge number.
    #[arg(long = "Z", default_value_t = 1.0)]
    pub z: f64,

    /// Fine-structure constant.
    #[arg(long, default_value_t = ALPHA_FS)]
    pub alpha: f64,

    /// Radial quantum numbers, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [0u32, 1, 2])]
    pub n: Vec<u32>,

    /// Dirac quantum numbers, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = [-1i32, 1, -2])]
    pub kappa: Vec<i32>,

    /// Inclusive range of powers as min:max.
    #[arg(long, allow_hyphen_values = true, default_value = "-2:3")]
    pub p: String,

    #[arg(long, value_enum, default_value_t = UnitArg::Compton)]
    pub units: UnitArg,

    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    #[arg(long, value_enum, default_value_t = Mode::Table)]
    pub mode: Mode,

    /// Emit formal values for divergent ground-state powers.
    #[arg(long)]
    pub formal: bool,

    /// Override every verification tolerance.
    #[arg(long)]
    pub tol: Option<f64>,

    /// Write to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Scale every C_p by this factor before checking (test fixture).
    #[arg(long, hide = true)]
    pub corrupt_c: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub z: f64,
    pub alpha_fs: f64,
    /// Sorted and deduplicated.
    pub n_list: Vec<u32>,
    /// Sorted and deduplicated.
    pub kappa_list: Vec<i32>,
    pub p_range: (i32, i32),
    pub units: LengthUnit,
    pub format: Format,
    pub mode: Mode,
    pub formal: bool,
    pub tol_override: Option<f64>,
    pub out: Option<PathBuf>,
    pub corrupt_c: Option<f64>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self::try_from(Args::parse_from(["dce"])).expect("defaults are valid")
    }
}

fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

pub fn parse_p_range(s: &str) -> Result<(i32, i32)> {
    let (lo, hi) = s
        .split_once(':')
        .ok_or_else(|| config(format!("power range '{s}' must look like min:max")))?;
    let parse = |v: &str| {
        v.trim()
            .parse::<i32>()
            .map_err(|_| config(format!("power range '{s}': '{v}' is not an integer")))
    };
    let (lo, hi) = (parse(lo)?, parse(hi)?);
    if lo > hi {
        return Err(config(format!("power range '{s}' is empty")));
    }
    Ok((lo, hi))
}

impl TryFrom<Args> for RunConfig {
    type Error = CliError;

    fn try_from(args: Args) -> Result<Self> {
        let cfg = RunConfig {
            z: args.z,
            alpha_fs: args.alpha,
            n_list: sorted(args.n),
            kappa_list: sorted(args.kappa),
            p_range: parse_p_range(&args.p)?,
            units: args.units.into(),
            format: args.format,
            mode: args.mode,
            formal: args.formal,
            tol_override: args.tol,
            out: args.out,
            corrupt_c: args.corrupt_c,
        };
        cfg.validate()?;
        Ok(cfg)
    }
}

fn sorted<T: Ord>(mut v: Vec<T>) -> Vec<T> {
    v.sort_unstable();
    v.dedup();
    v
}

impl RunConfig {
    pub fn mu(&self) -> f64 {
        self.alpha_fs * self.z
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.z > 0.0 && self.z.is_finite()) {
            return Err(config(format!("Z = {} must be positive", self.z)));
        }
        if !(self.alpha_fs > 0.0 && self.alpha_fs.is_finite()) {
            return Err(config(format!(
                "alpha = {} must be positive",
                self.alpha_fs
            )));
        }
        if self.n_list.is_empty() || self.kappa_list.is_empty() {
            return Err(config("the n and kappa lists must be nonempty"));
        }
        if self.kappa_list.contains(&0) {
            return Err(config("kappa = 0 is not a Dirac quantum number"));
        }
        let min_k = self
            .kappa_list
            .iter()
            .map(|k| k.unsigned_abs())
            .min()
            .unwrap_or(1) as f64;
        if self.mode != Mode::GroundTable && self.mu() >= min_k {
            return Err(config(format!(
                "coupling alpha*Z = {} must be below min |kappa| = {min_k}",
                self.mu()
            )));
        }
        if self.mode == Mode::GroundTable && self.mu() >= 1.0 {
            return Err(config(format!(
                "coupling alpha*Z = {} must be below 1",
                self.mu()
            )));
        }
        if let Some(t) = self.tol_override {
            if !(t > 0.0 && t.is_finite()) {
                return Err(config(format!("tolerance {t} must be positive")));
            }
        }
        if self.p_range.0 < -64 || self.p_range.1 > 64 {
            return Err(config("powers are limited to |p| <= 64"));
        }
        Ok(())
    }

    /// (n, κ) pairs in output order. n = 0 admits only κ < 0.
    pub fn states(&self) -> Vec<(u32, i32)> {
        let mut out = Vec::new();
        for &n in &self.n_list {
            for &k in &self.kappa_list {
                if n > 0 || k < 0 {
                    out.push((n, k));
                }
            }
        }
        out
    }
}
