//! Tables of A_p, B_p, C_p over a grid of states and powers.

use dce_core::expect::{abc_nu, abc_traditional, ground_state_table, ground_state_table_formal};
use dce_core::{ConvergenceWindow, Error, State, Units};
use rayon::prelude::*;
use serde::Serialize;

use crate::config::RunConfig;
use crate::error::{CliError, Result};

/// Largest tolerated relative difference between the two closed forms.
pub const CROSS_CHECK_TOL: f64 = 1e-8;

/// One output row. The values are absent when the integral diverges and
/// no formal value was requested.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub n: u32,
    pub kappa: i32,
    pub p: i32,
    #[serde(rename = "A")]
    pub a: Option<f64>,
    #[serde(rename = "B")]
    pub b: Option<f64>,
    #[serde(rename = "C")]
    pub c: Option<f64>,
    pub eps: f64,
    pub nu: f64,
    pub units: &'static str,
    pub divergent: bool,
}

fn state_rows(cfg: &RunConfig, n: u32, kappa: i32) -> Result<Vec<TableRow>> {
    let units = Units::new(cfg.alpha_fs);
    let state = State::from_charge(n, kappa, cfg.z, &units)?;
    let window = ConvergenceWindow::for_state(&state);
    let mut rows = Vec::new();
    for p in cfg.p_range.0..=cfg.p_range.1 {
        let mut row = TableRow {
            n,
            kappa,
            p,
            a: None,
            b: None,
            c: None,
            eps: state.cp.eps,
            nu: state.cp.nu,
            units: cfg.units.as_str(),
            divergent: !window.contains(p),
        };
        if row.divergent {
            if cfg.formal && n == 0 && kappa == -1 {
                if let Ok(g) = ground_state_table_formal(state.cp.mu, p, cfg.alpha_fs) {
                    // The ground table is in Bohr radii, a₀ = λ/α.
                    let to_compton = cfg.alpha_fs.powi(-p);
                    let conv = |v: f64| cfg.units.from_compton(v * to_compton, p, &units);
                    (row.a, row.b, row.c) = (Some(conv(g.a)), Some(conv(g.b)), Some(conv(g.c)));
                }
            }
            rows.push(row);
            continue;
        }
        let t = abc_traditional(&state, p)?;
        let alt = abc_nu(&state, p)?;
        let diff = t.max_rel_diff(&alt);
        if !(diff <= CROSS_CHECK_TOL) {
            return Err(CliError::Mismatch { n, kappa, p, diff });
        }
        let conv = |v: f64| cfg.units.from_compton(v, p, &units);
        (row.a, row.b, row.c) = (Some(conv(t.a)), Some(conv(t.b)), Some(conv(t.c)));
        rows.push(row);
    }
    Ok(rows)
}

/// Rows for every state of the configured grid, ordered by (n, κ, p).
pub fn run_table(cfg: &RunConfig) -> Result<Vec<TableRow>> {
    cfg.validate()?;
    let per_state: Vec<Result<Vec<TableRow>>> = cfg
        .states()
        .into_par_iter()
        .map(|(n, k)| state_rows(cfg, n, k))
        .collect();
    let mut rows = Vec::new();
    for r in per_state {
        rows.extend(r?);
    }
    Ok(rows)
}

/// The n = 0, κ = −1 table in Bohr units for the configured powers,
/// clipped to the rows that exist in closed form.
pub fn run_ground_table(cfg: &RunConfig) -> Result<Vec<TableRow>> {
    cfg.validate()?;
    let mu = cfg.mu();
    let nu1 = ((1.0 - mu) * (1.0 + mu)).sqrt();
    let mut rows = Vec::new();
    for p in cfg.p_range.0..=cfg.p_range.1 {
        let g = if cfg.formal {
            ground_state_table_formal(mu, p, cfg.alpha_fs)
        } else {
            ground_state_table(mu, p, cfg.alpha_fs)
        };
        let g = match g {
            Ok(g) => g,
            Err(Error::Divergent { .. }) => continue,
            Err(Error::Domain { .. }) if cfg.formal => continue,
            Err(e) => return Err(e.into()),
        };
        rows.push(TableRow {
            n: 0,
            kappa: -1,
            p,
            a: Some(g.a),
            b: Some(g.b),
            c: Some(g.c),
            eps: nu1,
            nu: nu1,
            units: "bohr",
            divergent: g.formal,
        });
    }
    Ok(rows)
}
