//! Independent evaluations of the radial integrals and of the checks the
//! closed forms are held against.

mod adaptive;
mod appendix;
mod hellmann;
mod termwise;

use serde::Serialize;

pub use adaptive::{integrate_adaptive, AdaptiveConfig};
pub use appendix::{appendix_a_suite, AppendixGrid};
pub use hellmann::{binding_energy, hellmann_feynman_dkappa, hellmann_feynman_dz};
pub use termwise::{integrate_termwise, termwise_triple};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    TermwiseGamma,
    AdaptiveQuadrature,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OracleResult {
    pub value: f64,
    pub method: OracleMethod,
    pub est_error: f64,
}
