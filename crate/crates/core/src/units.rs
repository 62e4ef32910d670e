//! Length units and physical constants.
//!
//! All internal lengths are measured in reduced Compton wavelengths
//! λ = ħ/mc, so the inverse length β = mc/ħ equals one. The Bohr radius
//! is a₀ = λ/α and the coupling is μ = αZ.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// CODATA 2018 fine-structure constant.
pub const ALPHA_FS: f64 = 7.297_352_569_3e-3;

/// Electron rest energy in MeV, used for lengths in natural units (ħ = c = 1).
pub const ELECTRON_MASS_MEV: f64 = 0.510_998_950_00;

/// Constants that fix the conversion between charge number and coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Units {
    pub alpha_fs: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self { alpha_fs: ALPHA_FS }
    }
}

impl Units {
    pub fn new(alpha_fs: f64) -> Self {
        Self { alpha_fs }
    }

    /// μ = αZ.
    pub fn coupling(&self, z: f64) -> f64 {
        self.alpha_fs * z
    }

    /// Z = μ/α.
    pub fn charge(&self, mu: f64) -> f64 {
        mu / self.alpha_fs
    }

    /// Bohr radius in units of λ.
    pub fn bohr_radius(&self) -> f64 {
        1.0 / self.alpha_fs
    }
}

/// Unit in which lengths (and powers of lengths) are reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LengthUnit {
    /// Reduced Compton wavelength ħ/mc.
    #[default]
    Compton,
    /// Bohr radius ħ²/me².
    Bohr,
    /// MeV⁻¹ with ħ = c = 1.
    Natural,
}

impl LengthUnit {
    /// The length λ expressed in this unit.
    pub fn compton_length(self, units: &Units) -> f64 {
        match self {
            Self::Compton => 1.0,
            Self::Bohr => units.alpha_fs,
            Self::Natural => 1.0 / ELECTRON_MASS_MEV,
        }
    }

    /// Converts a quantity of dimension length^p from λ-units to this unit.
    pub fn from_compton(self, value: f64, p: i32, units: &Units) -> f64 {
        value * self.compton_length(units).powi(p)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Compton => "compton",
            Self::Bohr => "bohr",
            Self::Natural => "natural",
        }
    }
}

impl fmt::Display for LengthUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LengthUnit {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "compton" => Ok(Self::Compton),
            "bohr" => Ok(Self::Bohr),
            "natural" => Ok(Self::Natural),
            other => Err(format!(
                "unknown length unit '{other}' (expected compton, bohr or natural)"
            )),
        }
    }
}
