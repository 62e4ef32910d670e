//! Closed forms for A_p, B_p, C_p and the identities connecting them.

mod closed;
mod identities;
mod inversion;
mod recurrence;
mod special;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::state::State;

pub use closed::{ab_matrix_chebyshev, abc_nu, abc_traditional};
pub use identities::{ground_state_table, ground_state_table_formal, identity_suite, GroundRow};
pub use inversion::{
    invert_reflect1, invert_reflect3, reflect1_c, reflect1_factor, reflect3_factor,
};
pub use recurrence::{hypervirial_residuals, recur_up, HypervirialResiduals};
pub use special::{special_value, SpecialValue};

/// Which of the three radial integrals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Kind {
    A,
    B,
    C,
}

impl Kind {
    pub const ALL: [Kind; 3] = [Kind::A, Kind::B, Kind::C];
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
            Kind::C => "C",
        })
    }
}

/// (A_p, B_p, C_p) at one integer power p.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExpectationTriple {
    pub p: i32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl ExpectationTriple {
    pub fn new(p: i32, a: f64, b: f64, c: f64) -> Self {
        Self { p, a, b, c }
    }

    pub fn get(&self, kind: Kind) -> f64 {
        match kind {
            Kind::A => self.a,
            Kind::B => self.b,
            Kind::C => self.c,
        }
    }

    /// Residual of 2κ(A − εB) − (p + 1)(B − εA) − 4μC, together with the
    /// sum of the magnitudes of its terms.
    pub fn linear_residual(&self, state: &State) -> (f64, f64) {
        let (k, mu, eps) = (state.kappa(), state.cp.mu, state.cp.eps);
        let p1 = self.p as f64 + 1.0;
        let terms = [
            2.0 * k * self.a,
            -2.0 * k * eps * self.b,
            -p1 * self.b,
            p1 * eps * self.a,
            -4.0 * mu * self.c,
        ];
        (terms.iter().sum(), terms.iter().map(|t| t.abs()).sum())
    }

    /// Largest componentwise relative difference to `other`.
    pub fn max_rel_diff(&self, other: &Self) -> f64 {
        Kind::ALL
            .iter()
            .map(|&k| {
                let (x, y) = (self.get(k), other.get(k));
                if x == y {
                    0.0
                } else {
                    (x - y).abs() / x.abs().max(y.abs())
                }
            })
            .fold(0.0, f64::max)
    }
}

/// Range of integer powers for which the radial integrals converge.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConvergenceWindow {
    /// Smallest integer p with 2ν + p + 1 > 0.
    pub p_min: i32,
    pub notes: String,
}

impl ConvergenceWindow {
    pub fn for_state(state: &State) -> Self {
        Self::for_nu(state.cp.nu)
    }

    pub fn for_nu(nu: f64) -> Self {
        let p_min = (-2.0 * nu - 1.0).floor() as i32 + 1;
        let notes = if p_min > -3 {
            "p = -3 diverges (requires |kappa| >= 2)".to_string()
        } else {
            String::new()
        };
        Self { p_min, notes }
    }

    pub fn contains(&self, p: i32) -> bool {
        p >= self.p_min
    }

    pub fn check(&self, p: i32) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::Divergent {
                p,
                p_min: self.p_min,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn window_edges() {
        // ν slightly below 1: 2ν + p + 1 > 0 admits p = -2 but not -3.
        assert_eq!(ConvergenceWindow::for_nu(0.99).p_min, -2);
        assert_eq!(ConvergenceWindow::for_nu(0.4).p_min, -1);
        assert_eq!(ConvergenceWindow::for_nu(1.99).p_min, -4);
        // 2ν + p + 1 = 0 exactly at ν = 1, p = -3 is excluded.
        assert_eq!(ConvergenceWindow::for_nu(1.0).p_min, -2);
        let s = State::new(0, -1, 0.5).unwrap();
        let w = ConvergenceWindow::for_state(&s);
        assert!(w.check(-2).is_ok() && w.check(-3).is_err());
    }
}
