//! Hypervirial relations between adjacent powers and the upward
//! recurrence they imply.

use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{domain, Error, Result};
use crate::specfun::dd_div;
use crate::state::State;

use super::{ConvergenceWindow, ExpectationTriple};

/// The triple at p + 1 from the triple at p. Singular at p = −2.
pub fn recur_up(state: &State, p: i32, t: &ExpectationTriple) -> Result<ExpectationTriple> {
    if p == -2 {
        return Err(Error::ExcludedPower {
            p,
            reason: "the upward recurrence divides by p + 2",
        });
    }
    if t.p != p {
        return Err(domain(
            "recur_up",
            format!("triple is at power {} but p = {p}", t.p),
        ));
    }
    ConvergenceWindow::for_state(state).check(p)?;
    let d = state.dd();
    let (mu, eps, a, kappa) = (d.mu, d.eps, d.a, d.kappa);
    let pf = TwoFloat::from(p as f64);
    let (p1, p2) = (pf + 1.0, pf + 2.0);
    let (nu4, ke) = (4.0 * d.nu * d.nu, 2.0 * kappa * eps);
    let den = 4.0 * a * a * p2 * d.beta * mu;

    let aa = -p1 * (nu4 * eps + 2.0 * kappa * p2 + eps * p1 * (ke + p2));
    let ab = 4.0 * mu * mu * p2 + p1 * (ke + p1) * (ke + p2);
    let ba = -p1 * (nu4 + ke * (2.0 * pf + 3.0) + eps * eps * p1 * p2);
    let bb = 4.0 * mu * mu * eps * p2 + p1 * (ke + p1) * (2.0 * kappa + eps * p2);

    let (ta, tb) = (TwoFloat::from(t.a), TwoFloat::from(t.b));
    let a_next = dd_div(aa * ta + ab * tb, den);
    let b_next = dd_div(ba * ta + bb * tb, den);
    let c_next = dd_div(
        (2.0 * kappa + eps * p2) * a_next - (ke + p2) * b_next,
        4.0 * mu,
    );
    Ok(ExpectationTriple::new(
        p + 1,
        a_next.into(),
        b_next.into(),
        c_next.into(),
    ))
}

/// Residuals of the three hypervirial relations linking powers p and
/// p + 1, each paired with the sum of the magnitudes of its terms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HypervirialResiduals {
    pub r: [f64; 3],
    pub scale: [f64; 3],
}

impl HypervirialResiduals {
    /// Largest |rᵢ| / scaleᵢ.
    pub fn max_rel(&self) -> f64 {
        self.r
            .iter()
            .zip(self.scale)
            .map(|(r, s)| if *r == 0.0 { 0.0 } else { r.abs() / s })
            .fold(0.0, f64::max)
    }
}

fn residual(terms: &[f64]) -> (f64, f64) {
    (terms.iter().sum(), terms.iter().map(|t| t.abs()).sum())
}

/// r₁ = 2κA_p − (p+1)B_p − 4μC_p − 4βεC_{p+1},
/// r₂ = 2κB_p − (p+1)A_p − 4βC_{p+1},
/// r₃ = μB_p − (p+1)C_p − β(A_{p+1} − εB_{p+1}).
pub fn hypervirial_residuals(
    state: &State,
    t_p: &ExpectationTriple,
    t_next: &ExpectationTriple,
) -> Result<HypervirialResiduals> {
    if t_next.p != t_p.p + 1 {
        return Err(domain(
            "hypervirial_residuals",
            format!(
                "triples at powers {} and {} are not adjacent",
                t_p.p, t_next.p
            ),
        ));
    }
    let (mu, eps, beta, kappa) = (
        state.cp.mu,
        state.cp.eps,
        state.cp.beta_scale,
        state.kappa(),
    );
    let p1 = t_p.p as f64 + 1.0;
    let rows = [
        residual(&[
            2.0 * kappa * t_p.a,
            -p1 * t_p.b,
            -4.0 * mu * t_p.c,
            -4.0 * beta * eps * t_next.c,
        ]),
        residual(&[2.0 * kappa * t_p.b, -p1 * t_p.a, -4.0 * beta * t_next.c]),
        residual(&[
            mu * t_p.b,
            -p1 * t_p.c,
            -beta * t_next.a,
            beta * eps * t_next.b,
        ]),
    ];
    Ok(HypervirialResiduals {
        r: rows.map(|(r, _)| r),
        scale: rows.map(|(_, s)| s),
    })
}
