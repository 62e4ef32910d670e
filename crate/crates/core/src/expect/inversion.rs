//! Linear maps between the triples at p and at the reflected powers
//! −p−1 and −p−3.

use crate::error::{Error, Result};
use twofloat::TwoFloat;

use crate::specfun::{dd_div, gamma_ratio};
use crate::state::State;

use super::{ConvergenceWindow, ExpectationTriple};

fn check_source(state: &State, p: i32, t: &ExpectationTriple) -> Result<()> {
    if t.p != p {
        return Err(crate::error::domain(
            "inversion",
            format!("triple is at power {} but p = {p}", t.p),
        ));
    }
    ConvergenceWindow::for_state(state).check(p)
}

/// (2aβ)^{2p+1} Γ(2ν−p)/Γ(2ν+p+1).
pub fn reflect1_factor(state: &State, p: i32) -> Result<f64> {
    let w = ConvergenceWindow::for_state(state);
    w.check(p)?;
    w.check(-p - 1)?;
    let two_nu = 2.0 * state.cp.nu;
    Ok(state.xi_scale().powi(2 * p + 1) * gamma_ratio(two_nu - p as f64, two_nu + p as f64 + 1.0)?)
}

/// (2aβ)^{2p+3} Γ(2ν−p−2)/Γ(2ν+p+3).
pub fn reflect3_factor(state: &State, p: i32) -> Result<f64> {
    let w = ConvergenceWindow::for_state(state);
    w.check(p)?;
    w.check(-p - 3)?;
    let two_nu = 2.0 * state.cp.nu;
    let pf = p as f64;
    Ok(state.xi_scale().powi(2 * p + 3) * gamma_ratio(two_nu - pf - 2.0, two_nu + pf + 3.0)?)
}

/// C_{−p−1} from C_p. Valid for every p where both powers converge.
pub fn reflect1_c(state: &State, p: i32, c: f64) -> Result<f64> {
    Ok(reflect1_factor(state, p)? * c)
}

/// The triple at −p−1 from the triple at p. The A and B maps are
/// singular at p = 0 and p = −1.
pub fn invert_reflect1(state: &State, p: i32, t: &ExpectationTriple) -> Result<ExpectationTriple> {
    if p == 0 || p == -1 {
        return Err(Error::ExcludedPower {
            p,
            reason: "the A and B reflection maps are singular at p = 0 and p = -1",
        });
    }
    check_source(state, p, t)?;
    let phi = reflect1_factor(state, p)?;
    let d = state.dd();
    let (ta, tb) = (TwoFloat::from(t.a), TwoFloat::from(t.b));
    let (e2, pf) = (d.eps * d.eps, TwoFloat::from(p as f64));
    let den = d.a * d.a * pf;
    let a = dd_div(
        ((e2 + 1.0) * pf + e2) * ta - (2.0 * pf + 1.0) * d.eps * tb,
        den,
    );
    let b = dd_div(
        (2.0 * pf + 1.0) * d.eps * ta - ((e2 + 1.0) * pf + 1.0) * tb,
        den,
    );
    Ok(ExpectationTriple::new(
        -p - 1,
        phi * f64::from(a),
        phi * f64::from(b),
        phi * t.c,
    ))
}

/// The triple at −p−3 from the triple at p. Singular at p = −2.
pub fn invert_reflect3(state: &State, p: i32, t: &ExpectationTriple) -> Result<ExpectationTriple> {
    if p == -2 {
        return Err(Error::ExcludedPower {
            p,
            reason: "the reflection p -> -p-3 is singular at p = -2",
        });
    }
    check_source(state, p, t)?;
    let phi = reflect3_factor(state, p)?;
    let d = state.dd();
    let (mu, kappa) = (d.mu, d.kappa);
    let (ta, tb, tc) = (
        TwoFloat::from(t.a),
        TwoFloat::from(t.b),
        TwoFloat::from(t.c),
    );
    let pf = TwoFloat::from(p as f64);
    let (p1, p2, q) = (pf + 1.0, pf + 2.0, 2.0 * pf + 3.0);
    let (mu2, nu4) = (mu * mu, 4.0 * d.nu * d.nu);
    let a = dd_div(
        (4.0 * mu2 * q + p2 * (nu4 + p1 * p2)) * ta - 8.0 * kappa * mu * q * tc,
        p2,
    ) - 2.0 * kappa * q * tb;
    let b = -2.0 * kappa * q * ta + (nu4 + p1 * p2) * tb + 4.0 * mu * q * tc;
    let c = dd_div(
        2.0 * kappa * mu * q * ta - (4.0 * mu2 * q + p1 * (nu4 - p2 * p2)) * tc,
        p2,
    ) - mu * q * tb;
    Ok(ExpectationTriple::new(
        -p - 3,
        phi * f64::from(a),
        phi * f64::from(b),
        phi * f64::from(c),
    ))
}
