//! The two hypergeometric representations of A_p, B_p, C_p and the
//! 2×2 matrix form of (A_p, B_p).

use crate::error::{Error, Result};
use twofloat::TwoFloat;

use crate::specfun::{dd_div, hyp3f2_dd, hyp3f2_terminating, rising, rising_dd};
use crate::state::State;

use super::{ConvergenceWindow, ExpectationTriple};

/// The three ₃F₂ values entering the traditional representation:
/// F(1−n, −p, p+1; 2ν+1, 2), F(1−n, −p, p+1; 2ν+1, 1), F(−n, −p, p+1; 2ν+1, 1).
fn traditional_series(state: &State, p: i32) -> Result<[f64; 3]> {
    let n = state.n();
    let (pf, b) = (p as f64, 2.0 * state.cp.nu + 1.0);
    Ok([
        hyp3f2_terminating([1.0 - n, -pf, pf + 1.0], [b, 2.0])?,
        hyp3f2_terminating([1.0 - n, -pf, pf + 1.0], [b, 1.0])?,
        hyp3f2_terminating([-n, -pf, pf + 1.0], [b, 1.0])?,
    ])
}

// Both representations end in a difference that cancels badly where C_p
// is small against μA_p, so they are evaluated in double-double.

fn triple(p: i32, a: TwoFloat, b: TwoFloat, c: TwoFloat) -> ExpectationTriple {
    ExpectationTriple::new(p, a.into(), b.into(), c.into())
}

/// A_p, B_p, C_p from the traditional radial functions.
pub fn abc_traditional(state: &State, p: i32) -> Result<ExpectationTriple> {
    ConvergenceWindow::for_state(state).check(p)?;
    let d = state.dd();
    let one = TwoFloat::from(1.0);
    let (n, pf) = (d.n, TwoFloat::from(p as f64));
    let b = 2.0 * d.nu + 1.0;
    let f2 = hyp3f2_dd([one - n, -pf, pf + 1.0], [b, TwoFloat::from(2.0)])?;
    let f1a = hyp3f2_dd([one - n, -pf, pf + 1.0], [b, one])?;
    let f1b = hyp3f2_dd([-n, -pf, pf + 1.0], [b, one])?;
    let k = dd_div(rising_dd(b, p), 2.0 * d.mu * d.xi_scale().powi(p));
    let plus = d.mu_plus_a_kappa() * f1a;
    let minus = d.mu_minus_a_kappa() * f1b;
    let cross = 2.0 * pf * d.a * n * f2;
    Ok(triple(
        p,
        k * (d.eps * cross + plus + minus),
        k * (cross + d.eps * (plus + minus)),
        0.5 * k * d.a * (plus - minus),
    ))
}

/// A_p, B_p, C_p from the Laguerre-pair radial functions.
pub fn abc_nu(state: &State, p: i32) -> Result<ExpectationTriple> {
    ConvergenceWindow::for_state(state).check(p)?;
    let d = state.dd();
    let one = TwoFloat::from(1.0);
    let (n, pf) = (d.n, TwoFloat::from(p as f64));
    let two_nu = 2.0 * d.nu;
    let (up, down) = (pf + 2.0, -pf - 1.0);
    let h1 = hyp3f2_dd([one - n, up, down], [two_nu + 2.0, one])?;
    let h2 = hyp3f2_dd([one - n, up, down], [two_nu + 1.0, TwoFloat::from(2.0)])?;
    let h3 = hyp3f2_dd([-n, up, down], [two_nu, one])?;
    let upper = d.eps_kappa_plus_nu() * rising_dd(two_nu + 2.0, p + 1) * h1;
    let lower = d.eps_kappa_minus_nu() * rising_dd(two_nu, p + 1) * h3;
    let middle = 2.0 * up * d.a * d.a * n * rising_dd(two_nu + 1.0, p + 1) * h2;
    let scale = dd_div(one, d.mu * d.nu * d.xi_scale().powi(p));
    let (a, mu, kappa) = (d.a, d.mu, d.kappa);
    Ok(triple(
        p,
        dd_div(scale, 4.0 * d.nu) * (a * kappa * (upper + lower) - mu * middle),
        scale / 4.0 * a * (upper - lower),
        dd_div(scale, 8.0 * d.nu) * (a * mu * (upper + lower) - kappa * middle),
    ))
}

/// (A_p, B_p) as a 2×2 matrix acting on (F(1−n, −p, p+1; 2ν+1, 1),
/// F(−n, −p, p+1; 2ν+1, 1)). Not defined at p = −1.
pub fn ab_matrix_chebyshev(state: &State, p: i32) -> Result<(f64, f64)> {
    if p == -1 {
        return Err(Error::ExcludedPower {
            p,
            reason: "the matrix form is singular at p = -1",
        });
    }
    ConvergenceWindow::for_state(state).check(p)?;
    let [_, f1a, f1b] = traditional_series(state, p)?;
    let (mu, nu, eps, a) = (state.cp.mu, state.cp.nu, state.cp.eps, state.cp.a);
    let (kappa, p1) = (state.kappa(), p as f64 + 1.0);
    let (plus, minus) = (state.mu_plus_a_kappa(), state.mu_minus_a_kappa());
    let g = a * (2.0 * eps * kappa + p1);
    let d = a * (2.0 * kappa + eps * p1);
    let gamma = [plus * (g - 2.0 * eps * mu), minus * (g + 2.0 * eps * mu)];
    let delta = [plus * (d - 2.0 * mu), minus * (d + 2.0 * mu)];
    let k = rising(2.0 * nu + 1.0, p) / (2.0 * p1 * a * mu * state.xi_scale().powi(p));
    Ok((
        k * (gamma[0] * f1a + gamma[1] * f1b),
        k * (delta[0] * f1a + delta[1] * f1b),
    ))
}
