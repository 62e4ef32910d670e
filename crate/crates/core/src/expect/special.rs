//! Explicit rational expressions for A_p, B_p, C_p at p = −3, …, 2.

use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{domain, Error, Result};
use crate::specfun::dd_div;
use crate::state::State;

use super::{ConvergenceWindow, Kind};

/// |4ν² − 1| below this marks a special value as ill-conditioned.
pub const NEAR_HALF_NU: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpecialValue {
    pub value: f64,
    /// Second displayed form, available for p = 2.
    pub alt: Option<f64>,
    pub ill_conditioned: bool,
}

pub fn special_value(state: &State, kind: Kind, p: i32) -> Result<SpecialValue> {
    if !(-3..=2).contains(&p) {
        return Err(domain(
            "special_value",
            format!("no explicit form for p = {p}"),
        ));
    }
    ConvergenceWindow::for_state(state).check(p)?;
    if p == -3 && state.qn.kappa.abs() < 2 {
        return Err(Error::Divergent { p, p_min: -2 });
    }
    let d = state.dd();
    let (mu, nu, eps, a, beta, k, n) = (d.mu, d.nu, d.eps, d.a, d.beta, d.kappa, d.n);
    let one = TwoFloat::from(1.0);
    let (e2, a2, mu2, nu2) = (eps * eps, a * a, mu * mu, nu * nu);
    let ek = eps * k;
    let ab = a * beta;
    let d2 = nu * (4.0 * nu2 - 1.0);
    let d3 = nu * (nu2 - 1.0) * (4.0 * nu2 - 1.0);
    let nn = n * (n + 2.0 * nu);
    let q = dd_div;

    let (value, alt) = match (kind, p) {
        (Kind::A, 2) => (
            q(
                5.0 * nn + 4.0 * nu2 + 1.0 - ek * (2.0 * ek + 3.0),
                2.0 * ab * ab,
            ),
            Some(q(
                2.0 * k * k * e2 * e2 + 3.0 * k * e2 * eps + (3.0 * mu2 - nu2 - 1.0) * e2
                    - 3.0 * ek
                    - nu2
                    + 1.0,
                2.0 * beta * beta * a2 * a2,
            )),
        ),
        (Kind::A, 1) => (
            q(3.0 * eps * mu2 - k * a2 * (ek + 1.0), 2.0 * beta * mu * a2),
            None,
        ),
        (Kind::A, 0) => (one, None),
        (Kind::A, -1) => (q(beta * a2 * (eps * nu + mu * a), mu * nu), None),
        (Kind::A, -2) => (
            q(2.0 * a2 * a * beta * beta * k * (2.0 * ek - 1.0), mu * d2),
            None,
        ),
        (Kind::A, -3) => (
            q(
                2.0 * ab.powi(3) * (3.0 * ek * ek - 3.0 * ek - nu2 + 1.0),
                d3,
            ),
            None,
        ),
        (Kind::B, 2) => (
            q(eps * (5.0 * nn + 2.0 * nu2 + 1.0 - 3.0 * ek), 2.0 * ab * ab),
            Some(q(
                eps * (3.0 * k * e2 * eps + (5.0 * mu2 + 3.0 * nu2 - 1.0) * e2
                    - 3.0 * ek
                    - 3.0 * nu2
                    + 1.0),
                2.0 * beta * beta * a2 * a2,
            )),
        ),
        (Kind::B, 1) => (
            q(3.0 * e2 * mu2 - a2 * (ek + nu2), 2.0 * beta * mu * a2),
            None,
        ),
        (Kind::B, 0) => (eps, None),
        (Kind::B, -1) => (q(beta * a2, mu), None),
        (Kind::B, -2) => (
            q(2.0 * a2 * a * beta * beta * (2.0 * nu2 - ek), mu * d2),
            None,
        ),
        (Kind::B, -3) => (
            q(2.0 * ab.powi(3) * eps * (2.0 * nu2 + 1.0 - 3.0 * ek), d3),
            None,
        ),
        (Kind::C, 2) => (
            q(
                k * a2 * (3.0 * nn + 2.0 * nu2 + 1.0) - 3.0 * mu2 * eps,
                4.0 * mu * ab * ab,
            ),
            Some(q(
                k * a2 * (one - nu2) + 3.0 * eps * mu2 * (ek - 1.0),
                4.0 * mu * beta * beta * a2,
            )),
        ),
        (Kind::C, 1) => (q(2.0 * ek - 1.0, 4.0 * beta), None),
        (Kind::C, 0) => (q(k * a2, 2.0 * mu), None),
        (Kind::C, -1) => (q(k * a2 * a * beta, 2.0 * mu * nu), None),
        (Kind::C, -2) => (q(a2 * a * beta * beta * (2.0 * ek - 1.0), d2), None),
        (Kind::C, -3) => (
            q(
                ab.powi(3) * (k * a2 * (one - nu2) + 3.0 * eps * mu2 * (ek - 1.0)),
                mu * d3,
            ),
            None,
        ),
        _ => unreachable!("p range checked above"),
    };
    let (value, alt) = (f64::from(value), alt.map(f64::from));
    let nu2 = f64::from(nu2);
    Ok(SpecialValue {
        value,
        alt,
        ill_conditioned: p <= -2 && (4.0 * nu2 - 1.0).abs() < NEAR_HALF_NU,
    })
}
