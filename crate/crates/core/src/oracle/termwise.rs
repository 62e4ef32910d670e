//! Exact integration of the radial integrands through their monomial
//! expansion: ∫₀^∞ ξ^{s+k} e^{−ξ} dξ = Γ(s+k+1).
//!
//! The monomial moments grow like (s+1)_k while the polynomial
//! coefficients alternate, so the sum is badly conditioned for large n
//! and ν. Coefficients, moments and the sum are therefore carried in
//! double-double arithmetic; only the final prefactor is a plain f64.

use twofloat::TwoFloat;

use crate::error::Result;
use crate::expect::{ConvergenceWindow, ExpectationTriple, Kind};
use crate::specfun::log_gamma;
use crate::state::State;

use super::{OracleMethod, OracleResult};

/// Unit roundoff of double-double arithmetic.
const DD_EPS: f64 = 1.0e-32;

type Poly = Vec<TwoFloat>;

/// Monomial coefficients of L_n^α in double-double.
pub(crate) fn laguerre_dd(n: u32, alpha: TwoFloat) -> Poly {
    (0..=n)
        .map(|k| {
            let mut c = TwoFloat::from(if k % 2 == 0 { 1.0 } else { -1.0 });
            for j in 0..(n - k) {
                c *= alpha + (k + j + 1) as f64;
            }
            for j in 1..=k {
                c /= j as f64;
            }
            for j in 1..=(n - k) {
                c /= j as f64;
            }
            c
        })
        .collect()
}

fn combine(x: &Poly, fx: TwoFloat, y: &Poly, fy: TwoFloat) -> Poly {
    let len = x.len().max(y.len());
    let zero = TwoFloat::from(0.0);
    (0..len)
        .map(|i| x.get(i).copied().unwrap_or(zero) * fx + y.get(i).copied().unwrap_or(zero) * fy)
        .collect()
}

pub(crate) fn product(x: &Poly, y: &Poly) -> Poly {
    let mut out = vec![TwoFloat::from(0.0); x.len() + y.len() - 1];
    for (i, a) in x.iter().enumerate() {
        for (j, b) in y.iter().enumerate() {
            out[i + j] += *a * *b;
        }
    }
    out
}

/// P_F and P_G of the Laguerre-pair representation, unnormalized.
fn radial_polys(state: &State) -> (Poly, Poly) {
    let two_nu = state.dd().nu * 2.0;
    let n = state.qn.n_r;
    let lower = laguerre_dd(n, two_nu - 1.0);
    let mut upper = vec![TwoFloat::from(0.0)];
    if n > 0 {
        upper.extend(laguerre_dd(n - 1, two_nu + 1.0));
    }
    let [f1, f2, g1, g2] = state.dd().transition();
    (
        combine(&upper, f1, &lower, f2),
        combine(&upper, g1, &lower, g2),
    )
}

/// ∫₀^∞ r^{p+2} (F² + G²), (F² − G²) or FG dr.
pub fn integrate_termwise(state: &State, p: i32, kind: Kind) -> Result<OracleResult> {
    ConvergenceWindow::for_state(state).check(p)?;
    let (pf, pg) = radial_polys(state);
    let (one, minus) = (TwoFloat::from(1.0), TwoFloat::from(-1.0));
    let q = match kind {
        Kind::A => combine(&product(&pf, &pf), one, &product(&pg, &pg), one),
        Kind::B => combine(&product(&pf, &pf), one, &product(&pg, &pg), minus),
        Kind::C => product(&pf, &pg),
    };
    // Γ(s + k + 1) = Γ(s + 1)(s + 1)_k with s = 2ν + p; Γ(s + 1) joins the prefactor.
    let s1 = state.dd().nu * 2.0 + (p as f64 + 1.0);
    let mut moment = TwoFloat::from(1.0);
    let mut acc = TwoFloat::from(0.0);
    let mut magnitude = 0.0;
    for (k, c) in q.iter().enumerate() {
        if k > 0 {
            moment *= s1 + (k - 1) as f64;
        }
        let term = *c * moment;
        magnitude += f64::from(term).abs();
        acc += term;
    }
    let log_pref = 2.0 * state.norm_nu()?.ln() - (p + 3) as f64 * state.xi_scale().ln()
        + log_gamma(f64::from(s1))?;
    let pref = log_pref.exp();
    let value = pref * f64::from(acc);
    let est_error = pref * magnitude * DD_EPS * (q.len() * q.len()) as f64
        + value.abs() * f64::EPSILON * (4.0 + log_pref.abs());
    Ok(OracleResult {
        value,
        method: OracleMethod::TermwiseGamma,
        est_error,
    })
}

/// All three integrals at power p.
pub fn termwise_triple(state: &State, p: i32) -> Result<ExpectationTriple> {
    Ok(ExpectationTriple::new(
        p,
        integrate_termwise(state, p, Kind::A)?.value,
        integrate_termwise(state, p, Kind::B)?.value,
        integrate_termwise(state, p, Kind::C)?.value,
    ))
}
