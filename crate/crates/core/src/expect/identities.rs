//! Structural identities among the closed forms, and the 1s₁/₂ table.

use serde::Serialize;

use crate::error::{domain, Result};
use crate::specfun::rising;
use crate::state::State;
use crate::verify::VerificationRecord;

use super::{abc_traditional, reflect1_factor, ConvergenceWindow, ExpectationTriple};

/// Largest power included in the sweeps over p.
const P_MAX: i32 = 5;

fn context(state: &State, p: Option<i32>) -> String {
    let base = format!(
        "n={} kappa={} mu={}",
        state.qn.n_r, state.qn.kappa, state.cp.mu
    );
    match p {
        Some(p) => format!("{base} p={p}"),
        None => base,
    }
}

/// Checks of the virial theorem, the relations among A_{−1}, B_{−1},
/// B_{−2}, C_{−2}, C_0, A_{−2}, the reflection combinations A − εB and
/// B − εA, and, for n = 0, the proportionality of A, B and C.
pub fn identity_suite(state: &State, tol: f64) -> Result<Vec<VerificationRecord>> {
    let (mu, nu, eps, a, beta) = (
        state.cp.mu,
        state.cp.nu,
        state.cp.eps,
        state.cp.a,
        state.cp.beta_scale,
    );
    let kappa = state.kappa();
    let w = ConvergenceWindow::for_state(state);
    let triples: Vec<ExpectationTriple> = (w.p_min..=P_MAX)
        .map(|p| abc_traditional(state, p))
        .collect::<Result<_>>()?;
    let at = |p: i32| &triples[(p - w.p_min) as usize];
    let mut out = Vec::new();

    out.push(VerificationRecord::new(
        "virial",
        "B_0 = eps",
        context(state, Some(0)),
        at(0).b,
        eps,
        tol,
    ));

    // p_min is at most -1 for every state; -2 needs ν > 1/2.
    let lhs = at(-1).a - eps * at(-1).b;
    out.push(VerificationRecord::new(
        "inverse_r_difference",
        "A_-1 - eps B_-1 = a^3 beta / nu",
        context(state, Some(-1)),
        lhs,
        a * a * a * beta / nu,
        tol,
    ));
    if w.contains(-2) {
        out.push(VerificationRecord::new(
            "inverse_r_difference_alt",
            "A_-1 - eps B_-1 = (mu B_-2 + C_-2) / beta",
            context(state, Some(-1)),
            lhs,
            (mu * at(-2).b + at(-2).c) / beta,
            tol,
        ));
    }
    out.push(VerificationRecord::new(
        "c0_from_b_minus1",
        "C_0 = kappa B_-1 / (2 beta)",
        context(state, Some(0)),
        at(0).c,
        kappa * at(-1).b / (2.0 * beta),
        tol,
    ));
    if w.contains(-2) {
        out.push(VerificationRecord::new(
            "a_minus2_from_c_minus2",
            "A_-2 = 2 kappa C_-2 / mu",
            context(state, Some(-2)),
            at(-2).a,
            2.0 * kappa * at(-2).c / mu,
            tol,
        ));
    }

    for p in w.p_min..=P_MAX {
        let q = -p - 1;
        if p == 0 || p == -1 || !w.contains(q) || q > P_MAX {
            continue;
        }
        let phi = reflect1_factor(state, p)?;
        let (src, dst) = (at(p), at(q));
        out.push(VerificationRecord::new(
            "reflect1_a_minus_eps_b",
            "A' - eps B' = phi (A - eps B) under p -> -p-1",
            context(state, Some(p)),
            dst.a - eps * dst.b,
            phi * (src.a - eps * src.b),
            tol,
        ));
        out.push(VerificationRecord::new(
            "reflect1_b_minus_eps_a",
            "B' - eps A' = -(p+1)/p phi (B - eps A) under p -> -p-1",
            context(state, Some(p)),
            dst.b - eps * dst.a,
            -(p as f64 + 1.0) / p as f64 * phi * (src.b - eps * src.a),
            tol,
        ));
    }

    if state.qn.n_r == 0 {
        for t in &triples {
            out.push(VerificationRecord::new(
                "ground_b_proportional",
                "B_p = eps_1 A_p for n = 0",
                context(state, Some(t.p)),
                t.b,
                eps * t.a,
                tol,
            ));
            out.push(VerificationRecord::new(
                "ground_c_proportional",
                "C_p = mu / (2 kappa) A_p for n = 0",
                context(state, Some(t.p)),
                t.c,
                mu / (2.0 * kappa) * t.a,
                tol,
            ));
        }
    }
    Ok(out)
}

/// One row of the 1s₁/₂ table, with lengths in Bohr radii.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GroundRow {
    pub p: i32,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Set for rows outside the convergence window, obtained by
    /// continuing the Γ ratio.
    pub formal: bool,
}

fn ground_row(mu: f64, p: i32, alpha_fs: f64, formal: bool) -> Result<GroundRow> {
    if !(mu > 0.0 && mu < 1.0) {
        return Err(domain(
            "ground_state_table",
            format!("mu = {mu} must lie in (0, 1)"),
        ));
    }
    if !(alpha_fs > 0.0) {
        return Err(domain("ground_state_table", "alpha_fs must be positive"));
    }
    let nu1 = ((1.0 - mu) * (1.0 + mu)).sqrt();
    let window = ConvergenceWindow::for_nu(nu1);
    let divergent = !window.contains(p);
    if divergent && !formal {
        window.check(p)?;
    }
    if divergent && rising(2.0 * nu1 + 1.0, p).is_infinite() {
        return Err(domain(
            "ground_state_table",
            format!("no formal value at p = {p}"),
        ));
    }
    // a₀ = 1 and λ = α, so a₀/Z = α/μ.
    let z = mu / alpha_fs;
    let a = (0.5 / z).powi(p) * rising(2.0 * nu1 + 1.0, p);
    Ok(GroundRow {
        p,
        a,
        b: nu1 * a,
        c: -0.5 * alpha_fs * z * a,
        formal: divergent,
    })
}

/// A_p, B_p, C_p for n = 0, κ = −1 in Bohr units: A_p = (a₀/2Z)^p
/// Γ(2ν₁+p+1)/Γ(2ν₁+1), B_p = ε₁A_p, C_p = −(λZ/2a₀)A_p.
pub fn ground_state_table(mu: f64, p: i32, alpha_fs: f64) -> Result<GroundRow> {
    ground_row(mu, p, alpha_fs, false)
}

/// As [`ground_state_table`], but powers outside the convergence window
/// return the formal continuation instead of an error.
pub fn ground_state_table_formal(mu: f64, p: i32, alpha_fs: f64) -> Result<GroundRow> {
    ground_row(mu, p, alpha_fs, true)
}
