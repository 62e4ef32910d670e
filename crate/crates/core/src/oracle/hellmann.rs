//! Finite-difference derivatives of the energy against the
//! Hellmann-Feynman expectation values, in dimensionless form:
//! dε/dμ = −A_{−1}/β and dε/dκ = 2C_{−1}/β.

use crate::error::{domain, Result};
use crate::expect::abc_traditional;
use crate::state::State;
use crate::units::Units;
use crate::verify::VerificationRecord;

/// 1 − ε for real κ, computed without cancellation as μ²/(R(R + n + ν))
/// with R = √((n + ν)² + μ²).
pub fn binding_energy(n_r: u32, kappa: f64, mu: f64) -> Result<f64> {
    if !(mu > 0.0 && mu < kappa.abs()) {
        return Err(domain(
            "binding_energy",
            format!(
                "coupling mu = {mu} must lie in (0, |kappa| = {})",
                kappa.abs()
            ),
        ));
    }
    let k = kappa.abs();
    let shifted = n_r as f64 + ((k - mu) * (k + mu)).sqrt();
    let r = shifted.hypot(mu);
    Ok(mu * mu / (r * (r + shifted)))
}

/// Central difference with step h and h/2, combined by Richardson
/// extrapolation.
fn richardson<F: Fn(f64) -> Result<f64>>(f: F, x: f64, h: f64) -> Result<f64> {
    let central = |h: f64| -> Result<f64> { Ok((f(x + h)? - f(x - h)?) / (2.0 * h)) };
    let coarse = central(h)?;
    let fine = central(0.5 * h)?;
    Ok((4.0 * fine - coarse) / 3.0)
}

fn context(n_r: u32, kappa: i32, mu: f64, h: f64) -> String {
    format!("n={n_r} kappa={kappa} mu={mu} h={h}")
}

/// dε/dZ by finite differences in the nuclear charge (step h, so the
/// coupling moves by h·α) against −α A_{−1}/β.
pub fn hellmann_feynman_dz(
    n_r: u32,
    kappa: i32,
    mu: f64,
    h: f64,
    units: &Units,
    tol: f64,
) -> Result<VerificationRecord> {
    let step = h * units.alpha_fs;
    let k = kappa.unsigned_abs() as f64;
    if !(mu - step > 0.0 && mu + step < k) {
        return Err(domain(
            "hellmann_feynman_dz",
            format!("step {step} in mu leaves (0, {k}) from mu = {mu}"),
        ));
    }
    let state = State::new(n_r, kappa, mu)?;
    let z = units.charge(mu);
    let numeric = -richardson(
        |z| binding_energy(n_r, kappa as f64, units.coupling(z)),
        z,
        h,
    )?;
    let a_m1 = abc_traditional(&state, -1)?.a;
    let exact = -units.alpha_fs * a_m1 / state.cp.beta_scale;
    Ok(VerificationRecord::with_scale(
        "hellmann_feynman_charge",
        "dE/dZ = -e^2 A_-1",
        context(n_r, kappa, mu, h),
        numeric,
        exact,
        tol,
        numeric.abs().max(exact.abs()),
    ))
}

/// dε/dκ with κ continued to real values through ν = √(κ² − μ²),
/// against 2C_{−1}/β.
pub fn hellmann_feynman_dkappa(
    n_r: u32,
    kappa: i32,
    mu: f64,
    h: f64,
    tol: f64,
) -> Result<VerificationRecord> {
    let k = kappa as f64;
    if !(k.abs() - h > mu) {
        return Err(domain(
            "hellmann_feynman_dkappa",
            format!("step {h} in kappa reaches |kappa| <= mu = {mu}"),
        ));
    }
    let state = State::new(n_r, kappa, mu)?;
    let numeric = -richardson(|k| binding_energy(n_r, k, mu), k, h)?;
    let c_m1 = abc_traditional(&state, -1)?.c;
    let exact = 2.0 * c_m1 / state.cp.beta_scale;
    Ok(VerificationRecord::with_scale(
        "hellmann_feynman_kappa",
        "dE/dkappa = 2 hbar c C_-1",
        context(n_r, kappa, mu, h),
        numeric,
        exact,
        tol,
        numeric.abs().max(exact.abs()),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::state::energy_eps;

    #[test]
    fn binding_energy_matches_direct() {
        for (n, k, mu) in [(0, -1, 0.5), (3, 2, 1.2), (1, -4, 0.01)] {
            let direct = 1.0 - energy_eps(n, k, mu).unwrap();
            let stable = binding_energy(n, k as f64, mu).unwrap();
            assert!(
                (direct - stable).abs() < 1e-12 * stable.max(1e-4),
                "{direct} {stable}"
            );
        }
    }

    #[test]
    fn ground_state_derivative() {
        // ε₁ = √(1 − μ²), dε₁/dμ = −μ/ε₁ = −A_{−1}.
        let mu: f64 = 0.5;
        let s = State::new(0, -1, mu).unwrap();
        let a_m1 = abc_traditional(&s, -1).unwrap().a;
        assert!((a_m1 - mu / (1.0 - mu * mu).sqrt()).abs() < 1e-14);
    }

    #[test]
    fn examples_pass() {
        let units = Units::default();
        for (n, k, mu) in [(1, -1, 0.5), (2, 3, 2.0), (0, -1, 0.0073)] {
            let r = hellmann_feynman_dz(n, k, mu, 1e-4, &units, 1e-8).unwrap();
            assert!(r.pass, "{r:?}");
        }
        for (n, k, mu) in [(0, -1, 0.5), (1, 2, 1.0)] {
            let r = hellmann_feynman_dkappa(n, k, mu, 1e-4, 1e-8).unwrap();
            assert!(r.pass, "{r:?}");
            // C_{−1} carries the sign of κ.
            assert_eq!(r.lhs.signum(), (k as f64).signum());
        }
        assert!(hellmann_feynman_dkappa(0, -1, 0.99995, 1e-4, 1e-8).is_err());
    }
}
