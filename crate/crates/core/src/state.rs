//! Dirac-Coulomb bound states: quantum numbers, derived dimensionless
//! parameters, the Sommerfeld-Dirac energy and the radial functions
//! F(r), G(r) in two equivalent representations.

use serde::Serialize;
use twofloat::TwoFloat;

use crate::error::{domain, Error, Result};
use crate::specfun::{dd_div, factorial, laguerre, laguerre_coeffs, log_gamma, PolyCoeffs};
use crate::units::Units;

/// Beyond this value of ξ the factor e^{−ξ/2} underflows and F, G are
/// returned as exact zeros.
pub const XI_CUTOFF: f64 = 700.0;

/// Radial quantum number n_r and Dirac quantum number κ = ±(j + 1/2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct QuantumNumbers {
    pub n_r: u32,
    pub kappa: i32,
}

impl QuantumNumbers {
    pub fn new(n_r: u32, kappa: i32) -> Result<Self> {
        if kappa == 0 {
            return Err(Error::InvalidState {
                n_r,
                kappa,
                reason: "kappa must be nonzero",
            });
        }
        if n_r == 0 && kappa > 0 {
            return Err(Error::InvalidState {
                n_r,
                kappa,
                reason: "n_r = 0 requires kappa < 0",
            });
        }
        Ok(Self { n_r, kappa })
    }

    /// Total angular momentum j = |κ| − 1/2.
    pub fn j(&self) -> f64 {
        self.kappa.unsigned_abs() as f64 - 0.5
    }

    /// Principal quantum number n_r + |κ|.
    pub fn principal(&self) -> u32 {
        self.n_r + self.kappa.unsigned_abs()
    }
}

/// Dimensionless parameters derived from (n_r, κ, μ).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CouplingParams {
    /// μ = αZ.
    pub mu: f64,
    /// ν = √(κ² − μ²).
    pub nu: f64,
    /// ε = E/mc².
    pub eps: f64,
    /// a = √(1 − ε²).
    pub a: f64,
    /// β = mc/ħ, the inverse length unit.
    pub beta_scale: f64,
}

fn nu_of(kappa: f64, mu: f64) -> f64 {
    let k = kappa.abs();
    ((k - mu) * (k + mu)).sqrt()
}

fn check_coupling(kappa: i32, mu: f64) -> Result<()> {
    let k = kappa.unsigned_abs() as f64;
    if !(mu > 0.0 && mu < k) {
        return Err(domain(
            "energy_eps",
            format!("coupling mu = {mu} must lie in (0, |kappa| = {k})"),
        ));
    }
    Ok(())
}

/// Sommerfeld-Dirac energy ε = 1/√(1 + μ²/(n + ν)²).
pub fn energy_eps(n_r: u32, kappa: i32, mu: f64) -> Result<f64> {
    check_coupling(kappa, mu)?;
    let shifted = n_r as f64 + nu_of(kappa as f64, mu);
    Ok(shifted / shifted.hypot(mu))
}

/// Energy for a continuous κ, as needed by derivatives in κ.
pub fn energy_eps_continuous(n_r: u32, kappa: f64, mu: f64) -> Result<f64> {
    if !(mu > 0.0 && mu < kappa.abs()) {
        return Err(domain(
            "energy_eps",
            format!(
                "coupling mu = {mu} must lie in (0, |kappa| = {})",
                kappa.abs()
            ),
        ));
    }
    let shifted = n_r as f64 + nu_of(kappa, mu);
    Ok(shifted / shifted.hypot(mu))
}

pub fn derive_params(n_r: u32, kappa: i32, mu: f64, beta_scale: f64) -> Result<CouplingParams> {
    check_coupling(kappa, mu)?;
    if !(beta_scale > 0.0) {
        return Err(domain("derive_params", "beta_scale must be positive"));
    }
    let nu = nu_of(kappa as f64, mu);
    let shifted = n_r as f64 + nu;
    let norm = shifted.hypot(mu);
    Ok(CouplingParams {
        mu,
        nu,
        eps: shifted / norm,
        a: mu / norm,
        beta_scale,
    })
}

/// The derived parameters recomputed from (n_r, κ, μ) in double-double,
/// for closed forms whose final combination cancels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DdParams {
    pub n: TwoFloat,
    pub kappa: TwoFloat,
    pub mu: TwoFloat,
    pub nu: TwoFloat,
    pub eps: TwoFloat,
    pub a: TwoFloat,
    pub beta: TwoFloat,
}

impl DdParams {
    fn new(n_r: u32, kappa: i32, mu: f64, beta_scale: f64) -> Self {
        let k = kappa.unsigned_abs() as f64;
        let nu = ((TwoFloat::from(k) - mu) * (TwoFloat::from(k) + mu)).sqrt();
        let shifted = nu + n_r as f64;
        let mu_dd = TwoFloat::from(mu);
        let norm = (shifted * shifted + mu_dd * mu).sqrt();
        Self {
            n: TwoFloat::from(n_r as f64),
            kappa: TwoFloat::from(kappa as f64),
            mu: TwoFloat::from(mu),
            nu,
            eps: dd_div(shifted, norm),
            a: dd_div(mu_dd, norm),
            beta: TwoFloat::from(beta_scale),
        }
    }

    fn negative(&self) -> bool {
        self.kappa < 0.0
    }

    /// a² n (n + 2ν).
    pub fn gap(&self) -> TwoFloat {
        self.a * self.a * self.n * (self.n + 2.0 * self.nu)
    }

    /// κ − ν.
    pub fn kappa_minus_nu(&self) -> TwoFloat {
        if self.negative() {
            self.kappa - self.nu
        } else {
            dd_div(self.mu * self.mu, self.kappa + self.nu)
        }
    }

    /// εκ − ν.
    pub fn eps_kappa_minus_nu(&self) -> TwoFloat {
        if self.negative() {
            self.eps * self.kappa - self.nu
        } else {
            dd_div(self.gap(), self.eps * self.kappa + self.nu)
        }
    }

    /// εκ + ν.
    pub fn eps_kappa_plus_nu(&self) -> TwoFloat {
        if self.negative() {
            dd_div(self.gap(), self.eps * self.kappa - self.nu)
        } else {
            self.eps * self.kappa + self.nu
        }
    }

    /// μ + aκ.
    pub fn mu_plus_a_kappa(&self) -> TwoFloat {
        if self.negative() {
            dd_div(self.gap(), self.mu - self.a * self.kappa)
        } else {
            self.mu + self.a * self.kappa
        }
    }

    /// μ − aκ.
    pub fn mu_minus_a_kappa(&self) -> TwoFloat {
        if self.negative() {
            self.mu - self.a * self.kappa
        } else {
            dd_div(self.gap(), self.mu + self.a * self.kappa)
        }
    }

    /// 2aβ.
    pub fn xi_scale(&self) -> TwoFloat {
        2.0 * self.a * self.beta
    }

    /// Transition matrix entries (f₁, f₂, g₁, g₂).
    pub fn transition(&self) -> [TwoFloat; 4] {
        let ekn = self.eps_kappa_minus_nu();
        let kn = self.kappa_minus_nu();
        [
            dd_div(self.a * self.mu, ekn),
            kn,
            dd_div(self.a * kn, ekn),
            self.mu,
        ]
    }
}

/// A bound state: quantum numbers together with their derived parameters.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct State {
    pub qn: QuantumNumbers,
    pub cp: CouplingParams,
}

impl State {
    /// State at coupling μ with β = 1 (lengths in λ).
    pub fn new(n_r: u32, kappa: i32, mu: f64) -> Result<Self> {
        Self::with_scale(n_r, kappa, mu, 1.0)
    }

    pub fn with_scale(n_r: u32, kappa: i32, mu: f64, beta_scale: f64) -> Result<Self> {
        let qn = QuantumNumbers::new(n_r, kappa)?;
        let cp = derive_params(n_r, kappa, mu, beta_scale)?;
        Ok(Self { qn, cp })
    }

    /// State of a hydrogenlike ion with nuclear charge Z.
    pub fn from_charge(n_r: u32, kappa: i32, z: f64, units: &Units) -> Result<Self> {
        Self::new(n_r, kappa, units.coupling(z))
    }

    pub fn n(&self) -> f64 {
        self.qn.n_r as f64
    }

    pub fn dd(&self) -> DdParams {
        DdParams::new(self.qn.n_r, self.qn.kappa, self.cp.mu, self.cp.beta_scale)
    }

    pub fn kappa(&self) -> f64 {
        self.qn.kappa as f64
    }

    /// a² n (n + 2ν), the common value of ε²κ² − ν² and μ² − a²κ².
    pub fn gap(&self) -> f64 {
        let CouplingParams { a, nu, .. } = self.cp;
        a * a * self.n() * (self.n() + 2.0 * nu)
    }

    // The pairs below differ by a cancelling subtraction for one sign of
    // κ; that member is recovered from the product identities instead.

    /// κ − ν.
    pub fn kappa_minus_nu(&self) -> f64 {
        let (k, nu, mu) = (self.kappa(), self.cp.nu, self.cp.mu);
        if k < 0.0 {
            k - nu
        } else {
            mu * mu / (k + nu)
        }
    }

    /// εκ − ν.
    pub fn eps_kappa_minus_nu(&self) -> f64 {
        let (k, nu, eps) = (self.kappa(), self.cp.nu, self.cp.eps);
        if k < 0.0 {
            eps * k - nu
        } else {
            self.gap() / (eps * k + nu)
        }
    }

    /// εκ + ν.
    pub fn eps_kappa_plus_nu(&self) -> f64 {
        let (k, nu, eps) = (self.kappa(), self.cp.nu, self.cp.eps);
        if k > 0.0 {
            eps * k + nu
        } else {
            self.gap() / (eps * k - nu)
        }
    }

    /// μ + aκ.
    pub fn mu_plus_a_kappa(&self) -> f64 {
        let (k, mu, a) = (self.kappa(), self.cp.mu, self.cp.a);
        if k > 0.0 {
            mu + a * k
        } else {
            self.gap() / (mu - a * k)
        }
    }

    /// μ − aκ.
    pub fn mu_minus_a_kappa(&self) -> f64 {
        let (k, mu, a) = (self.kappa(), self.cp.mu, self.cp.a);
        if k < 0.0 {
            mu - a * k
        } else {
            self.gap() / (mu + a * k)
        }
    }

    /// Scale factor 2aβ in ξ = 2aβr.
    pub fn xi_scale(&self) -> f64 {
        2.0 * self.cp.a * self.cp.beta_scale
    }

    /// ln(n!/Γ(n + 2ν)).
    fn log_norm_ratio(&self) -> Result<f64> {
        Ok(factorial(self.qn.n_r).ln() - log_gamma(self.n() + 2.0 * self.cp.nu)?)
    }

    /// Prefactor of the Laguerre-pair representation,
    /// a²β^{3/2}/ν · √((εκ − ν) n! / (μ(κ − ν) Γ(n + 2ν))).
    pub fn norm_nu(&self) -> Result<f64> {
        let CouplingParams {
            mu,
            nu,
            a,
            beta_scale,
            ..
        } = self.cp;
        let ratio = self.eps_kappa_minus_nu() / (mu * self.kappa_minus_nu());
        Ok(a * a * beta_scale.powf(1.5) / nu * (0.5 * (ratio.ln() + self.log_norm_ratio()?)).exp())
    }

    /// Prefactor of the traditional representation,
    /// a²β^{3/2} √(n! / (μ(κ − ν)(εκ − ν) Γ(n + 2ν))).
    pub fn norm_traditional(&self) -> Result<f64> {
        let CouplingParams {
            mu, a, beta_scale, ..
        } = self.cp;
        let denom = mu * self.kappa_minus_nu() * self.eps_kappa_minus_nu();
        Ok(a * a * beta_scale.powf(1.5) * (0.5 * (self.log_norm_ratio()? - denom.ln())).exp())
    }

    /// Transition matrix entries (f₁, f₂, g₁, g₂).
    pub fn transition(&self) -> [f64; 4] {
        let CouplingParams { mu, a, .. } = self.cp;
        let ekn = self.eps_kappa_minus_nu();
        let kn = self.kappa_minus_nu();
        [a * mu / ekn, kn, a * kn / ekn, mu]
    }

    /// Coefficients (α₁, α₂, β₁, β₂) of the traditional representation.
    pub fn traditional_coeffs(&self) -> [f64; 4] {
        let CouplingParams { mu, eps, a, .. } = self.cp;
        let sp = (1.0 + eps).sqrt();
        let sm = a / sp;
        let kn = self.kappa_minus_nu();
        let plus = kn * sp + mu * sm;
        let minus = kn * sp - mu * sm;
        [sp * plus, -sp * minus, sm * plus, sm * minus]
    }
}

fn check_radius(r: f64) -> Result<()> {
    if !(r > 0.0) || !r.is_finite() {
        return Err(domain(
            "radial",
            format!("radius {r} must be positive and finite"),
        ));
    }
    Ok(())
}

fn envelope(xi: f64, nu: f64) -> f64 {
    ((nu - 1.0) * xi.ln() - 0.5 * xi).exp()
}

/// F(r), G(r) from the Laguerre pair ξL_{n−1}^{2ν+1}(ξ), L_n^{2ν−1}(ξ).
pub fn radial_nu(state: &State, r: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    let xi = state.xi_scale() * r;
    if xi > XI_CUTOFF {
        return Ok((0.0, 0.0));
    }
    let nu = state.cp.nu;
    let n = state.qn.n_r;
    let upper = if n == 0 {
        0.0
    } else {
        xi * laguerre(n - 1, 2.0 * nu + 1.0, xi)
    };
    let lower = laguerre(n, 2.0 * nu - 1.0, xi);
    let [f1, f2, g1, g2] = state.transition();
    let w = state.norm_nu()? * envelope(xi, nu);
    Ok((w * (f1 * upper + f2 * lower), w * (g1 * upper + g2 * lower)))
}

/// F(r), G(r) from the pair L_{n−1}^{2ν}(ξ), L_n^{2ν}(ξ).
///
/// Taken literally this form differs from [`radial_nu`] by the overall
/// phase sign(κ); the phase is removed here so both return the same
/// functions.
pub fn radial_traditional(state: &State, r: f64) -> Result<(f64, f64)> {
    check_radius(r)?;
    let xi = state.xi_scale() * r;
    if xi > XI_CUTOFF {
        return Ok((0.0, 0.0));
    }
    let nu = state.cp.nu;
    let n = state.qn.n_r;
    let first = if n == 0 {
        0.0
    } else {
        laguerre(n - 1, 2.0 * nu, xi)
    };
    let second = laguerre(n, 2.0 * nu, xi);
    let [a1, a2, b1, b2] = state.traditional_coeffs();
    let phase = state.kappa().signum();
    let w = phase * state.norm_traditional()? * envelope(xi, nu);
    Ok((
        w * (a1 * first + a2 * second),
        w * (b1 * first + b2 * second),
    ))
}

/// F and G flattened to norm · ξ^{ν−1} e^{−ξ/2} · P(ξ) with monomial
/// polynomials P_F, P_G.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialPolyForm {
    pub norm: f64,
    pub exponent: f64,
    pub xi_scale: f64,
    pub poly_f: PolyCoeffs,
    pub poly_g: PolyCoeffs,
}

impl RadialPolyForm {
    pub fn eval(&self, r: f64) -> (f64, f64) {
        let xi = self.xi_scale * r;
        if xi > XI_CUTOFF {
            return (0.0, 0.0);
        }
        let w = self.norm * (self.exponent * xi.ln() - 0.5 * xi).exp();
        (w * self.poly_f.eval(xi), w * self.poly_g.eval(xi))
    }
}

pub fn to_poly_form(state: &State) -> Result<RadialPolyForm> {
    let nu = state.cp.nu;
    let n = state.qn.n_r;
    let [f1, f2, g1, g2] = state.transition();
    let lower = laguerre_coeffs(n, 2.0 * nu - 1.0);
    let upper = if n == 0 {
        PolyCoeffs::zero()
    } else {
        laguerre_coeffs(n - 1, 2.0 * nu + 1.0).shift_up()
    };
    Ok(RadialPolyForm {
        norm: state.norm_nu()?,
        exponent: nu - 1.0,
        xi_scale: state.xi_scale(),
        poly_f: &upper.scale(f1) + &lower.scale(f2),
        poly_g: &upper.scale(g1) + &lower.scale(g2),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(x: f64, y: f64) -> f64 {
        if x == y {
            0.0
        } else {
            (x - y).abs() / x.abs().max(y.abs())
        }
    }

    fn grid() -> Vec<State> {
        let mut out = Vec::new();
        for n in 0..=5u32 {
            for k in [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5] {
                if n == 0 && k > 0 {
                    continue;
                }
                for frac in [0.1, 0.5, 0.9] {
                    let mu = frac * f64::min(1.0, (k as f64).abs());
                    out.push(State::new(n, k, mu).unwrap());
                }
            }
        }
        out
    }

    #[test]
    fn rejects_unphysical_states() {
        assert!(QuantumNumbers::new(0, 1).is_err());
        assert!(QuantumNumbers::new(2, 0).is_err());
        assert!(State::new(1, -1, 1.0).is_err());
        assert!(State::new(1, -1, 0.0).is_err());
        assert!(energy_eps(0, -2, 2.5).is_err());
    }

    #[test]
    fn energy_examples() {
        assert!((energy_eps(3, -2, 1e-9).unwrap() - 1.0).abs() < 1e-15);
        let mu: f64 = 0.3;
        let nu1 = (1.0 - mu * mu).sqrt();
        assert!(rel(energy_eps(0, -1, mu).unwrap(), nu1) < 1e-15);
        let want = 1.0 / (1.0 + 0.25 / (1.0 + 0.75_f64.sqrt()).powi(2)).sqrt();
        assert!(rel(energy_eps(1, -1, 0.5).unwrap(), want) < 1e-15);
    }

    #[test]
    fn ground_state_parameters() {
        let cp = derive_params(0, -1, 0.5, 1.0).unwrap();
        assert!(rel(cp.nu, 0.75_f64.sqrt()) < 1e-15);
        assert!(rel(cp.eps, 0.75_f64.sqrt()) < 1e-15);
        assert!(rel(cp.a, 0.5) < 1e-15);
        let cp = derive_params(4, -2, 1e-9, 1.0).unwrap();
        assert!((cp.nu - 2.0).abs() < 1e-15 && (cp.eps - 1.0).abs() < 1e-15 && cp.a < 1e-9);
    }

    #[test]
    fn derived_parameter_identities() {
        for s in grid() {
            let CouplingParams { mu, nu, eps, a, .. } = s.cp;
            let (k, n) = (s.kappa(), s.n());
            assert!(rel(nu * nu + mu * mu, k * k) < 1e-13);
            assert!(rel(a * a + eps * eps, 1.0) < 1e-13);
            assert!(rel(eps * mu, a * (nu + n)) < 1e-12);
            assert!((eps * mu + a * nu - a * (n + 2.0 * nu)).abs() < 1e-12);
            assert!((eps * mu - a * nu - a * n).abs() < 1e-12 * eps * mu);
            let gap = a * a * n * (n + 2.0 * nu);
            let scale = eps * eps * k * k;
            assert!((eps * eps * k * k - nu * nu - gap).abs() < 1e-12 * scale);
            assert!((mu * mu - a * a * k * k - gap).abs() < 1e-12 * scale);
        }
    }

    #[test]
    fn stable_combinations_match_direct_forms() {
        for s in grid() {
            let CouplingParams { mu, nu, eps, a, .. } = s.cp;
            let k = s.kappa();
            let tol = 1e-9;
            assert!((s.kappa_minus_nu() - (k - nu)).abs() < tol);
            assert!((s.eps_kappa_minus_nu() - (eps * k - nu)).abs() < tol);
            assert!((s.eps_kappa_plus_nu() - (eps * k + nu)).abs() < tol);
            assert!((s.mu_plus_a_kappa() - (mu + a * k)).abs() < tol);
            assert!((s.mu_minus_a_kappa() - (mu - a * k)).abs() < tol);
        }
    }

    #[test]
    fn square_identity() {
        for s in grid() {
            let CouplingParams { mu, nu, eps, a, .. } = s.cp;
            let k = s.kappa();
            let kn = s.kappa_minus_nu();
            for sign in [1.0, -1.0] {
                let lhs = (kn * (1.0 + eps).sqrt() + sign * mu * (1.0 - eps).sqrt()).powi(2);
                let rhs = 2.0 * kn * (k - nu * eps + sign * a * mu);
                assert!(
                    (lhs - rhs).abs() <= 1e-12 * lhs.abs().max(rhs.abs()).max(mu * mu),
                    "{s:?}: {lhs} vs {rhs}"
                );
            }
        }
    }

    #[test]
    fn energy_increases_with_n() {
        for k in [-3, -1, 1, 2] {
            for mu in [0.1, 0.5, 0.9] {
                let levels: Vec<f64> = (0..8)
                    .filter(|&n| !(n == 0 && k > 0))
                    .map(|n| energy_eps(n, k, mu).unwrap())
                    .collect();
                assert!(
                    levels.windows(2).all(|w| w[0] < w[1]),
                    "{k} {mu}: {levels:?}"
                );
            }
        }
    }

    #[test]
    fn ground_state_closed_form() {
        // F ∝ −1, G ∝ √((1−ν₁)/(1+ν₁)) with prefactor (2Z/a₀)^{3/2}√((ν₁+1)/(2Γ(2ν₁+1))).
        let mu: f64 = 0.5;
        let s = State::new(0, -1, mu).unwrap();
        let nu1 = (1.0 - mu * mu).sqrt();
        let pref = (2.0 * mu).powf(1.5)
            * ((nu1 + 1.0) / (2.0 * log_gamma(2.0 * nu1 + 1.0).unwrap().exp())).sqrt();
        for r in [0.05, 1.0, 3.7, 20.0] {
            let xi = 2.0 * mu * r;
            let env = xi.powf(nu1 - 1.0) * (-xi / 2.0).exp();
            let want_f = -pref * env;
            let want_g = pref * ((1.0 - nu1) / (1.0 + nu1)).sqrt() * env;
            for (f, g) in [
                radial_nu(&s, r).unwrap(),
                radial_traditional(&s, r).unwrap(),
            ] {
                assert!(rel(f, want_f) < 1e-13, "F({r}) {f} vs {want_f}");
                assert!(rel(g, want_g) < 1e-13, "G({r}) {g} vs {want_g}");
            }
        }
    }

    #[test]
    fn representations_agree_pointwise() {
        for s in grid() {
            let beta = s.cp.beta_scale;
            for i in 0..50 {
                let r = 0.01 * (5000.0_f64).powf(i as f64 / 49.0) / beta;
                let (f1, g1) = radial_nu(&s, r).unwrap();
                let (f2, g2) = radial_traditional(&s, r).unwrap();
                let scale = f1.abs().max(g1.abs()).max(f2.abs()).max(g2.abs());
                if scale == 0.0 {
                    continue;
                }
                assert!(
                    (f1 - f2).abs() <= 1e-10 * scale,
                    "{s:?} r={r}: F {f1} vs {f2}"
                );
                assert!(
                    (g1 - g2).abs() <= 1e-10 * scale,
                    "{s:?} r={r}: G {g1} vs {g2}"
                );
            }
        }
    }

    #[test]
    fn poly_form_reproduces_radial_nu() {
        for s in grid() {
            let form = to_poly_form(&s).unwrap();
            assert!(form.poly_f.degree() <= s.qn.n_r as usize);
            assert!(form.poly_g.degree() <= s.qn.n_r as usize);
            for r in [0.02, 0.3, 1.0, 4.0, 15.0] {
                let (f, g) = radial_nu(&s, r).unwrap();
                let (pf, pg) = form.eval(r);
                let scale = f.abs().max(g.abs());
                assert!((f - pf).abs() <= 1e-11 * scale, "{s:?} r={r}: {f} vs {pf}");
                assert!((g - pg).abs() <= 1e-11 * scale, "{s:?} r={r}: {g} vs {pg}");
            }
        }
    }

    #[test]
    fn poly_form_structure() {
        let s = State::new(0, -3, 0.4).unwrap();
        let form = to_poly_form(&s).unwrap();
        assert_eq!((form.poly_f.degree(), form.poly_g.degree()), (0, 0));
        let s = State::new(1, -1, 0.4).unwrap();
        let form = to_poly_form(&s).unwrap();
        assert_eq!((form.poly_f.degree(), form.poly_g.degree()), (1, 1));
    }

    #[test]
    fn far_tail_is_exact_zero() {
        let s = State::new(2, 1, 0.6).unwrap();
        let r = 2.0 * XI_CUTOFF / s.xi_scale();
        assert_eq!(radial_nu(&s, r).unwrap(), (0.0, 0.0));
        assert_eq!(radial_traditional(&s, r).unwrap(), (0.0, 0.0));
        assert!(radial_nu(&s, 0.0).is_err());
        assert!(radial_traditional(&s, -1.0).is_err());
    }

    #[test]
    fn double_double_params() {
        for (n, k, mu) in [(0, -1, 0.5), (3, 2, 0.05), (5, -5, 4.9), (2, 1, 0.999)] {
            let s = State::new(n, k, mu).unwrap();
            let d = s.dd();
            for (x, y) in [(d.nu, s.cp.nu), (d.eps, s.cp.eps), (d.a, s.cp.a)] {
                assert!((f64::from(x) - y).abs() <= 2.0 * f64::EPSILON * y);
            }
            assert!((d.eps * d.eps + d.a * d.a - 1.0).abs() < 1e-30);
            let direct = d.eps * d.kappa - d.nu;
            assert!((d.eps_kappa_minus_nu() - direct).abs() < 1e-26 * direct.abs() + 1e-30);
            let product = d.mu_plus_a_kappa() * d.mu_minus_a_kappa();
            assert!((product - d.gap()).abs() <= 1e-28 * d.gap().abs());
            let [f1, f2, g1, g2] = d.transition();
            let want = s.transition();
            for (x, y) in [(f1, want[0]), (f2, want[1]), (g1, want[2]), (g2, want[3])] {
                assert!((f64::from(x) - y).abs() <= 1e-14 * y.abs());
            }
        }
    }
}
