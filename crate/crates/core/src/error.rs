use thiserror::Error;

/// Errors raised by the special-function kernel and the closed forms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    #[error("domain error in {func}: {detail}")]
    Domain { func: &'static str, detail: String },

    /// A denominator Pochhammer symbol vanished before the series terminated.
    #[error("hypergeometric pole: denominator parameter {param} hits zero at term {term}")]
    Pole { param: f64, term: usize },

    /// The requested quantum numbers do not describe a bound state.
    #[error("invalid state (n = {n_r}, kappa = {kappa}): {reason}")]
    InvalidState {
        n_r: u32,
        kappa: i32,
        reason: &'static str,
    },

    /// The radial integral at this power diverges at the origin.
    #[error("power p = {p} is outside the convergence window (p_min = {p_min})")]
    Divergent { p: i32, p_min: i32 },

    /// The formula is not defined at this power.
    #[error("power p = {p} is excluded: {reason}")]
    ExcludedPower { p: i32, reason: &'static str },

    /// The adaptive integrator exhausted its refinement budget.
    #[error("adaptive quadrature did not converge after {intervals} intervals (error estimate {estimate:e})")]
    NoConvergence { intervals: usize, estimate: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(func: &'static str, detail: impl Into<String>) -> Error {
    Error::Domain {
        func,
        detail: detail.into(),
    }
}
