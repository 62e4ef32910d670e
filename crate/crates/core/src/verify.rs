//! Records of individual identity checks.

use serde::Serialize;

/// One numerical check `lhs = rhs`.
///
/// The relative error is taken against max(|lhs|, |rhs|, 1) unless a
/// different scale is supplied, and `pass` is `rel_err <= tol`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationRecord {
    pub identity_name: String,
    /// Short human-readable description of the relation being checked.
    pub anchor: String,
    /// The state and power the check was made at, e.g. `n=1 kappa=-2 mu=0.5 p=3`.
    pub context: String,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    pub tol: f64,
    pub pass: bool,
    /// Set when the check involves a nearly singular denominator.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub ill_conditioned: bool,
}

impl VerificationRecord {
    pub fn new(
        identity_name: impl Into<String>,
        anchor: impl Into<String>,
        context: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
    ) -> Self {
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        Self::with_scale(identity_name, anchor, context, lhs, rhs, tol, scale)
    }

    /// Like [`VerificationRecord::new`] with an explicit error scale, for
    /// residuals whose natural size is set by the magnitude of their terms.
    pub fn with_scale(
        identity_name: impl Into<String>,
        anchor: impl Into<String>,
        context: impl Into<String>,
        lhs: f64,
        rhs: f64,
        tol: f64,
        scale: f64,
    ) -> Self {
        let abs_err = (lhs - rhs).abs();
        let rel_err = if abs_err == 0.0 { 0.0 } else { abs_err / scale };
        Self {
            identity_name: identity_name.into(),
            anchor: anchor.into(),
            context: context.into(),
            lhs,
            rhs,
            abs_err,
            rel_err,
            tol,
            pass: rel_err <= tol,
            ill_conditioned: false,
        }
    }

    pub fn flag_ill_conditioned(mut self, flag: bool) -> Self {
        self.ill_conditioned = flag;
        self
    }
}
