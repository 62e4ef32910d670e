//! Special-function kernel: log-gamma, Pochhammer symbols, terminating
//! ₃F₂(1) sums, Laguerre and Hahn polynomials.

mod dd;
mod gamma;
mod hahn;
mod hypergeometric;
mod laguerre;

pub use dd::{dd_div, hyp3f2_dd, rising_dd};
pub use gamma::{factorial, gamma, gamma_ratio, log_gamma, pochhammer, rising};
pub use hahn::{falling_gamma_ratio, hahn};
pub use hypergeometric::{hyp3f2, hyp3f2_terminating, CompensatedSum, Hyp3F2Spec};
pub use laguerre::{laguerre, laguerre_coeffs, laguerre_product_integral, PolyCoeffs};
