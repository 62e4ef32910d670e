//! Closed-form radial expectation values for hydrogenlike Dirac-Coulomb
//! bound states, together with independent numerical checks.
//!
//! For a state (n_r, κ) and real power p the crate evaluates
//!
//! * A_p = ⟨r^p⟩ = ∫ r^{p+2} (F² + G²) dr,
//! * B_p = ⟨β r^p⟩ = ∫ r^{p+2} (F² − G²) dr,
//! * C_p = ⟨i α·n β r^p⟩ / 2 = ∫ r^{p+2} F G dr,
//!
//! as terminating ₃F₂ series at unit argument. Lengths are in units of
//! the reduced Compton wavelength unless stated otherwise.

pub mod error;
pub mod expect;
pub mod oracle;
pub mod specfun;
pub mod state;
pub mod units;
pub mod verify;

pub use error::{Error, Result};
pub use expect::{ConvergenceWindow, ExpectationTriple};
pub use oracle::OracleResult;
pub use state::{CouplingParams, QuantumNumbers, State};
pub use units::{LengthUnit, Units};
pub use verify::VerificationRecord;
