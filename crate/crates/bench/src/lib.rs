//! Fixtures shared by the benchmarks.

use dce_core::State;

/// Bound states with n_r ≤ 5, |κ| ≤ 5 and μ at 0.1, 0.5 and 0.9 of
/// min(1, |κ|).
pub fn state_grid() -> Vec<State> {
    let mut out = Vec::new();
    for n in 0..=5u32 {
        for k in [-5, -4, -3, -2, -1, 1, 2, 3, 4, 5] {
            if n == 0 && k > 0 {
                continue;
            }
            for frac in [0.1, 0.5, 0.9] {
                let mu = frac * f64::min(1.0, (k as f64).abs());
                out.push(State::new(n, k, mu).expect("grid states are valid"));
            }
        }
    }
    out
}
