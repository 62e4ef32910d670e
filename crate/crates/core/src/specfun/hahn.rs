//! Hahn polynomials of a discrete variable,
//!
//! h_m^{(α,β)}(x, N) = (−1)^m Γ(N) (β+1)_m / (m! Γ(N−m))
//!                     · ₃F₂(−m, α+β+m+1, −x; β+1, 1−N; 1).

use crate::error::Result;

use super::gamma::{factorial, pochhammer};
use super::hypergeometric::{hyp3f2, Hyp3F2Spec};

/// Γ(N)/Γ(N − m) as the falling product (N−1)(N−2)…(N−m), valid for any
/// real N including the negative values N = −2ν used with the radial
/// integrals.
pub fn falling_gamma_ratio(big_n: f64, m: u32) -> f64 {
    (1..=m).fold(1.0, |acc, j| acc * (big_n - j as f64))
}

pub fn hahn(m: u32, alpha: f64, beta: f64, big_n: f64, x: f64) -> Result<f64> {
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let prefactor = sign * falling_gamma_ratio(big_n, m) * pochhammer(beta + 1.0, m) / factorial(m);
    let series = hyp3f2(&Hyp3F2Spec::new(
        -(m as i32),
        alpha + beta + m as f64 + 1.0,
        -x,
        beta + 1.0,
        1.0 - big_n,
    )?)?;
    Ok(prefactor * series)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_is_one() {
        for &(a, b, n, x) in &[(0.0, 0.0, 12.0, 4.0), (0.3, 1.1, -1.74, 7.0)] {
            assert_eq!(hahn(0, a, b, n, x).unwrap(), 1.0);
        }
    }

    #[test]
    fn degree_one_chebyshev() {
        // h_1^{(0,0)}(x, N) = −(N−1)(1 − 2x/(N−1)) = 2x − (N − 1)
        for &(n, x) in &[(12.0, 4.0), (-1.74, 3.0), (7.5, 0.0)] {
            let got = hahn(1, 0.0, 0.0, n, x).unwrap();
            let want = 2.0 * x - (n - 1.0);
            assert!(
                (got - want).abs() <= 1e-14 * want.abs().max(1.0),
                "{got} vs {want}"
            );
        }
    }

    #[test]
    fn degree_two_with_negative_n() {
        // N = −2ν, x = n: brute-force three-term sum.
        let nu: f64 = 0.87;
        let big_n = -2.0 * nu;
        let x = 3.0;
        let (a2, a3, b1, b2) = (3.0, -x, 1.0, 1.0 - big_n);
        let t1 = (-2.0 * a2 * a3) / (b1 * b2);
        let t2 = (-2.0 * -1.0) * (a2 * (a2 + 1.0)) * (a3 * (a3 + 1.0))
            / ((b1 * (b1 + 1.0)) * (b2 * (b2 + 1.0)) * 2.0);
        let want = (big_n - 1.0) * (big_n - 2.0) * 2.0 / 2.0 * (1.0 + t1 + t2);
        let got = hahn(2, 0.0, 0.0, big_n, x).unwrap();
        assert!((got - want).abs() <= 1e-13 * want.abs(), "{got} vs {want}");
    }
}
