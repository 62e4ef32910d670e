//! Generalized Laguerre polynomials and the closed-form integral of a
//! product of two of them against x^{α+s} e^{−x}.

use std::ops::{Add, Mul};

use crate::error::{domain, Result};

use super::gamma::{factorial, gamma, pochhammer, rising};
use super::hypergeometric::{hyp3f2, Hyp3F2Spec};

/// A polynomial in the monomial basis, c_0 + c_1 x + … + c_d x^d.
///
/// Exact trailing zeros are dropped on construction, so the leading
/// coefficient is nonzero unless the polynomial is constant.
#[derive(Debug, Clone, PartialEq)]
pub struct PolyCoeffs {
    coeffs: Vec<f64>,
}

impl PolyCoeffs {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: vec![0.0] }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by x.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(0.0);
        coeffs.extend_from_slice(&self.coeffs);
        Self::new(coeffs)
    }
}

impl Add for &PolyCoeffs {
    type Output = PolyCoeffs;

    fn add(self, rhs: &PolyCoeffs) -> PolyCoeffs {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &PolyCoeffs, i: usize| p.coeffs.get(i).copied().unwrap_or(0.0);
        PolyCoeffs::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Mul for &PolyCoeffs {
    type Output = PolyCoeffs;

    fn mul(self, rhs: &PolyCoeffs) -> PolyCoeffs {
        let mut out = vec![0.0; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        PolyCoeffs::new(out)
    }
}

/// L_n^α(x) by the three-term recurrence
/// (k + 1) L_{k+1} = (2k + 1 + α − x) L_k − (k + α) L_{k−1}.
pub fn laguerre(n: u32, alpha: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut prev = 1.0;
    let mut cur = 1.0 + alpha - x;
    for k in 1..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + alpha - x) * cur - (kf + alpha) * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    cur
}

/// Monomial coefficients of L_n^α:
/// c_k = (−1)^k Γ(α + n + 1) / (Γ(α + k + 1) k! (n − k)!).
pub fn laguerre_coeffs(n: u32, alpha: f64) -> PolyCoeffs {
    let coeffs = (0..=n)
        .map(|k| {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            sign * pochhammer(alpha + k as f64 + 1.0, n - k) / (factorial(k) * factorial(n - k))
        })
        .collect();
    PolyCoeffs::new(coeffs)
}

/// ∫₀^∞ e^{−x} x^{α+s} L_n^α(x) L_m^β(x) dx for n ≥ m, in closed form:
///
/// (−1)^{n−m} Γ(α+s+1) Γ(β+m+1) Γ(s+1) / (m! (n−m)! Γ(β+1) Γ(s−n+m+1))
///   · ₃F₂(−m, s+1, β−α−s; β+1, n−m+1; 1).
///
/// Γ(s+1)/Γ(s−n+m+1) is taken as the finite product (s−n+m+1)…(s), so
/// the result vanishes where 1/Γ(s−n+m+1) has a zero.
pub fn laguerre_product_integral(n: u32, m: u32, alpha: f64, beta: f64, s: f64) -> Result<f64> {
    if n < m {
        return Err(domain(
            "laguerre_product_integral",
            format!("requires n >= m, got n = {n}, m = {m}"),
        ));
    }
    if !(alpha + s + 1.0 > 0.0) {
        return Err(domain(
            "laguerre_product_integral",
            format!(
                "integral diverges: alpha + s + 1 = {} <= 0",
                alpha + s + 1.0
            ),
        ));
    }
    let gap = n - m;
    let sign = if gap % 2 == 0 { 1.0 } else { -1.0 };
    let shift = rising(s - gap as f64 + 1.0, gap as i32);
    if shift == 0.0 {
        return Ok(0.0);
    }
    let prefactor = sign * gamma(alpha + s + 1.0)? * pochhammer(beta + 1.0, m) * shift
        / (factorial(m) * factorial(gap));
    let series = hyp3f2(&Hyp3F2Spec::new(
        -(m as i32),
        s + 1.0,
        beta - alpha - s,
        beta + 1.0,
        gap as f64 + 1.0,
    )?)?;
    Ok(prefactor * series)
}
