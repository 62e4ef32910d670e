//! Checks of the Hahn-polynomial machinery behind the ₃F₂ factors: the
//! difference equation, the difference-differentiation formula, the
//! relation obtained by combining them, the transformation between the
//! two ₃F₂ rows, and the Laguerre product integral.

use crate::error::Result;
use twofloat::TwoFloat;

use crate::specfun::{gamma, hahn, hyp3f2_terminating, laguerre_product_integral};
use crate::verify::VerificationRecord;

use super::termwise::{laguerre_dd, product};

/// Parameter grid for [`appendix_a_suite`].
#[derive(Debug, Clone, PartialEq)]
pub struct AppendixGrid {
    pub m_max: u32,
    pub x_max: u32,
    /// Values of ν; each contributes N = −2ν to the Hahn grid.
    pub nus: Vec<f64>,
    /// Further N values for the Hahn grid.
    pub extra_n: Vec<f64>,
    pub hahn_params: Vec<(f64, f64)>,
    pub p_max: u32,
    pub n_max: u32,
    pub laguerre_n_max: u32,
    pub laguerre_params: Vec<(f64, f64, f64)>,
    pub tol: f64,
}

impl Default for AppendixGrid {
    fn default() -> Self {
        Self {
            m_max: 8,
            x_max: 20,
            nus: vec![0.6, 0.87, 1.94],
            extra_n: vec![],
            hahn_params: vec![(0.0, 0.0), (0.5, 1.5), (1.3, 0.4)],
            p_max: 8,
            n_max: 8,
            laguerre_n_max: 6,
            laguerre_params: vec![
                (1.8, 1.3, 1.1),
                (0.3, 2.9, 0.4),
                (3.7, 0.6, 2.5),
                (1.0, 1.0, 0.0),
            ],
            tol: 1e-9,
        }
    }
}

fn record(
    name: &str,
    anchor: &str,
    context: String,
    lhs: f64,
    rhs: f64,
    tol: f64,
    scale: f64,
) -> VerificationRecord {
    VerificationRecord::with_scale(name, anchor, context, lhs, rhs, tol, scale.max(1.0))
}

fn hahn_records(grid: &AppendixGrid, out: &mut Vec<VerificationRecord>) -> Result<()> {
    let big_ns: Vec<f64> = grid
        .nus
        .iter()
        .map(|nu| -2.0 * nu)
        .chain(grid.extra_n.iter().copied())
        .collect();
    for &big_n in &big_ns {
        for &(alpha, beta) in &grid.hahn_params {
            for m in 0..=grid.m_max {
                let lambda = m as f64 * (alpha + beta + m as f64 + 1.0);
                for xi in 0..=grid.x_max {
                    let x = xi as f64;
                    let ctx = format!("m={m} alpha={alpha} beta={beta} N={big_n} x={x}");
                    let y = |x: f64| hahn(m, alpha, beta, big_n, x);
                    let (y0, y1) = (y(x)?, y(x + 1.0)?);

                    if xi >= 1 {
                        let ym = y(x - 1.0)?;
                        let sigma = x * (alpha + big_n - x);
                        let tau = (beta + 1.0) * (big_n - 1.0) - (alpha + beta + 2.0) * x;
                        let residual = sigma * (y1 - 2.0 * y0 + ym) + tau * (y1 - y0) + lambda * y0;
                        out.push(record(
                            "hahn_difference_equation",
                            "(sigma nabla + tau) Delta y + lambda y = 0",
                            ctx.clone(),
                            residual,
                            0.0,
                            grid.tol,
                            y0.abs(),
                        ));
                    }
                    if m == 0 {
                        continue;
                    }
                    let lower = |x: f64| hahn(m - 1, alpha + 1.0, beta + 1.0, big_n - 1.0, x);
                    let l0 = lower(x)?;
                    let lhs = y1 - y0;
                    let rhs = (alpha + beta + m as f64 + 1.0) * l0;
                    out.push(record(
                        "hahn_difference_differentiation",
                        "Delta h_m(x, N) = (alpha+beta+m+1) h_{m-1}^{(alpha+1, beta+1)}(x, N-1)",
                        ctx.clone(),
                        lhs,
                        rhs,
                        grid.tol,
                        lhs.abs().max(rhs.abs()),
                    ));
                    if xi >= 1 {
                        let lm = lower(x - 1.0)?;
                        let sigma = x * (alpha + big_n - x);
                        let tau = (beta + 1.0) * (big_n - 1.0) - (alpha + beta + 2.0) * x;
                        let lhs = sigma * (l0 - lm) + tau * l0;
                        let rhs = -(m as f64) * y0;
                        out.push(record(
                            "hahn_lowered_relation",
                            "(sigma nabla + tau) h_{m-1}^{(alpha+1, beta+1)}(x, N-1) = -m h_m(x, N)",
                            ctx,
                            lhs,
                            rhs,
                            grid.tol,
                            lhs.abs().max(rhs.abs()),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

fn chebyshev_records(grid: &AppendixGrid, out: &mut Vec<VerificationRecord>) -> Result<()> {
    for &nu in &grid.nus {
        for n in 1..=grid.n_max {
            for p in 1..=grid.p_max {
                let (nf, pf) = (n as f64, p as f64);
                let pp = pf * (pf + 1.0);
                let first = pp / (nf + 2.0 * nu)
                    * hyp3f2_terminating([1.0 - nf, -pf, pf + 1.0], [2.0 * nu + 1.0, 2.0])?;
                let second = pp / (2.0 * nu + 1.0)
                    * hyp3f2_terminating([1.0 - nf, 1.0 - pf, pf + 2.0], [2.0 * nu + 2.0, 2.0])?;
                let third = hyp3f2_terminating([-nf, -pf, pf + 1.0], [2.0 * nu + 1.0, 1.0])?
                    - hyp3f2_terminating([1.0 - nf, -pf, pf + 1.0], [2.0 * nu + 1.0, 1.0])?;
                let ctx = format!("n={n} p={p} nu={nu}");
                out.push(record(
                    "chebyshev_transformation_first",
                    "p(p+1)/(n+2nu) F(1-n,-p,p+1; 2nu+1,2) = p(p+1)/(2nu+1) F(1-n,1-p,p+2; 2nu+2,2)",
                    ctx.clone(),
                    first,
                    second,
                    grid.tol,
                    first.abs().max(second.abs()),
                ));
                out.push(record(
                    "chebyshev_transformation_second",
                    "p(p+1)/(2nu+1) F(1-n,1-p,p+2; 2nu+2,2) = F(-n,-p,p+1; 2nu+1,1) - F(1-n,-p,p+1; 2nu+1,1)",
                    ctx,
                    second,
                    third,
                    grid.tol,
                    second.abs().max(third.abs()),
                ));
            }
        }
    }
    Ok(())
}

/// ∫₀^∞ e^{−x} x^{α+s} L_n^α L_m^β dx by expanding both polynomials.
pub(crate) fn laguerre_product_termwise(
    n: u32,
    m: u32,
    alpha: f64,
    beta: f64,
    s: f64,
) -> Result<f64> {
    let prod = product(&laguerre_dd(n, alpha.into()), &laguerre_dd(m, beta.into()));
    let base = TwoFloat::from(alpha) + s + 1.0;
    let g0 = gamma(alpha + s + 1.0)?;
    let mut rising = TwoFloat::from(1.0);
    let mut acc = TwoFloat::from(0.0);
    for (k, c) in prod.iter().enumerate() {
        if k > 0 {
            rising *= base + (k - 1) as f64;
        }
        acc += *c * rising;
    }
    Ok(g0 * f64::from(acc))
}

fn laguerre_records(grid: &AppendixGrid, out: &mut Vec<VerificationRecord>) -> Result<()> {
    for &(alpha, beta, s) in &grid.laguerre_params {
        for n in 0..=grid.laguerre_n_max {
            for m in 0..=n {
                let closed = laguerre_product_integral(n, m, alpha, beta, s)?;
                let termwise = laguerre_product_termwise(n, m, alpha, beta, s)?;
                out.push(record(
                    "laguerre_product_integral",
                    "closed-form product integral vs monomial expansion",
                    format!("n={n} m={m} alpha={alpha} beta={beta} s={s}"),
                    closed,
                    termwise,
                    grid.tol,
                    closed.abs().max(termwise.abs()),
                ));
            }
        }
    }
    Ok(())
}

/// Every record of the Hahn, transformation and Laguerre checks over
/// `grid`, in a fixed order.
pub fn appendix_a_suite(grid: &AppendixGrid) -> Result<Vec<VerificationRecord>> {
    let mut out = Vec::new();
    hahn_records(grid, &mut out)?;
    chebyshev_records(grid, &mut out)?;
    laguerre_records(grid, &mut out)?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_passes() {
        let recs = appendix_a_suite(&AppendixGrid::default()).unwrap();
        let worst = recs
            .iter()
            .max_by(|a, b| a.rel_err.total_cmp(&b.rel_err))
            .unwrap();
        assert!(recs.iter().all(|r| r.pass), "worst: {worst:?}");
    }

    #[test]
    fn degree_zero_residuals_vanish() {
        let grid = AppendixGrid {
            m_max: 0,
            ..AppendixGrid::default()
        };
        let recs = appendix_a_suite(&grid).unwrap();
        for r in recs
            .iter()
            .filter(|r| r.identity_name == "hahn_difference_equation")
        {
            assert_eq!(r.lhs, 0.0, "{r:?}");
        }
    }

    #[test]
    fn chebyshev_example() {
        let grid = AppendixGrid {
            nus: vec![0.87],
            n_max: 3,
            p_max: 2,
            tol: 1e-11,
            ..AppendixGrid::default()
        };
        let mut out = Vec::new();
        chebyshev_records(&grid, &mut out).unwrap();
        assert!(out.iter().all(|r| r.pass));
    }

    #[test]
    fn hahn_m3_example() {
        let grid = AppendixGrid {
            m_max: 3,
            x_max: 5,
            nus: vec![],
            extra_n: vec![12.0],
            hahn_params: vec![(0.0, 0.0)],
            tol: 1e-10,
            ..AppendixGrid::default()
        };
        let mut out = Vec::new();
        hahn_records(&grid, &mut out).unwrap();
        let hit = out
            .iter()
            .find(|r| {
                r.identity_name == "hahn_difference_equation"
                    && r.context == "m=3 alpha=0 beta=0 N=12 x=4"
            })
            .unwrap();
        assert!(hit.pass, "{hit:?}");
    }
}
