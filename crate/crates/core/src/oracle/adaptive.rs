//! Globally adaptive Gauss-Kronrod quadrature of the radial integrands,
//! evaluated pointwise from the Laguerre-recurrence wave functions.
//!
//! With ξ = 2aβr = e^t the integral becomes
//! (2aβ)^{−p−3} ∫ ξ^{p+3} w(ξ) dt over t ∈ (−∞, ln ξ_max], where w is
//! F² + G², F² − G² or FG. Near ξ = 0 the integrand behaves as
//! c·e^{(2ν+p+1)t}, so the part below t_low is added in closed form.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};
use crate::expect::{ConvergenceWindow, Kind};
use crate::state::{radial_nu, State, XI_CUTOFF};

use super::{OracleMethod, OracleResult};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

/// Gauss weights at the odd-indexed Kronrod nodes.
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdaptiveConfig {
    /// Relative accuracy target.
    pub tol: f64,
    pub max_intervals: usize,
    /// Lower cut in ξ; the tail below is integrated analytically.
    pub xi_low: f64,
    pub initial_pieces: usize,
}

impl Default for AdaptiveConfig {
    fn default() -> Self {
        Self {
            tol: 1e-11,
            max_intervals: 4000,
            xi_low: 1e-12,
            initial_pieces: 32,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    lo: f64,
    hi: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.total_cmp(&other.error)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, lo: f64, hi: f64) -> Interval {
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let sum = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * sum;
        if j % 2 == 1 {
            gauss += WG[j / 2] * sum;
        }
    }
    Interval {
        lo,
        hi,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

fn integrand(state: &State, p: i32, kind: Kind, t: f64) -> f64 {
    let xi = t.exp();
    let r = xi / state.xi_scale();
    let (f, g) = match radial_nu(state, r) {
        Ok(v) => v,
        Err(_) => return 0.0,
    };
    let w = match kind {
        Kind::A => f * f + g * g,
        Kind::B => f * f - g * g,
        Kind::C => f * g,
    };
    xi.powi(p + 3) * w
}

/// ∫₀^∞ r^{p+2} (F² + G²), (F² − G²) or FG dr by adaptive quadrature.
pub fn integrate_adaptive(
    state: &State,
    p: i32,
    kind: Kind,
    config: &AdaptiveConfig,
) -> Result<OracleResult> {
    ConvergenceWindow::for_state(state).check(p)?;
    let s = 2.0 * state.cp.nu + p as f64 + 1.0;
    let f = |t: f64| integrand(state, p, kind, t);
    let (t_lo, t_hi) = (config.xi_low.ln(), XI_CUTOFF.ln());
    let tail = f(t_lo) / s;

    let width = (t_hi - t_lo) / config.initial_pieces as f64;
    let mut heap: BinaryHeap<Interval> = (0..config.initial_pieces)
        .map(|i| {
            let lo = t_lo + width * i as f64;
            gk15(&f, lo, lo + width)
        })
        .collect();
    let total = |heap: &BinaryHeap<Interval>| -> (f64, f64) {
        heap.iter()
            .fold((tail, 0.0), |(v, e), iv| (v + iv.value, e + iv.error))
    };
    loop {
        let (value, error) = total(&heap);
        if error <= config.tol * value.abs() {
            let scale = state.xi_scale().powi(-(p + 3));
            return Ok(OracleResult {
                value: value * scale,
                method: OracleMethod::AdaptiveQuadrature,
                est_error: error * scale,
            });
        }
        if heap.len() >= config.max_intervals {
            return Err(Error::NoConvergence {
                intervals: heap.len(),
                estimate: value * state.xi_scale().powi(-(p + 3)),
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.lo + worst.hi);
        heap.push(gk15(&f, worst.lo, mid));
        heap.push(gk15(&f, mid, worst.hi));
    }
}
