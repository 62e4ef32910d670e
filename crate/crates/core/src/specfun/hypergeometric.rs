//! Terminating ₃F₂ series at unit argument.

use crate::error::{domain, Error, Result};

/// Neumaier's variant of Kahan compensated summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
    abs: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
        self.abs += x.abs();
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }

    /// Sum of the magnitudes of every term added so far.
    pub fn abs_sum(&self) -> f64 {
        self.abs
    }
}

impl std::iter::FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Self::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

/// Parameters of ₃F₂(a1, a2, a3; b1, b2; 1) with a terminating `a1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Hyp3F2Spec {
    a1: i32,
    a2: f64,
    a3: f64,
    b1: f64,
    b2: f64,
}

impl Hyp3F2Spec {
    pub fn new(a1: i32, a2: f64, a3: f64, b1: f64, b2: f64) -> Result<Self> {
        if a1 > 0 {
            return Err(domain(
                "hyp3f2",
                format!("terminating parameter a1 = {a1} must be a nonpositive integer"),
            ));
        }
        if ![a2, a3, b1, b2].iter().all(|v| v.is_finite()) {
            return Err(domain("hyp3f2", "parameters must be finite"));
        }
        Ok(Self { a1, a2, a3, b1, b2 })
    }

    /// Builds a spec from an unordered numerator row, choosing as `a1` the
    /// nonpositive-integer numerator of smallest magnitude.
    pub fn terminating(numer: [f64; 3], denom: [f64; 2]) -> Result<Self> {
        let pick = numer
            .iter()
            .enumerate()
            .filter(|(_, &v)| v <= 0.0 && v == v.round())
            .max_by(|x, y| x.1.total_cmp(y.1))
            .map(|(i, _)| i)
            .ok_or_else(|| {
                domain(
                    "hyp3f2",
                    format!("no numerator in {numer:?} is a nonpositive integer"),
                )
            })?;
        let mut rest = numer
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != pick)
            .map(|(_, &v)| v);
        let (a2, a3) = (rest.next().unwrap(), rest.next().unwrap());
        Self::new(numer[pick] as i32, a2, a3, denom[0], denom[1])
    }

    pub fn a1(&self) -> i32 {
        self.a1
    }
}

/// Evaluates the terminating series, building each term from its
/// predecessor and accumulating with compensated summation.
pub fn hyp3f2(spec: &Hyp3F2Spec) -> Result<f64> {
    let Hyp3F2Spec { a1, a2, a3, b1, b2 } = *spec;
    let a1 = a1 as f64;
    let terms = spec.a1.unsigned_abs() as usize;
    let mut term = 1.0;
    let mut acc = CompensatedSum::new();
    acc.add(term);
    for k in 0..terms {
        let kf = k as f64;
        let num = (a1 + kf) * (a2 + kf) * (a3 + kf);
        if num == 0.0 {
            break;
        }
        for b in [b1, b2] {
            if b + kf == 0.0 {
                return Err(Error::Pole {
                    param: b,
                    term: k + 1,
                });
            }
        }
        term *= num / ((b1 + kf) * (b2 + kf) * (kf + 1.0));
        acc.add(term);
    }
    Ok(acc.value())
}

/// Convenience wrapper over [`Hyp3F2Spec::terminating`] and [`hyp3f2`].
pub fn hyp3f2_terminating(numer: [f64; 3], denom: [f64; 2]) -> Result<f64> {
    hyp3f2(&Hyp3F2Spec::terminating(numer, denom)?)
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

    #[test]
    fn empty_series_is_one() {
        let spec = Hyp3F2Spec::new(0, 2.5, -7.1, 0.3, 1.9).unwrap();
        assert_eq!(hyp3f2(&spec).unwrap(), 1.0);
    }

    #[test]
    fn two_term_series() {
        let (p, nu) = (3.0, 0.77);
        let spec = Hyp3F2Spec::new(-1, -p, p + 1.0, 2.0 * nu + 1.0, 1.0).unwrap();
        let want = 1.0 + p * (p + 1.0) / (2.0 * nu + 1.0);
        assert!(rel(hyp3f2(&spec).unwrap(), want) < 1e-15);
    }

    #[test]
    fn four_term_series_matches_rational_sum() {
        // Brute force: independent Pochhammer products per term.
        let (a, b) = ([-3.0, 2.2, -1.7], [3.1, 1.4]);
        let poch = |x: f64, k: usize| (0..k).map(|j| x + j as f64).product::<f64>();
        let fact = |k: usize| (1..=k).map(|j| j as f64).product::<f64>();
        let want: f64 = (0..=3)
            .map(|k| {
                poch(a[0], k) * poch(a[1], k) * poch(a[2], k)
                    / (poch(b[0], k) * poch(b[1], k) * fact(k))
            })
            .sum();
        let spec = Hyp3F2Spec::new(-3, 2.2, -1.7, 3.1, 1.4).unwrap();
        let got = hyp3f2(&spec).unwrap();
        assert!(rel(got, want) < 1e-14, "{got} vs {want}");
        // Exact rational value 629122/151249.
        assert!(rel(got, 629_122.0 / 151_249.0) < 1e-14, "{got}");
    }

    #[test]
    fn pole_before_termination_is_reported() {
        let spec = Hyp3F2Spec::new(-4, 1.5, 2.5, -2.0, 1.0).unwrap();
        assert!(matches!(hyp3f2(&spec), Err(Error::Pole { .. })));
    }

    #[test]
    fn early_termination_skips_later_pole() {
        // a2 = -1 stops the series after two terms, before (b1)_k vanishes.
        let spec = Hyp3F2Spec::new(-4, -1.0, 2.5, -2.0, 1.0).unwrap();
        let want = 1.0 + (-4.0 * -1.0 * 2.5) / (-2.0 * 1.0 * 1.0);
        assert_eq!(hyp3f2(&spec).unwrap(), want);
    }

    #[test]
    fn terminating_picks_nonpositive_integer() {
        let spec = Hyp3F2Spec::terminating([1.0, -3.0, 4.0], [2.5, 1.0]).unwrap();
        assert_eq!(spec.a1(), -3);
        assert!(Hyp3F2Spec::terminating([1.0, 0.5, 4.0], [2.5, 1.0]).is_err());
        assert!(Hyp3F2Spec::new(2, 0.0, 0.0, 1.0, 1.0).is_err());
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let acc: CompensatedSum = [1.0, 1e-16, 1e-16, -1.0].into_iter().collect();
        assert_eq!(acc.value(), 2e-16);
    }
}
