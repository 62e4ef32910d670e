//! Double-double Pochhammer symbols and terminating ₃F₂(1) sums, for
//! closed forms whose final combination cancels.

use twofloat::TwoFloat;

use crate::error::{domain, Error, Result};

/// a / b to double-double accuracy. The quotient operator of `TwoFloat`
/// forms its correction term without a fused multiply-add and is only
/// good to about one f64 ulp.
pub fn dd_div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let q1 = a.hi() / b.hi();
    let r = a - b * q1;
    let q2 = r.hi() / b.hi();
    let r = r - b * q2;
    let q3 = r.hi() / b.hi();
    TwoFloat::new_add(q1, q2) + q3
}

/// (x)_k for k ≥ 0 and Γ(x + k)/Γ(x) = 1/((x + k)⋯(x − 1)) for k < 0.
pub fn rising_dd(x: TwoFloat, k: i32) -> TwoFloat {
    if k >= 0 {
        (0..k).fold(TwoFloat::from(1.0), |acc, j| acc * (x + j as f64))
    } else {
        dd_div(
            TwoFloat::from(1.0),
            (k..0).fold(TwoFloat::from(1.0), |acc, j| acc * (x + j as f64)),
        )
    }
}

fn nonpositive_integer(v: TwoFloat) -> Option<i32> {
    (v.lo() == 0.0 && v.hi() <= 0.0 && v.hi() == v.hi().round()).then(|| v.hi() as i32)
}

/// ₃F₂(a; b; 1) in double-double. One numerator must be a nonpositive
/// integer; the one of smallest magnitude ends the series.
pub fn hyp3f2_dd(numer: [TwoFloat; 3], denom: [TwoFloat; 2]) -> Result<TwoFloat> {
    let terms = numer
        .iter()
        .filter_map(|&v| nonpositive_integer(v))
        .max()
        .ok_or_else(|| domain("hyp3f2_dd", "no numerator is a nonpositive integer"))?;
    let one = TwoFloat::from(1.0);
    let mut term = one;
    let mut acc = one;
    for k in 0..terms.unsigned_abs() {
        let kf = k as f64;
        let num = (numer[0] + kf) * (numer[1] + kf) * (numer[2] + kf);
        if num == 0.0 {
            break;
        }
        for b in denom {
            if b + kf == 0.0 {
                return Err(Error::Pole {
                    param: b.hi(),
                    term: k as usize + 1,
                });
            }
        }
        term = dd_div(term * num, (denom[0] + kf) * (denom[1] + kf) * (kf + 1.0));
        acc += term;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::{hyp3f2_terminating, rising};

    #[test]
    fn matches_double_precision() {
        let dd = |x: f64| TwoFloat::from(x);
        for (a, b) in [
            ([-4.0, 2.5, -3.0], [1.7, 2.0]),
            ([-6.0, 7.0, -7.0], [3.2, 1.0]),
        ] {
            let got = hyp3f2_dd(a.map(dd), b.map(dd)).unwrap();
            let want = hyp3f2_terminating(a, b).unwrap();
            assert!((f64::from(got) - want).abs() <= 1e-14 * want.abs());
        }
        for k in [-3, 0, 4] {
            let got = f64::from(rising_dd(dd(2.3), k));
            assert!((got - rising(2.3, k)).abs() <= 1e-15 * got.abs());
        }
    }

    #[test]
    fn quotient_is_double_double() {
        let t = TwoFloat::from;
        for (a, b) in [(1.0, 3.0), (2.0, 7.0), (-5.5, 0.1), (1e-20, 3.3e5)] {
            let q = dd_div(t(a), t(b));
            assert!((q * b - a).abs() <= 1e-31 * a.abs(), "{a}/{b}");
        }
        let b = TwoFloat::new_add(1.0, 1e-17);
        assert!((dd_div(t(1.0), b) * b - 1.0).abs() < 1e-31);
    }

    #[test]
    fn chu_vandermonde() {
        // ₃F₂(−n, b, c; d, c; 1) = (d − b)_n / (d)_n.
        let (n, b, c, d) = (7, 1.25, 0.75, 3.5);
        let dd = TwoFloat::from;
        let got = hyp3f2_dd([dd(-(n as f64)), dd(b), dd(c)], [dd(d), dd(c)]).unwrap();
        let want = dd_div(rising_dd(dd(d - b), n), rising_dd(dd(d), n));
        assert!((got - want).abs() < 1e-30);
    }

    #[test]
    fn requires_terminating_numerator() {
        let dd = TwoFloat::from;
        assert!(hyp3f2_dd([dd(0.5), dd(1.5), dd(2.0)], [dd(1.0), dd(2.0)]).is_err());
        assert!(hyp3f2_dd([dd(-3.0), dd(1.0), dd(1.0)], [dd(-1.0), dd(2.0)]).is_err());
    }
}
