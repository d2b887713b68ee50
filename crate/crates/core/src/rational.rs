//! Exact rational scalar used throughout the combinatorial layers.

use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive, Zero};

/// All exact arithmetic runs over `i128` rationals.  Coefficients appearing
/// in the polytope systems are tiny (entries in {0, +-1} plus lambda values),
/// so this never comes close to overflow; overflow checks stay on in release
/// builds as a backstop.
pub type Q = Ratio<i128>;

pub fn q(n: i128) -> Q {
    Q::from_integer(n)
}

pub fn q_frac(n: i128, d: i128) -> Q {
    Q::new(n, d)
}

pub fn q_abs(x: Q) -> Q {
    if x.is_negative() {
        -x
    } else {
        x
    }
}

pub fn q_to_f64(x: Q) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        (*x.numer() as f64) / (*x.denom() as f64)
    })
}

/// Parses `"3"`, `"-2"`, or `"p/q"` into an exact rational.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let bad = |_| Error::InvalidLambda(format!("cannot parse rational `{s}`"));
    match s.split_once('/') {
        Some((num, den)) => {
            let n: i128 = num.trim().parse().map_err(bad)?;
            let d: i128 = den.trim().parse().map_err(bad)?;
            if d == 0 {
                return Err(Error::InvalidLambda(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(n, d))
        }
        None => {
            let n: i128 = s.parse().map_err(bad)?;
            Ok(q(n))
        }
    }
}

/// Best rational approximation of `x` by continued fractions, with the
/// denominator capped.  Used to lift floating moment-map values back into
/// exact arithmetic before reconstruction.
pub fn rationalize(x: f64, max_den: i128) -> Q {
    if !x.is_finite() {
        return Q::zero();
    }
    let neg = x < 0.0;
    let mut x = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = x.floor();
        if a > i64::MAX as f64 {
            break;
        }
        let a = a as i128;
        let p2 = a.saturating_mul(p1).saturating_add(p0);
        let q2 = a.saturating_mul(q1).saturating_add(q0);
        if q2 > max_den {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a as f64;
        if frac < 1e-15 {
            break;
        }
        x = 1.0 / frac;
    }
    if q1 == 0 {
        return Q::zero();
    }
    let r = Q::new(p1, q1);
    if neg {
        -r
    } else {
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_q("3").unwrap(), q(3));
        assert_eq!(parse_q("-2").unwrap(), q(-2));
        assert_eq!(parse_q("5/2").unwrap(), q_frac(5, 2));
        assert_eq!(parse_q(" -7/3 ").unwrap(), q_frac(-7, 3));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("x").is_err());
    }

    #[test]
    fn rationalize_roundtrip() {
        for r in [q_frac(1, 3), q_frac(-22, 7), q(4), q_frac(355, 113)] {
            assert_eq!(rationalize(q_to_f64(r), 1_000_000_000), r);
        }
        assert_eq!(rationalize(0.25, 1_000_000_000), q_frac(1, 4));
    }
}
