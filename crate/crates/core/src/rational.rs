//! Exact rational helpers.

use num::{BigInt, BigRational, One, Signed, Zero};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Converts an integral rational to `i64`, if it is one and fits.
pub fn to_i64(q: &Rational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.numer()).ok()
}

/// Parses `"3"`, `"-3/2"` and the like. Denominators must be nonzero.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(Rational::new(n, d))
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Renders a rational coefficient for a signed sum: `""` for 1, `"-"` for
/// -1, otherwise the value itself.
pub(crate) fn coefficient_prefix(q: &Rational) -> String {
    if q.is_one() {
        String::new()
    } else if (-q).is_one() {
        "-".to_string()
    } else if q.is_negative() {
        format!("-{}", -q)
    } else {
        q.to_string()
    }
}
