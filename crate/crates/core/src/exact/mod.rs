//! Exact integer and rational arithmetic: Hermite normal form, integer
//! linear systems and rational linear feasibility.

mod matrix;
mod simplex;

pub use matrix::{det, hnf, rank, solve_integer_linear, HnfResult, IntMatrix};
pub use simplex::{minimize, rational_feasible, FeasibleRegion, LpOutcome};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

use num_traits::{One, Zero};

/// Rational from a machine integer.
pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational `num/den`, reduced.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_vec(xs: &[i64]) -> Vec<BigRational> {
    xs.iter().map(|&x| rat(x)).collect()
}

/// Converts an integral rational to `i64`, or `None` when it is fractional
/// or out of range.
pub fn to_i64(q: &BigRational) -> Option<i64> {
    if !q.is_integer() {
        return None;
    }
    i64::try_from(q.to_integer()).ok()
}

pub fn floor_i64(q: &BigRational) -> i64 {
    i64::try_from(q.floor().to_integer()).expect("value fits in i64")
}

pub fn ceil_i64(q: &BigRational) -> i64 {
    i64::try_from(q.ceil().to_integer()).expect("value fits in i64")
}

pub(crate) fn one() -> BigRational {
    BigRational::one()
}

/// Parses `"p/q"` or `"p"` into a reduced rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Formats as `"p/q"`, or `"p"` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_strings() {
        assert_eq!(parse_rational("4/6"), Some(frac(2, 3)));
        assert_eq!(parse_rational("-3"), Some(rat(-3)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(format_rational(&frac(-6, 4)), "-3/2");
        assert_eq!(format_rational(&rat(5)), "5");
    }

    #[test]
    fn lowest_terms() {
        let q = frac(10, -4);
        assert_eq!(q.numer(), &BigInt::from(-5));
        assert_eq!(q.denom(), &BigInt::from(2));
        assert_eq!(floor_i64(&q), -3);
        assert_eq!(ceil_i64(&q), -2);
        assert_eq!(to_i64(&q), None);
    }
}
