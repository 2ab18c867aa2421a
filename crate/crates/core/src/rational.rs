//! Exact rational scalars and their `"num/den"` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("invalid rational `{0}`")]
pub struct RationalParseError(pub String);

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `p^k` as a rational.
pub fn power(p: u32, k: u32) -> Rational {
    Rational::from_integer(num_traits::pow(BigInt::from(p), k as usize))
}

/// Always writes both parts, e.g. `"3/1"`, `"-1/2"`.
pub fn to_text(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// Accepts `"a/b"` or a bare integer `"a"`.
pub fn from_text(s: &str) -> Result<Rational, RationalParseError> {
    let bad = || RationalParseError(s.to_string());
    let (num, den) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(to_text(&int(3)), "3/1");
        assert_eq!(to_text(&ratio(2, -4)), "-1/2");
        assert_eq!(from_text("6/4").unwrap(), ratio(3, 2));
        assert_eq!(from_text(" -7 ").unwrap(), int(-7));
        assert!(from_text("1/0").is_err());
        assert!(from_text("x").is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(power(3, 0), int(1));
        assert_eq!(power(2, 10), int(1024));
    }
}
