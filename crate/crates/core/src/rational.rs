//! The universal scalar: arbitrary-precision fractions kept in lowest terms.
//!
//! `Rational` is `num_rational::BigRational`, which already maintains the two
//! invariants every module here relies on: values are stored reduced
//! (`gcd(|numerator|, denominator) = 1`) and the denominator is always
//! positive, with zero represented as `0/1`. This module adds the handful of
//! constructors and the `numerator/denominator` text form used by reports and
//! cache files.

use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

/// Build a rational from an integer numerator and denominator.
///
/// Panics if `den` is zero, like `BigRational::new`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Embed an integer.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Embed a big integer.
pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// n! as a big integer.
pub fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= k as u64;
    }
    acc
}

/// Render as `numerator/denominator`, denominator always present.
///
/// This is the exact, bit-stable form used by the sequence cache file and by
/// report witnesses: `-1/30`, `21/1`, `0/1`.
pub fn format_exact(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part in rational literal: {0}")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

/// Parse `numerator/denominator` (or a bare integer) into a reduced rational.
pub fn parse_exact(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (num_s, den_s) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let num: BigInt = num_s
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(num_s.to_string()))?;
    let den: BigInt = den_s
        .parse()
        .map_err(|_| ParseRationalError::BadInteger(den_s.to_string()))?;
    if den.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(num, den))
}

/// Numerator with its sign (the denominator is always positive).
pub fn numerator(x: &Rational) -> BigInt {
    x.numer().clone()
}

/// Denominator, always >= 1.
pub fn denominator(x: &Rational) -> BigInt {
    x.denom().clone()
}

/// |numerator|, handy for divisibility probes.
pub fn abs_numerator(x: &Rational) -> BigInt {
    x.numer().abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stored_in_lowest_terms_with_positive_denominator() {
        let x = ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        let z = ratio(0, 7);
        assert_eq!(format_exact(&z), "0/1");
    }

    #[test]
    fn format_parse_round_trip() {
        for (n, d) in [(1i64, 1i64), (-19, 30), (0, 5), (1375, 24), (-36799, 24)] {
            let x = ratio(n, d);
            assert_eq!(parse_exact(&format_exact(&x)).unwrap(), x);
        }
        assert_eq!(parse_exact("42").unwrap(), int(42));
        assert_eq!(parse_exact(" -1/30 ").unwrap(), ratio(-1, 30));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert_eq!(parse_exact(""), Err(ParseRationalError::Empty));
        assert_eq!(parse_exact("1/0"), Err(ParseRationalError::ZeroDenominator));
        assert!(matches!(
            parse_exact("x/2"),
            Err(ParseRationalError::BadInteger(_))
        ));
    }

    #[test]
    fn factorial_small_values() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(5), BigInt::from(120));
        assert_eq!(factorial(10), BigInt::from(3628800u64));
    }
}
