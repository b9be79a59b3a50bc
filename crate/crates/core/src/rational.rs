//! Exact rational scalars and their `"p/q"` text form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats as `"p/q"`, including `q = 1`.
pub fn format(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`.
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Parses a comma-separated list of rationals.
pub fn parse_list(s: &str) -> Result<Vec<Rational>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',').map(parse).collect()
}

pub fn to_f64(r: &Rational) -> f64 {
    // Scale down huge operands before converting so the quotient stays finite.
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => {
            let shift = r.numer().bits().max(r.denom().bits()).saturating_sub(1000);
            let n = (r.numer() >> shift).to_f64().unwrap_or(f64::NAN);
            let d = (r.denom() >> shift).to_f64().unwrap_or(f64::NAN);
            n / d
        }
    }
}

/// Exact binary value of a finite float.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Greatest common divisor of the absolute values; zero for an empty input.
pub fn content<'a>(values: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    values.into_iter().fold(BigInt::zero(), |acc, v| acc.gcd(v)).abs()
}

/// Serde adapter storing a [`Rational`] as a `"p/q"` string.
pub mod serde_str {
    use super::*;

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
        format(r).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_form() {
        assert_eq!(format(&ratio(6, -4)), "-3/2");
        assert_eq!(format(&int(3)), "3/1");
        assert_eq!(parse("-3/2").unwrap(), ratio(-3, 2));
        assert_eq!(parse(" 7 ").unwrap(), int(7));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert_eq!(parse_list("1/2,3").unwrap(), vec![ratio(1, 2), int(3)]);
    }

    #[test]
    fn float_conversion() {
        assert_eq!(to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(from_f64(0.375), ratio(3, 8));
        let huge = Rational::new(BigInt::from(3) << 2000usize, BigInt::from(2) << 2000usize);
        assert!((to_f64(&huge) - 1.5).abs() < 1e-12);
    }
}
