//! Exact rational scalars.
//!
//! `Rational` is arbitrary precision, always in lowest terms with a positive
//! denominator, so equality is structural. The text form is `"p/q"`, with
//! integers rendered bare (`"3"`, not `"3/1"`); parsing accepts both.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

/// `n/d` as a `Rational`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`; the result is reduced and sign-normalized.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::MalformedRational(text.to_string());
    let body = text.trim();
    let (numer, denom) = match body.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (body, "1"),
    };
    let numer: BigInt = numer.parse().map_err(|_| bad())?;
    let denom: BigInt = denom.parse().map_err(|_| bad())?;
    if denom.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(numer, denom))
}

/// Serde adapter serializing a `Rational` as its `"p/q"` string form.
/// Use with `#[serde(with = "crate::rational::serde_str")]`.
pub mod serde_str {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::{parse_rational, Rational};

    pub fn serialize<S: Serializer>(value: &Rational, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&value.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Rational, D::Error> {
        let text = String::deserialize(de)?;
        parse_rational(&text).map_err(de::Error::custom)
    }
}
