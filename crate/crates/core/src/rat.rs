//! Exact rational parsing and serialization.
//!
//! Numbers travel through the document format as strings so no value ever
//! passes through floating point. Accepted input forms: integers ("42",
//! "-7"), decimals ("0.25", "-1.5") and fractions ("p/q"). Output is the
//! canonical reduced form: "p" when the denominator is one, "p/q" otherwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

fn bad(value: &str, reason: &str) -> Error {
    Error::BadNumber {
        value: value.to_string(),
        reason: reason.to_string(),
    }
}

/// Parse an exact rational from its text form.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s = text.trim();
    if s.is_empty() {
        return Err(bad(text, "empty"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| bad(text, "numerator is not an integer"))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| bad(text, "denominator is not an integer"))?;
        if d.is_zero() {
            return Err(bad(text, "zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        let (sign, whole_digits) = match whole.strip_prefix('-') {
            Some(rest) => (-1, rest),
            None => (1, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let whole_digits = if whole_digits.is_empty() { "0" } else { whole_digits };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad(text, "malformed decimal"));
        }
        let w: BigInt = whole_digits
            .parse()
            .map_err(|_| bad(text, "malformed decimal"))?;
        let f: BigInt = frac.parse().map_err(|_| bad(text, "malformed decimal"))?;
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let magnitude = w * &scale + f;
        return Ok(BigRational::new(BigInt::from(sign) * magnitude, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad(text, "not an integer"))?;
    Ok(BigRational::from_integer(n))
}

/// Canonical text form: reduced, "p" for integers, "p/q" otherwise.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Serde adapter: a `BigRational` as its canonical string.
pub mod serde_rat {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(v))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vec<BigRational>` as canonical strings.
pub mod serde_rat_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(format_rational))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigRational>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// Serde adapter: nested rational points.
pub mod serde_rat_vec_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(
        v: &[Vec<BigRational>],
        s: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(
            v.iter()
                .map(|row| row.iter().map(format_rational).collect::<Vec<_>>()),
        )
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<Vec<BigRational>>, D::Error> {
        let texts = Vec::<Vec<String>>::deserialize(d)?;
        texts
            .iter()
            .map(|row| {
                row.iter()
                    .map(|t| parse_rational(t).map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter: a `BigInt` as a decimal string.
pub mod serde_int {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Serde adapter: `Vec<BigInt>` as decimal strings.
pub mod serde_int_vec {
    use super::*;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|i| i.to_string()))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Vec<BigInt>, D::Error> {
        let texts = Vec::<String>::deserialize(d)?;
        texts
            .iter()
            .map(|t| t.parse().map_err(serde::de::Error::custom))
            .collect()
    }
}
