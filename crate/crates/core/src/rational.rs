//! Exact rational arithmetic helpers.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qr(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Parses `"p/q"`, an integer, or a finite decimal such as `"0.25"`.
pub fn parse_q(s: &str) -> Result<Q, Error> {
    let s = s.trim();
    let bad = || Error::InvalidParam(format!("not a rational: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: i64 = n.trim().parse().map_err(|_| bad())?;
        let d: i64 = d.trim().parse().map_err(|_| bad())?;
        if d == 0 {
            return Err(bad());
        }
        return Ok(Q::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || frac.len() > 12 || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let neg = int.starts_with('-');
        let int_part: i64 = if int.is_empty() || int == "-" {
            0
        } else {
            int.parse().map_err(|_| bad())?
        };
        let scale = 10i64.pow(frac.len() as u32);
        let frac_part: i64 = frac.parse().map_err(|_| bad())?;
        let mag = Q::new(int_part.abs() * scale + frac_part, scale);
        return Ok(if neg { -mag } else { mag });
    }
    s.parse::<i64>().map(Q::from_integer).map_err(|_| bad())
}

pub fn fmt_q(x: &Q) -> String {
    x.to_string()
}

pub fn ceil_q(x: &Q) -> i64 {
    x.ceil().to_integer()
}

pub fn is_nonneg(x: &Q) -> bool {
    !x.is_negative()
}

pub fn is_zero(x: &Q) -> bool {
    x.is_zero()
}

/// Serde adapter writing rationals as `"p/q"` strings.
pub mod serde_q {
    use super::*;

    pub fn serialize<S: Serializer>(x: &Q, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&fmt_q(x))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Q, D::Error> {
        let s = String::deserialize(d)?;
        parse_q(&s).map_err(serde::de::Error::custom)
    }
}

pub mod serde_q_vec {
    use super::*;

    pub fn serialize<S: Serializer>(xs: &[Q], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(xs.iter().map(fmt_q))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Q>, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        v.iter()
            .map(|s| parse_q(s).map_err(serde::de::Error::custom))
            .collect()
    }
}

/// A rational extended with `+inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtQ {
    Finite(Q),
    Infinite,
}

impl ExtQ {
    pub fn finite(&self) -> Option<Q> {
        match self {
            ExtQ::Finite(x) => Some(*x),
            ExtQ::Infinite => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtQ::Infinite)
    }
}

impl From<Q> for ExtQ {
    fn from(x: Q) -> Self {
        ExtQ::Finite(x)
    }
}

impl fmt::Display for ExtQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtQ::Finite(x) => write!(f, "{x}"),
            ExtQ::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtQ {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim() {
            "inf" | "+inf" | "infinity" => Ok(ExtQ::Infinite),
            other => parse_q(other).map(ExtQ::Finite),
        }
    }
}

impl Serialize for ExtQ {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtQ {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_q("4/3").unwrap(), qr(4, 3));
        assert_eq!(parse_q("-2").unwrap(), q(-2));
        assert_eq!(parse_q("0.25").unwrap(), qr(1, 4));
        assert_eq!(parse_q("-1.5").unwrap(), qr(-3, 2));
        assert!(parse_q("1/0").is_err());
        assert!(parse_q("abc").is_err());
    }

    #[test]
    fn ext_ordering_puts_infinity_last() {
        assert!(ExtQ::Finite(q(1000)) < ExtQ::Infinite);
        assert_eq!("inf".parse::<ExtQ>().unwrap(), ExtQ::Infinite);
        assert_eq!(ExtQ::Finite(qr(4, 3)).to_string(), "4/3");
    }
}
