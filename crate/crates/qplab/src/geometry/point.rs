use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A point in the plane with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: BigRational,
    pub y: BigRational,
}

impl Point {
    pub fn new(x: BigRational, y: BigRational) -> Self {
        Point { x, y }
    }

    /// Point from integer coordinates.
    pub fn from_ints(x: i64, y: i64) -> Self {
        Point {
            x: BigRational::from_integer(BigInt::from(x)),
            y: BigRational::from_integer(BigInt::from(y)),
        }
    }

    /// Parses a coordinate pair from text, e.g. `("1.5", "-3/7")`.
    pub fn parse(x: &str, y: &str) -> Result<Self, CoordParseError> {
        Ok(Point {
            x: parse_coord(x)?,
            y: parse_coord(y)?,
        })
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid coordinate {input:?}: {reason}")]
pub struct CoordParseError {
    pub input: String,
    pub reason: String,
}

/// Parses an exact rational from a decimal string (`"1.5"`, `"-2"`) or a
/// fraction (`"3/7"`). No floating point is involved.
pub fn parse_coord(s: &str) -> Result<BigRational, CoordParseError> {
    let err = |reason: &str| CoordParseError {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let s = s.trim();
    if s.is_empty() {
        return Err(err("empty string"));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| err("bad numerator"))?;
        let d = BigInt::from_str(den.trim()).map_err(|_| err("bad denominator"))?;
        if d.is_zero() {
            return Err(err("zero denominator"));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || frac_part.chars().any(|c| !c.is_ascii_digit()) {
            return Err(err("bad decimal fraction"));
        }
        let negative = int_part.trim_start().starts_with('-');
        let int_str = if int_part.is_empty() || int_part == "-" || int_part == "+" {
            "0"
        } else {
            int_part
        };
        let whole = BigInt::from_str(int_str).map_err(|_| err("bad integer part"))?;
        let frac = BigInt::from_str(frac_part).map_err(|_| err("bad decimal fraction"))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let mut value = BigRational::new(whole.abs() * &scale + frac, scale);
        if negative {
            value = -value;
        }
        return Ok(value);
    }
    let n = BigInt::from_str(s).map_err(|_| err("not an integer, decimal, or fraction"))?;
    Ok(BigRational::from_integer(n))
}

/// Formats a rational canonically: integers as plain integers, everything
/// else as a reduced `p/q` fraction.
pub fn format_coord(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_decimal_and_fraction() {
        assert_eq!(parse_coord("1.5").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_coord("3/7").unwrap(), BigRational::new(3.into(), 7.into()));
        assert_eq!(parse_coord("-0.25").unwrap(), BigRational::new((-1).into(), 4.into()));
        assert_eq!(parse_coord("4").unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(parse_coord("-2/4").unwrap(), BigRational::new((-1).into(), 2.into()));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_coord("").is_err());
        assert!(parse_coord("1/0").is_err());
        assert!(parse_coord("1.5e3").is_err());
        assert!(parse_coord("abc").is_err());
    }

    #[test]
    fn format_round_trips() {
        for s in ["1.5", "3/7", "-4", "0.125"] {
            let r = parse_coord(s).unwrap();
            let out = format_coord(&r);
            assert_eq!(parse_coord(&out).unwrap(), r);
        }
    }
}
