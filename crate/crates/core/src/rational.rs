//! Small helpers around [`BigRational`]: construction, parsing, and the
//! `{num, den}` JSON shape used by every serialized artifact.

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

pub fn to_f64(v: &BigRational) -> f64 {
    v.to_f64().unwrap_or(f64::NAN)
}

/// A complex number with exact rational parts.
pub type ExactComplex = Complex<BigRational>;

/// Lossless conversion of a finite `f64` complex value.
pub fn exact_complex(z: Complex64) -> Result<ExactComplex> {
    let part = |x: f64| {
        BigRational::from_float(x)
            .ok_or_else(|| Error::InputDomain(format!("non-finite coordinate {z}")))
    };
    Ok(Complex::new(part(z.re)?, part(z.im)?))
}

pub fn exact_real(v: BigRational) -> ExactComplex {
    Complex::new(v, BigRational::zero())
}

/// Rounds each part of an exact complex value to the nearest `f64`.
pub fn round_complex(z: &ExactComplex) -> Complex64 {
    Complex64::new(to_f64(&z.re), to_f64(&z.im))
}

/// Parses `7`, `-3/4`, `0.125` or `2.5e-3` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InputDomain(format!("cannot parse {s:?} as a rational number"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| bad())?;
        let d = BigInt::from_str(d.trim()).map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::DegenerateDenominator(format!("{s:?} has a zero denominator")));
        }
        return Ok(BigRational::new(n, d));
    }

    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(pos) => (&s[..pos], s[pos + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (neg, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    let all: String = format!("{whole}{frac}");
    let mut value = BigRational::from_integer(BigInt::from_str(&all).map_err(|_| bad())?);
    let shift = exp - frac.len() as i32;
    let ten = BigRational::from_integer(BigInt::from(10));
    if shift >= 0 {
        value *= num_traits::pow(ten, shift as usize);
    } else {
        value /= num_traits::pow(ten, (-shift) as usize);
    }
    Ok(if neg { -value } else { value })
}

/// `num/den`, or just `num` for integers.
pub fn format_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// LaTeX rendering; negative values keep the sign outside the fraction.
pub fn latex_rational(v: &BigRational) -> String {
    if v.denom().is_one() {
        return v.numer().to_string();
    }
    let sign = if v.is_negative() { "-" } else { "" };
    format!("{sign}\\frac{{{}}}{{{}}}", v.numer().abs(), v.denom())
}

/// JSON form of an exact rational; both parts are decimal strings so that
/// arbitrarily large values survive any JSON reader.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalJson {
    pub num: String,
    pub den: String,
}

impl From<&BigRational> for RationalJson {
    fn from(v: &BigRational) -> Self {
        Self {
            num: v.numer().to_string(),
            den: v.denom().to_string(),
        }
    }
}

impl TryFrom<RationalJson> for BigRational {
    type Error = Error;

    fn try_from(j: RationalJson) -> Result<Self> {
        let num = BigInt::from_str(&j.num)
            .map_err(|_| Error::InputDomain(format!("bad numerator {:?}", j.num)))?;
        let den = BigInt::from_str(&j.den)
            .map_err(|_| Error::InputDomain(format!("bad denominator {:?}", j.den)))?;
        if den.is_zero() {
            return Err(Error::DegenerateDenominator("zero denominator in JSON".into()));
        }
        Ok(BigRational::new(num, den))
    }
}

/// `#[serde(with = "serde_rational")]` adapter for `BigRational` fields.
pub mod serde_rational {
    use super::*;

    pub fn serialize<S: Serializer>(v: &BigRational, s: S) -> std::result::Result<S::Ok, S::Error> {
        RationalJson::from(v).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigRational, D::Error> {
        let j = RationalJson::deserialize(d)?;
        BigRational::try_from(j).map_err(serde::de::Error::custom)
    }
}

/// Same adapter for `Vec<BigRational>`.
pub mod serde_rational_vec {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
        v.iter().map(RationalJson::from).collect::<Vec<_>>().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        d: D,
    ) -> std::result::Result<Vec<BigRational>, D::Error> {
        Vec::<RationalJson>::deserialize(d)?
            .into_iter()
            .map(|j| BigRational::try_from(j).map_err(serde::de::Error::custom))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-3/4").unwrap(), rat(-3, 4));
        assert_eq!(parse_rational("0.5").unwrap(), rat(1, 2));
        assert_eq!(parse_rational("-.125").unwrap(), rat(-1, 8));
        assert_eq!(parse_rational("2.5e-3").unwrap(), rat(1, 400));
        assert_eq!(parse_rational("3e2").unwrap(), int(300));
        assert_eq!(parse_rational("+1.").unwrap(), int(1));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", "abc", "1/0", "1.2.3", "--1", "1/", "."] {
            assert!(parse_rational(s).is_err(), "{s}");
        }
    }

    #[test]
    fn formatting() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
        assert_eq!(latex_rational(&rat(-1, 2)), "-\\frac{1}{2}");
    }

    #[test]
    fn exact_complex_round_trip() {
        let z = Complex64::new(0.1, -3.25e-7);
        let e = exact_complex(z).unwrap();
        assert_eq!(round_complex(&e), z);
        assert_eq!(e.im, BigRational::from_float(-3.25e-7).unwrap());
        assert!(exact_complex(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn json_round_trip() {
        let v = rat(-22, 7);
        let j = serde_json::to_string(&RationalJson::from(&v)).unwrap();
        assert_eq!(j, r#"{"num":"-22","den":"7"}"#);
        let back: RationalJson = serde_json::from_str(&j).unwrap();
        assert_eq!(BigRational::try_from(back).unwrap(), v);
    }
}
