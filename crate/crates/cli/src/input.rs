//! Parsing of `--T` and `--point` values.

use ezt_core::rational::{parse_rational, ExactComplex};
use ezt_core::BigRational;
use num_traits::Zero;

/// One coordinate: `3`, `-1/2`, `0.25`, `2j`, `1.5-2e-3j`, `1/2+3/4i`.
///
/// Decimal digits are taken at face value, so every coordinate is an exact
/// Gaussian rational.
pub fn parse_coordinate(text: &str) -> Result<ExactComplex, String> {
    let s = text.trim();
    let bad = |why: &str| format!("bad coordinate {text:?}: {why}");
    if s.is_empty() {
        return Err(bad("empty"));
    }
    let Some(body) = s.strip_suffix(['j', 'i']) else {
        let re = parse_rational(s).map_err(|e| bad(&e.to_string()))?;
        return Ok(ExactComplex::new(re, BigRational::zero()));
    };
    // split at the last sign that is neither leading nor part of an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other.strip_prefix('+').unwrap_or(other),
    };
    let re = parse_rational(re).map_err(|e| bad(&e.to_string()))?;
    let im = parse_rational(im).map_err(|e| bad(&e.to_string()))?;
    Ok(ExactComplex::new(re, im))
}

pub fn parse_point(text: &str) -> Result<Vec<ExactComplex>, String> {
    text.split(',').map(parse_coordinate).collect()
}

pub fn parse_steps(text: &str) -> Result<Vec<BigRational>, String> {
    text.split(',')
        .map(|t| parse_rational(t).map_err(|e| format!("bad step constant {t:?}: {e}")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use ezt_core::rational::{int, rat};

    fn c(re: BigRational, im: BigRational) -> ExactComplex {
        ExactComplex::new(re, im)
    }

    #[test]
    fn coordinates() {
        assert_eq!(parse_coordinate("3").unwrap(), c(int(3), int(0)));
        assert_eq!(parse_coordinate("-1/2").unwrap(), c(rat(-1, 2), int(0)));
        assert_eq!(parse_coordinate("2j").unwrap(), c(int(0), int(2)));
        assert_eq!(parse_coordinate("-j").unwrap(), c(int(0), int(-1)));
        assert_eq!(parse_coordinate("1.5-2e-3j").unwrap(), c(rat(3, 2), rat(-1, 500)));
        assert_eq!(parse_coordinate("1e-2+1e+1i").unwrap(), c(rat(1, 100), int(10)));
        assert_eq!(parse_coordinate("1/2+3/4j").unwrap(), c(rat(1, 2), rat(3, 4)));
        assert_eq!(parse_coordinate("0.1+j").unwrap(), c(rat(1, 10), int(1)));
    }

    #[test]
    fn rejects() {
        for s in ["", "abc", "1+2", "1++2j", "j2", "1/0"] {
            assert!(parse_coordinate(s).is_err(), "{s}");
        }
    }

    #[test]
    fn lists() {
        assert_eq!(parse_point("2,1").unwrap().len(), 2);
        assert_eq!(parse_steps("1,1/2").unwrap(), vec![int(1), rat(1, 2)]);
        assert!(parse_steps("1,x").is_err());
    }
}
