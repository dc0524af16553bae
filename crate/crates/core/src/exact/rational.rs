use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

/// Arbitrary precision rational number, always stored in lowest terms with
/// a positive denominator.
pub type Rational = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int<T: Into<BigInt>>(value: T) -> Rational {
    Rational::from_integer(value.into())
}

/// Parses `"a"` or `"a/b"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::BadParams(format!("not a rational number: `{s}`"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(int(s.parse::<BigInt>().map_err(|_| bad())?)),
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d == BigInt::from(0) {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = rat(6, -4);
        assert_eq!(r, rat(-3, 2));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(rat(0, 7), int(0));
        assert_eq!(rat(0, 7).denom(), &BigInt::from(1));
    }

    #[test]
    fn text_round_trip() {
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(int(5).to_string(), "5");
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("12").unwrap(), int(12));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
