//! Exact rational scalars.
//!
//! Every coefficient in the engine is an arbitrary-precision rational kept in
//! canonical form (reduced, positive denominator), so structural equality of
//! elements is mathematical equality.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("invalid rational `{text}`"));
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{text}`")));
            }
            Ok(Scalar::new(p, q))
        }
        None => {
            let p: BigInt = text.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(p))
        }
    }
}

/// `p` for integers, `p/q` otherwise.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

pub(crate) fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let s = ratio(4, -6);
        assert_eq!(s.numer(), &BigInt::from(-2));
        assert_eq!(s.denom(), &BigInt::from(3));
        assert_eq!(ratio(0, 5), zero());
        assert_eq!(format_scalar(&ratio(0, 7)), "0");
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("1/2").unwrap(), ratio(1, 2));
        assert_eq!(parse_scalar("-3").unwrap(), int(-3));
        assert_eq!(format_scalar(&ratio(-6, 4)), "-3/2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }
}
