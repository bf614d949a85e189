//! Exact rational scalars.
//!
//! Every quantity on the decision path is a [`Rational`] with arbitrary
//! precision; no rounding happens anywhere. The type is backed by
//! `num_rational::BigRational`, which keeps values in canonical form
//! (reduced, positive denominator).

use num_bigint::BigInt;
use num_traits::One;

use crate::Error;

pub type Rational = num_rational::BigRational;

/// Integer as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`. Panics on `d = 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"` (optionally signed, arbitrary precision).
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| Error::MalformedRational(text.to_string()))?;
    let den: BigInt = match den_str {
        Some(d) => d
            .parse()
            .map_err(|_| Error::MalformedRational(text.to_string()))?,
        None => BigInt::one(),
    };
    if den == BigInt::from(0) {
        return Err(Error::ZeroDenominator(text.to_string()));
    }
    Ok(Rational::new(num, den))
}

/// Renders a rational as `"p"` or `"p/q"`; inverse of [`parse_rational`].
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
