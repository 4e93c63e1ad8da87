use crate::CoreError;
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

/// The only scalar type in the library: exact arbitrary-precision rationals,
/// always in lowest terms with positive denominator (num maintains both).
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses "p", "-p", or "p/q". Used by the CLI and by golden-file readers.
pub fn parse_rat(s: &str) -> Result<Rational, CoreError> {
    let bad = || CoreError::BadRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let num: BigInt = parts.next().ok_or_else(bad)?.trim().parse().map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rational::from_integer(num)),
        Some(d) => {
            let den: BigInt = d.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(num, den))
        }
    }
}

/// "p/q", or just "p" for integers. Never emits "-0" or a unit denominator.
pub fn format_rat(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(n: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}
