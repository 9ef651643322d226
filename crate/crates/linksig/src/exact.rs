//! Exact rational arithmetic on the unit circle.
//!
//! An [`Angle`] is a rational number in `[0,1)` standing for the point
//! `e^{2 pi i theta}`; the value `0` encodes the point `1`, which every
//! formula in this crate interprets as removal of the corresponding link
//! component.  All signature formulas used here are piecewise constant
//! with rational breakpoints, so rational angles reach every value.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// Arbitrary-precision rational, always reduced, denominator positive.
pub type Rational = BigRational;

/// Shorthand for small rational constants.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for small integers.
pub fn int(n: i64) -> BigInt {
    BigInt::from(n)
}

/// The sawtooth function `((x))`: `1/2 - x + floor(x)` off the integers
/// and `0` on them.  Odd, 1-periodic, values in `(-1/2, 1/2)`.
pub fn sawtooth(x: &Rational) -> Rational {
    if x.is_integer() {
        Rational::zero()
    } else {
        rat(1, 2) - x + x.floor()
    }
}

/// `ind(x) = floor(x) - floor(-x)`; equals `2 floor(x) + 1` off the
/// integers and `2x` on them.
pub fn ind(x: &Rational) -> BigInt {
    (x.floor() - (-x).floor()).to_integer()
}

/// A point of the unit circle, stored as its rational argument in `[0,1)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Angle(Rational);

impl Angle {
    /// Wraps a rational already in `[0,1)`.
    pub fn new(value: Rational) -> Result<Self> {
        if value.is_negative() || value >= Rational::one() {
            return Err(Error::AngleOutOfRange(value.to_string()));
        }
        Ok(Angle(value))
    }

    /// Reduces an arbitrary rational modulo 1.
    pub fn from_mod1(value: &Rational) -> Self {
        Angle(value - value.floor())
    }

    pub fn zero() -> Self {
        Angle(Rational::zero())
    }

    /// Whether this is the point 1 (the removal value).
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn value(&self) -> &Rational {
        &self.0
    }

    /// The complex conjugate point: `theta -> 1 - theta`, fixing 0.
    pub fn conj(&self) -> Self {
        if self.is_zero() {
            self.clone()
        } else {
            Angle(Rational::one() - &self.0)
        }
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Angle {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let r = parse_rational(s)?;
        Angle::new(r)
    }
}

/// Parses `p/q` or `p` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let err = || Error::Parse {
        offset: 0,
        message: format!("`{s}` is not a rational (expected `p/q` or `p`)"),
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let num = BigInt::from_str(p.trim()).map_err(|_| err())?;
            let den = BigInt::from_str(q.trim()).map_err(|_| err())?;
            if den.is_zero() {
                return Err(err());
            }
            Ok(Rational::new(num, den))
        }
        None => {
            let num = BigInt::from_str(s).map_err(|_| err())?;
            Ok(Rational::from_integer(num))
        }
    }
}

/// Exact integer combination of angles.
///
/// Returns the fractional part as an [`Angle`] together with the exact
/// (unreduced) total `sum coeff_i * angle_i`.
pub fn angle_sum_mod1(terms: &[(BigInt, Angle)]) -> (Angle, Rational) {
    let total: Rational = terms
        .iter()
        .map(|(c, a)| Rational::from_integer(c.clone()) * a.value())
        .sum();
    (Angle::from_mod1(&total), total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&rat(0, 1)), rat(0, 1));
        assert_eq!(sawtooth(&rat(1, 4)), rat(1, 4));
        assert_eq!(sawtooth(&rat(-5, 8)), rat(1, 8));
        assert_eq!(sawtooth(&rat(3, 4)), rat(-1, 4));
        assert_eq!(sawtooth(&rat(7, 1)), rat(0, 1));
    }

    #[test]
    fn ind_examples() {
        assert_eq!(ind(&rat(0, 1)), int(0));
        assert_eq!(ind(&rat(1, 2)), int(1));
        assert_eq!(ind(&rat(1, 1)), int(2));
        assert_eq!(ind(&rat(-1, 2)), int(-1));
        assert_eq!(ind(&rat(3, 2)), int(3));
    }

    #[test]
    fn angle_sum_examples() {
        let a = |n, d| Angle::new(rat(n, d)).unwrap();
        let (frac, total) = angle_sum_mod1(&[(int(1), a(1, 3)), (int(1), a(1, 3))]);
        assert_eq!(frac.value(), &rat(2, 3));
        assert_eq!(total, rat(2, 3));

        let (frac, total) = angle_sum_mod1(&[(int(2), a(3, 4))]);
        assert_eq!(frac.value(), &rat(1, 2));
        assert_eq!(total, rat(3, 2));

        let (frac, total) = angle_sum_mod1(&[]);
        assert!(frac.is_zero());
        assert_eq!(total, rat(0, 1));
    }

    #[test]
    fn angle_bounds() {
        assert!(Angle::new(rat(1, 1)).is_err());
        assert!(Angle::new(rat(-1, 3)).is_err());
        assert_eq!(Angle::from_mod1(&rat(7, 5)).value(), &rat(2, 5));
        assert_eq!(Angle::from_mod1(&rat(-1, 3)).value(), &rat(2, 3));
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("19/40").unwrap(), rat(19, 40));
        assert_eq!(parse_rational("-5").unwrap(), rat(-5, 1));
        assert_eq!(parse_rational("10/4").unwrap(), rat(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-2000i64..2000, 1i64..60).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn sawtooth_is_odd(x in arb_rational()) {
            prop_assert_eq!(sawtooth(&-x.clone()), -sawtooth(&x));
        }

        #[test]
        fn sawtooth_is_periodic(x in arb_rational()) {
            prop_assert_eq!(sawtooth(&(x.clone() + rat(1, 1))), sawtooth(&x));
        }

        #[test]
        fn sawtooth_range(x in arb_rational()) {
            let v = sawtooth(&x);
            prop_assert!(v > rat(-1, 2) && v < rat(1, 2));
            // vanishes exactly on half-integers
            prop_assert_eq!(v.is_zero(), (x * rat(2, 1)).is_integer());
        }

        #[test]
        fn ind_shifts_by_two(x in arb_rational()) {
            prop_assert_eq!(ind(&(x.clone() + rat(1, 1))), ind(&x) + 2);
        }
    }
}
