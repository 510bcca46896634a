//! Exact fixed-point decimals with four fractional digits.
//!
//! Every membership value, degree and aggregate in this crate is a [`Scalar`].
//! Values are stored as an integer count of `1e-4` units, so sums are exact and
//! independent of summation order, and equality needs no tolerance.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::Error;

/// Number of fractional decimal digits carried by a [`Scalar`].
pub const FRACTION_DIGITS: u32 = 4;

/// Units per whole number (`10^FRACTION_DIGITS`).
pub const SCALE: i64 = 10_000;

/// An exact decimal with denominator `10^4`.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Scalar(i64);

impl Scalar {
    pub const ZERO: Scalar = Scalar(0);
    pub const ONE: Scalar = Scalar(SCALE);
    pub const NEG_ONE: Scalar = Scalar(-SCALE);

    /// Builds a scalar from a raw count of `1e-4` units.
    pub const fn from_units(units: i64) -> Scalar {
        Scalar(units)
    }

    /// Raw count of `1e-4` units.
    pub const fn units(self) -> i64 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub const fn is_positive(self) -> bool {
        self.0 > 0
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }

    pub fn abs(self) -> Scalar {
        Scalar(self.0.abs())
    }

    pub fn checked_add(self, rhs: Scalar) -> Option<Scalar> {
        self.0.checked_add(rhs.0).map(Scalar)
    }

    pub fn checked_mul_int(self, rhs: i64) -> Option<Scalar> {
        self.0.checked_mul(rhs).map(Scalar)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 + rhs.0)
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.0 += rhs.0;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar(self.0 - rhs.0)
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.0 -= rhs.0;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Mul<i64> for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: i64) -> Scalar {
        Scalar(self.0 * rhs)
    }
}

impl Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::ZERO, Add::add)
    }
}

impl<'a> Sum<&'a Scalar> for Scalar {
    fn sum<I: Iterator<Item = &'a Scalar>>(iter: I) -> Scalar {
        iter.copied().sum()
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts `-?[0-9]+(\.[0-9]+)?` with at most four fractional digits.
    fn from_str(s: &str) -> Result<Scalar, Error> {
        let invalid = || Error::InvalidDecimal(s.to_string());
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, Some(f)),
            None => (body, None),
        };
        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        let frac = frac_part.unwrap_or("");
        if frac_part.is_some() && frac.is_empty() {
            return Err(invalid());
        }
        if !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        if frac.len() > FRACTION_DIGITS as usize {
            return Err(Error::Precision(s.to_string()));
        }

        let whole: i64 = int_part.parse().map_err(|_| invalid())?;
        let mut fraction: i64 = 0;
        for b in frac.bytes() {
            fraction = fraction * 10 + i64::from(b - b'0');
        }
        fraction *= 10_i64.pow(FRACTION_DIGITS - frac.len() as u32);

        let units = whole
            .checked_mul(SCALE)
            .and_then(|w| w.checked_add(fraction))
            .ok_or_else(invalid)?;
        Ok(Scalar(if negative { -units } else { units }))
    }
}

impl fmt::Display for Scalar {
    /// Minimal rendering: no trailing zeros, no `-0`, and a leading zero
    /// before the decimal point.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.0 < 0 { "-" } else { "" };
        let magnitude = self.0.unsigned_abs();
        let whole = magnitude / SCALE as u64;
        let fraction = magnitude % SCALE as u64;
        if fraction == 0 {
            return write!(f, "{sign}{whole}");
        }
        let digits = format!("{:04}", fraction);
        write!(f, "{sign}{whole}.{}", digits.trim_end_matches('0'))
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
