use std::fmt;

use serde::Serialize;

use crate::arith::pow2_neg;
use crate::error::{Error, Result};
use crate::ladder::MAX_DEPTH;

impl std::ops::Neg for DyadicExponent {
    type Output = Self;

    fn neg(self) -> Self {
        DyadicExponent {
            numerator: -self.numerator,
            level: self.level,
        }
    }
}

/// The exact rational `numerator / 2^level`.
///
/// Always kept in lowest terms: the numerator is odd, or the level is 0.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct DyadicExponent {
    numerator: i64,
    level: u32,
}

impl DyadicExponent {
    pub const ZERO: DyadicExponent = DyadicExponent {
        numerator: 0,
        level: 0,
    };

    pub fn new(numerator: i64, level: u32) -> Result<Self> {
        if level > MAX_DEPTH {
            return Err(Error::LevelOutOfRange {
                level,
                min: 0,
                max: MAX_DEPTH,
            });
        }
        Ok(Self::reduce(numerator, level))
    }

    pub fn integer(k: i64) -> Self {
        DyadicExponent {
            numerator: k,
            level: 0,
        }
    }

    fn reduce(mut numerator: i64, mut level: u32) -> Self {
        if numerator == 0 {
            return Self::ZERO;
        }
        while level > 0 && numerator & 1 == 0 {
            numerator >>= 1;
            level -= 1;
        }
        DyadicExponent { numerator, level }
    }

    /// Nearest grid point of spacing `2^-level`, ties to the even numerator.
    pub fn from_real(x: f64, level: u32) -> Result<Self> {
        if level > MAX_DEPTH {
            return Err(Error::LevelOutOfRange {
                level,
                min: 0,
                max: MAX_DEPTH,
            });
        }
        if !x.is_finite() {
            return Err(Error::OutOfRange {
                what: "exponent",
                value: x,
            });
        }
        // scaling by a power of two is exact
        let scaled = (x / pow2_neg(level)).round_ties_even();
        if scaled.abs() >= 9.0e18 {
            return Err(Error::Overflow);
        }
        Ok(Self::reduce(scaled as i64, level))
    }

    pub fn numerator(&self) -> i64 {
        self.numerator
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn value(&self) -> f64 {
        self.numerator as f64 * pow2_neg(self.level)
    }

    /// Numerator when written over `2^level` (which must be >= `self.level`).
    pub fn numerator_at(&self, level: u32) -> i64 {
        debug_assert!(level >= self.level);
        self.numerator << (level - self.level)
    }

    pub fn checked_add(self, other: Self) -> Option<Self> {
        let level = self.level.max(other.level);
        let sum = self
            .numerator_at(level)
            .checked_add(other.numerator_at(level))?;
        Some(Self::reduce(sum, level))
    }

    /// Largest integer not above the value.
    pub fn floor(&self) -> i64 {
        self.numerator >> self.level
    }

    /// `self - floor(self)`, in `[0, 1)`.
    pub fn fract(&self) -> Self {
        Self::reduce(self.numerator - (self.floor() << self.level), self.level)
    }

    /// Round to the grid of spacing `2^-level`, ties to the even numerator.
    pub fn round_to_level(&self, level: u32) -> Self {
        if self.level <= level {
            return *self;
        }
        let shift = self.level - level;
        let mut q = self.numerator >> shift;
        let rem = self.numerator - (q << shift);
        let half = 1i64 << (shift - 1);
        if rem > half || (rem == half && q & 1 == 1) {
            q += 1;
        }
        Self::reduce(q, level)
    }

    /// Exact decimal expansion, e.g. `0.375` for `3/2^3`.
    pub fn to_decimal_string(&self) -> String {
        let int = self.floor();
        let frac = self.numerator - (int << self.level);
        let (int_str, mut rem) = if self.numerator < 0 && frac != 0 {
            // -2.25 is floor -3 plus 0.75; print it as -(2 + 0.25)
            (format!("-{}", -(int + 1)), (1i64 << self.level) - frac)
        } else {
            (int.to_string(), frac)
        };
        if rem == 0 {
            return int_str;
        }
        let mask = (1i64 << self.level) - 1;
        let mut out = int_str;
        out.push('.');
        while rem != 0 {
            rem *= 10;
            out.push(char::from(b'0' + (rem >> self.level) as u8));
            rem &= mask;
        }
        out
    }
}

impl fmt::Display for DyadicExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.level)
        }
    }
}

/// A logarithm `log_base(y) = characteristic + mantissa`, with the mantissa
/// an exact dyadic in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogValue {
    base: f64,
    characteristic: i32,
    mantissa: DyadicExponent,
    error_bound: f64,
}

impl LogValue {
    /// Split an exact exponent into characteristic and mantissa.
    pub fn from_exponent(base: f64, exponent: DyadicExponent, error_bound: f64) -> Result<Self> {
        let characteristic = exponent.floor();
        if characteristic.abs() > i32::MAX as i64 {
            return Err(Error::Overflow);
        }
        Ok(LogValue {
            base,
            characteristic: characteristic as i32,
            mantissa: exponent.fract(),
            error_bound,
        })
    }

    pub(crate) fn from_parts(
        base: f64,
        characteristic: i32,
        mantissa: DyadicExponent,
        error_bound: f64,
    ) -> Self {
        debug_assert!(mantissa.numerator() >= 0 && mantissa.floor() == 0);
        LogValue {
            base,
            characteristic,
            mantissa,
            error_bound,
        }
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn characteristic(&self) -> i32 {
        self.characteristic
    }

    pub fn mantissa(&self) -> DyadicExponent {
        self.mantissa
    }

    pub fn error_bound(&self) -> f64 {
        self.error_bound
    }

    pub fn value(&self) -> f64 {
        self.characteristic as f64 + self.mantissa.value()
    }

    /// Characteristic and mantissa as one exact dyadic.
    pub fn exponent(&self) -> DyadicExponent {
        DyadicExponent::integer(self.characteristic as i64)
            .checked_add(self.mantissa)
            .expect("characteristic fits comfortably in i64")
    }

    /// Exact sum of two logs in the same base; error bounds add.
    pub fn checked_add(&self, other: &LogValue) -> Result<LogValue> {
        if self.base != other.base {
            return Err(Error::BaseMismatch {
                expected: self.base,
                found: other.base,
            });
        }
        let sum = self
            .exponent()
            .checked_add(other.exponent())
            .ok_or(Error::Overflow)?;
        LogValue::from_exponent(self.base, sum, self.error_bound + other.error_bound)
    }
}

impl fmt::Display for LogValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (± {:e})", self.value(), self.error_bound)
    }
}
