//! Positional numerals in an arbitrary integer radix.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

pub const MIN_RADIX: u32 = 2;
pub const MAX_RADIX: u32 = 36;
pub const MAX_FRACTION_DIGITS: usize = 32;

const DIGIT_CHARS: &[u8; 36] = b"0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// Digits most significant first. Leading zeros are stripped, so zero is
/// the single digit `[0]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RadixNumeral {
    radix: u32,
    digits: Vec<u8>,
}

fn check_radix(radix: u32) -> Result<()> {
    if (MIN_RADIX..=MAX_RADIX).contains(&radix) {
        Ok(())
    } else {
        Err(Error::BadRadix(radix))
    }
}

impl RadixNumeral {
    pub fn new(radix: u32, digits: Vec<u8>) -> Result<Self> {
        check_radix(radix)?;
        if let Some(&d) = digits.iter().find(|&&d| d as u32 >= radix) {
            return Err(Error::DigitOutOfRange {
                digit: d as u32,
                radix,
            });
        }
        let first = digits.iter().position(|&d| d != 0);
        let digits = match first {
            Some(i) => digits[i..].to_vec(),
            None => vec![0],
        };
        Ok(RadixNumeral { radix, digits })
    }

    /// Parse `0-9` then `A-Z` (either case).
    pub fn parse(text: &str, radix: u32) -> Result<Self> {
        check_radix(radix)?;
        if text.is_empty() {
            return Err(Error::InvalidParameter("empty numeral"));
        }
        let digits = text
            .chars()
            .map(|c| match c.to_digit(36) {
                Some(d) => Ok(d as u8),
                None => Err(Error::DigitOutOfRange {
                    digit: c as u32,
                    radix,
                }),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(radix, digits)
    }

    pub fn radix(&self) -> u32 {
        self.radix
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    /// Coefficient of `radix^power`.
    pub fn coefficient(&self, power: usize) -> u8 {
        if power < self.digits.len() {
            self.digits[self.digits.len() - 1 - power]
        } else {
            0
        }
    }

    /// `(power, coefficient)` pairs, lowest power first, as in
    /// `a_0 + a_1 p + a_2 p^2 + ...`.
    pub fn coefficients(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.digits.iter().rev().copied().enumerate()
    }
}

impl fmt::Display for RadixNumeral {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", digit_char(d))?;
        }
        Ok(())
    }
}

impl FromStr for RadixNumeral {
    type Err = Error;

    /// Decimal only; use [`RadixNumeral::parse`] for other radices.
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s, 10)
    }
}

pub fn digit_char(d: u8) -> char {
    DIGIT_CHARS[d as usize] as char
}

/// Repeated division, remainders read back to front.
pub fn to_radix(mut m: u64, radix: u32) -> Result<RadixNumeral> {
    check_radix(radix)?;
    if m == 0 {
        return Ok(RadixNumeral {
            radix,
            digits: vec![0],
        });
    }
    let r = radix as u64;
    let mut digits = Vec::new();
    while m > 0 {
        digits.push((m % r) as u8);
        m /= r;
    }
    digits.reverse();
    Ok(RadixNumeral { radix, digits })
}

/// Horner evaluation.
pub fn from_radix(numeral: &RadixNumeral) -> Result<u64> {
    let r = numeral.radix as u64;
    numeral.digits.iter().try_fold(0u64, |acc, &d| {
        if d as u64 >= r {
            return Err(Error::DigitOutOfRange {
                digit: d as u32,
                radix: numeral.radix,
            });
        }
        acc.checked_mul(r)
            .and_then(|v| v.checked_add(d as u64))
            .ok_or(Error::Overflow)
    })
}

/// First `count` digits after the radix point of `x`, truncated.
pub fn fractional_digits(x: f64, radix: u32, count: usize) -> Result<Vec<u8>> {
    check_radix(radix)?;
    if !(0.0..1.0).contains(&x) {
        return Err(Error::OutOfRange {
            what: "fraction",
            value: x,
        });
    }
    if !(1..=MAX_FRACTION_DIGITS).contains(&count) {
        return Err(Error::OutOfRange {
            what: "digit count",
            value: count as f64,
        });
    }
    let r = radix as f64;
    let mut rest = x;
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        rest *= r;
        let d = (rest as u32).min(radix - 1);
        out.push(d as u8);
        rest -= d as f64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_three_examples() {
        assert_eq!(to_radix(8, 3).unwrap().digits(), &[2, 2]);
        assert_eq!(to_radix(0, 3).unwrap().digits(), &[0]);
        assert_eq!(to_radix(15, 3).unwrap().digits(), &[1, 2, 0]);
        assert_eq!(
            from_radix(&RadixNumeral::new(3, vec![1, 0, 0]).unwrap()),
            Ok(9)
        );
        assert_eq!(from_radix(&RadixNumeral::new(10, vec![7]).unwrap()), Ok(7));
        assert_eq!(
            from_radix(&RadixNumeral::new(3, vec![1, 1]).unwrap()),
            Ok(4)
        );
        assert_eq!(from_radix(&RadixNumeral::parse("1000", 3).unwrap()), Ok(27));
    }

    #[test]
    fn coefficient_view() {
        // '120' = 0 x 3^0 + 2 x 3 + 1 x 3^2
        let n = RadixNumeral::parse("120", 3).unwrap();
        assert_eq!(n.coefficient(0), 0);
        assert_eq!(n.coefficient(1), 2);
        assert_eq!(n.coefficient(2), 1);
        assert_eq!(n.coefficient(7), 0);
        let c: Vec<_> = n.coefficients().collect();
        assert_eq!(c, vec![(0, 0), (1, 2), (2, 1)]);
    }

    #[test]
    fn rendering_and_parsing() {
        assert_eq!(to_radix(255, 16).unwrap().to_string(), "FF");
        assert_eq!(to_radix(35, 36).unwrap().to_string(), "Z");
        assert_eq!(RadixNumeral::parse("ff", 16).unwrap().to_string(), "FF");
        assert_eq!(RadixNumeral::parse("0012", 3).unwrap().digits(), &[1, 2]);
        assert_eq!(RadixNumeral::new(3, vec![0, 0]).unwrap().digits(), &[0]);
        assert_eq!("134".parse::<RadixNumeral>().unwrap().digits(), &[1, 3, 4]);
    }

    #[test]
    fn errors() {
        assert_eq!(to_radix(5, 1), Err(Error::BadRadix(1)));
        assert_eq!(to_radix(5, 37), Err(Error::BadRadix(37)));
        assert_eq!(
            RadixNumeral::new(3, vec![1, 3]),
            Err(Error::DigitOutOfRange { digit: 3, radix: 3 })
        );
        assert!(RadixNumeral::parse("12", 2).is_err());
        assert!(RadixNumeral::parse("1-2", 10).is_err());
        assert!(RadixNumeral::parse("", 10).is_err());
        let big = RadixNumeral::parse("ZZZZZZZZZZZZZZZZ", 36).unwrap();
        assert_eq!(from_radix(&big), Err(Error::Overflow));
        assert_eq!(from_radix(&to_radix(u64::MAX, 2).unwrap()), Ok(u64::MAX));
    }

    #[test]
    fn fraction_digits() {
        assert_eq!(fractional_digits(0.79, 10, 2), Ok(vec![7, 9]));
        assert_eq!(fractional_digits(0.0, 2, 5), Ok(vec![0; 5]));
        assert_eq!(fractional_digits(0.5, 3, 4), Ok(vec![1, 1, 1, 1]));
        assert_eq!(fractional_digits(0.375, 2, 4), Ok(vec![0, 1, 1, 0]));
        assert!(fractional_digits(1.0, 10, 2).is_err());
        assert!(fractional_digits(-0.1, 10, 2).is_err());
        assert!(fractional_digits(0.5, 10, 0).is_err());
        assert!(fractional_digits(0.5, 10, 33).is_err());
        assert!(fractional_digits(0.5, 40, 3).is_err());
    }
}
