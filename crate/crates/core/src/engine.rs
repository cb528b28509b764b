//! Logarithms and antilogs over a root ladder.
//!
//! `log_dyadic` first pulls out the characteristic by repeated division (or
//! multiplication) by the base, leaving a residue in `[1, base)`. The residue
//! is then peeled rung by rung: whenever it is at least `base^(1/2^j)` that
//! rung is divided out and bit `j` of the mantissa is set. The result is the
//! largest grid point `k/2^depth` not above the true logarithm.

use serde::Serialize;

use crate::arith::{int_pow, pow2_neg};
use crate::dyadic::{DyadicExponent, LogValue};
use crate::error::{Error, Result};
use crate::ladder::RootLadder;

/// Largest characteristic accepted in either direction.
pub const MAX_CHARACTERISTIC: i32 = 400;

/// A logarithm together with the intermediate residues of its extraction.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Decomposition {
    pub log: LogValue,
    /// `y / base^characteristic`, in `[1, base)`.
    pub normalized: f64,
    /// What is left after every set rung has been divided out;
    /// `1 <= residual < rung[depth]`.
    pub residual: f64,
}

pub fn decompose(y: f64, ladder: &RootLadder) -> Result<Decomposition> {
    if !(y > 0.0 && y.is_finite()) {
        return Err(Error::NonPositiveInput(y));
    }
    let base = ladder.base();
    let mut r = y;
    let mut characteristic = 0i32;
    loop {
        if r >= base {
            r /= base;
            characteristic += 1;
        } else if r < 1.0 {
            r *= base;
            characteristic -= 1;
        } else {
            break;
        }
        if characteristic.abs() > MAX_CHARACTERISTIC {
            return Err(Error::Overflow);
        }
    }
    let normalized = r;

    let depth = ladder.depth();
    let rungs = ladder.rungs();
    let mut bits = 0i64;
    for &rung in &rungs[1..=depth as usize] {
        bits <<= 1;
        if r >= rung {
            bits |= 1;
            r /= rung;
        }
    }
    let mantissa = DyadicExponent::new(bits, depth)?;
    Ok(Decomposition {
        log: LogValue::from_parts(base, characteristic, mantissa, pow2_neg(depth)),
        normalized,
        residual: r,
    })
}

/// `log_base(y)` truncated to the ladder's dyadic grid.
pub fn log_dyadic(y: f64, ladder: &RootLadder) -> Result<LogValue> {
    decompose(y, ladder).map(|d| d.log)
}

/// `base^c` times the rungs selected by the mantissa bits.
pub fn antilog_dyadic(x: &LogValue, ladder: &RootLadder) -> Result<f64> {
    if x.base() != ladder.base() {
        return Err(Error::BaseMismatch {
            expected: x.base(),
            found: ladder.base(),
        });
    }
    let mantissa = x.mantissa();
    if mantissa.level() > ladder.depth() {
        return Err(Error::DepthMismatch {
            level: mantissa.level(),
            depth: ladder.depth(),
        });
    }
    if x.characteristic().abs() > MAX_CHARACTERISTIC {
        return Err(Error::OutOfRange {
            what: "log value",
            value: x.value(),
        });
    }
    let product = ladder.rung_product(mantissa.numerator() as u64, mantissa.level());
    scale_by_power(product, ladder.base(), x.characteristic())
}

/// Antilog of an arbitrary real exponent. The exponent is first rounded to
/// the nearest point of the ladder's grid (ties to even).
pub fn antilog_real(x: f64, ladder: &RootLadder) -> Result<f64> {
    antilog_dyadic(&to_log_value(x, ladder)?, ladder)
}

/// Round a real exponent onto the ladder grid. The error bound is the half
/// grid step introduced by the rounding.
pub fn to_log_value(x: f64, ladder: &RootLadder) -> Result<LogValue> {
    if x.is_nan() || x.abs() > MAX_CHARACTERISTIC as f64 {
        return Err(Error::OutOfRange {
            what: "log value",
            value: x,
        });
    }
    let exponent = DyadicExponent::from_real(x, ladder.depth())?;
    LogValue::from_exponent(ladder.base(), exponent, pow2_neg(ladder.depth() + 1))
}

/// `value * base^power` using integer powers only.
pub(crate) fn scale_by_power(value: f64, base: f64, power: i32) -> Result<f64> {
    let scaled = if power >= 0 {
        value * int_pow(base, power.unsigned_abs())?
    } else {
        match int_pow(base, power.unsigned_abs()) {
            Ok(p) => value / p,
            Err(_) => {
                let mut v = value;
                for _ in 0..power.unsigned_abs() {
                    v /= base;
                }
                v
            }
        }
    };
    if scaled.is_finite() {
        Ok(scaled)
    } else {
        Err(Error::Overflow)
    }
}

/// A logarithm known only as a real number with an error bound, as produced
/// by a change of base.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LogEstimate {
    pub base: f64,
    pub value: f64,
    pub error_bound: f64,
}

impl From<&LogValue> for LogEstimate {
    fn from(v: &LogValue) -> Self {
        LogEstimate {
            base: v.base(),
            value: v.value(),
            error_bound: v.error_bound(),
        }
    }
}

impl From<LogValue> for LogEstimate {
    fn from(v: LogValue) -> Self {
        (&v).into()
    }
}

/// `log_p(y) = log_q(y) / log_q(p)` where `q` is the ladder base.
pub fn convert_base(x: &LogEstimate, new_base: f64, ladder_q: &RootLadder) -> Result<LogEstimate> {
    if !(new_base > 1.0 && new_base.is_finite()) {
        return Err(Error::BadBase(new_base));
    }
    if x.base != ladder_q.base() {
        return Err(Error::BaseMismatch {
            expected: x.base,
            found: ladder_q.base(),
        });
    }
    let log_p = log_dyadic(new_base, ladder_q)?;
    let divisor = log_p.value();
    if divisor <= 0.0 {
        // p is closer to 1 than the ladder can resolve
        return Err(Error::BadBase(new_base));
    }
    let value = x.value / divisor;
    let error_bound = (x.error_bound + x.value.abs() * log_p.error_bound() / divisor) / divisor;
    Ok(LogEstimate {
        base: new_base,
        value,
        error_bound,
    })
}

/// `(log(y1 * y2), log(y1) + log(y2))`, both through [`log_dyadic`].
pub fn log_product_check(y1: f64, y2: f64, ladder: &RootLadder) -> Result<(f64, f64)> {
    let product = y1 * y2;
    if y1 > 0.0 && y2 > 0.0 && !product.is_finite() {
        return Err(Error::Overflow);
    }
    let joint = log_dyadic(product, ladder)?;
    let a = log_dyadic(y1, ladder)?;
    let b = log_dyadic(y2, ladder)?;
    Ok((joint.value(), a.value() + b.value()))
}
