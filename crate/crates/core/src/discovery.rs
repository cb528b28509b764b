//! Finding e from the slope of the logarithm curve.
//!
//! Setting `1 + ε/x` equal to rung `n` of the ladder makes
//! `log(1 + ε/x) = 2^-n` exactly, so the chord slope at `x` is
//! `2^-n / ε`. As `n` grows this tends to `log_b(e) / x`, and the antilog of
//! the slope at `x = 1` recovers e itself.

use serde::Serialize;

use crate::arith::pow2_neg;
use crate::engine::{antilog_real, log_dyadic};
use crate::error::{Error, Result};
use crate::ladder::RootLadder;

pub const MIN_SLOPE_LEVEL: u32 = 4;
pub const MIN_E_LEVEL: u32 = 10;
pub const MIN_RIEMANN_STEPS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SlopeEstimate {
    /// Base of the ladder the slope was measured on.
    pub base: f64,
    pub x: f64,
    pub ladder_level: u32,
    pub epsilon: f64,
    pub slope: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DiscoveredE {
    pub level: u32,
    /// The limit-sequence term `t_n`, approximately `log_b(e)`.
    pub slope: f64,
    pub estimate: f64,
}

fn check_level(n: u32, min: u32, ladder: &RootLadder) -> Result<()> {
    if n < min || n > ladder.depth() {
        Err(Error::LevelOutOfRange {
            level: n,
            min,
            max: ladder.depth(),
        })
    } else {
        Ok(())
    }
}

/// Chord slope of `log_b` at `x` with `1 + ε/x = b^(1/2^n)`.
pub fn slope_log10(x: f64, n: u32, ladder: &RootLadder) -> Result<SlopeEstimate> {
    if !(x > 0.0 && x.is_finite()) {
        return Err(Error::NonPositiveInput(x));
    }
    check_level(n, MIN_SLOPE_LEVEL, ladder)?;
    let epsilon = x * ladder.excess_unchecked(n);
    Ok(SlopeEstimate {
        base: ladder.base(),
        x,
        ladder_level: n,
        epsilon,
        slope: pow2_neg(n) / epsilon,
    })
}

/// `t_n = 1 / (2^n (b^(1/2^n) - 1))` for `n = 4..=n_max`.
pub fn limit_sequence(n_max: u32, ladder: &RootLadder) -> Result<Vec<(u32, f64)>> {
    check_level(n_max, MIN_SLOPE_LEVEL, ladder)?;
    Ok((MIN_SLOPE_LEVEL..=n_max)
        .map(|n| (n, pow2_neg(n) / ladder.excess_unchecked(n)))
        .collect())
}

/// Antilog of `t_n`.
pub fn discover_e(n: u32, ladder: &RootLadder) -> Result<DiscoveredE> {
    check_level(n, MIN_E_LEVEL, ladder)?;
    let slope = pow2_neg(n) / ladder.excess_unchecked(n);
    Ok(DiscoveredE {
        level: n,
        slope,
        estimate: antilog_real(slope, ladder)?,
    })
}

/// Slope of `log_p` at `x`: the ladder-base slope divided by `log_b(p)`.
pub fn slope_log_p(p: f64, x: f64, n: u32, ladder: &RootLadder) -> Result<f64> {
    if !(p > 1.0 && p.is_finite()) {
        return Err(Error::BadBase(p));
    }
    let slope = slope_log10(x, n, ladder)?;
    let log_p = log_dyadic(p, ladder)?.value();
    if log_p <= 0.0 {
        return Err(Error::BadBase(p));
    }
    Ok(slope.slope / log_p)
}

/// Trapezoid rule for the area under `1/t` from 1 to `x`.
pub fn riemann_ln(x: f64, steps: usize) -> Result<f64> {
    if !(x >= 1.0 && x.is_finite()) {
        return Err(Error::OutOfRange {
            what: "area upper limit",
            value: x,
        });
    }
    if steps < MIN_RIEMANN_STEPS {
        return Err(Error::InvalidParameter(
            "riemann_ln needs at least 16 steps",
        ));
    }
    let h = (x - 1.0) / steps as f64;
    let interior: f64 = (1..steps).map(|i| 1.0 / (1.0 + i as f64 * h)).sum();
    Ok(h * (0.5 * (1.0 + 1.0 / x) + interior))
}
