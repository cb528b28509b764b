//! Log/antilog tables at dyadic spacing, and multiplication by table lookup.

use serde::Serialize;

use crate::arith::pow2_neg;
use crate::dyadic::DyadicExponent;
use crate::engine::{antilog_real, log_dyadic, scale_by_power};
use crate::error::{Error, Result};
use crate::format::format_sig;
use crate::ladder::RootLadder;

/// Largest table level; 2^16 entries.
pub const MAX_TABLE_LEVEL: u32 = 16;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TableEntry {
    pub mantissa_exponent: DyadicExponent,
    pub value: f64,
}

/// `base^(k/2^level)` for `k = 0..2^level`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogTable {
    pub base: f64,
    pub level: u32,
    pub entries: Vec<TableEntry>,
    pub built_from: u32,
}

pub fn build_table(ladder: &RootLadder, level: u32) -> Result<LogTable> {
    let max = MAX_TABLE_LEVEL.min(ladder.depth());
    if level > max {
        return Err(Error::LevelOutOfRange { level, min: 0, max });
    }
    let entries = (0..1u64 << level)
        .map(|k| {
            Ok(TableEntry {
                mantissa_exponent: DyadicExponent::new(k as i64, level)?,
                value: ladder.rung_product(k, level),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LogTable {
        base: ladder.base(),
        level,
        entries,
        built_from: ladder.depth(),
    })
}

impl LogTable {
    /// Half the grid spacing, in log units.
    pub fn half_step(&self) -> f64 {
        pow2_neg(self.level + 1)
    }

    /// CSV with header `mantissa_exponent,value`; mantissas as exact
    /// decimals, values to 12 significant digits.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("mantissa_exponent,value\n");
        for e in &self.entries {
            out.push_str(&e.mantissa_exponent.to_decimal_string());
            out.push(',');
            out.push_str(&format_sig(e.value, 12));
            out.push('\n');
        }
        out
    }

    fn lookup_exact(&self, mantissa: DyadicExponent) -> f64 {
        let k = mantissa.round_to_level(self.level);
        if k.floor() >= 1 {
            // rounded up to the next decade
            self.base
        } else {
            self.entries[k.numerator_at(self.level) as usize].value
        }
    }
}

/// Nearest-grid antilog of a mantissa in `[0, 1)`, ties to even. Returns the
/// tabulated value and the half-grid bound on the log-domain error.
pub fn lookup_antilog(table: &LogTable, mantissa: f64) -> Result<(f64, f64)> {
    if !(0.0..1.0).contains(&mantissa) {
        return Err(Error::OutOfRange {
            what: "mantissa",
            value: mantissa,
        });
    }
    // 48 bits is finer than any f64 mantissa in [0.5, 1) and plenty below
    let exact = DyadicExponent::from_real(mantissa, crate::ladder::MAX_DEPTH)?;
    Ok((table.lookup_exact(exact), table.half_step()))
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MultiplyDetail {
    pub x1: f64,
    pub x2: f64,
    pub sum: f64,
    pub characteristic: i32,
    pub mantissa: f64,
    /// Value read from the table for the mantissa.
    pub antilog: f64,
    /// Half-grid log error of the lookup.
    pub grid_error: f64,
    /// Bound on `|estimate / exact - 1|`.
    pub relative_error_bound: f64,
}

/// Multiply by adding logs and looking up the antilog of the mantissa.
pub fn multiply_via_logs(
    y1: f64,
    y2: f64,
    table: &LogTable,
    ladder: &RootLadder,
) -> Result<(f64, MultiplyDetail)> {
    if table.base != ladder.base() {
        return Err(Error::BaseMismatch {
            expected: table.base,
            found: ladder.base(),
        });
    }
    let x1 = log_dyadic(y1, ladder)?;
    let x2 = log_dyadic(y2, ladder)?;
    let sum = x1.checked_add(&x2)?;
    let characteristic = sum.characteristic();
    let mantissa = sum.mantissa();
    let antilog = table.lookup_exact(mantissa);
    let estimate = scale_by_power(antilog, table.base, characteristic)?;

    let log_error = sum.error_bound() + table.half_step();
    let relative_error_bound = antilog_real(log_error, ladder)? - 1.0;
    Ok((
        estimate,
        MultiplyDetail {
            x1: x1.value(),
            x2: x2.value(),
            sum: sum.value(),
            characteristic,
            mantissa: mantissa.value(),
            antilog,
            grid_error: table.half_step(),
            relative_error_bound,
        },
    ))
}
