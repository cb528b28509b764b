//! Seeded comparisons against the host math library.

use std::fmt;
use std::str::FromStr;

use meltdown_core as core;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    HeronSqrt,
    LogDyadic,
    AntilogDyadic,
    ConvertBase,
    SlopeLog10,
    DiscoverE,
    RiemannLn,
}

impl Operation {
    pub const ALL: [Operation; 7] = [
        Operation::HeronSqrt,
        Operation::LogDyadic,
        Operation::AntilogDyadic,
        Operation::ConvertBase,
        Operation::SlopeLog10,
        Operation::DiscoverE,
        Operation::RiemannLn,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Operation::HeronSqrt => "heron_sqrt",
            Operation::LogDyadic => "log_dyadic",
            Operation::AntilogDyadic => "antilog_dyadic",
            Operation::ConvertBase => "convert_base",
            Operation::SlopeLog10 => "slope_log10",
            Operation::DiscoverE => "discover_e",
            Operation::RiemannLn => "riemann_ln",
        }
    }
}

impl fmt::Display for Operation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Operation {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, OracleError> {
        Operation::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| OracleError::UnknownOperation(s.to_string()))
    }
}

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("unknown operation `{0}`")]
    UnknownOperation(String),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error(transparent)]
    Core(#[from] core::Error),
}

/// Whether `max_error` is relative to the oracle value or absolute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    Relative,
    Absolute,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OracleReport {
    pub operation: String,
    pub samples: usize,
    pub seed: u64,
    pub metric: Metric,
    pub max_error: f64,
    /// Input that produced `max_error`.
    pub worst_input: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl OracleReport {
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

const DEPTH: u32 = 40;

fn grid() -> f64 {
    2f64.powi(-(DEPTH as i32))
}

fn log_uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    rng.random_range(lo.ln()..hi.ln()).exp()
}

struct Worst {
    error: f64,
    input: f64,
}

impl Worst {
    fn new() -> Self {
        Worst {
            error: 0.0,
            input: f64::NAN,
        }
    }

    fn record(&mut self, input: f64, error: f64) {
        // NaN errors always win so they cannot hide
        if error.is_nan() || error > self.error || self.input.is_nan() {
            self.error = if error.is_nan() { f64::INFINITY } else { error };
            self.input = input;
        }
    }
}

/// Compare `op` against host ground truth on `samples` seeded inputs.
pub fn oracle_compare(
    op: Operation,
    samples: usize,
    seed: u64,
) -> Result<OracleReport, OracleError> {
    if samples == 0 {
        return Err(OracleError::NoSamples);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = Worst::new();
    let ten = core::build_ladder(10.0, DEPTH)?;

    let (metric, tolerance) = match op {
        Operation::HeronSqrt => {
            for _ in 0..samples {
                let x = log_uniform(&mut rng, 1e-6, 1e12);
                let r = core::heron_sqrt(x, 1e-12, 64)?.result;
                worst.record(x, (r - x.sqrt()).abs() / x.sqrt());
            }
            (Metric::Relative, 1e-11)
        }
        Operation::LogDyadic => {
            for _ in 0..samples {
                let y = log_uniform(&mut rng, 1e-8, 1e8);
                let v = core::log_dyadic(y, &ten)?.value();
                worst.record(y, (v - y.log10()).abs());
            }
            (Metric::Absolute, 3.0 * grid())
        }
        Operation::AntilogDyadic => {
            for _ in 0..samples {
                let x = rng.random_range(-8.0..8.0);
                let v = core::antilog_real(x, &ten)?;
                let truth = 10f64.powf(x);
                worst.record(x, (v - truth).abs() / truth);
            }
            (Metric::Relative, 2.0 * std::f64::consts::LN_10 * grid())
        }
        Operation::ConvertBase => {
            for _ in 0..samples {
                let y = log_uniform(&mut rng, 1e-6, 1e6);
                let p = rng.random_range(2.0..20.0);
                let x = core::LogEstimate::from(core::log_dyadic(y, &ten)?);
                let v = core::convert_base(&x, p, &ten)?.value;
                worst.record(y, (v - y.ln() / p.ln()).abs());
            }
            (Metric::Absolute, 1e-10)
        }
        Operation::SlopeLog10 => {
            for _ in 0..samples {
                let x = log_uniform(&mut rng, 1e-3, 1e3);
                let s = core::slope_log10(x, 30, &ten)?.slope;
                let truth = std::f64::consts::LOG10_E / x;
                worst.record(x, (s - truth).abs() / truth);
            }
            (Metric::Relative, 1e-8)
        }
        Operation::DiscoverE => {
            // levels 20, 21, ... cycling up to the ladder depth
            for i in 0..samples {
                let n = 20 + (i as u32 % (DEPTH - 19));
                let e = core::discover_e(n, &ten)?.estimate;
                worst.record(
                    n as f64,
                    (e - std::f64::consts::E).abs() / std::f64::consts::E,
                );
            }
            (Metric::Relative, 1e-4)
        }
        Operation::RiemannLn => {
            for _ in 0..samples {
                let x = rng.random_range(1.0..20.0);
                let a = core::riemann_ln(x, 4096)?;
                worst.record(x, (a - x.ln()).abs());
            }
            (Metric::Absolute, 1e-5)
        }
    };

    Ok(OracleReport {
        operation: op.name().to_string(),
        samples,
        seed,
        metric,
        max_error: worst.error,
        worst_input: worst.input,
        tolerance,
        pass: worst.error <= tolerance,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_operation_passes() {
        for op in Operation::ALL {
            let r = oracle_compare(op, 200, 42).unwrap();
            assert!(r.pass, "{}", r.to_json_line());
        }
    }

    #[test]
    fn reports_are_deterministic() {
        for op in Operation::ALL {
            assert_eq!(
                oracle_compare(op, 50, 3).unwrap(),
                oracle_compare(op, 50, 3).unwrap()
            );
        }
    }

    #[test]
    fn names_round_trip() {
        for op in Operation::ALL {
            assert_eq!(op.name().parse::<Operation>().unwrap(), op);
        }
        assert!(matches!(
            "tan".parse::<Operation>(),
            Err(OracleError::UnknownOperation(_))
        ));
        assert!(matches!(
            oracle_compare(Operation::LogDyadic, 0, 1),
            Err(OracleError::NoSamples)
        ));
    }

    #[test]
    fn json_line_shape() {
        let r = oracle_compare(Operation::DiscoverE, 1, 0).unwrap();
        assert!(r.pass);
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["operation"], "discover_e");
        assert_eq!(v["metric"], "relative");
        assert_eq!(v["samples"], 1);
        assert_eq!(v["pass"], true);
    }
}
