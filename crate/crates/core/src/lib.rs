//! Logarithms rebuilt from arithmetic.
//!
//! Square roots come from Heron's iteration. Repeated square roots of a base
//! form a [`RootLadder`]; greedy division by its rungs yields the binary
//! digits of a logarithm ([`log_dyadic`]), and products of rungs give
//! antilogs. Base changes, log tables, positional numerals and the discovery
//! of e from the slope of the log curve are all built on those two moves.
//!
//! No host square root, exponential or logarithm is called anywhere outside
//! test code.

pub mod arith;
pub mod discovery;
pub mod dyadic;
pub mod engine;
pub mod error;
pub mod format;
pub mod ladder;
pub mod numeral;
pub mod tables;

pub use arith::{heron_sqrt, initial_guess, int_pow, sqrt, Heron, HeronStep, SqrtTrace};
pub use discovery::{
    discover_e, limit_sequence, riemann_ln, slope_log10, slope_log_p, DiscoveredE, SlopeEstimate,
};
pub use dyadic::{DyadicExponent, LogValue};
pub use engine::{
    antilog_dyadic, antilog_real, convert_base, decompose, log_dyadic, log_product_check,
    to_log_value, Decomposition, LogEstimate,
};
pub use error::{Error, Result};
pub use format::format_sig;
pub use ladder::{build_ladder, rung_epsilon, RootLadder, DEFAULT_DEPTH, MAX_DEPTH};
pub use numeral::{fractional_digits, from_radix, to_radix, RadixNumeral};
pub use tables::{
    build_table, lookup_antilog, multiply_via_logs, LogTable, MultiplyDetail, TableEntry,
};
