//! Test-side tooling for `meltdown-core`: host-library oracles and the audit
//! that keeps those oracles out of the library itself.
//!
//! This crate is the one place outside test code allowed to call the host
//! math library. It is not a dependency of the library or the CLI.

pub mod audit;
pub mod oracle;

pub use audit::{audit_no_intrinsics, scan_source, AuditError, Violation};
pub use oracle::{oracle_compare, Metric, Operation, OracleError, OracleReport};
