//! Print oracle reports (and optionally audit results) as JSON lines.
//!
//! usage: meltdown-oracle [--samples N] [--seed S] [--audit DIR]... [OP]...

use std::path::PathBuf;
use std::process::ExitCode;

use meltdown_verify::{audit_no_intrinsics, oracle_compare, Operation};

fn usage() -> ExitCode {
    eprintln!("usage: meltdown-oracle [--samples N] [--seed S] [--audit DIR]... [OP]...");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let mut samples = 1000usize;
    let mut seed = 42u64;
    let mut audits: Vec<PathBuf> = Vec::new();
    let mut ops = Vec::new();

    let mut args = std::env::args().skip(1);
    while let Some(arg) = args.next() {
        match arg.as_str() {
            "--samples" => match args.next().and_then(|v| v.parse().ok()) {
                Some(n) => samples = n,
                None => return usage(),
            },
            "--seed" => match args.next().and_then(|v| v.parse().ok()) {
                Some(s) => seed = s,
                None => return usage(),
            },
            "--audit" => match args.next() {
                Some(dir) => audits.push(dir.into()),
                None => return usage(),
            },
            "-h" | "--help" => return usage(),
            name => match name.parse::<Operation>() {
                Ok(op) => ops.push(op),
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            },
        }
    }
    if ops.is_empty() && audits.is_empty() {
        ops = Operation::ALL.to_vec();
    }

    let mut ok = true;
    for op in ops {
        match oracle_compare(op, samples, seed) {
            Ok(report) => {
                ok &= report.pass;
                println!("{}", report.to_json_line());
            }
            Err(e) => {
                eprintln!("error: {op}: {e}");
                ok = false;
            }
        }
    }
    for dir in audits {
        match audit_no_intrinsics(&dir) {
            Ok(violations) => {
                ok &= violations.is_empty();
                let line = serde_json::json!({
                    "audit": dir,
                    "violations": violations,
                    "pass": violations.is_empty(),
                });
                println!("{line}");
            }
            Err(e) => {
                eprintln!("error: {e}");
                ok = false;
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
