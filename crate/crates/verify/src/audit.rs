//! Source scan that keeps host transcendental and square-root calls out of
//! the library and CLI.
//!
//! Test code is exempt: files under `tests/` or `benches/` directories, and
//! any item annotated `#[cfg(test)]`.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use regex::Regex;
use serde::Serialize;
use thiserror::Error;
use walkdir::WalkDir;

const EXEMPT_DIRS: &[&str] = &["tests", "benches", "target"];

const FUNCTIONS: &str = "sqrt|cbrt|exp|exp2|exp_m1|ln|ln_1p|log|log2|log10|powf|powi|hypot|\
sin|cos|tan|sin_cos|sinh|cosh|tanh|asin|acos|atan|atan2|asinh|acosh|atanh";

const CONSTANTS: &str =
    "E|LN_2|LN_10|LOG2_E|LOG10_E|LOG2_10|LOG10_2|SQRT_2|FRAC_1_SQRT_2|FRAC_2_SQRT_PI";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub file: PathBuf,
    pub line: usize,
    pub pattern: String,
    pub text: String,
}

#[derive(Debug, Error)]
pub enum AuditError {
    #[error("failed to read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
}

fn patterns() -> &'static [Regex] {
    static PATTERNS: OnceLock<Vec<Regex>> = OnceLock::new();
    PATTERNS.get_or_init(|| {
        [
            format!(r"\.\s*({FUNCTIONS})\s*\("),
            format!(r"\b(f32|f64)\s*::\s*({FUNCTIONS})\b"),
            r"\blibm\s*::".to_string(),
            format!(r"\bconsts\s*::\s*(\{{[^}}]*\b({CONSTANTS})\b|({CONSTANTS})\b)"),
        ]
        .iter()
        .map(|p| Regex::new(p).expect("valid audit pattern"))
        .collect()
    })
}

/// Scan every `.rs` file below `source_root`.
pub fn audit_no_intrinsics(source_root: &Path) -> Result<Vec<Violation>, AuditError> {
    let mut violations = Vec::new();
    let walker = WalkDir::new(source_root)
        .sort_by_file_name()
        .into_iter()
        .filter_entry(|e| {
            e.depth() == 0
                || !(e.file_type().is_dir()
                    && EXEMPT_DIRS.contains(&e.file_name().to_string_lossy().as_ref()))
        });
    for entry in walker {
        let entry = entry.map_err(|e| AuditError::Io {
            path: e.path().map(Path::to_path_buf).unwrap_or_default(),
            source: e.into(),
        })?;
        let path = entry.path();
        if !entry.file_type().is_file() || path.extension().is_none_or(|x| x != "rs") {
            continue;
        }
        let text = fs::read_to_string(path).map_err(|source| AuditError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        violations.extend(scan_source(path, &text));
    }
    Ok(violations)
}

/// Scan one file's contents.
pub fn scan_source(path: &Path, text: &str) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut in_block_comment = false;
    // brace depth of the #[cfg(test)] item being skipped
    let mut skip: Option<i32> = None;
    let mut pending_cfg_test = false;

    for (idx, raw) in text.lines().enumerate() {
        let code = strip_comments(raw, &mut in_block_comment);
        let trimmed = code.trim();

        if skip.is_none() && (trimmed.starts_with("#[cfg(test)]") || pending_cfg_test) {
            pending_cfg_test = false;
            let rest = trimmed.strip_prefix("#[cfg(test)]").unwrap_or(trimmed);
            let opens = rest.matches('{').count() as i32 - rest.matches('}').count() as i32;
            if rest.contains('{') {
                if opens > 0 {
                    skip = Some(opens);
                }
            } else if rest.trim_end().ends_with(';') {
                // a single-line item such as `use ...;`
            } else {
                pending_cfg_test = true;
            }
            continue;
        }
        if let Some(depth) = skip.as_mut() {
            *depth += code.matches('{').count() as i32 - code.matches('}').count() as i32;
            if *depth <= 0 {
                skip = None;
            }
            continue;
        }

        for re in patterns() {
            if let Some(m) = re.find(&code) {
                out.push(Violation {
                    file: path.to_path_buf(),
                    line: idx + 1,
                    pattern: m.as_str().to_string(),
                    text: raw.trim().to_string(),
                });
                break;
            }
        }
    }
    out
}

/// Drop `//` and `/* */` comments, ignoring comment markers inside string
/// literals.
fn strip_comments(line: &str, in_block: &mut bool) -> String {
    let mut out = String::with_capacity(line.len());
    let mut chars = line.chars().peekable();
    let mut in_string = false;
    while let Some(c) = chars.next() {
        if *in_block {
            if c == '*' && chars.peek() == Some(&'/') {
                chars.next();
                *in_block = false;
            }
            continue;
        }
        if in_string {
            out.push(c);
            if c == '\\' {
                if let Some(n) = chars.next() {
                    out.push(n);
                }
            } else if c == '"' {
                in_string = false;
            }
            continue;
        }
        match c {
            '"' => {
                in_string = true;
                out.push(c);
            }
            '/' if chars.peek() == Some(&'/') => break,
            '/' if chars.peek() == Some(&'*') => {
                chars.next();
                *in_block = true;
            }
            _ => out.push(c),
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scan(src: &str) -> Vec<Violation> {
        scan_source(Path::new("x.rs"), src)
    }

    #[test]
    fn flags_method_and_path_calls() {
        assert_eq!(scan("let r = x.sqrt();").len(), 1);
        assert_eq!(scan("let r = f64::ln(x);").len(), 1);
        assert_eq!(scan("let r = x . powf (0.5);").len(), 1);
        assert_eq!(scan("use std::f64::consts::LN_10;").len(), 1);
        assert_eq!(scan("use std::f64::consts::{PI, E};").len(), 1);
        assert_eq!(scan("let y = libm::exp(x);").len(), 1);
        let v = scan("fn a() {}\nfn b() { x.exp() }\n");
        assert_eq!(v[0].line, 2);
    }

    #[test]
    fn ignores_lookalikes() {
        assert!(scan("let r = heron.root(x);").is_empty());
        assert!(scan("let r = meltdown_core::sqrt(x);").is_empty());
        assert!(scan("let s = log_dyadic(x, &l);").is_empty());
        assert!(scan("let e = x.exponent();").is_empty());
        assert!(scan("use std::f64::consts::PI;").is_empty());
        assert!(scan("let x = f64::EPSILON;").is_empty());
    }

    #[test]
    fn ignores_comments_and_strings() {
        assert!(scan("// x.sqrt() is banned").is_empty());
        assert!(scan("/// uses f64::ln internally? no").is_empty());
        assert!(scan("/* x.sqrt() */ let a = 1;").is_empty());
        assert!(scan("/*\n x.ln()\n*/").is_empty());
        assert!(scan(r#"let s = "// not a comment"; let r = x.sqrt();"#).len() == 1);
    }

    #[test]
    fn skips_cfg_test_items() {
        let src = "fn f() {}\n#[cfg(test)]\nmod tests {\n    fn g() { 2f64.sqrt(); }\n}\nfn h() { 3f64.ln(); }\n";
        let v = scan(src);
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].line, 6);
        let inline = "#[cfg(test)] mod t { fn g() { 2f64.sqrt(); } }\nfn h() { 1f64.exp(); }";
        assert_eq!(scan(inline).len(), 1);
        let single = "#[cfg(test)]\nuse std::f64::consts::E;\nfn h() { 1f64.exp(); }";
        assert_eq!(scan(single).len(), 1);
    }
}
