use thiserror::Error;

/// Every failure the arithmetic kernels can report.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("input must be positive and finite, got {0}")]
    NonPositiveInput(f64),

    #[error("square root of {input} did not converge within {max_iterations} iterations")]
    NoConvergence { input: f64, max_iterations: usize },

    #[error("result overflows the representable range")]
    Overflow,

    #[error("logarithm base must be finite and greater than 1, got {0}")]
    BadBase(f64),

    #[error("ladder depth {depth} out of range (max {max})")]
    DepthOutOfRange { depth: u32, max: u32 },

    #[error("rung index {index} out of range for ladder of depth {depth}")]
    IndexOutOfRange { index: u32, depth: u32 },

    #[error("exponent level {level} is finer than ladder depth {depth}")]
    DepthMismatch { level: u32, depth: u32 },

    #[error("base mismatch: value is in base {expected}, ladder is base {found}")]
    BaseMismatch { expected: f64, found: f64 },

    #[error("radix {0} outside [2, 36]")]
    BadRadix(u32),

    #[error("digit {digit} out of range for radix {radix}")]
    DigitOutOfRange { digit: u32, radix: u32 },

    #[error("level {level} outside [{min}, {max}]")]
    LevelOutOfRange { level: u32, min: u32, max: u32 },

    #[error("{what} out of range: {value}")]
    OutOfRange { what: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
