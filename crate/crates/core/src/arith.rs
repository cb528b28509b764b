//! Heron square roots and integer powers.
//!
//! Nothing in this crate calls a host square root, logarithm or exponential.
//! Every irrational quantity is built from the four arithmetic operations,
//! and the square root below is the only iterative primitive.

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_REL_TOL: f64 = 1e-13;
pub const DEFAULT_MAX_ITERATIONS: usize = 64;

/// One row of a Heron iteration: the current guess `x` and the quotient
/// `y = input / x`. The next guess is their mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HeronStep {
    pub x: f64,
    pub y: f64,
}

/// Full history of one square root computation.
///
/// `iterations[0]` holds the initial guess. The last entry holds `result`,
/// so a converged trace of `steps_used` averaging steps has
/// `steps_used + 1` rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SqrtTrace {
    pub input: f64,
    pub initial_guess: f64,
    pub iterations: Vec<HeronStep>,
    pub result: f64,
    pub converged: bool,
    pub steps_used: usize,
}

/// Heron iteration settings.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Heron {
    pub rel_tol: f64,
    pub max_iterations: usize,
    pub initial_guess: Option<f64>,
}

impl Default for Heron {
    fn default() -> Self {
        Heron {
            rel_tol: DEFAULT_REL_TOL,
            max_iterations: DEFAULT_MAX_ITERATIONS,
            initial_guess: None,
        }
    }
}

impl Heron {
    pub fn new(rel_tol: f64, max_iterations: usize) -> Self {
        Heron {
            rel_tol,
            max_iterations,
            initial_guess: None,
        }
    }

    /// Start from `guess` instead of the digit-count heuristic.
    pub fn with_guess(mut self, guess: f64) -> Self {
        self.initial_guess = Some(guess);
        self
    }

    /// Run the iteration and return the trace even if it did not converge.
    ///
    /// Stops when two consecutive guesses agree to `rel_tol` relative to the
    /// newer one, or when they are bit-identical.
    pub fn trace(&self, input: f64) -> Result<SqrtTrace> {
        if !(input > 0.0 && input.is_finite()) {
            return Err(Error::NonPositiveInput(input));
        }
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidParameter("rel_tol must lie in (0, 1)"));
        }
        if self.max_iterations == 0 {
            return Err(Error::InvalidParameter("max_iterations must be at least 1"));
        }
        let guess = match self.initial_guess {
            Some(g) if g > 0.0 && g.is_finite() => g,
            Some(_) => return Err(Error::InvalidParameter("initial guess must be positive")),
            None => initial_guess(input),
        };

        let mut iterations = Vec::with_capacity(8);
        let mut current = guess;
        for step in 1..=self.max_iterations {
            let quotient = input / current;
            iterations.push(HeronStep {
                x: current,
                y: quotient,
            });
            let next = 0.5 * (current + quotient);
            if next == current || (next - current).abs() <= self.rel_tol * next {
                iterations.push(HeronStep {
                    x: next,
                    y: input / next,
                });
                return Ok(SqrtTrace {
                    input,
                    initial_guess: guess,
                    iterations,
                    result: next,
                    converged: true,
                    steps_used: step,
                });
            }
            current = next;
        }
        Ok(SqrtTrace {
            input,
            initial_guess: guess,
            iterations,
            result: current,
            converged: false,
            steps_used: self.max_iterations,
        })
    }

    pub fn root(&self, input: f64) -> Result<f64> {
        let trace = self.trace(input)?;
        if trace.converged {
            Ok(trace.result)
        } else {
            Err(Error::NoConvergence {
                input,
                max_iterations: self.max_iterations,
            })
        }
    }
}

/// Square root of `x` by Heron iteration, starting from [`initial_guess`].
pub fn heron_sqrt(x: f64, rel_tol: f64, max_iterations: usize) -> Result<SqrtTrace> {
    let trace = Heron::new(rel_tol, max_iterations).trace(x)?;
    if !trace.converged {
        return Err(Error::NoConvergence {
            input: x,
            max_iterations,
        });
    }
    Ok(trace)
}

/// Square root with the default tolerance.
pub fn sqrt(x: f64) -> Result<f64> {
    Heron::default().root(x)
}

/// Starting guess that needs no logarithm: `10^(d/2)` (rounded down) where
/// `d` counts the digits before the radix point. Inputs below 1 are scaled
/// up by 100 until they reach 1 and the guess is scaled back by 10 per step.
pub fn initial_guess(x: f64) -> f64 {
    if x >= 1.0 {
        let mut digits = 1u32;
        let mut bound = 10.0;
        while bound <= x {
            bound *= 10.0;
            digits += 1;
        }
        // never overflows: digits <= 309
        int_pow(10.0, digits / 2).unwrap_or(1.0)
    } else {
        let mut scaled = x;
        let mut shifts = 0u32;
        while scaled < 1.0 {
            scaled *= 100.0;
            shifts += 1;
        }
        let mut guess = initial_guess(scaled);
        for _ in 0..shifts {
            guess /= 10.0;
        }
        guess
    }
}

/// `base` multiplied by itself `exponent` times, by binary exponentiation.
pub fn int_pow(base: f64, exponent: u32) -> Result<f64> {
    if !base.is_finite() {
        return Err(Error::OutOfRange {
            what: "base",
            value: base,
        });
    }
    let mut result = 1.0;
    let mut square = base;
    let mut e = exponent;
    while e > 0 {
        if e & 1 == 1 {
            result *= square;
        }
        e >>= 1;
        if e > 0 {
            square *= square;
        }
    }
    if result.is_finite() {
        Ok(result)
    } else {
        Err(Error::Overflow)
    }
}

/// Exact `2^-n` for `n <= 1022`.
pub(crate) fn pow2_neg(n: u32) -> f64 {
    let mut v = 1.0;
    for _ in 0..n {
        v *= 0.5;
    }
    v
}
