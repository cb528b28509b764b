//! The ladder of repeated square roots `b, b^(1/2), b^(1/4), ..., b^(1/2^n)`.

use serde::Serialize;

use crate::arith::Heron;
use crate::error::{Error, Result};

/// Deepest ladder supported. At `2^-48` the top rung of a base-10 ladder is
/// within a few ulps of 1.
pub const MAX_DEPTH: u32 = 48;
/// Depth used by the log engine unless told otherwise (resolution `2^-40`).
pub const DEFAULT_DEPTH: u32 = 40;

/// Immutable cache of `base^(1/2^j)` for `j = 0..=depth`.
///
/// Next to each rung the ladder keeps its excess over one, `rung - 1`,
/// carried with full relative precision. Deep rungs sit so close to 1 that
/// subtracting 1 from the stored rung would keep only a handful of
/// significant bits; the excess is instead propagated with
/// `e_{j+1} = e_j / (1 + rung_{j+1})`, which follows from
/// `rung_j - 1 = (rung_{j+1} - 1)(rung_{j+1} + 1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RootLadder {
    base: f64,
    depth: u32,
    rungs: Vec<f64>,
    excess: Vec<f64>,
    rel_tol_used: f64,
}

impl RootLadder {
    pub fn build(base: f64, depth: u32) -> Result<Self> {
        Self::build_with(base, depth, &Heron::default())
    }

    pub fn build_with(base: f64, depth: u32, heron: &Heron) -> Result<Self> {
        if !(base > 1.0 && base.is_finite()) {
            return Err(Error::BadBase(base));
        }
        if depth > MAX_DEPTH {
            return Err(Error::DepthOutOfRange {
                depth,
                max: MAX_DEPTH,
            });
        }
        let heron = Heron {
            initial_guess: None,
            ..*heron
        };
        let mut rungs = Vec::with_capacity(depth as usize + 1);
        let mut excess = Vec::with_capacity(depth as usize + 1);
        rungs.push(base);
        excess.push(base - 1.0);
        for j in 0..depth as usize {
            let next = heron.root(rungs[j])?;
            excess.push(excess[j] / (1.0 + next));
            rungs.push(next);
        }
        Ok(RootLadder {
            base,
            depth,
            rungs,
            excess,
            rel_tol_used: heron.rel_tol,
        })
    }

    pub fn base(&self) -> f64 {
        self.base
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    pub fn rel_tol_used(&self) -> f64 {
        self.rel_tol_used
    }

    /// All rungs, `rungs()[j] = base^(1/2^j)`.
    pub fn rungs(&self) -> &[f64] {
        &self.rungs
    }

    pub fn rung(&self, j: u32) -> Result<f64> {
        self.check_index(j)?;
        Ok(self.rungs[j as usize])
    }

    /// `rung(j) - 1`, the ε/x of the tangent construction.
    pub fn epsilon(&self, j: u32) -> Result<f64> {
        self.check_index(j)?;
        Ok(self.excess[j as usize])
    }

    pub(crate) fn excess_unchecked(&self, j: u32) -> f64 {
        self.excess[j as usize]
    }

    /// Product of the rungs picked out by the binary digits of
    /// `numerator / 2^level`: bit `i` (least significant first) stands for
    /// `2^-(level - i)` and selects rung `level - i`.
    pub(crate) fn rung_product(&self, numerator: u64, level: u32) -> f64 {
        debug_assert!(level <= self.depth);
        let mut product = 1.0;
        for i in 0..level {
            if (numerator >> i) & 1 == 1 {
                product *= self.rungs[(level - i) as usize];
            }
        }
        product
    }

    fn check_index(&self, j: u32) -> Result<()> {
        if j > self.depth {
            Err(Error::IndexOutOfRange {
                index: j,
                depth: self.depth,
            })
        } else {
            Ok(())
        }
    }
}

pub fn build_ladder(base: f64, depth: u32) -> Result<RootLadder> {
    RootLadder::build(base, depth)
}

pub fn rung_epsilon(ladder: &RootLadder, j: u32) -> Result<f64> {
    ladder.epsilon(j)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    #[test]
    fn base_ten_rungs() {
        let l = build_ladder(10.0, 20).unwrap();
        assert!(close(l.rungs()[1], 3.162277660, 5e-10));
        assert!(close(l.rungs()[3], 1.333521432, 5e-10));
        assert!(close(l.rungs()[4], 1.154781985, 5e-10));
        assert!(close(l.rungs()[20], 1.000002196, 5e-10));
        assert!(close(l.rungs()[3], 10f64.powf(0.125), 1e-15));
    }

    #[test]
    fn rung_zero_is_base() {
        let l = build_ladder(10.0, 0).unwrap();
        assert_eq!(l.rungs(), &[10.0]);
        assert_eq!(rung_epsilon(&l, 0), Ok(9.0));
    }

    #[test]
    fn epsilon_matches_rung_minus_one() {
        let l = build_ladder(10.0, 48).unwrap();
        assert!(close(l.epsilon(1).unwrap(), 10f64.sqrt() - 1.0, 1e-15));
        for j in 0..=48 {
            let e = l.epsilon(j).unwrap();
            assert!((l.rungs()[j as usize] - 1.0 - e).abs() <= 2.0 * f64::EPSILON);
            // the oracle excess, 10^(2^-j) - 1, via exp_m1
            let oracle = (std::f64::consts::LN_10 / 2f64.powi(j as i32)).exp_m1();
            assert!(
                (e - oracle).abs() / oracle < 1e-14,
                "rung {j}: {e} vs {oracle}"
            );
        }
    }

    #[test]
    fn errors() {
        assert_eq!(build_ladder(1.0, 4), Err(Error::BadBase(1.0)));
        assert_eq!(build_ladder(0.5, 4), Err(Error::BadBase(0.5)));
        assert!(matches!(
            build_ladder(f64::INFINITY, 4),
            Err(Error::BadBase(_))
        ));
        assert_eq!(
            build_ladder(10.0, 49),
            Err(Error::DepthOutOfRange { depth: 49, max: 48 })
        );
        let l = build_ladder(10.0, 4).unwrap();
        assert_eq!(
            l.rung(5),
            Err(Error::IndexOutOfRange { index: 5, depth: 4 })
        );
        assert!(l.epsilon(5).is_err());
    }

    #[test]
    fn rung_products_select_bits() {
        let l = build_ladder(10.0, 8).unwrap();
        // 3/8 = 1/4 + 1/8
        let p = l.rung_product(3, 3);
        assert_eq!(p, l.rungs()[3] * l.rungs()[2]);
        assert_eq!(l.rung_product(0, 3), 1.0);
        assert!(close(p, 10f64.powf(0.375), 1e-14));
    }
}
