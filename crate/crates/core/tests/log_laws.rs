use meltdown_core::{
    antilog_dyadic, build_ladder, convert_base, decompose, int_pow, log_dyadic, log_product_check,
    LogEstimate, RootLadder,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const DEPTH: u32 = 40;

fn grid() -> f64 {
    2f64.powi(-(DEPTH as i32))
}

fn ladder() -> RootLadder {
    build_ladder(10.0, DEPTH).unwrap()
}

fn samples(seed: u64, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (a, b) = (lo.log10(), hi.log10());
    (0..n).map(|_| 10f64.powf(rng.random_range(a..b))).collect()
}

#[test]
fn log_matches_host_log10() {
    let l = ladder();
    for y in samples(42, 1000, 1e-8, 1e8) {
        let v = log_dyadic(y, &l).unwrap();
        let err = v.value() - y.log10();
        assert!(err.abs() <= 3.0 * grid(), "y = {y}: {err}");
        assert!(err.abs() <= v.error_bound() + 1e-14);
    }
}

#[test]
fn antilog_undoes_log() {
    let l = ladder();
    let tol = 3.0 * std::f64::consts::LN_10 * grid();
    for y in samples(1, 1000, 1e-8, 1e8) {
        let back = antilog_dyadic(&log_dyadic(y, &l).unwrap(), &l).unwrap();
        assert!((back / y - 1.0).abs() <= tol, "y = {y}");
    }
}

#[test]
fn log_of_antilog_is_identity_on_the_grid() {
    let l = ladder();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..1000 {
        let x = rng.random_range(-8.0..8.0);
        let v = meltdown_core::to_log_value(x, &l).unwrap();
        let y = antilog_dyadic(&v, &l).unwrap();
        let back = log_dyadic(y, &l).unwrap();
        assert!((back.value() - v.value()).abs() <= 2.0 * grid(), "x = {x}");
    }
}

#[test]
fn product_rule() {
    let l = ladder();
    let a = samples(5, 1000, 1e-8, 1e8);
    let b = samples(6, 1000, 1e-8, 1e8);
    for (&y1, &y2) in a.iter().zip(&b) {
        let (joint, sum) = log_product_check(y1, y2, &l).unwrap();
        assert!((joint - sum).abs() <= 3.0 * grid(), "{y1} * {y2}");
    }
}

#[test]
fn power_rule() {
    let l = ladder();
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let y = rng.random_range(1.1..9.0);
        let m = rng.random_range(1..=10u32);
        let lhs = log_dyadic(int_pow(y, m).unwrap(), &l).unwrap().value();
        let rhs = m as f64 * log_dyadic(y, &l).unwrap().value();
        assert!((lhs - rhs).abs() <= (m + 1) as f64 * grid(), "{y}^{m}");
    }
}

#[test]
fn reciprocal_antisymmetry() {
    let l = ladder();
    for y in samples(13, 1000, 1e-8, 1e8) {
        let s = log_dyadic(1.0 / y, &l).unwrap().value() + log_dyadic(y, &l).unwrap().value();
        assert!(s.abs() <= 2.0 * grid(), "y = {y}: {s}");
    }
}

#[test]
fn greedy_residual_bounds() {
    let l = ladder();
    let top = l.rungs()[DEPTH as usize];
    for y in samples(17, 1000, 1e-8, 1e8) {
        let d = decompose(y, &l).unwrap();
        assert!(d.residual >= 1.0 && d.residual < top, "y = {y}");
        let m = d.log.mantissa().value();
        let truth = d.normalized.log10();
        assert!((0.0..1.0).contains(&m));
        assert!(truth - m > -1e-15 && truth - m < grid() + 1e-15);
    }
}

#[test]
fn base_change_round_trip() {
    let l10 = ladder();
    for p in [2.0, 3.0, 7.5, 16.0, 1.25] {
        let lp = build_ladder(p, DEPTH).unwrap();
        for y in samples(21, 100, 1e-6, 1e6) {
            let x = LogEstimate::from(log_dyadic(y, &l10).unwrap());
            let there = convert_base(&x, p, &l10).unwrap();
            let back = convert_base(&there, 10.0, &lp).unwrap();
            assert!(
                (back.value - x.value).abs() <= 4.0 * back.error_bound,
                "p = {p}, y = {y}"
            );
            let oracle = y.ln() / p.ln();
            assert!((there.value - oracle).abs() <= there.error_bound + 1e-13);
        }
    }
}

#[test]
fn other_bases() {
    let l2 = build_ladder(2.0, DEPTH).unwrap();
    assert_eq!(log_dyadic(1024.0, &l2).unwrap().value(), 10.0);
    assert_eq!(log_dyadic(0.125, &l2).unwrap().value(), -3.0);
    let l3 = build_ladder(3.0, DEPTH).unwrap();
    for y in samples(23, 200, 1e-5, 1e5) {
        let v = log_dyadic(y, &l3).unwrap().value();
        assert!((v - y.ln() / 3f64.ln()).abs() <= 3.0 * grid());
    }
}
