//! Shared fixtures for the integration tests.

#![allow(dead_code)]

pub mod displays;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use riordan::{RiordanElement, TruncatedSeries};

pub const BATTERY_SIZE: usize = 50;
pub const BATTERY_ORDER: usize = 16;

/// Element with polynomial `g` and `f` given by ascending integer coefficients.
pub fn element(g: &[i64], f: &[i64], order: usize) -> RiordanElement {
    RiordanElement::new(TruncatedSeries::from_ints(g, order), TruncatedSeries::from_ints(f, order))
        .expect("valid element")
}

/// `((1-x)^k, x(1-x)^k)^{-1}`.
pub fn power_pair_inverse(k: usize, order: usize) -> RiordanElement {
    let base = TruncatedSeries::from_ints(&[1, -1], order).pow(k as i64).expect("polynomial power");
    RiordanElement::new(base.clone(), base.shift_up(1).truncate(order))
        .and_then(|e| e.inverse())
        .expect("valid element")
}

/// Normalized elements `g = 1 + ...`, `f = x + ...` with coefficients in `[-3, 3]`
/// and degree at most 4, from a fixed seed.
pub fn battery() -> Vec<RiordanElement> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    (0..BATTERY_SIZE)
        .map(|_| {
            let mut g = vec![1];
            g.extend((0..4).map(|_| rng.gen_range(-3..=3)));
            let mut f = vec![0, 1];
            f.extend((0..3).map(|_| rng.gen_range(-3..=3)));
            element(&g, &f, BATTERY_ORDER)
        })
        .collect()
}
