//! Helpers shared by the integration tests.

#![allow(dead_code)]

pub mod reference;

use bott_core::charalg::VirtualRep;
use bott_core::families::{DetNetType, Family};
use bott_core::localize::{bott_sum, validate_weights, FixedPoint, WeightVector};
use bott_core::polyfit::RatPoly;
use num_bigint::BigInt;
use rand::Rng;

/// Parses a representation, panicking on malformed test input.
pub fn rep(n: usize, s: &str) -> VirtualRep {
    VirtualRep::parse(n, s).unwrap_or_else(|e| panic!("bad test input {s:?}: {e}"))
}

/// A display written as `(den)^∨ ⊗ (num)`.
pub fn over(n: usize, den: &str, num: &str) -> VirtualRep {
    rep(n, den).dual().tensor(&rep(n, num)).unwrap()
}

/// `C(n, k)` for small arguments.
pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Bott sums at every degree in `ds` with the family's default weights.
pub fn degrees(
    family: Family,
    points: &[FixedPoint],
    ds: impl IntoIterator<Item = i64>,
) -> Vec<(i64, BigInt)> {
    let w = family.default_weights();
    ds.into_iter()
        .map(|d| (d, bott_sum(points, d, &w).unwrap()))
        .collect()
}

/// Evaluates a polynomial that must take an integer value.
pub fn eval_int(p: &RatPoly, d: i64) -> BigInt {
    let v = p.eval(d);
    assert!(v.is_integer(), "{p} is not integral at {d}");
    v.to_integer()
}

/// A random weight vector that passes validation for `points`.
pub fn random_valid_weights(points: &[FixedPoint], rng: &mut impl Rng) -> WeightVector {
    let n = points[0].n;
    loop {
        let w = WeightVector::new((0..=n).map(|_| rng.gen_range(-400i64..400)).collect());
        if validate_weights(points, &w).passed() {
            return w;
        }
    }
}

/// Tangent spaces of the five net types in `P^4`, written as
/// `(type, denominator, numerator)`.
pub const RULED_CUBIC_DISPLAYS: [(DetNetType, &str, &str); 5] = [
    (
        DetNetType::Chain,
        "x0*x1*x2*x3",
        "x0^3*x1 + x0^2*x1*x2 + x0*x1*x2^2 + x0^2*x1*x3 + x0*x1^2*x3 + x0^2*x2*x3 \
         + x1^2*x2*x3 + x0*x2^2*x3 + x0*x1*x3^2 + x0*x2*x3^2 + x1*x2*x3^2 + x2*x3^3 \
         + x0^2*x1*x4 + x0*x1*x2*x4 + x0*x1*x3*x4 + x0*x2*x3*x4 + x1*x2*x3*x4 + x2*x3^2*x4",
    ),
    (
        DetNetType::Triangle,
        "x0*x1*x2",
        "x0^2*x1 + x0*x1^2 + x0^2*x2 + x1^2*x2 + x0*x2^2 + x1*x2^2 + 2*x0*x1*x3 \
         + 2*x0*x2*x3 + 2*x1*x2*x3 + 2*x0*x1*x4 + 2*x0*x2*x4 + 2*x1*x2*x4",
    ),
    (
        DetNetType::Mixed,
        "x0*x1*x2^2",
        "x0*x1^3 + x0^2*x1*x2 + x0*x1^2*x2 + x0^2*x2^2 + x1^2*x2^2 + x1*x2^3 \
         + x0*x1^2*x3 + 2*x0*x1*x2*x3 + x0*x2^2*x3 + x1*x2^2*x3 + x2^3*x3 + x0*x1^2*x4 \
         + 2*x0*x1*x2*x4 + x0*x2^2*x4 + x1*x2^2*x4 + x2^3*x4",
    ),
    (
        DetNetType::DoubleLine,
        "x0^2*x1^2",
        "x0^3*x2 + 2*x0^2*x1*x2 + 2*x0*x1^2*x2 + x1^3*x2 + x0^3*x3 + 2*x0^2*x1*x3 \
         + 2*x0*x1^2*x3 + x1^3*x3 + x0^3*x4 + 2*x0^2*x1*x4 + 2*x0*x1^2*x4 + x1^3*x4",
    ),
    (
        DetNetType::Embedded,
        "x0*x1*x2",
        "x1^3 + 2*x1^2*x2 + 2*x1*x2^2 + x2^3 + x0*x1*x3 + x1^2*x3 + x0*x2*x3 \
         + 2*x1*x2*x3 + x2^2*x3 + x0*x1*x4 + x1^2*x4 + x0*x2*x4 + 2*x1*x2*x4 + x2^2*x4",
    ),
];
