//! Shared oracles for the integration tests: literal projector tables and a tiny
//! evaluator for entries written in terms of `z`, `z^*` and `ω`.

#![allow(dead_code)]

use std::f64::consts::PI;

use cyclic_coherent::numerics::{phase, ComplexMatrix, C64};

/// Odd multiples of π/24, all at least π/24 away from every multiple of π/12 and hence
/// from every special point of the established families.
pub fn generic_thetas() -> Vec<f64> {
    [1, 5, 9, 13, 17, 21, 29, 33, 37, 45]
        .iter()
        .map(|&j| j as f64 * PI / 24.0)
        .collect()
}

/// Evaluates sums of products such as `z^*\omega+\omega^2`, `-z`, `3`, `\omega ^2z+\omega`.
pub fn eval_entry(src: &str, z: C64) -> C64 {
    let w = phase(2.0 * PI / 3.0);
    let s: String = src
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '$')
        .collect();
    let mut total = C64::new(0.0, 0.0);
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let mut sign = 1.0;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            sign = -1.0;
            rest = r;
        }
        let mut term = C64::new(sign, 0.0);
        loop {
            if let Some(r) = rest.strip_prefix("z^*") {
                term *= z.conj();
                rest = r;
            } else if let Some(r) = rest.strip_prefix('z') {
                term *= z;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("\\omega^2") {
                term *= w * w;
                rest = r;
            } else if let Some(r) = rest.strip_prefix("\\omega") {
                term *= w;
                rest = r;
            } else if rest.starts_with(|c: char| c.is_ascii_digit()) {
                let end = rest
                    .find(|c: char| !c.is_ascii_digit())
                    .unwrap_or(rest.len());
                term *= rest[..end].parse::<f64>().unwrap();
                rest = &rest[end..];
            } else {
                break;
            }
        }
        assert!(
            rest.is_empty() || rest.starts_with('+') || rest.starts_with('-'),
            "cannot parse `{src}` at `{rest}`"
        );
        total += term;
    }
    total
}

pub fn eval_table(rows: &[&str], z: C64, scale: f64) -> ComplexMatrix {
    let cells: Vec<Vec<C64>> = rows
        .iter()
        .map(|r| r.split('&').map(|c| eval_entry(c, z) * scale).collect())
        .collect();
    ComplexMatrix::from_rows(&cells).unwrap()
}

/// 4Π for C36.
pub const PROJECTOR_C36_TIMES_4: [&str; 6] = [
    "2&z&z^*&0&-z&z^*",
    "z^*&2&z&z^*&0&-z",
    "z&z^*&2&-z&z^*&0",
    "0&z&-z^*&2&-z&-z^*",
    "-z^*&0&z&-z^*&2&-z",
    "z&-z^*&0&-z&-z^*&2",
];

/// 4Π for C48.
pub const PROJECTOR_C48_TIMES_4: [&str; 8] = [
    "2&z^*&0&z&0&-z^*&0&z",
    "z&2&z^*&0&z&0&-z^*&0",
    "0&z&2&z^*&0&z&0&-z^*",
    "z^*&0&z&2&-z^*&0&z&0",
    "0&z^*&0&-z&2&-z^*&0&-z",
    "-z&0&z^*&0&-z&2&-z^*&0",
    "0&-z&0&z^*&0&-z&2&-z^*",
    "z^*&0&-z&0&-z^*&0&-z&2",
];

/// 9Π for C412.
pub const PROJECTOR_C412_TIMES_9: [&str; 12] = [
    "3&z^*+1&z^*+z&z+1&0&z^*\\omega+\\omega^2&z^*\\omega^2+z&z+\\omega&0&z^*\\omega^2+\\omega&z^*\\omega+z&z+\\omega^2",
    "z+1&3&1+z^*&z+z^*&z+\\omega&0&\\omega^2+z^*\\omega&z+\\omega^2z^*&z+\\omega^2&0&\\omega+z^*\\omega^2&z+z^*\\omega",
    "z+z^*&1+z&3&z^*+1&z+z^*\\omega ^2&\\omega+ z&0&z^*\\omega+\\omega^2&z+z^*\\omega&\\omega^2+z&0&z^*\\omega^2+\\omega",
    "z^*+1&z^*+z&z+1&3&z^*\\omega+\\omega^2&z^*\\omega^2+z&z+\\omega&0&z^*\\omega^2+\\omega&z^*\\omega+z&z+\\omega^2&0",
    "0&z^*+\\omega^2&z^*+\\omega z&z\\omega^2+\\omega&3&z^*\\omega+\\omega&z^*\\omega^2+z\\omega&z \\omega^2+\\omega^2&0&z^*\\omega^2+1&z^*\\omega+z\\omega&z\\omega^2+1",
    "z\\omega^2+\\omega&0&\\omega^2+z^*&z\\omega+z^*&z\\omega^2+\\omega^2&3&\\omega+ z^*\\omega&z\\omega +z^*\\omega^2&z\\omega^2+1&0&1+z^*\\omega^2&z^*\\omega+z\\omega",
    "z\\omega+z^*&\\omega+z\\omega^2&0&z^*+\\omega^2&z\\omega+ z^*\\omega^2&\\omega ^2z+\\omega^2&3&z^*\\omega+\\omega&z\\omega+z^*\\omega&z\\omega^2+1&0&z^*\\omega^2+1",
    "\\omega ^2+z^*&\\omega z+z^*&\\omega^2 z+\\omega &0&z^*\\omega+\\omega&z^* \\omega^2+z\\omega&z\\omega^2+\\omega^2&3&z^*\\omega^2+1&z^*\\omega+z\\omega&z\\omega^2+1&0",
    "0&z^*+\\omega&\\omega^2 z+z^*&z\\omega+\\omega^2&0&z^*\\omega+1&z^*\\omega^2+z\\omega^2&z\\omega+1&3&z^*\\omega^2+\\omega^2&z^*\\omega+z\\omega^2&z\\omega+\\omega",
    "z\\omega+\\omega^2&0&z^*+\\omega&z\\omega^2+z^*&z\\omega+1&0&1+z^*\\omega&z\\omega^2+z^*\\omega^2&z\\omega+\\omega&3&\\omega^2+z^*\\omega^2&z\\omega^2+z^*\\omega",
    "z\\omega^2+z^*&z\\omega+\\omega^2&0&z^*+\\omega&z\\omega^2+z^*\\omega^2&z\\omega+1&0&1+z^*\\omega&z\\omega^2+z^*\\omega&\\omega+z\\omega&3&z^*\\omega^2+\\omega^2",
    "z^*+\\omega&z^*+z\\omega^2&z\\omega+\\omega^2&0&z^*\\omega+1&z^*\\omega^2+z\\omega^2&z\\omega+1&0&z^*\\omega^2+\\omega^2&z^*\\omega+z\\omega^2&z\\omega+\\omega&3",
];

/// Orbit matrices written as `(μ, ν, scale, [c_0, c_1, …])` with `σ_μν = scale·Σ c_k X^k`.
pub type SigmaOracle = (usize, usize, f64, &'static [&'static str]);

pub const SIGMA_C36: [SigmaOracle; 3] = [
    (0, 0, 1.0 / 6.0, &["2", "z^*", "z"]),
    (1, 1, 1.0 / 6.0, &["2", "-z^*", "-z"]),
    (0, 1, 1.0 / 6.0, &["0", "z^*", "-z"]),
];

pub const SIGMA_C48: [SigmaOracle; 3] = [
    (0, 0, 1.0 / 8.0, &["2", "z", "0", "z^*"]),
    (1, 1, 1.0 / 8.0, &["2", "-z", "0", "-z^*"]),
    (0, 1, 1.0 / 8.0, &["0", "z", "0", "-z^*"]),
];

pub const SIGMA_C412: [SigmaOracle; 6] = [
    (0, 0, 1.0 / 12.0, &["3", "z+1", "z+z^*", "z^*+1"]),
    (
        1,
        1,
        1.0 / 12.0,
        &[
            "3",
            "z\\omega^2+\\omega^2",
            "z\\omega+z^*\\omega^2",
            "z^*\\omega+\\omega",
        ],
    ),
    (
        2,
        2,
        1.0 / 12.0,
        &[
            "3",
            "z\\omega+\\omega",
            "z\\omega^2+z^*\\omega",
            "z^*\\omega^2+\\omega^2",
        ],
    ),
    (
        0,
        1,
        1.0 / 12.0,
        &["0", "z+\\omega", "z^*\\omega^2+z", "z^*\\omega+\\omega^2"],
    ),
    (
        0,
        2,
        1.0 / 12.0,
        &["0", "z+\\omega^2", "z^*\\omega+z", "z^*\\omega^2+\\omega"],
    ),
    (
        1,
        2,
        1.0 / 12.0,
        &["0", "z\\omega^2+1", "z^*\\omega+z\\omega", "z^*\\omega^2+1"],
    ),
];
