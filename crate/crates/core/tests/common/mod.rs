#![allow(dead_code)]

use fixpt_core::{GaussianRational, Matrix};
use proptest::prelude::*;

pub fn scalar() -> impl Strategy<Value = GaussianRational> {
    (-9i64..=9, 1i64..=3, -9i64..=9, 1i64..=3)
        .prop_map(|(a, b, c, d)| GaussianRational::from_parts(a, b, c, d))
}

/// Mostly real entries with a fair share of zeros, so rank deficiency shows up.
pub fn sparse_scalar() -> impl Strategy<Value = GaussianRational> {
    prop_oneof![
        2 => Just(GaussianRational::zero()),
        2 => (-3i64..=3).prop_map(GaussianRational::from),
        1 => scalar(),
    ]
}

pub fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(sparse_scalar(), rows * cols)
        .prop_map(move |v| Matrix::new(rows, cols, v).unwrap())
}

pub fn square(max_n: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_n).prop_flat_map(|n| matrix(n, n))
}

pub fn rect(max: usize) -> impl Strategy<Value = Matrix> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| matrix(r, c))
}
