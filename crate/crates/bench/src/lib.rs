//! Seeded workloads shared by the benchmarks.

use fixpt_core::{GaussianRational, Matrix, Sampler, SuperOp};

/// `count` dense random `n×n` matrices.
pub fn matrices(n: usize, count: usize, seed: u64) -> Vec<Matrix> {
    let mut rng = Sampler::new(seed);
    (0..count).map(|_| rng.matrix(n, n)).collect()
}

pub fn similarity(n: usize, seed: u64) -> SuperOp {
    let s = Sampler::new(seed).non_scalar_invertible(n);
    SuperOp::similarity(&s, &GaussianRational::one()).expect("invertible")
}

pub fn transpose_similarity(n: usize, seed: u64) -> SuperOp {
    let s = Sampler::new(seed).non_scalar_invertible(n);
    SuperOp::transpose_similarity(&s, &GaussianRational::one()).expect("invertible")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_are_seeded() {
        assert_eq!(matrices(3, 2, 1), matrices(3, 2, 1));
        assert_eq!(similarity(3, 4), similarity(3, 4));
        assert!(transpose_similarity(3, 4).is_bijective());
    }
}
