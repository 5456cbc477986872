use crate::matrix::Matrix;
use crate::sample::Sampler;
use crate::scalar::GaussianRational;

/// The fixed structured prefix of every probe suite, in order:
/// `0, −I, I`, the partial sums `E₁₁ + … + E_kk` for `k < n`, the nilpotent
/// `E₁₂` (when `n ≥ 2`), the Jordan block `J_n(1)`, the idempotent `1⊗e₁ᵀ`
/// and the non-idempotent `1⊗2e₁ᵀ`, where `1` is the all-ones vector.
///
/// Together these hit every value of `dim F` from 0 to `n` and both
/// rank-one classes.
pub fn structured_probes(n: usize) -> Vec<Matrix> {
    let one = GaussianRational::one();
    let mut probes = vec![
        Matrix::zeros(n, n),
        Matrix::scalar(n, &-one.clone()),
        Matrix::identity(n),
    ];
    let mut partial = Matrix::zeros(n, n);
    for k in 0..n.saturating_sub(1) {
        partial = &partial + &Matrix::unit(n, k, k);
        probes.push(partial.clone());
    }
    if n >= 2 {
        probes.push(Matrix::unit(n, 0, 1));
    }
    probes.push(Matrix::from_fn(n, n, |i, j| {
        if i == j || j == i + 1 {
            one.clone()
        } else {
            GaussianRational::zero()
        }
    }));
    let ones = Matrix::from_fn(n, 1, |_, _| one.clone());
    let e1 = Matrix::basis_vector(n, 0).transpose();
    probes.push(&ones * &e1);
    probes.push(&ones * &e1.scale(&GaussianRational::from(2)));
    probes
}

pub fn structured_probe_count(n: usize) -> usize {
    3 + n.saturating_sub(1) + usize::from(n >= 2) + 3
}

/// Deterministic witness list: [`structured_probes`] followed by `trials`
/// seeded random matrices with entries `p/q`, `|p| ≤ 9`, `q ∈ {1, 2, 3}`.
///
/// Odd-indexed random probes are upper triangular with each diagonal entry
/// set to 1 with probability one half, so that nontrivial fixed spaces
/// occur among the random probes too.
pub fn probe_suite(n: usize, trials: usize, seed: u64) -> Vec<Matrix> {
    let mut probes = structured_probes(n);
    let mut rng = Sampler::new(seed);
    for t in 0..trials {
        if t % 2 == 0 {
            probes.push(rng.matrix(n, n));
        } else {
            let m = Matrix::from_fn(n, n, |i, j| {
                if i > j {
                    GaussianRational::zero()
                } else if i == j && rng.bool(0.5) {
                    GaussianRational::one()
                } else {
                    rng.scalar()
                }
            });
            probes.push(m);
        }
    }
    probes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixed::dim_fixed;

    #[test]
    fn structured_prefix_for_n3() {
        let probes = probe_suite(3, 0, 11);
        assert_eq!(probes.len(), 9);
        assert_eq!(structured_probe_count(3), 9);
        let dims: Vec<usize> = probes.iter().map(|a| dim_fixed(a).unwrap()).collect();
        // 0, -I, I, E11, E11+E22, E12, J3(1), idempotent, non-idempotent
        assert_eq!(dims, vec![0, 0, 3, 1, 2, 0, 1, 1, 0]);
    }

    #[test]
    fn counts_match_for_all_sizes() {
        for n in 1..=6 {
            assert_eq!(structured_probes(n).len(), structured_probe_count(n));
        }
    }

    #[test]
    fn partial_sums_have_matching_dimension() {
        let n = 5;
        let probes = structured_probes(n);
        for k in 1..n {
            assert_eq!(dim_fixed(&probes[2 + k]).unwrap(), k);
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(probe_suite(4, 10, 99), probe_suite(4, 10, 99));
        assert_ne!(probe_suite(4, 10, 99), probe_suite(4, 10, 100));
        assert_eq!(probe_suite(4, 10, 99).len(), structured_probe_count(4) + 10);
    }
}
