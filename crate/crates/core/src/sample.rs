//! Seeded generators for matrices, vectors and invertible transforms.
//!
//! Everything is driven by a 64-bit seed through ChaCha8. Independent
//! streams of one seed (`Sampler::stream`) let trials be generated in any
//! order, or on separate workers, and still reproduce exactly.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::elim::{inverse, rank};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;

const DENOMINATORS: [i64; 3] = [1, 2, 3];

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Stream `index` of `seed`; distinct indices never overlap.
    pub fn stream(seed: u64, index: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index);
        Sampler { rng }
    }

    pub fn index(&mut self, upper: usize) -> usize {
        self.rng.random_range(0..upper)
    }

    pub fn bool(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    /// Numerator in `[-9, 9]`, denominator in `{1, 2, 3}`.
    pub fn rational(&mut self) -> BigRational {
        let num: i64 = self.rng.random_range(-9..=9);
        let den = DENOMINATORS[self.rng.random_range(0..DENOMINATORS.len())];
        BigRational::new(num.into(), den.into())
    }

    pub fn real_scalar(&mut self) -> GaussianRational {
        GaussianRational::real(self.rational())
    }

    pub fn scalar(&mut self) -> GaussianRational {
        let re = self.rational();
        let im = self.rational();
        GaussianRational::new(re, im)
    }

    pub fn nonzero_scalar(&mut self) -> GaussianRational {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// Dense matrix of Gaussian-rational entries.
    pub fn matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| self.scalar())
    }

    /// Like [`Sampler::matrix`], but roughly half the entries are zero.
    pub fn sparse_matrix(&mut self, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(rows, cols, |_, _| {
            if self.bool(0.5) {
                GaussianRational::zero()
            } else {
                self.scalar()
            }
        })
    }

    pub fn vector(&mut self, n: usize) -> Matrix {
        self.matrix(n, 1)
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Matrix {
        loop {
            let v = self.vector(n);
            if !v.is_zero() {
                return v;
            }
        }
    }

    /// A product of random `n×r` and `r×n` factors, rank at most `r`.
    pub fn low_rank(&mut self, n: usize, r: usize) -> Matrix {
        let left = self.matrix(n, r);
        let right = self.matrix(r, n);
        &left * &right
    }

    /// `I + low_rank(n, r)`: typically `dim F = n − r`.
    pub fn with_fixed_points(&mut self, n: usize, r: usize) -> Matrix {
        &Matrix::identity(n) + &self.low_rank(n, r)
    }

    /// A mixed corpus entry: dense, sparse, low-rank or `I + low-rank`,
    /// so that kernels and fixed spaces of every dimension show up.
    pub fn mixed_matrix(&mut self, n: usize) -> Matrix {
        match self.index(4) {
            0 => self.matrix(n, n),
            1 => self.sparse_matrix(n, n),
            2 => {
                let r = self.index(n + 1);
                self.low_rank(n, r)
            }
            _ => {
                let r = self.index(n + 1);
                self.with_fixed_points(n, r)
            }
        }
    }

    pub fn invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.matrix(n, n);
            if rank(&m) == n {
                return m;
            }
        }
    }

    /// Invertible and not a scalar multiple of the identity.
    pub fn non_scalar_invertible(&mut self, n: usize) -> Matrix {
        loop {
            let m = self.invertible(n);
            let c = m.get(0, 0).clone();
            if m != Matrix::scalar(n, &c) {
                return m;
            }
        }
    }

    /// A rank-one idempotent `x⊗f` with `f(x) = 1`, returned with its factors.
    pub fn rank_one_idempotent(&mut self, n: usize) -> (Matrix, Matrix, Matrix) {
        loop {
            let x = self.nonzero_vector(n);
            let f = self.matrix(1, n);
            let pairing = (&f * &x).get(0, 0).clone();
            if let Some(inv) = pairing.inv() {
                let f = f.scale(&inv);
                let p = &x * &f;
                return (p, x, f);
            }
        }
    }

    /// Orthogonal rank-one idempotents `B·E₁₁·B⁻¹` and `B·E₂₂·B⁻¹`; needs `n ≥ 2`.
    pub fn orthogonal_pair(&mut self, n: usize) -> (Matrix, Matrix) {
        assert!(n >= 2, "orthogonal pairs need n >= 2");
        let b = self.invertible(n);
        let b_inv = inverse(&b).expect("invertible by construction");
        let p = &(&b * &Matrix::unit(n, 0, 0)) * &b_inv;
        let q = &(&b * &Matrix::unit(n, 1, 1)) * &b_inv;
        (p, q)
    }
}
