//! Linear maps `M_n → M_n` as `n²×n²` matrices acting on `vec(A)`.

use crate::elim::{inverse, rank};
use crate::error::{Error, Result};
use crate::matrix::{commutation_matrix, kron, Matrix};
use crate::scalar::GaussianRational;

/// Largest supported `n`; `n⁴` exact entries.
pub const MAX_N: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperOp {
    n: usize,
    matrix: Matrix,
}

impl SuperOp {
    pub fn new(n: usize, matrix: Matrix) -> Result<Self> {
        if matrix.rows() != n * n || matrix.cols() != n * n {
            return Err(Error::size(
                format!("{0}x{0}", n * n),
                format!("{}x{}", matrix.rows(), matrix.cols()),
            ));
        }
        Ok(SuperOp { n, matrix })
    }

    /// Tabulates a linear map from its action on the matrix units.
    pub fn from_map(n: usize, map: impl Fn(&Matrix) -> Matrix) -> Self {
        let mut columns = Vec::with_capacity(n * n);
        for j in 0..n {
            for i in 0..n {
                columns.push(map(&Matrix::unit(n, i, j)).vectorize());
            }
        }
        let refs: Vec<&Matrix> = columns.iter().collect();
        SuperOp {
            n,
            matrix: Matrix::hstack(&refs).expect("uniform column height"),
        }
    }

    pub fn identity(n: usize) -> Self {
        SuperOp {
            n,
            matrix: Matrix::identity(n * n),
        }
    }

    /// `A ↦ Aᵀ`.
    pub fn transpose(n: usize) -> Self {
        SuperOp {
            n,
            matrix: commutation_matrix(n),
        }
    }

    /// `A ↦ λ·S·A·S⁻¹`, with matrix `λ·((S⁻¹)ᵀ ⊗ S)`.
    pub fn similarity(s: &Matrix, lambda: &GaussianRational) -> Result<Self> {
        let n = s.require_square()?;
        let s_inv = inverse(s)?;
        Ok(SuperOp {
            n,
            matrix: kron(&s_inv.transpose(), s).scale(lambda),
        })
    }

    /// `A ↦ λ·S·Aᵀ·S⁻¹`, with matrix `λ·((S⁻¹)ᵀ ⊗ S)·K`.
    pub fn transpose_similarity(s: &Matrix, lambda: &GaussianRational) -> Result<Self> {
        let base = Self::similarity(s, lambda)?;
        Ok(SuperOp {
            n: base.n,
            matrix: &base.matrix * &commutation_matrix(base.n),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn apply(&self, a: &Matrix) -> Result<Matrix> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::size(
                format!("{0}x{0}", self.n),
                format!("{}x{}", a.rows(), a.cols()),
            ));
        }
        Matrix::unvectorize(&(&self.matrix * &a.vectorize()), self.n, self.n)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &SuperOp) -> Result<SuperOp> {
        if self.n != other.n {
            return Err(Error::size(format!("n = {}", self.n), format!("n = {}", other.n)));
        }
        Ok(SuperOp {
            n: self.n,
            matrix: self.matrix.try_mul(&other.matrix)?,
        })
    }

    pub fn inverse(&self) -> Result<SuperOp> {
        Ok(SuperOp {
            n: self.n,
            matrix: inverse(&self.matrix)?,
        })
    }

    /// Surjective, equivalently injective, on `M_n`.
    pub fn is_bijective(&self) -> bool {
        rank(&self.matrix) == self.n * self.n
    }

    pub fn realign(&self) -> Matrix {
        realign(&self.matrix, self.n)
    }
}

/// Realignment `M[γn+α, βn+δ] = L[βn+α, δn+γ]`.
///
/// Sends `Tᵀ ⊗ S` (the map `A ↦ S·A·T`) to `vec(S)·vec(T)ᵀ`.
pub fn realign(l: &Matrix, n: usize) -> Matrix {
    Matrix::from_fn(n * n, n * n, |row, col| {
        let (gamma, alpha) = (row / n, row % n);
        let (beta, delta) = (col / n, col % n);
        l.get(beta * n + alpha, delta * n + gamma).clone()
    })
}

/// Inverse permutation of [`realign`]. `realign` itself is not an
/// involution: it permutes index positions in a 3-cycle.
pub fn unrealign(m: &Matrix, n: usize) -> Matrix {
    Matrix::from_fn(n * n, n * n, |row, col| {
        let (beta, alpha) = (row / n, row % n);
        let (delta, gamma) = (col / n, col % n);
        m.get(gamma * n + alpha, beta * n + delta).clone()
    })
}

/// Splits a rank-one `M` as `u·vᵀ` with the first nonzero entry of `u` equal to 1.
pub fn rank_one_factor(m: &Matrix) -> Result<(Matrix, Matrix)> {
    let r = rank(m);
    if r != 1 {
        return Err(Error::NotRankOne { rank: r });
    }
    let (pivot_row, pivot_col) = (0..m.rows())
        .find_map(|i| (0..m.cols()).find(|&j| !m.get(i, j).is_zero()).map(|j| (i, j)))
        .expect("rank one matrix has a nonzero entry");
    let pivot_inv = m.get(pivot_row, pivot_col).inv().expect("nonzero pivot");
    let u = Matrix::from_fn(m.rows(), 1, |i, _| m.get(i, pivot_col) * &pivot_inv);
    let v = Matrix::column_vector(m.row(pivot_row).to_vec());
    Ok((u, v))
}
