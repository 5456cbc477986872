//! Linear subspaces of `ℂⁿ` in a canonical basis form.

use crate::elim::rref;
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A subspace of `ℂ^ambient_dim`.
///
/// The basis is stored column-wise with its transpose in reduced row echelon
/// form. That form is unique per subspace, so derived equality is subspace
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    /// The span of the columns of `vectors`.
    pub fn span(vectors: &Matrix) -> Self {
        let ambient_dim = vectors.rows();
        let echelon = rref(&vectors.transpose());
        let basis = Matrix::from_fn(ambient_dim, echelon.rank, |i, k| echelon.matrix.get(k, i).clone());
        Subspace { ambient_dim, basis }
    }

    pub fn zero(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::zeros(n, 0),
        }
    }

    pub fn full(n: usize) -> Self {
        Subspace {
            ambient_dim: n,
            basis: Matrix::identity(n),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Canonical basis, one vector per column.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn contains(&self, v: &Matrix) -> Result<bool> {
        if v.rows() != self.ambient_dim || v.cols() != 1 {
            return Err(Error::AmbientMismatch {
                left: self.ambient_dim,
                right: v.rows(),
            });
        }
        let stacked = Matrix::hstack(&[&self.basis, v])?;
        Ok(rref(&stacked).rank == self.dim())
    }
}

/// True exactly when `u` and `v` contain the same vectors.
pub fn subspace_equal(u: &Subspace, v: &Subspace) -> Result<bool> {
    if u.ambient_dim != v.ambient_dim {
        return Err(Error::AmbientMismatch {
            left: u.ambient_dim,
            right: v.ambient_dim,
        });
    }
    Ok(u.basis == v.basis)
}
