//! Exact Gauss–Jordan elimination: echelon forms, rank, kernels, inverses.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

/// Reduced row echelon form of a matrix together with its pivot structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowEchelon {
    pub matrix: Matrix,
    pub rank: usize,
    /// Pivot column indices, increasing.
    pub pivots: Vec<usize>,
}

/// Computes the unique reduced row echelon form of `m`.
pub fn rref(m: &Matrix) -> RowEchelon {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<GaussianRational>> = (0..rows).map(|i| m.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("pivot is nonzero");
        for e in a[r][c..].iter_mut() {
            *e = &*e * &inv;
        }
        let pivot_row = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (e, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                if !p.is_zero() {
                    *e -= &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let matrix = Matrix::new(rows, cols, a.into_iter().flatten().collect()).expect("shape preserved");
    RowEchelon {
        matrix,
        rank: pivots.len(),
        pivots,
    }
}

pub fn rank(m: &Matrix) -> usize {
    rref(m).rank
}

/// Null space of `m` as a canonical subspace of `ℂ^cols`.
pub fn kernel_basis(m: &Matrix) -> Subspace {
    let cols = m.cols();
    let echelon = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !echelon.pivots.contains(c)).collect();
    let basis = Matrix::from_fn(cols, free.len(), |i, k| {
        let f = free[k];
        if i == f {
            GaussianRational::one()
        } else if let Some(r) = echelon.pivots.iter().position(|&p| p == i) {
            -echelon.matrix.get(r, f)
        } else {
            GaussianRational::zero()
        }
    });
    Subspace::span(&basis)
}

/// Exact inverse via elimination on `[M | I]`.
pub fn inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.require_square()?;
    let augmented = Matrix::hstack(&[m, &Matrix::identity(n)])?;
    let echelon = rref(&augmented);
    if echelon.pivots.iter().copied().take(n).ne(0..n) {
        return Err(Error::SingularMatrix);
    }
    Ok(Matrix::from_fn(n, n, |i, j| echelon.matrix.get(i, n + j).clone()))
}
