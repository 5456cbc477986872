//! Fixed-point spaces `F(A) = ker(A − I)`.

use crate::elim::{kernel_basis, rank};
use crate::error::Result;
use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::subspace::Subspace;

/// `F(A)`, the space of vectors with `A·v = v`.
pub fn fixed_space(a: &Matrix) -> Result<Subspace> {
    Ok(kernel_basis(&a.shift(&GaussianRational::one())?))
}

/// `dim F(A)`, computed as `n − rank(A − I)`.
pub fn dim_fixed(a: &Matrix) -> Result<usize> {
    let n = a.require_square()?;
    let shifted = a.shift(&GaussianRational::one())?;
    let dim = n - rank(&shifted);
    debug_assert_eq!(dim, kernel_basis(&shifted).dim());
    Ok(dim)
}

/// `F(A + I)`, which coincides with `ker(A)`.
pub fn kernel_via_fixed(a: &Matrix) -> Result<Subspace> {
    fixed_space(&a.shift(&-GaussianRational::one())?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedReport {
    pub dim: usize,
    pub space: Subspace,
    /// Always at least `dim`.
    pub rank_of_a: usize,
}

pub fn fixed_report(a: &Matrix) -> Result<FixedReport> {
    let space = fixed_space(a)?;
    let report = FixedReport {
        dim: space.dim(),
        rank_of_a: rank(a),
        space,
    };
    debug_assert!(report.rank_of_a >= report.dim);
    Ok(report)
}
