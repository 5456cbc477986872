//! Rank-one operators `x⊗f : y ↦ f(y)·x` and idempotent constructions.

use crate::elim::{inverse, rank};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// A column vector `x` and a row functional `f` of matching length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankOneSpec {
    x: Matrix,
    f: Matrix,
}

impl RankOneSpec {
    pub fn new(x: Matrix, f: Matrix) -> Result<Self> {
        if x.cols() != 1 || f.rows() != 1 || f.cols() != x.rows() {
            return Err(Error::size(
                format!("{n}x1 and 1x{n}", n = x.rows()),
                format!("{}x{} and {}x{}", x.rows(), x.cols(), f.rows(), f.cols()),
            ));
        }
        if x.is_zero() || f.is_zero() {
            return Err(Error::ZeroFactor);
        }
        Ok(RankOneSpec { x, f })
    }

    pub fn x(&self) -> &Matrix {
        &self.x
    }

    pub fn f(&self) -> &Matrix {
        &self.f
    }

    /// `f(x)`.
    pub fn pairing(&self) -> crate::GaussianRational {
        (&self.f * &self.x).get(0, 0).clone()
    }
}

/// The outer product `x·f`.
pub fn rank_one(spec: &RankOneSpec) -> Matrix {
    &spec.x * &spec.f
}

/// Convenience form of [`rank_one`] that validates its factors.
pub fn outer(x: &Matrix, f: &Matrix) -> Result<Matrix> {
    Ok(rank_one(&RankOneSpec::new(x.clone(), f.clone())?))
}

pub fn is_idempotent(p: &Matrix) -> Result<bool> {
    p.require_square()?;
    Ok(&(p * p) == p)
}

pub fn is_rank_one_idempotent(p: &Matrix) -> Result<bool> {
    Ok(is_idempotent(p)? && rank(p) == 1)
}

/// `PQ = QP = 0`.
pub fn are_orthogonal(p: &Matrix, q: &Matrix) -> Result<bool> {
    let n = p.require_square()?;
    q.require_square()?;
    if q.rows() != n {
        return Err(Error::size(format!("{n}x{n}"), format!("{0}x{0}", q.rows())));
    }
    Ok((p * q).is_zero() && (q * p).is_zero())
}

/// A functional `f` with `f(x) = 1` and `f(Ax) = 0`.
///
/// `{x, Ax}` is extended to a basis by appending standard basis vectors in
/// index order whenever they keep the set independent; `f` is the first
/// dual-basis functional, so it also vanishes on the appended vectors.
pub fn completion_functional(a: &Matrix, x: &Matrix) -> Result<Matrix> {
    let n = a.require_square()?;
    if x.rows() != n || x.cols() != 1 {
        return Err(Error::size(format!("{n}x1"), format!("{}x{}", x.rows(), x.cols())));
    }
    let ax = a * x;
    let mut basis = Matrix::hstack(&[x, &ax])?;
    if rank(&basis) != 2 {
        return Err(Error::DependentPair);
    }
    for k in 0..n {
        if basis.cols() == n {
            break;
        }
        let candidate = Matrix::hstack(&[&basis, &Matrix::basis_vector(n, k)])?;
        if rank(&candidate) == candidate.cols() {
            basis = candidate;
        }
    }
    let dual = inverse(&basis)?;
    Ok(Matrix::row_vector(dual.row(0).to_vec()))
}

/// The rank-one idempotent `P = (x − Ax)⊗f` with `(A + P)·x = x`.
///
/// Fails with [`Error::DependentPair`] unless `x` and `Ax` are independent.
pub fn completion_idempotent(a: &Matrix, x: &Matrix) -> Result<Matrix> {
    let f = completion_functional(a, x)?;
    let direction = x - &(a * x);
    Ok(&direction * &f)
}
