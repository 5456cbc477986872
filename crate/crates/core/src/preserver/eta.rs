use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::rank_one::is_rank_one_idempotent;
use crate::scalar::GaussianRational;
use crate::superop::SuperOp;

/// The scalar `η` with `φ(A) + P = η·(A + P)`, if the two sides are proportional.
///
/// When `A + P = 0` every `η` fits as long as `φ(A) + P = 0`; `1` is
/// returned in that case.
pub fn eta_scalar(phi: &SuperOp, p: &Matrix, a: &Matrix) -> Result<Option<GaussianRational>> {
    if !p.is_square() || p.rows() != phi.n() || !is_rank_one_idempotent(p)? {
        return Err(Error::NotRankOneIdempotent);
    }
    let lhs = phi.apply(a)?.try_add(p)?;
    let rhs = a.try_add(p)?;
    let Some(k) = rhs.entries().iter().position(|e| !e.is_zero()) else {
        return Ok(lhs.is_zero().then(GaussianRational::one));
    };
    let eta = &lhs.entries()[k] / &rhs.entries()[k];
    Ok((rhs.scale(&eta) == lhs).then_some(eta))
}
