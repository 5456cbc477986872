use crate::elim::inverse;
use crate::matrix::{commutation_matrix, Matrix};
use crate::scalar::GaussianRational;
use crate::superop::{rank_one_factor, realign, SuperOp};

/// Which of the standard forms a linear map on `M_n` takes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// `φ(A) = A`.
    Identity,
    /// `φ(A) = λ·S·A·S⁻¹`.
    SimilarityType { s: Matrix, lambda: GaussianRational },
    /// `φ(A) = λ·S·Aᵀ·S⁻¹`.
    TransposeSimilarityType { s: Matrix, lambda: GaussianRational },
    Unstructured,
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Identity => "identity",
            Classification::SimilarityType { .. } => "similarity",
            Classification::TransposeSimilarityType { .. } => "transpose_similarity",
            Classification::Unstructured => "unstructured",
        }
    }

    pub fn s(&self) -> Option<&Matrix> {
        match self {
            Classification::SimilarityType { s, .. }
            | Classification::TransposeSimilarityType { s, .. } => Some(s),
            _ => None,
        }
    }

    pub fn lambda(&self) -> Option<&GaussianRational> {
        match self {
            Classification::SimilarityType { lambda, .. }
            | Classification::TransposeSimilarityType { lambda, .. } => Some(lambda),
            _ => None,
        }
    }

    /// The superoperator this classification describes, when structured.
    pub fn rebuild(&self, n: usize) -> Option<SuperOp> {
        match self {
            Classification::Identity => Some(SuperOp::identity(n)),
            Classification::SimilarityType { s, lambda } => SuperOp::similarity(s, lambda).ok(),
            Classification::TransposeSimilarityType { s, lambda } => {
                SuperOp::transpose_similarity(s, lambda).ok()
            }
            Classification::Unstructured => None,
        }
    }
}

/// Recovers `(S, λ)` with `l = λ·((S⁻¹)ᵀ ⊗ S)`, `S` gauge-normalized.
///
/// Realigning `Tᵀ ⊗ S` gives `vec(S)·vec(T)ᵀ`; a similarity additionally
/// needs `T·S = λ·I`.
fn similarity_factors(l: &Matrix, n: usize) -> Option<(Matrix, GaussianRational)> {
    let (u, v) = rank_one_factor(&realign(l, n)).ok()?;
    let s = Matrix::unvectorize(&u, n, n).ok()?;
    let t = Matrix::unvectorize(&v, n, n).ok()?;
    let ts = &t * &s;
    let lambda = ts.get(0, 0).clone();
    if lambda.is_zero() || ts != Matrix::scalar(n, &lambda) {
        return None;
    }
    inverse(&s).ok()?;
    // Exact on every matrix unit, i.e. on all of M_n.
    let rebuilt = SuperOp::similarity(&s, &lambda).ok()?;
    (rebuilt.matrix() == l).then_some((s, lambda))
}

pub fn classify(phi: &SuperOp) -> Classification {
    let n = phi.n();
    let l = phi.matrix();
    if l.is_identity() {
        return Classification::Identity;
    }
    if let Some((s, lambda)) = similarity_factors(l, n) {
        return Classification::SimilarityType { s, lambda };
    }
    let untransposed = l * &commutation_matrix(n);
    if let Some((s, lambda)) = similarity_factors(&untransposed, n) {
        return Classification::TransposeSimilarityType { s, lambda };
    }
    Classification::Unstructured
}
