use crate::matrix::Matrix;
use crate::scalar::GaussianRational;
use crate::superop::SuperOp;

use super::classify::{classify, Classification};
use super::conditions::{check_condition1, check_condition2, Verdict};

/// Result of testing a map against "a linear map with `F(A) = F(φ(A))`
/// for every `A` is the identity".
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Theorem11Outcome {
    /// The fixed-space condition held on every probe and `φ` is the identity.
    Consistent,
    /// A probe violates the fixed-space condition.
    HypothesisFails,
    /// Every probe passed yet `φ ≠ id`; `entry` is the first differing entry
    /// of the superoperator matrix. Reaching this means the probes missed
    /// a witness.
    ViolationCandidate {
        row: usize,
        col: usize,
        entry: GaussianRational,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem11Report {
    pub n: usize,
    pub verdict: Verdict,
    pub outcome: Theorem11Outcome,
    pub notes: Vec<String>,
}

pub fn theorem11_verdict(phi: &SuperOp, trials: usize, seed: u64) -> Theorem11Report {
    let n = phi.n();
    let verdict = check_condition1(phi, trials, seed);
    let mut notes = Vec::new();
    let outcome = if !verdict.passed() {
        notes.push("fixed-space condition violated; the map need not be the identity".to_owned());
        Theorem11Outcome::HypothesisFails
    } else if phi.matrix().is_identity() {
        notes.push("fixed-space condition held on all probes and the map is the identity".to_owned());
        Theorem11Outcome::Consistent
    } else {
        let id = Matrix::identity(n * n);
        let l = phi.matrix();
        let (row, col) = (0..n * n)
            .flat_map(|i| (0..n * n).map(move |j| (i, j)))
            .find(|&(i, j)| l.get(i, j) != id.get(i, j))
            .expect("matrix differs from identity");
        notes.push(format!(
            "all {} probes passed but the map is not the identity: probe-suite gap",
            verdict.probes_run
        ));
        Theorem11Outcome::ViolationCandidate {
            row,
            col,
            entry: l.get(row, col).clone(),
        }
    };
    Theorem11Report {
        n,
        verdict,
        outcome,
        notes,
    }
}

/// Result of testing a map against "a surjective linear map with
/// `dim F(A) = dim F(φ(A))` for every `A` has the form `±S·A·S⁻¹`".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem12Outcome {
    /// Condition held and the map is `S·A·S⁻¹`.
    Consistent,
    /// The map is not bijective, so the surjectivity hypothesis fails.
    HypothesisNotMet,
    /// A probe violates the dimension condition.
    HypothesisFails,
    /// Condition held on every probe but the recovered form is not `±S·A·S⁻¹`.
    OutsideConclusion,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Theorem12Report {
    pub n: usize,
    pub bijective: bool,
    /// `None` when the map is not bijective.
    pub verdict: Option<Verdict>,
    pub classification: Option<Classification>,
    pub outcome: Theorem12Outcome,
    pub warnings: Vec<String>,
    pub notes: Vec<String>,
}

pub fn theorem12_verdict(phi: &SuperOp, trials: usize, seed: u64) -> Theorem12Report {
    let n = phi.n();
    let mut warnings = Vec::new();
    if n < 3 {
        warnings.push(format!("n = {n} is below the n >= 3 hypothesis"));
    }
    let bijective = phi.is_bijective();
    if !bijective {
        return Theorem12Report {
            n,
            bijective,
            verdict: None,
            classification: None,
            outcome: Theorem12Outcome::HypothesisNotMet,
            warnings,
            notes: vec!["map is not surjective on M_n".to_owned()],
        };
    }
    let verdict = check_condition2(phi, trials, seed);
    let class = classify(phi);
    let mut notes = Vec::new();
    let minus_one = -GaussianRational::one();
    let outcome = if !verdict.passed() {
        if let Classification::SimilarityType { lambda, .. } = &class {
            if *lambda == minus_one {
                notes.push(
                    "the form A -> -S*A*S^-1 does not preserve dim F: -I has no fixed points \
                     but maps to I"
                        .to_owned(),
                );
            } else if !lambda.is_one() {
                notes.push(format!("scaled similarity with lambda = {lambda} violates the condition"));
            }
        }
        Theorem12Outcome::HypothesisFails
    } else {
        match &class {
            Classification::Identity => Theorem12Outcome::Consistent,
            Classification::SimilarityType { lambda, .. } if lambda.is_one() => {
                Theorem12Outcome::Consistent
            }
            Classification::SimilarityType { lambda, .. } => {
                notes.push(format!(
                    "condition held for a similarity with lambda = {lambda}, outside {{1, -1}}"
                ));
                Theorem12Outcome::OutsideConclusion
            }
            Classification::TransposeSimilarityType { .. } => {
                notes.push(
                    "A -> S*A^T*S^-1 preserves dim F on every probe: form outside the stated \
                     conclusion"
                        .to_owned(),
                );
                Theorem12Outcome::OutsideConclusion
            }
            Classification::Unstructured => {
                notes.push(
                    "condition held on every probe but no similarity form was recovered: \
                     probe-suite gap suspected"
                        .to_owned(),
                );
                Theorem12Outcome::OutsideConclusion
            }
        }
    };
    Theorem12Report {
        n,
        bijective,
        verdict: Some(verdict),
        classification: Some(class),
        outcome,
        warnings,
        notes,
    }
}
