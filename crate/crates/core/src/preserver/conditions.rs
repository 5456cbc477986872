use crate::fixed::{dim_fixed, fixed_space};
use crate::matrix::Matrix;
use crate::subspace::Subspace;
use crate::superop::SuperOp;

use super::probes::probe_suite;

/// The two preserving conditions on a linear map `φ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `F(A) = F(φ(A))`.
    FixedSpace,
    /// `dim F(A) = dim F(φ(A))`.
    FixedDimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Counterexample,
}

/// The two quantities compared for one probe `A`: first for `A`, then for `φ(A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Detail {
    Dimensions { original: usize, image: usize },
    Spaces { original: Subspace, image: Subspace },
}

impl Detail {
    pub fn holds(&self) -> bool {
        match self {
            Detail::Dimensions { original, image } => original == image,
            Detail::Spaces { original, image } => original == image,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub condition: Condition,
    pub outcome: Outcome,
    pub witness: Option<Matrix>,
    /// Position of the witness in the probe suite.
    pub witness_index: Option<usize>,
    pub detail: Option<Detail>,
    pub probes_run: usize,
    pub seed: u64,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }
}

/// Computes both sides of `condition` for the probe `a`.
///
/// Panics if `a` is not `n×n` for `n = phi.n()`.
pub fn evaluate_probe(phi: &SuperOp, condition: Condition, a: &Matrix) -> Detail {
    let image = phi.apply(a).expect("probe has the map's size");
    match condition {
        Condition::FixedDimension => Detail::Dimensions {
            original: dim_fixed(a).expect("square"),
            image: dim_fixed(&image).expect("square"),
        },
        Condition::FixedSpace => Detail::Spaces {
            original: fixed_space(a).expect("square"),
            image: fixed_space(&image).expect("square"),
        },
    }
}

/// Runs `condition` over `probe_suite(n, trials, seed)` and stops at the
/// first violation.
pub fn check_condition(phi: &SuperOp, condition: Condition, trials: usize, seed: u64) -> Verdict {
    let probes = probe_suite(phi.n(), trials, seed);
    for (index, a) in probes.iter().enumerate() {
        let detail = evaluate_probe(phi, condition, a);
        if !detail.holds() {
            return Verdict {
                condition,
                outcome: Outcome::Counterexample,
                witness: Some(a.clone()),
                witness_index: Some(index),
                detail: Some(detail),
                probes_run: index + 1,
                seed,
            };
        }
    }
    Verdict {
        condition,
        outcome: Outcome::Pass,
        witness: None,
        witness_index: None,
        detail: None,
        probes_run: probes.len(),
        seed,
    }
}

/// `F(A) = F(φ(A))` over the probe suite.
pub fn check_condition1(phi: &SuperOp, trials: usize, seed: u64) -> Verdict {
    check_condition(phi, Condition::FixedSpace, trials, seed)
}

/// `dim F(A) = dim F(φ(A))` over the probe suite.
pub fn check_condition2(phi: &SuperOp, trials: usize, seed: u64) -> Verdict {
    check_condition(phi, Condition::FixedDimension, trials, seed)
}
