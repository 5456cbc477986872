//! Preserving-condition checks, structure classification and theorem harnesses
//! for linear maps on `M_n`.
//!
//! Both conditions quantify over every `A ∈ M_n`, so the checkers here are
//! sound falsifiers: a counterexample is always genuine and re-checkable,
//! while `Pass` only covers the probes that were run.

mod classify;
mod conditions;
mod eta;
mod idempotents;
mod probes;
mod verdict;

pub use classify::{classify, Classification};
pub use conditions::{
    check_condition, check_condition1, check_condition2, evaluate_probe, Condition, Detail,
    Outcome, Verdict,
};
pub use eta::eta_scalar;
pub use idempotents::{idempotent_preservation, DirectionCheck, IdempotentPreservation};
pub use probes::{probe_suite, structured_probe_count, structured_probes};
pub use verdict::{
    theorem11_verdict, theorem12_verdict, Theorem11Outcome, Theorem11Report, Theorem12Outcome,
    Theorem12Report,
};
