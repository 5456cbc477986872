//! Re-checks the counterexamples recorded in a report from its payload alone.

use fixpt_core::io::SuperOpDocument;
use fixpt_core::preserver::evaluate_probe;
use fixpt_core::{Matrix, SuperOp};

use crate::report::{parse_condition, DetailDoc, ReportBody, ReportDocument, VerdictDoc};
use crate::InputError;

fn recheck(superop: &SuperOpDocument, verdict: &VerdictDoc) -> Result<Option<String>, InputError> {
    let phi = SuperOp::try_from(superop)?;
    let condition = parse_condition(&verdict.condition)
        .ok_or_else(|| InputError(format!("unknown condition {:?}", verdict.condition)))?;
    let witness = verdict
        .witness
        .as_ref()
        .ok_or_else(|| InputError("counterexample without witness".to_owned()))?;
    let witness = Matrix::try_from(witness)?;
    if witness.rows() != phi.n() || witness.cols() != phi.n() {
        return Ok(Some("witness size does not match the superoperator".to_owned()));
    }
    let detail = evaluate_probe(&phi, condition, &witness);
    let recomputed = DetailDoc::from(&detail);
    if detail.holds() {
        return Ok(Some("witness satisfies the condition".to_owned()));
    }
    if verdict.detail.as_ref() != Some(&recomputed) {
        return Ok(Some(format!(
            "recorded detail {:?} but recomputed {:?}",
            verdict.detail, recomputed
        )));
    }
    Ok(None)
}

/// Returns how many counterexamples re-verified and a description of each
/// one that did not.
pub fn verify_report(report: &ReportDocument) -> Result<(usize, Vec<String>), InputError> {
    let mut cases: Vec<(String, &SuperOpDocument, &VerdictDoc)> = Vec::new();
    match &report.result {
        ReportBody::Check {
            superop, verdict, ..
        }
        | ReportBody::FixedSpaceTheorem {
            superop, verdict, ..
        } => cases.push(("verdict".to_owned(), superop, verdict)),
        ReportBody::FixedDimensionTheorem {
            superop,
            verdict: Some(verdict),
            ..
        } => cases.push(("verdict".to_owned(), superop, verdict)),
        ReportBody::Fuzz { trials, .. } => {
            for t in trials {
                if t.verdict.is_counterexample() {
                    let superop = t.superop.as_ref().ok_or_else(|| {
                        InputError(format!("trial {} has no superoperator", t.index))
                    })?;
                    cases.push((format!("trial {}", t.index), superop, &t.verdict));
                }
            }
        }
        _ => {}
    }
    let mut verified = 0;
    let mut mismatches = Vec::new();
    for (label, superop, verdict) in cases {
        if !verdict.is_counterexample() {
            continue;
        }
        match recheck(superop, verdict)? {
            None => verified += 1,
            Some(problem) => mismatches.push(format!("{label}: {problem}")),
        }
    }
    Ok((verified, mismatches))
}
