//! Report documents written to standard output.

use fixpt_core::io::{MatrixDocument, SuperOpDocument};
use fixpt_core::preserver::{Classification, Condition, Detail, Outcome, Verdict};
use fixpt_core::Subspace;
use serde::{Deserialize, Serialize};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub probes_run: Option<usize>,
    pub tool_version: String,
    pub result: ReportBody,
}

impl ReportDocument {
    pub fn new(command: &str, result: ReportBody) -> Self {
        ReportDocument {
            command: command.to_owned(),
            seed: None,
            probes_run: None,
            tool_version: TOOL_VERSION.to_owned(),
            result,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ReportBody {
    FixedSpace {
        n: usize,
        dim: usize,
        rank_of_a: usize,
        /// Canonical basis vectors of `F(A)`.
        basis: Vec<Vec<String>>,
    },
    Classification {
        classification: ClassificationDoc,
    },
    Check {
        condition: String,
        superop: SuperOpDocument,
        verdict: VerdictDoc,
    },
    FixedSpaceTheorem {
        outcome: String,
        superop: SuperOpDocument,
        verdict: VerdictDoc,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        discrepant_entry: Option<EntryDoc>,
        notes: Vec<String>,
    },
    FixedDimensionTheorem {
        outcome: String,
        superop: SuperOpDocument,
        bijective: bool,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        verdict: Option<VerdictDoc>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        classification: Option<ClassificationDoc>,
        warnings: Vec<String>,
        notes: Vec<String>,
    },
    Fuzz {
        n: usize,
        family: String,
        random_probes_per_trial: usize,
        counterexamples: usize,
        trials: Vec<FuzzTrial>,
    },
    Verification {
        verified: usize,
        mismatches: Vec<String>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub row: usize,
    pub col: usize,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassificationDoc {
    pub family: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<MatrixDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lambda: Option<String>,
}

impl From<&Classification> for ClassificationDoc {
    fn from(c: &Classification) -> Self {
        ClassificationDoc {
            family: c.tag().to_owned(),
            s: c.s().map(MatrixDocument::from),
            lambda: c.lambda().map(ToString::to_string),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetailDoc {
    Dimensions { original: usize, image: usize },
    FixedSpaces {
        original: Vec<Vec<String>>,
        image: Vec<Vec<String>>,
    },
}

pub fn basis_vectors(space: &Subspace) -> Vec<Vec<String>> {
    let b = space.basis();
    (0..b.cols())
        .map(|j| (0..b.rows()).map(|i| b.get(i, j).to_string()).collect())
        .collect()
}

impl From<&Detail> for DetailDoc {
    fn from(d: &Detail) -> Self {
        match d {
            Detail::Dimensions { original, image } => DetailDoc::Dimensions {
                original: *original,
                image: *image,
            },
            Detail::Spaces { original, image } => DetailDoc::FixedSpaces {
                original: basis_vectors(original),
                image: basis_vectors(image),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerdictDoc {
    /// `dim` or `set`.
    pub condition: String,
    /// `pass` or `counterexample`.
    pub outcome: String,
    pub probes_run: usize,
    pub seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness_index: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<MatrixDocument>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<DetailDoc>,
}

pub fn condition_name(c: Condition) -> &'static str {
    match c {
        Condition::FixedDimension => "dim",
        Condition::FixedSpace => "set",
    }
}

pub fn parse_condition(name: &str) -> Option<Condition> {
    match name {
        "dim" => Some(Condition::FixedDimension),
        "set" => Some(Condition::FixedSpace),
        _ => None,
    }
}

impl From<&Verdict> for VerdictDoc {
    fn from(v: &Verdict) -> Self {
        VerdictDoc {
            condition: condition_name(v.condition).to_owned(),
            outcome: match v.outcome {
                Outcome::Pass => "pass",
                Outcome::Counterexample => "counterexample",
            }
            .to_owned(),
            probes_run: v.probes_run,
            seed: v.seed,
            witness_index: v.witness_index,
            witness: v.witness.as_ref().map(MatrixDocument::from),
            detail: v.detail.as_ref().map(DetailDoc::from),
        }
    }
}

impl VerdictDoc {
    pub fn is_counterexample(&self) -> bool {
        self.outcome == "counterexample"
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FuzzTrial {
    pub index: usize,
    pub classification: ClassificationDoc,
    pub verdict: VerdictDoc,
    /// Included for counterexamples so the report can be re-checked on its own.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub superop: Option<SuperOpDocument>,
}
