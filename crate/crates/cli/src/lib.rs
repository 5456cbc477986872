//! The `fixpt` command line: fixed-point dimensions, superoperator
//! classification, preserving-condition checks and fuzzing campaigns.
//!
//! Every command writes one JSON [`ReportDocument`] to standard output.
//! Exit codes: 0 computed/passed/classified, 1 counterexample or failed
//! hypothesis, 2 bad input.

pub mod report;
mod verify;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::thread;

use clap::{Parser, Subcommand, ValueEnum};
use fixpt_core::io::{MatrixDocument, SuperOpDocument};
use fixpt_core::preserver::{
    check_condition, check_condition2, classify, theorem11_verdict, theorem12_verdict,
    Classification, Condition, Theorem11Outcome, Theorem12Outcome,
};
use fixpt_core::{fixed_report, parse_scalar, GaussianRational, Matrix, Sampler, SuperOp};
use serde::de::DeserializeOwned;

pub use report::{ReportBody, ReportDocument};
pub use verify::verify_report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FOUND: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "fixpt", version, about = "Exact fixed-point spaces and preserver checks on M_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print dim F(A) and a canonical basis of F(A).
    Fixdim {
        #[arg(long)]
        matrix: PathBuf,
    },
    /// Recover the form of a superoperator (identity, ±similarity, transpose form).
    Classify {
        #[arg(long)]
        superop: PathBuf,
        /// Also write the recovered S as a matrix document.
        #[arg(long)]
        emit_s: Option<PathBuf>,
    },
    /// Check a preserving condition over the probe suite.
    Check {
        #[arg(long)]
        superop: PathBuf,
        #[arg(long, value_enum)]
        condition: ConditionArg,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a theorem harness: 1 = fixed-space preservers, 2 = fixed-dimension preservers.
    Verdict {
        #[arg(long)]
        superop: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        theorem: u8,
        #[arg(long, default_value_t = 32)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Generate random maps of one family and check the dimension condition on each.
    Fuzz {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        family: FuzzFamily,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        seed: u64,
        /// Random probes per trial, after the structured ones.
        #[arg(long, default_value_t = 4)]
        probes: usize,
    },
    /// Write a superoperator document for a named map.
    Superop {
        #[arg(long, value_enum)]
        family: BuildFamily,
        /// Size, for maps that take no S.
        #[arg(long)]
        n: Option<usize>,
        /// Matrix document holding S.
        #[arg(long)]
        s: Option<PathBuf>,
        #[arg(long, default_value = "1", allow_hyphen_values = true)]
        lambda: String,
    },
    /// Re-run every counterexample recorded in a report.
    VerifyReport {
        #[arg(long)]
        report: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ConditionArg {
    Dim,
    Set,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FuzzFamily {
    Similarity,
    NegSimilarity,
    Transpose,
    Random,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum BuildFamily {
    Identity,
    Transpose,
    Similarity,
    NegSimilarity,
    TransposeSimilarity,
}

/// A failure that maps to exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::fmt::Display> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

type CmdResult = Result<(ReportDocument, i32), InputError>;

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, InputError> {
    let text =
        fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_matrix(path: &Path) -> Result<Matrix, InputError> {
    let doc: MatrixDocument = read_json(path)?;
    Matrix::try_from(&doc).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn read_superop(path: &Path) -> Result<SuperOp, InputError> {
    let doc: SuperOpDocument = read_json(path)?;
    SuperOp::try_from(&doc).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(out: &mut dyn Write, value: &T) -> std::io::Result<()> {
    let text = serde_json::to_string_pretty(value).expect("report serializes");
    writeln!(out, "{text}")
}

/// Runs the CLI on `args` (including the program name) and returns the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(stderr, "{rendered}")
            } else {
                write!(stdout, "{rendered}")
            };
            return code;
        }
    };

    if let Command::Superop {
        family,
        n,
        s,
        lambda,
    } = &cli.command
    {
        return match build_superop(*family, *n, s.as_deref(), lambda) {
            Ok(phi) => {
                let _ = write_json(stdout, &SuperOpDocument::from(&phi));
                EXIT_OK
            }
            Err(InputError(msg)) => {
                let _ = writeln!(stderr, "error: {msg}");
                EXIT_INPUT
            }
        };
    }

    let outcome = match cli.command {
        Command::Fixdim { matrix } => fixdim(&matrix),
        Command::Classify { superop, emit_s } => classify_cmd(&superop, emit_s.as_deref(), stderr),
        Command::Check {
            superop,
            condition,
            trials,
            seed,
        } => check_cmd(&superop, condition, trials, seed),
        Command::Verdict {
            superop,
            theorem,
            trials,
            seed,
        } => verdict_cmd(&superop, theorem, trials, seed),
        Command::Fuzz {
            n,
            family,
            trials,
            seed,
            probes,
        } => fuzz_cmd(n, family, trials, seed, probes),
        Command::VerifyReport { report } => verify_cmd(&report),
        Command::Superop { .. } => unreachable!("handled above"),
    };
    match outcome {
        Ok((report, code)) => {
            if let Err(e) = write_json(stdout, &report) {
                let _ = writeln!(stderr, "error: {e}");
                return EXIT_INPUT;
            }
            code
        }
        Err(InputError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_INPUT
        }
    }
}

fn fixdim(path: &Path) -> CmdResult {
    let a = read_matrix(path)?;
    let r = fixed_report(&a)?;
    let body = ReportBody::FixedSpace {
        n: a.rows(),
        dim: r.dim,
        rank_of_a: r.rank_of_a,
        basis: report::basis_vectors(&r.space),
    };
    Ok((ReportDocument::new("fixdim", body), EXIT_OK))
}

fn classify_cmd(path: &Path, emit_s: Option<&Path>, stderr: &mut dyn Write) -> CmdResult {
    let phi = read_superop(path)?;
    let class = classify(&phi);
    if let Some(target) = emit_s {
        match class.s() {
            Some(s) => {
                let text = serde_json::to_string_pretty(&MatrixDocument::from(s))?;
                fs::write(target, text + "\n")
                    .map_err(|e| InputError(format!("{}: {e}", target.display())))?;
            }
            None => {
                let _ = writeln!(stderr, "note: no S recovered for a map of type {}", class.tag());
            }
        }
    }
    let body = ReportBody::Classification {
        classification: (&class).into(),
    };
    Ok((ReportDocument::new("classify", body), EXIT_OK))
}

fn check_cmd(path: &Path, condition: ConditionArg, trials: usize, seed: u64) -> CmdResult {
    let phi = read_superop(path)?;
    let condition = match condition {
        ConditionArg::Dim => Condition::FixedDimension,
        ConditionArg::Set => Condition::FixedSpace,
    };
    let verdict = check_condition(&phi, condition, trials, seed);
    let code = if verdict.passed() { EXIT_OK } else { EXIT_FOUND };
    let mut report = ReportDocument::new(
        "check",
        ReportBody::Check {
            condition: report::condition_name(condition).to_owned(),
            superop: (&phi).into(),
            verdict: (&verdict).into(),
        },
    );
    report.seed = Some(seed);
    report.probes_run = Some(verdict.probes_run);
    Ok((report, code))
}

fn verdict_cmd(path: &Path, theorem: u8, trials: usize, seed: u64) -> CmdResult {
    let phi = read_superop(path)?;
    let superop = SuperOpDocument::from(&phi);
    let (mut report, code) = if theorem == 1 {
        let r = theorem11_verdict(&phi, trials, seed);
        let (outcome, entry, code) = match &r.outcome {
            Theorem11Outcome::Consistent => ("consistent", None, EXIT_OK),
            Theorem11Outcome::HypothesisFails => ("hypothesis_fails", None, EXIT_FOUND),
            Theorem11Outcome::ViolationCandidate { row, col, entry } => (
                "violation_candidate",
                Some(report::EntryDoc {
                    row: *row,
                    col: *col,
                    value: entry.to_string(),
                }),
                EXIT_FOUND,
            ),
        };
        let body = ReportBody::FixedSpaceTheorem {
            outcome: outcome.to_owned(),
            superop,
            verdict: (&r.verdict).into(),
            discrepant_entry: entry,
            notes: r.notes,
        };
        let mut doc = ReportDocument::new("verdict", body);
        doc.probes_run = Some(r.verdict.probes_run);
        (doc, code)
    } else {
        let r = theorem12_verdict(&phi, trials, seed);
        let (outcome, code) = match r.outcome {
            Theorem12Outcome::Consistent => ("consistent", EXIT_OK),
            Theorem12Outcome::OutsideConclusion => ("outside_conclusion", EXIT_OK),
            Theorem12Outcome::HypothesisFails => ("hypothesis_fails", EXIT_FOUND),
            Theorem12Outcome::HypothesisNotMet => ("hypothesis_not_met", EXIT_FOUND),
        };
        let probes_run = r.verdict.as_ref().map(|v| v.probes_run);
        let body = ReportBody::FixedDimensionTheorem {
            outcome: outcome.to_owned(),
            superop,
            bijective: r.bijective,
            verdict: r.verdict.as_ref().map(Into::into),
            classification: r.classification.as_ref().map(Into::into),
            warnings: r.warnings,
            notes: r.notes,
        };
        let mut doc = ReportDocument::new("verdict", body);
        doc.probes_run = probes_run;
        (doc, code)
    };
    report.seed = Some(seed);
    Ok((report, code))
}

fn fuzz_map(family: FuzzFamily, n: usize, rng: &mut Sampler) -> SuperOp {
    match family {
        FuzzFamily::Similarity => {
            SuperOp::similarity(&rng.non_scalar_invertible(n), &GaussianRational::one())
        }
        FuzzFamily::NegSimilarity => {
            SuperOp::similarity(&rng.non_scalar_invertible(n), &-GaussianRational::one())
        }
        FuzzFamily::Transpose => {
            SuperOp::transpose_similarity(&rng.non_scalar_invertible(n), &GaussianRational::one())
        }
        FuzzFamily::Random => SuperOp::new(n, rng.matrix(n * n, n * n)),
    }
    .expect("generated maps are well formed")
}

fn fuzz_trial(family: FuzzFamily, n: usize, seed: u64, index: usize, probes: usize) -> report::FuzzTrial {
    let mut rng = Sampler::stream(seed, index as u64);
    let phi = fuzz_map(family, n, &mut rng);
    let verdict = check_condition2(&phi, probes, seed.wrapping_add(index as u64));
    let class: Classification = classify(&phi);
    report::FuzzTrial {
        index,
        classification: (&class).into(),
        superop: (!verdict.passed()).then(|| (&phi).into()),
        verdict: (&verdict).into(),
    }
}

fn fuzz_cmd(n: usize, family: FuzzFamily, trials: usize, seed: u64, probes: usize) -> CmdResult {
    if n == 0 || n > fixpt_core::superop::MAX_N {
        return Err(InputError(format!("n = {n} outside 1..={}", fixpt_core::superop::MAX_N)));
    }
    let workers = thread::available_parallelism().map_or(1, |w| w.get()).min(trials.max(1));
    // Trials are independent streams; results are reassembled in index order.
    let mut results: Vec<report::FuzzTrial> = thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|w| {
                scope.spawn(move || {
                    (w..trials)
                        .step_by(workers)
                        .map(|i| fuzz_trial(family, n, seed, i, probes))
                        .collect::<Vec<_>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("fuzz worker panicked"))
            .collect()
    });
    results.sort_by_key(|t| t.index);
    let counterexamples = results.iter().filter(|t| t.verdict.is_counterexample()).count();
    let probes_run = results.iter().map(|t| t.verdict.probes_run).sum();
    let family_name = family
        .to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_owned();
    let mut report = ReportDocument::new(
        "fuzz",
        ReportBody::Fuzz {
            n,
            family: family_name,
            random_probes_per_trial: probes,
            counterexamples,
            trials: results,
        },
    );
    report.seed = Some(seed);
    report.probes_run = Some(probes_run);
    let code = if counterexamples > 0 { EXIT_FOUND } else { EXIT_OK };
    Ok((report, code))
}

fn verify_cmd(path: &Path) -> CmdResult {
    let original: ReportDocument = read_json(path)?;
    let (verified, mismatches) = verify_report(&original)?;
    let code = if mismatches.is_empty() { EXIT_OK } else { EXIT_FOUND };
    let report = ReportDocument::new(
        "verify-report",
        ReportBody::Verification {
            verified,
            mismatches,
        },
    );
    Ok((report, code))
}

fn build_superop(
    family: BuildFamily,
    n: Option<usize>,
    s: Option<&Path>,
    lambda: &str,
) -> Result<SuperOp, InputError> {
    let lambda = parse_scalar(lambda).map_err(|e| InputError(format!("--lambda: {e}")))?;
    let need_n = || match n {
        Some(n) if (1..=fixpt_core::superop::MAX_N).contains(&n) => Ok(n),
        Some(n) => Err(InputError(format!("n = {n} outside 1..={}", fixpt_core::superop::MAX_N))),
        None => Err(InputError("--n is required for this family".to_owned())),
    };
    let need_s = || -> Result<Matrix, InputError> {
        let path = s.ok_or_else(|| InputError("--s is required for this family".to_owned()))?;
        read_matrix(path)
    };
    let phi = match family {
        BuildFamily::Identity => SuperOp::identity(need_n()?),
        BuildFamily::Transpose => SuperOp::transpose(need_n()?),
        BuildFamily::Similarity => SuperOp::similarity(&need_s()?, &lambda)?,
        BuildFamily::NegSimilarity => SuperOp::similarity(&need_s()?, &-lambda)?,
        BuildFamily::TransposeSimilarity => SuperOp::transpose_similarity(&need_s()?, &lambda)?,
    };
    Ok(phi)
}
