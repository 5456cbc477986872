mod support;

use std::fs;
use std::process::Command;

use fixpt_cli::report::{ReportBody, ReportDocument};
use fixpt_core::io::MatrixDocument;
use fixpt_core::{Matrix, SuperOp};
use support::{fixpt, fixpt_on, fixture, GOLDEN_EXIT_CODES};

fn report(stdout: &str) -> ReportDocument {
    serde_json::from_str(stdout).expect("stdout is a report")
}

#[test]
fn golden_exit_codes() {
    for &(cmd, flag, name, rest, expected) in GOLDEN_EXIT_CODES {
        let r = fixpt_on(cmd, flag, name, rest);
        assert_eq!(r.code, expected, "{cmd} {name} {rest:?}: {}", r.stderr);
        if expected == 2 {
            assert!(r.stdout.is_empty());
            assert!(!r.stderr.is_empty());
        }
    }
}

#[test]
fn fixdim_matches_golden_output() {
    let r = fixpt_on("fixdim", "--matrix", "identity3.json", &[]);
    let expected = fs::read_to_string(fixture("fixdim_identity3.expected.json")).unwrap();
    assert_eq!(r.stdout, expected);
}

#[test]
fn fixdim_reports_canonical_basis() {
    let r = fixpt_on("fixdim", "--matrix", "jordan_plus.json", &[]);
    let ReportBody::FixedSpace { n, dim, rank_of_a, basis } = report(&r.stdout).result else {
        panic!("wrong body")
    };
    assert_eq!((n, dim, rank_of_a), (4, 2, 4));
    assert_eq!(basis, vec![vec!["1", "0", "0", "0"], vec!["0", "0", "1", "0"]]);
}

#[test]
fn outputs_are_deterministic() {
    let cases: &[&[&str]] = &[
        &["check", "--superop", "transpose_similarity3.json", "--condition", "set", "--seed", "7"],
        &["verdict", "--superop", "similarity3.json", "--theorem", "2", "--trials", "8"],
    ];
    for case in cases {
        let path = fixture(case[2]);
        let mut args = case.to_vec();
        args[2] = path.to_str().unwrap();
        assert_eq!(fixpt(&args).stdout, fixpt(&args).stdout);
    }
    let fuzz = ["fuzz", "--n", "3", "--family", "random", "--trials", "6", "--seed", "11"];
    let a = fixpt(&fuzz);
    assert_eq!(a.stdout, fixpt(&fuzz).stdout);
    assert_eq!(a.code, 1);
}

#[test]
fn emit_s_recovers_the_stored_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let r = fixpt_on("classify", "--superop", "similarity3.json", &["--emit-s", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    let recovered: MatrixDocument = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let original: MatrixDocument = serde_json::from_str(&fs::read_to_string(fixture("s3.json")).unwrap()).unwrap();
    let recovered = Matrix::try_from(&recovered).unwrap();
    let original = Matrix::try_from(&original).unwrap();
    assert_eq!(recovered, original.gauge_normalized());

    let ReportBody::Classification { classification } = report(&r.stdout).result else {
        panic!("wrong body")
    };
    assert_eq!(classification.family, "similarity");
    assert_eq!(classification.lambda.as_deref(), Some("1"));
}

#[test]
fn emit_s_is_skipped_for_identity() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.json");
    let r = fixpt_on("classify", "--superop", "identity_superop3.json", &["--emit-s", out.to_str().unwrap()]);
    assert_eq!(r.code, 0);
    assert!(!out.exists());
    assert!(r.stderr.contains("identity"));
}

#[test]
fn negation_report_names_minus_identity() {
    let r = fixpt_on("check", "--superop", "negation3.json", &["--condition", "dim"]);
    let doc = report(&r.stdout);
    assert_eq!(doc.probes_run, Some(2));
    let ReportBody::Check { verdict, .. } = &doc.result else {
        panic!("wrong body")
    };
    let witness = Matrix::try_from(verdict.witness.as_ref().unwrap()).unwrap();
    assert_eq!(witness, -&Matrix::identity(3));
    assert_eq!(verdict.witness_index, Some(1));

    let r = fixpt_on("verdict", "--superop", "negation3.json", &["--theorem", "2"]);
    assert!(r.stdout.contains("-S*A*S^-1"));
}

#[test]
fn counterexample_reports_reverify() {
    let dir = tempfile::tempdir().unwrap();
    let runs: Vec<Vec<String>> = vec![
        vec!["check".into(), "--superop".into(), fixture("negation3.json").display().to_string(), "--condition".into(), "dim".into()],
        vec!["check".into(), "--superop".into(), fixture("similarity3.json").display().to_string(), "--condition".into(), "set".into()],
        vec!["verdict".into(), "--superop".into(), fixture("similarity3.json").display().to_string(), "--theorem".into(), "1".into()],
        vec!["fuzz".into(), "--n".into(), "3".into(), "--family".into(), "neg-similarity".into(), "--trials".into(), "4".into(), "--seed".into(), "2".into()],
    ];
    for (i, args) in runs.iter().enumerate() {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let r = fixpt(&args);
        assert_eq!(r.code, 1, "{args:?}");
        let path = dir.path().join(format!("report{i}.json"));
        fs::write(&path, &r.stdout).unwrap();
        let v = fixpt(&["verify-report", "--report", path.to_str().unwrap()]);
        assert_eq!(v.code, 0, "{}", v.stdout);
        let ReportBody::Verification { verified, mismatches } = report(&v.stdout).result else {
            panic!("wrong body")
        };
        assert!(verified >= 1);
        assert!(mismatches.is_empty());
    }
}

#[test]
fn tampered_report_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let r = fixpt_on("check", "--superop", "negation3.json", &["--condition", "dim"]);
    let tampered = r.stdout.replacen("\"image\": 3", "\"image\": 2", 1);
    assert_ne!(tampered, r.stdout);
    let path = dir.path().join("bad.json");
    fs::write(&path, tampered).unwrap();
    let v = fixpt(&["verify-report", "--report", path.to_str().unwrap()]);
    assert_eq!(v.code, 1);
}

#[test]
fn superop_builder_round_trips() {
    let r = fixpt(&["superop", "--family", "transpose", "--n", "3"]);
    assert_eq!(r.code, 0);
    let doc = serde_json::from_str(&r.stdout).unwrap();
    assert_eq!(SuperOp::try_from(&doc).unwrap(), SuperOp::transpose(3));
    let r = fixpt(&["superop", "--family", "similarity", "--n", "3"]);
    assert_eq!(r.code, 2);
    let r = fixpt(&["superop", "--family", "neg-similarity", "--s", fixture("singular3.json").to_str().unwrap()]);
    assert_eq!(r.code, 2);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(fixpt(&["frobnicate"]).code, 2);
    assert_eq!(fixpt(&["fixdim"]).code, 2);
    assert_eq!(fixpt(&["fuzz", "--n", "0", "--family", "random", "--trials", "1", "--seed", "0"]).code, 2);
    assert_eq!(fixpt(&["--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_fixpt");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["fixdim", "--matrix", fixture("identity3.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(ok.stdout).unwrap(),
        fs::read_to_string(fixture("fixdim_identity3.expected.json")).unwrap()
    );
    let found = status(&["check", "--superop", fixture("negation3.json").to_str().unwrap(), "--condition", "dim"]);
    assert_eq!(found.status.code(), Some(1));
    let bad = status(&["fixdim", "--matrix", fixture("ragged.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2));
}
