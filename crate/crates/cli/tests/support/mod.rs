#![allow(dead_code)]

use std::path::PathBuf;

pub fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn fixpt(args: &[&str]) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("fixpt").chain(args.iter().copied());
    let code = fixpt_cli::run(argv, &mut out, &mut err);
    Run {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

pub fn fixpt_on(cmd: &str, flag: &str, fixture_name: &str, rest: &[&str]) -> Run {
    let path = fixture(fixture_name);
    let mut args = vec![cmd, flag, path.to_str().unwrap()];
    args.extend_from_slice(rest);
    fixpt(&args)
}

/// Expected exit code for each fixture-driven invocation.
pub const GOLDEN_EXIT_CODES: &[(&str, &str, &str, &[&str], i32)] = &[
    ("fixdim", "--matrix", "identity3.json", &[], 0),
    ("fixdim", "--matrix", "jordan_plus.json", &[], 0),
    ("fixdim", "--matrix", "singular3.json", &[], 0),
    ("fixdim", "--matrix", "bad_scalar.json", &[], 2),
    ("fixdim", "--matrix", "ragged.json", &[], 2),
    ("fixdim", "--matrix", "not_json.json", &[], 2),
    ("fixdim", "--matrix", "missing.json", &[], 2),
    ("classify", "--superop", "similarity3.json", &[], 0),
    ("classify", "--superop", "transpose_similarity3.json", &[], 0),
    ("classify", "--superop", "row_convention3.json", &[], 2),
    ("classify", "--superop", "wrong_side.json", &[], 2),
    ("check", "--superop", "negation3.json", &["--condition", "dim"], 1),
    ("check", "--superop", "similarity3.json", &["--condition", "dim"], 0),
    ("check", "--superop", "transpose_similarity3.json", &["--condition", "dim"], 0),
    ("check", "--superop", "transpose_similarity3.json", &["--condition", "set"], 1),
    ("check", "--superop", "identity_superop3.json", &["--condition", "set"], 0),
    ("check", "--superop", "identity_superop3.json", &["--condition", "size"], 2),
    ("verdict", "--superop", "identity_superop3.json", &["--theorem", "1"], 0),
    ("verdict", "--superop", "similarity3.json", &["--theorem", "1"], 1),
    ("verdict", "--superop", "similarity3.json", &["--theorem", "2"], 0),
    ("verdict", "--superop", "negation3.json", &["--theorem", "2"], 1),
    ("verdict", "--superop", "negation3.json", &["--theorem", "3"], 2),
];
