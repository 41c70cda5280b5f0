//! Byte-exact CLI outputs. Set `UPDATE_GOLDEN=1` to rewrite the files.

use std::path::PathBuf;
use std::process::Command;

const CURVE_INDEX: &[&str] = &["index", "--variety", "CI(3;2,2)", "--order", "1", "--source", "O(0)", "--target", "O(0)"];
const P2_EULER: &[&str] = &["euler", "--variety", "P(2)", "--bundle", "O(N)"];
const SEXTIC_COMPAT: &[&str] = &[
    "index", "--mode", "paper-compat", "--variety", "CI(4;2,3)", "--order", "1", "--source", "O(0)", "--target", "O(0)",
];
const SEXTIC_DEFAULT: &[&str] = &["index", "--variety", "CI(4;2,3)", "--order", "1", "--source", "O(0)", "--target", "O(0)"];
const CURVE_AT: &[&str] = &[
    "index", "--variety", "CI(3;2,2)", "--order", "1", "--source", "O(0)", "--target", "O(0)", "--at", "5",
];
const P2_CHERN: &[&str] = &["chern", "--variety", "P(2)", "--bundle", "O(1) + O(2)"];
const TWISTED_TANGENT: &[&str] = &["chern", "--variety", "P(2)", "--bundle", "O(N+2) * dual(Omega)"];
const K3_TODD: &[&str] = &["todd", "--variety", "CI(4;2,3)"];
const REPORT: &[&str] = &["report", "paper"];

const CASES: &[(&str, &[&str])] = &[
    ("index_curve", CURVE_INDEX),
    ("index_curve_at5", CURVE_AT),
    ("euler_p2", P2_EULER),
    ("index_sextic_compat", SEXTIC_COMPAT),
    ("index_sextic_default", SEXTIC_DEFAULT),
    ("chern_p2", P2_CHERN),
    ("chern_twisted_tangent", TWISTED_TANGENT),
    ("todd_sextic", K3_TODD),
    ("report_paper", REPORT),
];

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn invoke(args: &[&str]) -> (i32, Vec<u8>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_indexcalc"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap(), out.stdout, out.stderr)
}

fn check(name: &str, args: &[&str]) {
    let (code, stdout, stderr) = invoke(args);
    assert_eq!(code, 0, "{name}: {}", String::from_utf8_lossy(&stderr));
    assert!(stderr.is_empty());
    let path = golden_dir().join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &stdout).unwrap();
    }
    let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
    assert_eq!(String::from_utf8_lossy(&stdout), String::from_utf8_lossy(&expected), "{name}");
    // identical invocations give identical bytes
    assert_eq!(invoke(args).1, stdout);
}

#[test]
fn text_outputs() {
    for (name, args) in CASES {
        check(&format!("{name}.txt"), args);
    }
}

#[test]
fn json_outputs() {
    for (name, args) in CASES {
        let mut with_flag = vec!["--json"];
        with_flag.extend_from_slice(args);
        check(&format!("{name}.json"), &with_flag);
    }
}

fn has_float(v: &serde_json::Value) -> bool {
    match v {
        serde_json::Value::Number(n) => n.is_f64(),
        serde_json::Value::Array(xs) => xs.iter().any(has_float),
        serde_json::Value::Object(m) => m.values().any(has_float),
        _ => false,
    }
}

#[test]
fn json_envelope_schema() {
    for (_, args) in CASES {
        let mut with_flag = args.to_vec();
        with_flag.push("--json");
        let (code, stdout, _) = invoke(&with_flag);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_slice(&stdout).unwrap();
        let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
        assert_eq!(keys, ["query", "result", "variety"]);
        assert!(!has_float(&v), "no floats in JSON");
    }
}

#[test]
fn parse_errors_exit_two_with_position() {
    let cases: &[(&[&str], &str)] = &[
        (&["chern", "--variety", "CI(3;2", "--bundle", "T"], "at byte 6"),
        (&["chern", "--variety", "P(2)", "--bundle", "O(N+2) *"], "at byte 8"),
        (&["euler", "--variety", "P(2)", "--bundle", "Sym(4, T)"], "at byte 4"),
        (&["todd", "--variety", "X(3)"], "at byte 0"),
    ];
    for (args, position) in cases {
        let (code, stdout, stderr) = invoke(args);
        let stderr = String::from_utf8(stderr).unwrap();
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty());
        assert!(stderr.contains(position), "{stderr}");
        assert!(stderr.contains('^'), "{stderr}");
    }
}

#[test]
fn validation_and_usage_errors_exit_two() {
    for args in [
        &["todd", "--variety", "CI(2;3,3)"][..],
        &["index", "--variety", "P(2)", "--order", "4", "--source", "O(0)", "--target", "O(0)"],
        &["frobnicate"],
        &["index", "--variety", "P(2)"],
    ] {
        let (code, stdout, stderr) = invoke(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(stdout.is_empty());
        assert!(!stderr.is_empty());
    }
}

#[test]
fn computation_rejections_exit_one() {
    for args in [
        &["index", "--mode", "paper-compat", "--variety", "CI(3;4)", "--order", "1", "--source", "O(0)", "--target", "O(0)"][..],
        &["chern", "--variety", "P(2)", "--bundle", "Sym(2, O(0) - T)"],
    ] {
        let (code, stdout, stderr) = invoke(args);
        assert_eq!(code, 1, "{args:?}");
        assert!(stdout.is_empty());
        assert!(String::from_utf8(stderr).unwrap().starts_with("error: computation rejected"));
    }
}

#[test]
fn negative_evaluation_point() {
    let (code, stdout, _) = invoke(&["euler", "--variety", "P(1)", "--bundle", "O(N)", "--at", "-3"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, b"-2\n");
}
