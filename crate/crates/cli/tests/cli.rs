use std::process::{Command, Output};

use serde_json::Value;
use springer_core::verify::VerificationReport;

fn springer(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_springer"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn sorted(v: Value) -> Value {
    match v {
        Value::Object(m) => {
            let mut entries: Vec<(String, Value)> = m.into_iter().collect();
            entries.sort_by(|a, b| a.0.cmp(&b.0));
            Value::Object(entries.into_iter().map(|(k, v)| (k, sorted(v))).collect())
        }
        Value::Array(a) => Value::Array(a.into_iter().map(sorted).collect()),
        other => other,
    }
}

fn assert_round_trip(text: &str) -> Value {
    let text = text.trim_end();
    let v: Value = serde_json::from_str(text).unwrap();
    assert_eq!(
        serde_json::to_string_pretty(&sorted(v.clone())).unwrap(),
        text
    );
    v
}

#[test]
fn green_table_rows() {
    let o = springer(&["green", "--n", "4", "--mu", "2,2", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = assert_round_trip(&stdout(&o));
    let rows = v["rows"].as_array().unwrap();
    let row =
        |class: &str| rows.iter().find(|r| r["class"] == class).unwrap()["coefficients"].clone();
    assert_eq!(row("(1,1,1,1)"), serde_json::json!(["1", "3", "2"]));
    assert_eq!(row("(2,2)"), serde_json::json!(["1", "-1", "2"]));
    assert_eq!(row("(4)"), serde_json::json!(["1", "-1"]));

    let o = springer(&["green", "--mu", "1,1"]);
    assert_eq!(
        stdout(&o)
            .lines()
            .filter(|l| l.starts_with('('))
            .collect::<Vec<_>>(),
        ["(1,1): 1 + q", "(2): 1 - q"]
    );
    let o = springer(&["green", "--mu", "1", "--format", "json"]);
    let v = assert_round_trip(&stdout(&o));
    assert_eq!(
        v["rows"],
        serde_json::json!([{"class": "(1)", "coefficients": ["1"]}])
    );
}

#[test]
fn eval_matches_coset_counts() {
    let o = springer(&[
        "eval", "--n", "4", "--mu", "2,2", "--e", "2", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let v = assert_round_trip(&stdout(&o));
    let rows = v["rows"].as_array().unwrap();
    let vals = |class: &str| rows.iter().find(|r| r["class"] == class).unwrap()["values"].clone();
    assert_eq!(vals("(2,2)"), serde_json::json!(["2", "4"]));
    assert_eq!(vals("(4)"), serde_json::json!(["0", "2"]));
    assert_eq!(vals("(1,1,1,1)"), serde_json::json!(["6", "0"]));
    assert_eq!(v["status"], "pass");

    let o = springer(&[
        "eval", "--mu", "1,1,1,1", "--e", "4", "--j", "1", "--format", "csv",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "(4),4,4"), "{}", stdout(&o));

    let o = springer(&["eval", "--mu", "2,1", "--e", "1", "--format", "json"]);
    let v = assert_round_trip(&stdout(&o));
    assert_eq!(v["exponents"], serde_json::json!([0]));
}

#[test]
fn regular_catalog_lines() {
    let line = |args: &[&str]| stdout(&springer(args)).trim().to_string();
    assert_eq!(
        line(&[
            "regular",
            "--family",
            "A",
            "--rank",
            "5",
            "--e",
            "3",
            "--variant",
            "a"
        ]),
        "(123)(456), regular, a(e)=2"
    );
    assert_eq!(
        line(&[
            "regular",
            "--family",
            "B",
            "--rank",
            "2",
            "--e",
            "4",
            "--variant",
            "b"
        ]),
        "-(12), regular, a(e)=1"
    );
    assert_eq!(
        line(&[
            "regular",
            "--family",
            "D",
            "--rank",
            "4",
            "--e",
            "2",
            "--variant",
            "c"
        ]),
        "-(1)-(2)-(3)-(4), regular, a(e)=4"
    );
    let o = springer(&[
        "regular",
        "--family",
        "B",
        "--rank",
        "3",
        "--e",
        "2",
        "--variant",
        "a",
    ]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_exit_codes_and_reports() {
    let o = springer(&[
        "verify", "--check", "prop37", "--n", "4", "--mu", "2,2", "--e", "2", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert_round_trip(&text);
    let r: VerificationReport = serde_json::from_str(&text).unwrap();
    assert!(r.passed());
    assert_eq!(r.config["mu"], "(2,2)");

    let o = springer(&[
        "verify", "--check", "remark38", "--m", "2", "--e", "2", "--format", "json",
    ]);
    assert_eq!(code(&o), 0);
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(r.notes.iter().any(
        |n| n == "amended reading matches; printed reading differs on classes [(4), (1,1,1,1)]"
    ));

    let o = springer(&[
        "verify", "--check", "lemma15", "--family", "F", "--rank", "4",
    ]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("no L-regular elements"));

    // B4 with W_L of type B2 is not L-regular for e = 2
    let o = springer(&[
        "verify", "--check", "lemma15", "--family", "B", "--rank", "4", "--format", "json",
    ]);
    assert_eq!(code(&o), 1);
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(!r.counterexamples.is_empty());

    let o = springer(&["verify", "--check", "prop37", "--mu", "2,2"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--e"));
}

#[test]
fn several_checks_in_request_order() {
    let args = [
        "verify",
        "--check",
        "theorem17",
        "--check",
        "cor35",
        "--check",
        "prop33",
        "--n",
        "4",
        "--pi-L",
        "1,3",
        "--e",
        "2",
        "--format",
        "json",
    ];
    let strip = |jobs: &str| {
        let mut a = args.to_vec();
        a.extend(["--jobs", jobs]);
        let o = springer(&a);
        assert_eq!(code(&o), 0);
        let mut v = assert_round_trip(&stdout(&o));
        for r in v.as_array_mut().unwrap() {
            r["elapsed_ms"] = Value::from(0);
        }
        v
    };
    let one = strip("1");
    let checks: Vec<&str> = one
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["check"].as_str().unwrap())
        .collect();
    assert_eq!(checks, ["theorem17", "cor35", "prop33"]);
    assert_eq!(one, strip("4"));
}

#[test]
fn csv_and_text_formats() {
    let o = springer(&[
        "verify", "--check", "prop33", "--mu", "2,2", "--e", "2", "--format", "csv",
    ]);
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("check,status,class,index,lhs,rhs,elapsed_ms")
    );
    assert!(lines.next().unwrap().starts_with("prop33,pass,"));
    let o = springer(&["verify", "--check", "prop33", "--mu", "2,2", "--e", "2"]);
    assert!(stdout(&o).starts_with("prop33: pass"));
}

#[test]
fn config_validate_cases() {
    let o = springer(&[
        "config-validate",
        "--n",
        "4",
        "--pi-L",
        "1,3",
        "--e",
        "2",
        "--nu",
        "2",
        "--nu",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    let v = assert_round_trip(&stdout(&o));
    assert_eq!(v["case"], "b");
    assert_eq!(v["config"]["a"], "(13)(24)");

    let o = springer(&["config-validate", "--n", "5", "--pi-L", "4", "--e", "3"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("case (a)"));

    let o = springer(&["config-validate", "--n", "6", "--pi-L", "5", "--e", "3"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("L-regular"));

    let o = springer(&[
        "config-validate",
        "--family",
        "E",
        "--rank",
        "6",
        "--pi-L",
        "6",
        "--e",
        "5",
        "--format",
        "json",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(assert_round_trip(&stdout(&o))["config"]["L_prime"], "A4");
}

#[test]
fn bound_flag_and_env() {
    let o = springer(&[
        "verify", "--check", "prop37", "--mu", "2,2", "--e", "2", "--bound", "10",
    ]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound"));
    let o = Command::new(env!("CARGO_BIN_EXE_springer"))
        .args(["verify", "--check", "prop37", "--mu", "2,2", "--e", "2"])
        .env("SPRINGER_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}
