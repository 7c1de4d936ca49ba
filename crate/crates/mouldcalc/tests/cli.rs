use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mouldcalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "qsh [1] [2]"]), "[1.2] + [2.1] + [3]");
    assert_eq!(
        stdout(&["eval", "gamma", "[1.2]"]),
        "[1.2](x)[1.2] + [1.2](x)[2.1] + [1.2](x)[3] + [3](x)[1.2]"
    );
    assert_eq!(stdout(&["eval", "arborify 3(1,2)"]), "[1.2.3] + [2.1.3] + [3.3]");
    assert_eq!(stdout(&["eval", "antipode [1.2]"]), "[2.1] + [3]");
}

#[test]
fn json_output() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--json", "eval", "qsh [1] [1]"])).unwrap();
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 2);
    assert_eq!(terms[0]["basis"], "[1.1]");
    assert_eq!(terms[0]["coeff"], "2");
    assert_eq!(terms[1]["basis"], "[2]");
}

#[test]
fn surjections() {
    assert_eq!(stdout(&["surj", "factorize", "1224|113"]), "delta 124|13\nsigma 1223|445");
    assert_eq!(stdout(&["surj", "std", "13224"]), "14235");
    let fiber = stdout(&["surj", "fiber", "1224|112334"]);
    assert!(fiber.ends_with("75 elements"), "{}", fiber);
    assert!(stdout(&["surj", "enumerate", "qsh", "1", "1"]).ends_with("3 elements"));
}

#[test]
fn moulds() {
    assert_eq!(stdout(&["mould", "eval", "exp", "[1.2]"]), "1/2");
    assert_eq!(stdout(&["mould", "comp", "exp", "I", "[1.1]"]), "1/2");
    assert_eq!(stdout(&["arbomould", "eval", "arb:exp", "3(1,2)"]), "5/6");
    let table = r#"{"default":"0","entries":{"[1.2]":"1/2"}}"#;
    assert_eq!(stdout(&["mould", "eval", table, "[1.2]"]), "1/2");
    assert!(stdout(&["mould", "check-symmetrel", "J"]).contains("PASS"));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["mould", "check-symmetrel", "exp"]).status.code(), Some(1));
    assert_eq!(run(&["arbomould", "check", "--mould", "I"]).status.code(), Some(1));
    assert_eq!(run(&["check", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["check", "--suite", "words-hopf", "--max-len", "12"]).status.code(), Some(2));
    assert_eq!(run(&["eval", "qsh [1] [x]"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    let out = run(&["eval", "qsh [1] [x]"]);
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 9"));
}

#[test]
fn suite_report_and_expected_failures() {
    let out = run(&["check", "--suite", "arbomould-algebra", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("suite arbomould-algebra\nbounds "));
    assert!(text.contains("EXPECTED-FAIL I left unit"));
    assert!(text.contains("result PASS"));
    // durations go to stderr only
    assert!(String::from_utf8_lossy(&out.stderr).contains("arbomould-algebra "));
    let json = run(&["--json", "check", "--suite", "golden"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[0]["summary"]["fail"], 0);
}
