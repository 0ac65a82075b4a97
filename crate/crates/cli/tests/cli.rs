//! End-to-end tests of the command-line interface: exit codes, JSON
//! shapes, determinism of reports.

use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rootfunctors"))
}

fn run(args: &[&str]) -> (String, String, Option<i32>) {
    let out = bin().args(args).output().expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).to_string(),
        String::from_utf8_lossy(&out.stderr).to_string(),
        out.status.code(),
    )
}

#[test]
fn check_suites_pass_with_exit_zero() {
    for suite in ["weyl", "monoid-S", "monoid-Shat", "coinvariant"] {
        let (stdout, _, code) = run(&["check", "--suite", suite]);
        assert_eq!(code, Some(0), "suite {suite}");
        let v: serde_json::Value = serde_json::from_str(&stdout).expect("json report");
        assert_eq!(v["failed"], 0, "suite {suite}");
        assert_eq!(v["suite"], suite);
    }
}

#[test]
fn singular_braid_check_passes() {
    let (stdout, _, code) = run(&["check", "--suite", "singular-braid", "--n", "3"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["passed"].as_u64().unwrap() >= 7);
}

#[test]
fn unknown_suite_is_usage_error() {
    let (_, stderr, code) = run(&["check", "--suite", "bogus"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("unknown suite"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let (a, _, _) = run(&["check", "--suite", "monoid-S"]);
    let (b, _, _) = run(&["check", "--suite", "monoid-S"]);
    assert_eq!(a, b);
}

#[test]
fn pretty_mode_renders_markdown() {
    let (stdout, _, code) = run(&["check", "--suite", "monoid-S", "--pretty"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("| id | claim | status |"));
}

#[test]
fn monoid_commands() {
    let (stdout, _, code) = run(&["monoid", "normalize", "--preset", "S", "--word", "TGT"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["normal_form"], "T");
    let (stdout, _, code) = run(&["monoid", "normalize", "--preset", "S-hat", "--word", "CKC"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["normal_form"], "C");
    let (stdout, _, _) = run(&["monoid", "idempotents", "--preset", "S", "--max-len", "8"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let idem: Vec<String> = v["idempotents"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_string())
        .collect();
    assert!(idem.contains(&"1".to_string()));
    assert!(idem.contains(&"TGG".to_string()));
    let (stdout, _, code) =
        run(&["monoid", "eggbox", "--preset", "S", "--pretty"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("D-class"));
    // infinite monoid: positive witness claims instead of a full diagram
    let (stdout, _, code) =
        run(&["monoid", "eggbox", "--preset", "S-hat", "--max-len", "4"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert!(v["l_claims"].as_array().unwrap().iter().any(|c| {
        (c["x"] == "K" && c["y"] == "CK") || (c["x"] == "CK" && c["y"] == "K")
    }));
}

#[test]
fn monoid_from_json_file() {
    let dir = std::env::temp_dir().join("rootfunctors-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("presentation.json");
    std::fs::write(
        &path,
        r#"{"alphabet":["a"],"relations":[[["a","a"],["a"]]]}"#,
    )
    .unwrap();
    let (stdout, _, code) = run(&[
        "monoid",
        "normalize",
        "--file",
        path.to_str().unwrap(),
        "--word",
        "aaa",
    ]);
    assert_eq!(code, Some(0), "stdout: {stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["normal_form"], "a");
}

#[test]
fn ktheory_commands() {
    let (stdout, _, code) = run(&["ktheory", "check", "--n", "3"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["all_pass"], true);
    let (stdout, _, _) =
        run(&["ktheory", "matrix", "--n", "2", "--i", "1", "--kind", "shuffle", "--csv"]);
    assert_eq!(stdout.trim(), "0,1\n1,0");
    let (_, _, code) = run(&["ktheory", "matrix", "--n", "2", "--i", "5", "--kind", "theta"]);
    assert_eq!(code, Some(2));
}

#[test]
fn coinv_reduce() {
    let (stdout, _, code) = run(&["coinv", "reduce", "--n", "2", "x1^2"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["reduced"], "0");
    let (_, _, code) = run(&["coinv", "reduce", "--n", "2", "x9"]);
    assert_eq!(code, Some(2));
}

#[test]
fn soergel_verifications() {
    let (stdout, _, code) = run(&["soergel", "verify-theta-c", "--n", "2", "--i", "1"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dim_cokernel_front"], 4);
    let (stdout, _, code) = run(&["soergel", "verify-adjacent", "--n", "3", "--i", "1"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dim_quotient_a"], 12);
    let (_, _, code) = run(&["soergel", "verify-adjacent", "--n", "2", "--i", "1"]);
    assert_eq!(code, Some(2));
}

#[test]
fn block_eval_and_check() {
    let (stdout, _, code) =
        run(&["block", "eval", "--functor", "T_1", "--module", "Delta(e)"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["result"], "L(s)");
    // duality conjugation normalizes in the parser
    let (stdout, _, _) = run(&["block", "eval", "--functor", "d∘T_1∘d", "--module", "Delta(s)"]);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["functor"], "G_1");
    assert_eq!(v["result"], "Delta(e)");
    let (_, _, code) = run(&["block", "eval", "--functor", "T_9", "--module", "Delta(e)"]);
    assert_eq!(code, Some(2));
    let (stdout, _, code) = run(&["block", "check", "--suite", "table"]);
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["failed"], 0);
}

#[test]
fn block_eval_user_algebra_file() {
    let dir = std::env::temp_dir().join("rootfunctors-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sl2.json");
    std::fs::write(
        &path,
        r#"{
          "rank": 2,
          "vertices": [["e", "e"], ["s", "s1"]],
          "arrows": [
            {"name": "a", "from": "e", "to": "s"},
            {"name": "b", "from": "s", "to": "e"}
          ],
          "relations": [[["1", ["a", "b"]]]],
          "antiinvolution": {"a": "b", "b": "a"}
        }"#,
    )
    .unwrap();
    let (stdout, _, code) = run(&[
        "block",
        "eval",
        "--algebra",
        path.to_str().unwrap(),
        "--functor",
        "T_1",
        "--module",
        "P(e)",
    ]);
    assert_eq!(code, Some(0), "stdout: {stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["dimension_vector"].as_array().unwrap().len(), 2);
}
