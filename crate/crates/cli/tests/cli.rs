use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn cliffdeg(args: &[&str]) -> (i32, Value, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_cliffdeg")).args(args).output().expect("binary runs");
    let doc: Value = serde_json::from_slice(&out.stdout).expect("stdout is one JSON document");
    (out.status.code().expect("exit code"), doc, out.stdout)
}

#[test]
fn random_reconstruction_recovers_the_form() {
    let (code, doc, _) = cliffdeg(&["form", "reconstruct", "--m", "5", "--random", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(doc["subcommand"], "form reconstruct");
    assert_eq!(doc["verdict"], "pass");
    assert_eq!(doc["payload"]["seed"], 7);
    let r = &doc["payload"]["results"][0];
    assert_eq!(r["form"], r["recovered"]);
    assert_eq!(r["recovered"]["m"], 5);
}

#[test]
fn output_is_deterministic() {
    let args = ["form", "reconstruct", "--m", "4", "--random", "--seed", "11", "--trials", "3"];
    assert_eq!(cliffdeg(&args).2, cliffdeg(&args).2);
    let other = ["form", "reconstruct", "--m", "4", "--random", "--seed", "12", "--trials", "3"];
    assert_ne!(cliffdeg(&args).2, cliffdeg(&other).2);
}

#[test]
fn plethysm_g2_is_v_rho() {
    let (code, doc, _) = cliffdeg(&["plethysm", "verify", "g2"]);
    assert_eq!(code, 0);
    let c = &doc["payload"]["constituents"];
    assert_eq!(c.as_array().unwrap().len(), 1);
    assert_eq!(c[0]["dim"], 64);
    assert_eq!(c[0]["multiplicity"], 1);
    assert_eq!(doc["payload"]["halfspin_agree"], true);
    let (code, minus, _) = cliffdeg(&["plethysm", "verify", "g2", "--halfspin", "-"]);
    assert_eq!(code, 0);
    assert_eq!(minus["payload"]["constituents"], *c);
}

#[test]
fn zero_is_classified_none() {
    let (code, doc, _) = cliffdeg(&["lipschitz", "test", "--json", r#"{"m": 3, "Q": [[1,0,0],[0,1,0],[0,0,0]], "x": {}}"#]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["verdict"], "none");
}

#[test]
fn lipschitz_verdicts() {
    let run = |x: &str| {
        let input = format!(r#"{{"m": 2, "Q": [[1,0],[0,1]], "x": {x}}}"#);
        cliffdeg(&["lipschitz", "test", "--json", &input]).1["payload"]["verdict"].clone()
    };
    assert_eq!(run(r#"{"[]": "1"}"#), "spin");
    assert_eq!(run(r#"{"[1]": "2"}"#), "group");
    assert_eq!(run(r#"{"[]": "1", "[1]": "1"}"#), "none");
    let (code, doc, _) = cliffdeg(&[
        "lipschitz",
        "test",
        "--infinitesimal",
        "--json",
        r#"{"m": 3, "Q": [[0,0,0],[0,0,0],[0,0,0]], "x": {"[1]": "1"}}"#,
    ]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["verdict"], "monoid");
    assert_eq!(doc["payload"]["infinitesimal"]["spin_dim"], 3);
}

#[test]
fn malformed_json_is_a_usage_error_with_position() {
    let (code, doc, _) = cliffdeg(&["form", "reconstruct", "--json", "{\"m\": 3,\n \"Q\": [1, }"]);
    assert_eq!(code, 1);
    assert_eq!(doc["verdict"], "error");
    assert!(doc["payload"]["error"].as_str().unwrap().contains("line 2 column"));
}

#[test]
fn unknown_flags_and_subcommands_are_rejected() {
    assert_eq!(cliffdeg(&["plethysm", "verify", "g2", "--bogus"]).0, 1);
    assert_eq!(cliffdeg(&["plethysm", "verify", "e8"]).0, 1);
    assert_eq!(cliffdeg(&["frobnicate"]).0, 1);
}

#[test]
fn degeneration_witness() {
    let (code, doc, _) =
        cliffdeg(&["degenerate", "analyze", "--json", r#"{"m": 3, "Q": [["1","0","0"],["0","1","0"],["0","0",["0","1"]]]}"#]);
    assert_eq!(code, 0);
    let p = &doc["payload"];
    assert_eq!(p["det"], serde_json::json!(["0", "8"]));
    assert_eq!(p["radical_dim"], 2);
    assert_eq!(p["special_fiber"]["dim"], 4);
    // Same family moved so that the special point is t = 2.
    let (code, doc, _) =
        cliffdeg(&["degenerate", "analyze", "--at", "2", "--json", r#"{"m": 3, "Q": [[1,0,0],[0,1,0],[0,0,["-2","1"]]]}"#]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["radical_dim"], 2);
    // Even m has no certificate.
    let (code, doc, _) = cliffdeg(&["degenerate", "analyze", "--json", r#"{"m": 2, "Q": [[1,0],[0,[0,1]]]}"#]);
    assert_eq!(code, 2);
    assert!(doc["payload"]["error"].is_string());
}

#[test]
fn local_model_commands() {
    let nil = r#"{"g": 2, "n": 2, "X": [[[0,1],[0,0]], [[0,0],[1,0]]]"#;
    let (code, doc, _) = cliffdeg(&["localmodel", "simple", "--json", &format!(r#"{nil}, "v": [1, 0]}}"#)]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["span_dim"], 4);
    assert_eq!(doc["payload"]["cyclic_vector"], true);

    let (code, doc, _) = cliffdeg(&["localmodel", "centralizer", "--json", &format!(r#"{nil}, "h": "sl2"}}"#)]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["centralizer_dim"], 0);

    let pair = format!(r#"{{"T1": {nil}}}, "T2": {{"g": 2, "n": 2, "X": [[[0,0],[0,0]], [[0,0],[0,0]]]}}}}"#);
    let (code, doc, _) = cliffdeg(&["localmodel", "sequiv", "--json", &pair]);
    assert_eq!(code, 2);
    assert_eq!(doc["payload"]["counterexample"]["word"], serde_json::json!([1, 2]));

    let diag = r#"{"T1": {"g": 2, "n": 2, "X": [[[1,0],[0,2]], [[0,0],[0,0]]]}, "T2": {"g": 2, "n": 2, "X": [[[2,0],[0,1]], [[0,0],[0,0]]]}}"#;
    let (code, doc, _) = cliffdeg(&["localmodel", "sequiv", "--L", "3", "--fingerprints", "--json", diag]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["L"], 3);
    assert_eq!(doc["payload"]["fingerprint_T1"]["traces"][0]["trace"], "2");
}

#[test]
fn input_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cliffdeg"))
        .args(["form", "tensor", "--input", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(br#"{"m": 2, "Q": [["0","1/2"],["1/2","0"]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["tensor"]["dim"], 2);
}

#[test]
fn spinor_commands() {
    let (code, doc, _) = cliffdeg(&["spinor", "check", "--l", "2", "--type", "b"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["image_rank"], 16);
    let (code, doc, _) = cliffdeg(&["spinor", "weights", "--l", "3", "--type", "d", "--halfspin", "+"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["dim"], 4);
    assert_eq!(doc["payload"]["tsv"].as_str().unwrap().lines().count(), 4);
}

#[test]
fn selftest_subset() {
    let (code, doc, _) = cliffdeg(&["selftest", "--criterion", "10", "--seed", "5"]);
    assert_eq!(code, 0);
    assert_eq!(doc["payload"]["seed"], 5);
    assert_eq!(doc["payload"]["criteria"][0]["passed"], true);
    assert_eq!(cliffdeg(&["selftest", "--criterion", "42"]).0, 1);
}
