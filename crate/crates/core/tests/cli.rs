use std::process::Command;

use serde_json::Value;

fn ubs(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ubs"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).expect("utf-8"),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = args.to_vec();
    a.extend(["--format", "json"]);
    let (code, out) = ubs(&a);
    (code, serde_json::from_str(&out).expect("valid json"))
}

#[test]
fn decompose_counterexample_system() {
    let (code, v) = json(&["decompose", "--gen", "corrigendum:5", "--horizon", "100"]);
    assert_eq!(code, 0);
    assert_eq!(v["schema"], "ubs-report/1");
    assert_eq!(v["horizon"], 100);
    assert_eq!(v["verdict"], "ok");
    let r = &v["result"];
    assert_eq!(r["components"].as_array().unwrap().len(), 5);
    assert_eq!(r["linear_order"], serde_json::json!([0, 1, 2, 3, 4]));
    // Γ is a path: the covering relation of the edges is i -> i+1.
    let edges: Vec<(u64, u64)> = r["prec_graph"]["edges"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| (e[0].as_u64().unwrap(), e[1].as_u64().unwrap()))
        .collect();
    for k in 0..4 {
        assert!(edges.contains(&(k, k + 1)));
    }
    for &(a, b) in &edges {
        assert!(a < b);
    }
}

#[test]
fn alternative_comparison_is_falsified() {
    let (code, v) = json(&[
        "compare",
        "--gen",
        "corrigendum:inf",
        "--alternative",
        "--horizon",
        "100",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["verdict"], "falsified");
    let c = &v["result"]["comparison"];
    assert_eq!(c["equal"], false);
    assert_eq!(c["unmatched_left"], serde_json::json!([]));
    assert_eq!(c["unmatched_right"], serde_json::json!(["{fam 0.. idx 1}"]));

    let (code, text) = ubs(&[
        "compare",
        "--gen",
        "corrigendum:inf",
        "--alternative",
        "--horizon",
        "100",
    ]);
    assert_eq!(code, 1);
    assert!(text.starts_with("horizon 100\n"));
    assert!(text.contains("unmatched right {fam 0.. idx 1}"));
}

#[test]
fn dual_of_small_grid() {
    let (code, text) = ubs(&["dual", "--gen", "grid:3", "--horizon", "2"]);
    assert_eq!(code, 0);
    assert!(text.contains("3-cubes: 8"));
    let (code, v) = json(&["dual", "--gen", "grid:3", "--horizon", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["dimension"], 3);
    assert_eq!(v["result"]["cube_count_by_dim"], serde_json::json!([27, 54, 36, 8]));
    assert_eq!(v["result"]["median"]["holds"], true);
}

#[test]
fn exit_codes() {
    assert_eq!(ubs(&["decompose", "--gen", "grid:0"]).0, 2);
    assert_eq!(ubs(&["decompose", "--gen", "nonsense"]).0, 2);
    assert_eq!(ubs(&["decompose", "--gen", "grid:2", "--horizon", "1"]).0, 2);
    assert_eq!(ubs(&["decompose", "--input", "/nonexistent/instance.json"]).0, 2);
    assert_eq!(ubs(&["dual", "--gen", "corrigendum:inf", "--horizon", "40"]).0, 3);
    assert_eq!(ubs(&["decompose", "--gen", "planted:low:3", "--horizon", "30"]).0, 1);
    assert_eq!(
        ubs(&["certify", "--gen", "grid:2", "--set", "[\"H0_1\", \"H0_3\"]"]).0,
        1
    );
    // Unknown subcommands are rejected by the parser.
    assert_eq!(ubs(&["frobnicate"]).0, 2);
}

#[test]
fn errors_carry_positions_and_witnesses() {
    let (code, v) = json(&[
        "certify",
        "--gen",
        "grid:2",
        "--set",
        "{\"union\": [\"H0_1\", \"bogus\"]}",
    ]);
    assert_eq!(code, 2);
    let e = &v["result"]["error"];
    assert_eq!(e["kind"], "input");
    assert_eq!(e["position"], "$.union[1]");

    let (code, v) = json(&["decompose", "--gen", "planted:low:3", "--horizon", "30"]);
    assert_eq!(code, 1);
    let e = &v["result"]["error"];
    assert_eq!(e["kind"], "precondition");
    assert!(!e["witness"].as_array().unwrap().is_empty());
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        &[
            "decompose",
            "--gen",
            "planted:random:4",
            "--seed",
            "3",
            "--format",
            "json",
        ][..],
        &["compare", "--gen", "corrigendum:4", "--seed", "7", "--format", "json"],
        &["dual", "--gen", "random:6:9", "--seed", "2", "--format", "json"],
        &["gen", "--gen", "planted:skew", "--format", "json"],
        &["decompose", "--gen", "corrigendum:3", "--format", "dot"],
    ] {
        let a = ubs(args);
        let b = ubs(args);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn instance_files_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("square.json");
    std::fs::write(
        &input,
        r#"{"wallspace": {"points": ["a", "b", "c", "d"],
            "walls": [{"id": "x", "positive": ["a", "b"]}, {"id": "y", "positive": ["a", "c"]}]}}"#,
    )
    .unwrap();
    let out = dir.path().join("report.json");
    let (code, stdout) = ubs(&[
        "dual",
        "--input",
        input.to_str().unwrap(),
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["result"]["cube_count_by_dim"], serde_json::json!([4, 4, 1]));

    std::fs::write(&input, r#"{"wallspace": {"points": ["a"], "walls": [], "extra": 1}}"#).unwrap();
    let (code, v) = json(&["certify", "--input", input.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(v["result"]["error"]["position"].as_str().unwrap().starts_with("line "));
}
