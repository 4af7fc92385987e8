use std::path::Path;
use std::process::{Command, Output};

fn hyperlag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlag"))
        .args(args)
        .env_remove("HYPERLAG_JSON")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lambda_of_k8() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("k8.hg");
    assert!(hyperlag(&["construct", "K", "8", "3", "-o", path(&file)])
        .status
        .success());
    let out = hyperlag(&["--json", "lambda", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert!((v["value"].as_f64().unwrap() - 7.0 / 64.0).abs() < 1e-9);
    assert_eq!(v["exact_value"], "7/64");
    assert_eq!(v["certified"], true);
    assert_eq!(v["seed"], 0);
    let text = stdout(&hyperlag(&["lambda", path(&file)]));
    assert!(text.contains("seed: 0"));
    assert!(text.contains("7/64"));
}

#[test]
fn lambda_of_edgeless_graph() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("empty.hg");
    std::fs::write(&file, "r=3 n=5\n").unwrap();
    let out = hyperlag(&["--json", "lambda", path(&file)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["value"].as_f64(), Some(0.0));
}

#[test]
fn malformed_input_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.hg");
    std::fs::write(&file, "r=3 m=5\n1 2 3\n").unwrap();
    let out = hyperlag(&["lambda", path(&file)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(
        hyperlag(&["lambda", "/no/such/file.hg"]).status.code(),
        Some(1)
    );
    assert_eq!(hyperlag(&["no-such-command"]).status.code(), Some(1));
}

#[test]
fn check_reports_containment() {
    let dir = tempfile::tempdir().unwrap();
    let k7 = dir.path().join("k7.hg");
    let k6 = dir.path().join("k6.hg");
    hyperlag(&["construct", "K", "7", "3", "-o", path(&k7)]);
    hyperlag(&["construct", "K", "6", "3", "-o", path(&k6)]);
    let v = json(&hyperlag(&[
        "--json",
        "check",
        path(&k7),
        "--free-of",
        "P3",
    ]));
    assert_eq!(v[0]["free"], false);
    assert_eq!(v[0]["witness"].as_array().unwrap().len(), 7);
    let v = json(&hyperlag(&[
        "--json",
        "check",
        path(&k6),
        "--free-of",
        "P3",
    ]));
    assert_eq!(v[0]["free"], true);
    let f5 = dir.path().join("f5.hg");
    hyperlag(&["construct", "F5", "-o", path(&f5)]);
    let text = stdout(&hyperlag(&["check", path(&f5), "--free-of", "T2"]));
    assert!(text.starts_with("T2: contains"));
    let out = hyperlag(&["check", path(&f5), "--free-of", "nonsense"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn constructions() {
    let v = json(&hyperlag(&["--json", "construct", "T", "3", "3", "7"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 12);
    let v = json(&hyperlag(&["--json", "construct", "K", "6", "3"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 20);
    let v = json(&hyperlag(&["--json", "construct", "K-", "6", "3"]));
    assert_eq!(v["edges"].as_array().unwrap().len(), 19);
    assert_eq!(hyperlag(&["construct", "K", "6"]).status.code(), Some(1));
}

#[test]
fn extension_of_t2_is_f5() {
    let dir = tempfile::tempdir().unwrap();
    let t2 = dir.path().join("t2.hg");
    let ext = dir.path().join("ext.hg");
    hyperlag(&["construct", "T2", "-o", path(&t2)]);
    assert!(hyperlag(&["extend", path(&t2), "-o", path(&ext)])
        .status
        .success());
    let text = std::fs::read_to_string(&ext).unwrap();
    assert!(text.contains("r=3 n=5"));
    let v = json(&hyperlag(&[
        "--json",
        "check",
        path(&ext),
        "--free-of",
        "F5",
    ]));
    assert_eq!(v[0]["free"], false);
    assert_eq!(text.lines().filter(|l| !l.starts_with('r')).count(), 3);
}

#[test]
fn compress_pair_and_loop() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.hg");
    std::fs::write(&file, "r=3 n=5\n1 2 3\n3 4 5\n").unwrap();
    let v = json(&hyperlag(&[
        "--json",
        "compress",
        path(&file),
        "--pair",
        "1",
        "5",
    ]));
    assert_eq!(v["graph"]["edges"].as_array().unwrap().len(), 2);
    assert!(v["lambda_after"].as_f64().unwrap() >= v["lambda_before"].as_f64().unwrap() - 1e-12);
    let v = json(&hyperlag(&[
        "--json",
        "compress",
        path(&file),
        "--loop",
        "3",
    ]));
    assert!(v["lambda_after"].as_f64().unwrap() >= v["lambda_before"].as_f64().unwrap() - 1e-9);
    let k7 = dir.path().join("k7.hg");
    hyperlag(&["construct", "K", "7", "3", "-o", path(&k7)]);
    let out = hyperlag(&["compress", path(&k7), "--loop", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn turan_and_caps() {
    let v = json(&hyperlag(&["--json", "turan", "5", "F5"]));
    assert_eq!(v["max_edges"], 6);
    assert_eq!(v["status"], "exact");
    let v = json(&hyperlag(&["--json", "turan", "7", "T2", "--extend"]));
    assert_eq!(v["comparison"]["m"], 3);
    assert_eq!(v["comparison"]["turan_count"], 12);
    let out = hyperlag(&["turan", "7", "F5", "--max-nodes", "50"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stdout(&out).contains("lower bound"));
}

#[test]
fn density_runs_and_resumes() {
    let dir = tempfile::tempdir().unwrap();
    let ck = dir.path().join("ck.json");
    let out = hyperlag(&["--json", "density", "P2", "6", "--mode", "all"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["max_lambda_exact"], "1/16");
    let out = hyperlag(&[
        "density",
        "P3",
        "7",
        "--max-nodes",
        "100",
        "--split-depth",
        "10",
        "--batch",
        "4",
        "--checkpoint",
        path(&ck),
    ]);
    assert_eq!(out.status.code(), Some(3));
    let out = hyperlag(&[
        "--json",
        "density",
        "P3",
        "7",
        "--split-depth",
        "10",
        "--batch",
        "4",
        "--resume",
        path(&ck),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["max_lambda_exact"], "5/54");
}

#[test]
fn verify_subset() {
    let out = hyperlag(&["--json", "verify", "--only", "facts"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["passed"], true);
    let ids: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["id"].as_str().unwrap())
        .collect();
    assert_eq!(ids, ["1", "2", "3a", "3b", "5"]);
    let text = stdout(&hyperlag(&["verify", "--only", "2"]));
    assert!(text.contains("PASS"));
}

fn assert_schema(name: &str, value: &serde_json::Value) {
    let file = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/schemas")
        .join(format!("{name}.schema.json"));
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let errors: Vec<String> = validator
        .iter_errors(value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{name}: {errors:?}");
}

#[test]
fn outputs_match_schemas() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = dir.path().join("k5.hg");
    let ck = dir.path().join("ck.json");
    hyperlag(&["construct", "K", "5", "3", "-o", path(&k5)]);
    assert_schema(
        "hypergraph",
        &json(&hyperlag(&["--json", "construct", "F5"])),
    );
    assert_schema(
        "optimum_result",
        &json(&hyperlag(&["--json", "lambda", path(&k5)])),
    );
    assert_schema(
        "turan_result",
        &json(&hyperlag(&["--json", "turan", "6", "T2", "--extend"])),
    );
    assert_schema(
        "density_report",
        &json(&hyperlag(&[
            "--json",
            "density",
            "P3",
            "7",
            "--max-nodes",
            "100",
            "--batch",
            "4",
            "--split-depth",
            "10",
            "--checkpoint",
            path(&ck),
        ])),
    );
    let saved: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&ck).unwrap()).unwrap();
    assert_schema("checkpoint", &saved);
    assert_schema(
        "suite_report",
        &json(&hyperlag(&["--json", "verify", "--only", "spot"])),
    );
}
