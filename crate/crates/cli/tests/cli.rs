use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn dgpoly(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dgpoly")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = args.to_vec();
    all.push("--json");
    let out = dgpoly(&all);
    assert!(out.status.code().is_some_and(|c| c <= 1), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn schema(command: &str) -> jsonschema::JSONSchema {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "schemas", &format!("{command}.schema.json")]
        .iter()
        .collect();
    let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    jsonschema::JSONSchema::options()
        .with_draft(jsonschema::Draft::Draft202012)
        .compile(&value)
        .expect("schema compiles")
}

#[test]
fn outputs_validate_against_published_schemas() {
    let corpus: &[(&str, &[&[&str]])] = &[
        ("classify", &[&["--t", "0,0,0"], &["--t", "2,-1,3/2"], &["--t", "0,5"]]),
        ("cohomology", &[&["--t", "1,0,0"], &["--t", "0,0"], &["--t", "-1,2", "--max-degree", "5"]]),
        (
            "resolve",
            &[&["--t", "0,0", "--method", "em"], &["--t", "1,0", "--method", "em"], &["--t", "1,0,0", "--max-degree", "4"]],
        ),
        ("invariants", &[&["--t", "1,0,0"], &["--t", "0,0,0"], &["--t", "3"]]),
        ("verify", &[&["--t", "1,0,0"], &["--t", "0,0", "--claims", "ThmGldim,ThmDgkrull"]]),
        ("sweep", &[&["--count", "8"], &["--count", "4", "--n", "2", "--seed", "5"]]),
    ];
    for (command, cases) in corpus {
        let compiled = schema(command);
        for args in *cases {
            let mut full = vec![*command];
            full.extend_from_slice(args);
            let v = json(&full);
            let msgs: Vec<String> = match compiled.validate(&v) {
                Ok(()) => Vec::new(),
                Err(errors) => errors.map(|e| format!("{} at {}", e, e.instance_path)).collect(),
            };
            assert!(msgs.is_empty(), "{full:?} violates its schema: {msgs:?}");
        }
    }
}

#[test]
fn classify_examples() {
    let v = json(&["classify", "--t", "0,0,0"]);
    assert_eq!(v["class"], "ZERO");
    let v = json(&["classify", "--t", "0,-3/2,1"]);
    assert_eq!(v["class"], "NONZERO");
    assert_eq!(v["pivot"], 2);
    assert_eq!(v["spec"]["t"][1], "-3/2");
}

#[test]
fn verify_exit_status_tracks_failures() {
    let out = dgpoly(&["verify", "--t", "1,0,0", "--claims", "ThmDgkrull", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 1);
    assert_eq!(v["rows"][0]["verdict"], "PASS");

    // Freeness fails honestly in three variables, so the whole table fails.
    let out = dgpoly(&["verify", "--t", "1,0,0", "--json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let any_fail = v["rows"].as_array().unwrap().iter().any(|r| r["verdict"] == "FAIL");
    assert!(any_fail);
    assert_eq!(out.status.code(), Some(1));

    let out = dgpoly(&["verify", "--t", "0,0,0"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn malformed_input_is_rejected() {
    for args in [
        &["classify", "--t", "1,x"][..],
        &["classify", "--t", "1/0"],
        &["classify", "--t", "1,2", "--n", "3"],
        &["classify"],
        &["verify", "--t", "1", "--claims", "NoSuchClaim"],
        &["cohomology", "--t", "1", "--presentation-bound", "1"],
        &["sweep", "--t", "1"],
        &["classify", "--spec", "/no/such/file.json"],
    ] {
        let out = dgpoly(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn spec_file_matches_inline_spec() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    std::fs::write(&path, r#"{"n": 3, "t": ["2", "-1", "3/2"]}"#).unwrap();
    let a = json(&["invariants", "--spec", path.to_str().unwrap()]);
    let b = json(&["invariants", "--t", "2,-1,3/2"]);
    assert_eq!(a["verdicts"], b["verdicts"]);
    assert_eq!(a["run"]["spec_source"], "file");

    std::fs::write(&path, r#"{"n": 2, "t": ["1"]}"#).unwrap();
    assert_eq!(dgpoly(&["classify", "--spec", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn unfinished_computations_exit_with_three() {
    // The resolution of k over H(A(1,0,0)) never terminates.
    let out = dgpoly(&["resolve", "--t", "1,0,0", "--method", "em"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn human_tables_are_derived_from_json() {
    let out = dgpoly(&["cohomology", "--t", "1,0", "--max-degree", "6", "--presentation-bound", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let v = json(&["cohomology", "--t", "1,0", "--max-degree", "6", "--presentation-bound", "6"]);
    let dims: Vec<u64> = v["report"]["dims"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    assert_eq!(dims, vec![1, 0, 1, 0, 1, 0, 1]);
    for (d, h) in dims.iter().enumerate() {
        let row = text.lines().find(|l| l.split_whitespace().next() == Some(&d.to_string())).unwrap();
        assert_eq!(row.split_whitespace().last().unwrap(), h.to_string());
    }
}

#[test]
fn cache_round_trip_and_recovery() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["invariants", "--t", "1,0", "--json", "--cache-dir", cache];
    let cold = dgpoly(&args);
    let warm = dgpoly(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let entries: Vec<PathBuf> = std::fs::read_dir(dir.path())
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.file_name().unwrap() != "index.json")
        .collect();
    assert_eq!(entries.len(), 1);
    assert_eq!(std::fs::read(&entries[0]).unwrap(), cold.stdout);
    let index: Value = serde_json::from_str(&std::fs::read_to_string(dir.path().join("index.json")).unwrap()).unwrap();
    let key = entries[0].file_stem().unwrap().to_str().unwrap();
    assert_eq!(index[key], "invariants");

    // A corrupt entry is reported and recomputed.
    std::fs::write(&entries[0], "{ not json").unwrap();
    let again = dgpoly(&args);
    assert_eq!(again.stdout, cold.stdout);
    assert!(String::from_utf8_lossy(&again.stderr).contains("corrupt"));
    assert_eq!(std::fs::read(&entries[0]).unwrap(), cold.stdout);

    // A different seed is a different key.
    dgpoly(&["invariants", "--t", "1,0", "--json", "--cache-dir", cache, "--seed", "9"]);
    let count = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(count, 3);
}
