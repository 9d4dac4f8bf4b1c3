use std::path::Path;
use std::process::{Command, Output};

fn snrep(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_snrep"))
        .args(args)
        .env_remove("SNREP_CACHE_DIR")
        .output()
        .expect("spawn snrep")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = snrep(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn lists_tableaux_of_a_shape() {
    let out = snrep(&["tableaux", "3", "2,1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1 2/3") && text.contains("1 3/2"), "{text}");

    let doc = json(&["tableaux", "3", "2,1"]);
    let listed: Vec<&str> = doc["tableaux"].as_array().unwrap().iter().map(|t| t["tableau"].as_str().unwrap()).collect();
    assert_eq!(listed, ["1 2/3", "1 3/2"]);
    assert_eq!(json(&["tableaux", "1", "1"])["dim"], 1);
    assert_eq!(json(&["tableaux", "7", "3,2,2"])["dim"], 21);
}

#[test]
fn dimensions_without_a_shape() {
    let doc = json(&["tableaux", "5"]);
    assert_eq!(doc["holds"], true);
    assert_eq!(doc["sumOfSquares"], "120");
    assert_eq!(doc["dimensions"].as_array().unwrap().len(), 7);
}

#[test]
fn representation_matrix_of_a_transposition() {
    let doc = json(&["rep", "3", "2,1", "[213]"]);
    assert_eq!(doc["matrices"][0]["x"], serde_json::json!([[1, 0], [-1, -1]]));
    let compact = json(&["rep", "3", "2,1", "213"]);
    assert_eq!(doc, compact);
    let all = json(&["rep", "3", "2,1"]);
    assert_eq!(all["matrices"].as_array().unwrap().len(), 6);
    let conventional = json(&["rep", "5", "3,2", "[21345]", "--conventional"]);
    assert!(conventional["matrices"][0]["m"].is_array());
}

#[test]
fn character_table_of_s3() {
    let doc = json(&["chartable", "3"]);
    let rows: Vec<serde_json::Value> = doc["rows"].as_array().unwrap().iter().map(|r| r["chi"].clone()).collect();
    assert_eq!(rows, vec![serde_json::json!([1, 1, 1]), serde_json::json!([2, 0, -1]), serde_json::json!([1, -1, 1])]);
}

#[test]
fn g_matrix_of_3_2_is_lower_triangular_and_not_diagonal() {
    let doc = json(&["gmatrix", "5", "3,2"]);
    let g: Vec<Vec<i64>> = serde_json::from_value(doc["gPrime"].clone()).unwrap();
    assert_eq!(g.len(), 5);
    let mut off_diagonal = 0;
    for (r, row) in g.iter().enumerate() {
        assert_eq!(row[r], 1);
        for (c, &v) in row.iter().enumerate() {
            if c > r {
                assert_eq!(v, 0);
            } else if c < r && v != 0 {
                off_diagonal += 1;
            }
        }
    }
    assert!(off_diagonal >= 1);
}

#[test]
fn verify_small_cases() {
    for n in ["1", "3"] {
        let out = snrep(&["verify", n, "full"]);
        assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
        assert!(stdout(&out).contains("result: PASS"));
    }
    let doc = json(&["verify", "4", "sample", "--seed", "9"]);
    assert_eq!(doc["passed"], true);
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let runs: Vec<Vec<u8>> = ["1", "3", "8"]
        .iter()
        .map(|jobs| {
            let out = snrep(&["--format", "json", "--jobs", jobs, "--seed", "5", "verify", "4", "sample"]);
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    assert_eq!(runs[0], runs[1]);
    assert_eq!(runs[1], runs[2]);
}

fn cached(dir: &Path, args: &[&str]) -> Vec<u8> {
    let out = Command::new(env!("CARGO_BIN_EXE_snrep"))
        .args(args)
        .env("SNREP_CACHE_DIR", dir)
        .output()
        .unwrap();
    assert!(out.status.success());
    out.stdout
}

#[test]
fn cache_hits_match_cold_runs() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        &["gmatrix", "5", "3,2"][..],
        &["--format", "json", "gmatrix", "5", "3,2"],
        &["chartable", "4"],
        &["rep", "4", "2,2"],
        &["tableaux", "4", "3,1"],
    ] {
        let cold = snrep(args).stdout;
        let first = cached(dir.path(), args);
        let hit = cached(dir.path(), args);
        assert_eq!(cold, first, "{args:?}");
        assert_eq!(first, hit, "{args:?}");
    }
    assert!(dir.path().join("g_5_3-2.json").exists());
    assert!(dir.path().join("chartable_4.json").exists());
}

#[test]
fn corrupt_cache_entries_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g_5_3-2.json"), "not json").unwrap();
    let hit = cached(dir.path(), &["gmatrix", "5", "3,2"]);
    assert_eq!(hit, snrep(&["gmatrix", "5", "3,2"]).stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(snrep(&["tableaux", "3", "2,2"]).status.code(), Some(64));
    assert_eq!(snrep(&["rep", "3", "2,1", "[113]"]).status.code(), Some(64));
    assert_eq!(snrep(&["rep", "3", "2,1", "[2134]"]).status.code(), Some(64));
    assert_eq!(snrep(&["nonsense"]).status.code(), Some(64));
    assert_eq!(snrep(&["verify", "3", "sometimes"]).status.code(), Some(64));
    assert_eq!(snrep(&["verify", "6", "full"]).status.code(), Some(2));
    assert_eq!(snrep(&["chartable", "8"]).status.code(), Some(2));
    assert_eq!(snrep(&["rep", "8", "7,1"]).status.code(), Some(2));
    assert_eq!(snrep(&["--help"]).status.code(), Some(0));
    assert_eq!(snrep(&["rep", "8", "7,1", "[21345678]"]).status.code(), Some(0));
}

#[test]
fn claims_report() {
    let doc = json(&["claims", "5"]);
    let claims = doc["claims"].as_array().unwrap();
    let first = claims.iter().find(|c| c["name"] == "first_non_diagonal").unwrap();
    assert_eq!(first["holds"], true);
}
