use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn gpw(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gpw"))
        .current_dir(dir)
        .env_remove("GPW_CACHE")
        .args(args)
        .output()
        .expect("gpw runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn builtin(dir: &TempDir, args: &[&str], file: &str) -> PathBuf {
    let mut full = vec!["builtin"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", file]);
    let o = gpw(dir.path(), &full);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    dir.path().join(file)
}

fn data_rows(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).skip(1).collect()
}

#[test]
fn k_cocharacter_and_generator() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["k_g", "--group", "c2"], "k.json");
    let o = gpw(dir.path(), &["cochar", "k.json", "--n", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let rows = data_rows(&out);
    assert_eq!(rows.len(), 4, "{out}");
    assert!(rows.contains(&"((2)@1,(1)@g)\t2\t1"));
    let o = gpw(dir.path(), &["identity", "k.json", "--poly", "x{1,1}*x{2,g}*x{3,1}"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# verdict\tIDENTITY"));
    let o = gpw(dir.path(), &["identity", "k.json", "--poly", "[x{1,1},x{2,g}]"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn single_shape_multiplicity() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["ut2"], "ut.json");
    for fillings in ["standard", "all"] {
        let o = gpw(dir.path(), &["cochar", "ut.json", "--shape", "((3)@1,(1)@g)", "--fillings", fillings]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
        assert_eq!(data_rows(&stdout(&o)), vec!["((3)@1,(1)@g)\t4\t1"]);
    }
    let o = gpw(dir.path(), &["cochar", "ut.json", "--shape", "((3)@1,(1)@q)"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn codimension_totals() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["ut2"], "ut.json");
    let o = gpw(dir.path(), &["codim", "ut.json", "--n", "2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["codimension"], 5);
    assert_eq!(v["tables"]["slices"].as_array().unwrap().len(), 3);
}

#[test]
fn validate_reports_every_violation() {
    let dir = TempDir::new().unwrap();
    let path = builtin(&dir, &["ut2"], "ut.json");
    let o = gpw(dir.path(), &["validate", "ut.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# status\tvalid"));
    let mut doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    doc["structure"].as_array_mut().unwrap().push(serde_json::json!([1, 1, ["1", "0", "0"]]));
    doc["grading"][0] = "g".into();
    fs::write(dir.path().join("broken.json"), doc.to_string()).unwrap();
    let o = gpw(dir.path(), &["validate", "broken.json", "--format", "json"]);
    assert_eq!(o.status.code(), Some(2));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["summary"]["status"], "invalid");
    assert!(v["tables"]["violations"].as_array().unwrap().len() >= 2);
    let o = gpw(dir.path(), &["cochar", "broken.json", "--n", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn builtins_round_trip_through_validate() {
    let dir = TempDir::new().unwrap();
    let cases: [&[&str]; 6] =
        [&["ut2"], &["ut2", "--g", "1"], &["k"], &["g2"], &["field", "--group", "c3", "--star"], &["m2t"]];
    for (i, args) in cases.iter().enumerate() {
        let file = format!("b{i}.json");
        builtin(&dir, args, &file);
        let o = gpw(dir.path(), &["validate", &file]);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
    assert_eq!(gpw(dir.path(), &["builtin", "nope"]).status.code(), Some(2));
}

#[test]
fn classifier_verdicts_and_exit_codes() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["k_g"], "k.json");
    builtin(&dir, &["ut2"], "ut.json");
    builtin(&dir, &["g2"], "g2.json");
    builtin(&dir, &["m2t"], "m2.json");
    let o = gpw(dir.path(), &["classify-bounded", "k.json", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# verdict\tBOUNDED"));
    let o = gpw(dir.path(), &["classify-bounded", "ut.json", "--n-max", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("2:2 3:3 4:4"));
    let o = gpw(dir.path(), &["classify-multone", "g2.json", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("# verdict\tSATISFIED"));
    let o = gpw(dir.path(), &["classify-multone", "m2.json", "--n-max", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("# verdict\tNOT SATISFIED"));
    let o = gpw(dir.path(), &["verify-lemmas", "g2.json", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    // wrong mode, degree above the hard cap
    assert_eq!(gpw(dir.path(), &["classify-multone", "k.json"]).status.code(), Some(2));
    assert_eq!(gpw(dir.path(), &["classify-bounded", "g2.json"]).status.code(), Some(2));
    assert_eq!(gpw(dir.path(), &["cochar", "k.json", "--n", "8"]).status.code(), Some(2));
    assert_eq!(gpw(dir.path(), &["classify-bounded", "k.json", "--n-max", "8"]).status.code(), Some(2));
    assert_eq!(gpw(dir.path(), &["cochar", "k.json"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_out_matches_stdout() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["g2"], "g2.json");
    for format in ["tsv", "json"] {
        let a = gpw(dir.path(), &["cochar", "g2.json", "--n", "3", "--format", format]);
        let b = gpw(dir.path(), &["cochar", "g2.json", "--n", "3", "--format", format]);
        assert_eq!(a.stdout, b.stdout);
        let o = gpw(dir.path(), &["cochar", "g2.json", "--n", "3", "--format", format, "--out", "r.txt", "--timing"]);
        assert!(o.stdout.is_empty());
        assert!(stderr(&o).starts_with("timing\t"));
        assert_eq!(fs::read(dir.path().join("r.txt")).unwrap(), a.stdout);
    }
}

fn only_entry(cache: &Path) -> PathBuf {
    let entries: Vec<PathBuf> = fs::read_dir(cache).unwrap().map(|e| e.unwrap().path()).collect();
    assert_eq!(entries.len(), 1, "{entries:?}");
    entries[0].clone()
}

#[test]
fn cache_replays_and_invalidates() {
    let dir = TempDir::new().unwrap();
    let doc = builtin(&dir, &["k_g"], "k.json");
    let cache = dir.path().join("cache");
    let args = ["cochar", "k.json", "--n", "4", "--cache", "cache"];
    let first = gpw(dir.path(), &args);
    assert_eq!(first.status.code(), Some(0));
    let entry_path = only_entry(&cache);
    let second = gpw(dir.path(), &args);
    assert_eq!(second.stdout, first.stdout);

    // a planted entry proves the second run is a replay
    let mut entry: serde_json::Value = serde_json::from_str(&fs::read_to_string(&entry_path).unwrap()).unwrap();
    entry["output"] = "planted\n".into();
    fs::write(&entry_path, entry.to_string()).unwrap();
    assert_eq!(stdout(&gpw(dir.path(), &args)), "planted\n");

    // another engine version is recomputed and overwritten
    entry["engine_version"] = "0.0.0-old".into();
    fs::write(&entry_path, entry.to_string()).unwrap();
    let o = gpw(dir.path(), &args);
    assert_eq!(o.stdout, first.stdout);
    assert!(stderr(&o).is_empty());

    // corrupt entries warn and are never trusted
    fs::write(&entry_path, "{not json").unwrap();
    let o = gpw(dir.path(), &args);
    assert_eq!(o.stdout, first.stdout);
    assert!(stderr(&o).contains("corrupt cache entry"));
    assert_eq!(stdout(&gpw(dir.path(), &args)), stdout(&first));

    // an edited document has a new digest
    let mut text = fs::read_to_string(&doc).unwrap();
    text.push('\n');
    fs::write(&doc, text).unwrap();
    let o = gpw(dir.path(), &args);
    assert_ne!(o.stdout, first.stdout);
    assert_eq!(data_rows(&stdout(&o)), data_rows(&stdout(&first)));
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 2);
}

#[test]
fn cache_directory_from_environment() {
    let dir = TempDir::new().unwrap();
    builtin(&dir, &["ut2"], "ut.json");
    let o = Command::new(env!("CARGO_BIN_EXE_gpw"))
        .current_dir(dir.path())
        .env("GPW_CACHE", dir.path().join("envcache"))
        .args(["codim", "ut.json", "--n", "2"])
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    only_entry(&dir.path().join("envcache"));
}
