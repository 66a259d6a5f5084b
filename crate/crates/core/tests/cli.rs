use std::fs;
use std::process::{Command, Output};

use partseq::exact::Rational;
use serde_json::Value;

fn partseq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partseq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_coefficients(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    format!("@{}", path.display())
}

#[test]
fn exit_codes() {
    let ok = partseq(&["compute", "--seq", "bernoulli", "--from", "1", "--to", "3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(ok.stderr.is_empty());
    let bad = partseq(&["compute", "--seq", "bernoulli", "--from", "0", "--to", "0"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(stdout(&bad).is_empty());
    let capped = partseq(&["enum", "--n", "30", "--kind", "compositions"]);
    assert_eq!(capped.status.code(), Some(3));
    let raised = partseq(&["--composition-cap", "2", "enum", "--n", "3", "--kind", "compositions"]);
    assert_eq!(raised.status.code(), Some(3));
    let unknown_flag = partseq(&["verify", "--seq", "all"]);
    assert_eq!(unknown_flag.status.code(), Some(2));
}

#[test]
fn coefficient_files() {
    let dir = tempfile::tempdir().unwrap();
    let good = write_coefficients(
        &dir,
        "geometric.json",
        r#"{"name": "geometric", "coefficients": ["1", "-1/2", "1/4", "-1/8", "1/16"]}"#,
    );
    // a(x) = 1/(1 + x/2) through x^4, so b(x) = 1 + x/2.
    let out = partseq(&["compute", "--seq", &good, "--from", "1", "--to", "4", "--method", "diophantine"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1  1/2  -  diophantine\n2  0  -  diophantine\n3  0  -  diophantine\n4  0  -  diophantine\n");

    let beyond = partseq(&["compute", "--seq", &good, "--from", "5", "--to", "5"]);
    assert_eq!(beyond.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&beyond.stderr).contains("a5"));

    let verify = partseq(&["--stable", "verify", "--seq", &good, "--max-n", "4"]);
    assert_eq!(verify.status.code(), Some(0));

    let corrupted = write_coefficients(&dir, "bad.json", r#"{"name": "bad", "coefficients": ["2", "1"]}"#);
    let out = partseq(&["verify", "--seq", &corrupted, "--max-n", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("a0 must be exactly 1"));

    let missing = partseq(&["verify", "--seq", "@/no/such/file.json", "--max-n", "3"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_is_stable() {
    let args = ["--stable", "verify", "--seq", "all", "--max-n", "10"];
    let first = partseq(&args);
    assert_eq!(first.status.code(), Some(0), "{}", String::from_utf8_lossy(&first.stderr));
    let second = partseq(&args);
    assert_eq!(first.stdout, second.stdout);
    let text = stdout(&first);
    assert!(text.lines().any(|l| l == "identity  10  even_bernoulli_agrees  pass"));
    assert!(text.ends_with("summary  pass=380  fail=0  skipped=0\n"), "{}", text.lines().last().unwrap());
}

#[test]
fn verify_marks_capped_compositions_skipped() {
    let out = partseq(&["--stable", "verify", "--seq", "fibonacci", "--max-n", "30", "--format", "csv"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 30 * 5);
    for row in &rows {
        let n: usize = row[1].parse().unwrap();
        let expected = if &row[2] == "composition" && n > 26 { "skipped" } else { "pass" };
        assert_eq!(&row[3], expected, "{row:?}");
    }
}

#[test]
fn json_rationals_round_trip() {
    let out = partseq(&["compute", "--seq", "even_bernoulli", "--from", "1", "--to", "12", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let seq = partseq::CatalogEntry::EvenBernoulli.sequence();
    for row in doc["rows"].as_array().unwrap() {
        let n = row["n"].as_u64().unwrap() as usize;
        let b = Rational::parse(row["b"].as_str().unwrap()).unwrap();
        assert_eq!(b, partseq::recurrence::b_recursion(&seq, n).unwrap());
        let named = Rational::parse(row["named"].as_str().unwrap()).unwrap();
        assert_eq!(named.to_string(), row["named"].as_str().unwrap());
    }
    assert_eq!(doc["rows"][11]["named"], "-236364091/2730");
}

#[test]
fn bench_reports_term_counts() {
    let out = partseq(&[
        "--stable", "bench", "--seq", "bernoulli", "--n", "12", "--methods",
        "recursion,composition,partition,diophantine,determinant,series_reciprocal", "--repeats", "2", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["partitions"], 77);
    assert_eq!(doc["solutions"], 77);
    assert_eq!(doc["compositions"], "2048");
    let methods = doc["methods"].as_array().unwrap();
    let terms: Vec<&str> = methods.iter().map(|m| m["terms"].as_str().unwrap()).collect();
    assert_eq!(terms[1..4], ["2048", "77", "77"]);
    assert!(methods.iter().all(|m| m.get("mean_us").is_none()));
    assert!(methods.windows(2).all(|w| w[0]["value"] == w[1]["value"]));
}

#[test]
fn list_shows_catalog() {
    let out = partseq(&["list", "--format", "json"]);
    let doc: Value = serde_json::from_slice(&out.stdout).unwrap();
    let names: Vec<&str> = doc.as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["bernoulli", "even_bernoulli", "euler", "even_euler", "fibonacci", "even_fibonacci"]);
    assert!(doc.as_array().unwrap().iter().all(|e| e["valid_from"] == 1));
}
