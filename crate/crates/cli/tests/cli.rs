use std::fs;
use std::process::{Command, Output};

fn spt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spt"))
        .args(args)
        .env_remove("SPT_CACHE")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn compute_spt_csv() {
    let o = spt(&["compute", "--family", "spt", "--n-max", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "n,value\n1,1\n2,3\n3,5\n4,10\n");
}

#[test]
fn compute_partitions() {
    let o = spt(&["compute", "--family", "p", "--n-max", "4"]);
    assert_eq!(stdout(&o), "n,value\n1,1\n2,2\n3,3\n4,5\n");
}

#[test]
fn compute_routes_agree() {
    for args in [
        vec!["--family", "Spt_j", "--j", "3"],
        vec!["--family", "jspt_k", "--j", "2", "--k", "2"],
        vec!["--family", "spt_k", "--k", "3"],
    ] {
        let mut full = vec!["compute", "--n-max", "12", "--route", "all"];
        full.extend(args.iter());
        let o = spt(&full);
        assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    }
}

#[test]
fn compute_json_uses_strings() {
    let o = spt(&["compute", "--family", "Spt_j", "--j", "2", "--n-max", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[2]["n"], 3);
    assert_eq!(v[2]["value"], "8");
}

#[test]
fn compute_rejects_bad_parameters() {
    assert_eq!(spt(&["compute", "--family", "spt_k", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(spt(&["compute", "--family", "spt", "--n-max", "5", "--N", "3"]).status.code(), Some(2));
    assert_eq!(spt(&["compute", "--family", "bogus", "--n-max", "5"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["compute", "--family", "jspt_k", "--j", "3", "--k", "2", "--n-max", "30", "--format", "json"];
    assert_eq!(spt(&args).stdout, spt(&args).stdout);
}

#[test]
fn verify_pass_and_fail_codes() {
    let o = spt(&["verify", "sptpn", "--N", "20"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS sptpn"));

    let o = spt(&["verify", "no-such-identity", "--N", "5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("unknown identity"));
}

#[test]
fn verify_csv_rows() {
    let o = spt(&["verify", "gtjsptk", "--N", "10", "--j", "2", "--k", "2", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("n,lhs,rhs,ok"));
    assert!(lines.all(|l| l.ends_with(",true")));
    assert!(stderr(&o).starts_with("PASS"));
}

#[test]
fn genineq_reports_threshold() {
    let o = spt(&["verify", "genineq", "--N", "20", "--j", "3", "--k", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("strict for 3 <= n <= 20"), "{}", stdout(&o));
}

#[test]
fn fdyson_notes_small_case() {
    let o = spt(&["verify", "fdyson", "--N", "10"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("M_2(1)"));
}

#[test]
fn table_counts_agree_between_sources() {
    for m in ["-2", "0", "1"] {
        let gf = spt(&["table", "--j", "2", "--kind", "count", "--m", m, "--n-max", "12"]);
        let comb = spt(&["table", "--j", "2", "--kind", "count", "--m", m, "--n-max", "12", "--source", "partitions"]);
        assert_eq!(gf.stdout, comb.stdout, "m={m}");
    }
    let o = spt(&["table", "--j", "2", "--kind", "moment", "--n-max", "5"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn congruences_hold() {
    let o = spt(&["congruence", "--n-max", "20"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).lines().skip(1).all(|l| l.ends_with(",true")));
}

#[test]
fn cache_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.json");
    let p = path.to_str().unwrap();
    let args = ["compute", "--family", "Spt_j", "--j", "2", "--n-max", "10", "--cache", p];
    let first = spt(&args);
    assert!(first.status.success());
    let doc: serde_json::Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["version"], 1);
    let entry = &doc["entries"]["Spt_j|j=2|k=-|N=10"];
    assert_eq!(entry[3], "8");

    // A doctored entry is served back, which shows the cache was read.
    let mut doc = doc;
    doc["entries"]["Spt_j|j=2|k=-|N=10"][1] = "999".into();
    fs::write(&path, doc.to_string()).unwrap();
    let second = spt(&args);
    assert!(stdout(&second).contains("1,999\n"));

    // Other versions are ignored with a warning.
    fs::write(&path, r#"{"version":7,"entries":{}}"#).unwrap();
    let third = spt(&args);
    assert_eq!(third.stdout, first.stdout);
    assert!(stderr(&third).contains("ignoring cache version 7"));
}
