use std::process::{Command, Output};

use strongpow::graph::Graph;

fn strongpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strongpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn build_json_for_z6() {
    let o = strongpow(&["build", "--group", "zn:6", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with(r#"{"n":6,"edges":[[0,2],[0,3],[0,4],[1,2],"#));
    let g = Graph::from_json(&text).unwrap();
    assert_eq!(g.edge_count(), 13);
    // build -> parse -> rebuild is the identity on the edge list
    assert_eq!(g.to_json(), text.trim_end());
}

#[test]
fn build_dot_and_mtx() {
    let o = strongpow(&["build", "--group", "klein", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches(" -- ").count(), 6);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("z4.mtx");
    let o = strongpow(&[
        "build",
        "--group",
        "zn:4",
        "--format",
        "mtx",
        "--matrix",
        "adjacency",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let mtx = std::fs::read_to_string(&path).unwrap();
    assert!(mtx.starts_with("%%MatrixMarket matrix coordinate integer symmetric"));
}

#[test]
fn build_rejects_bad_groups() {
    let o = strongpow(&["build", "--group", "zn:0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid group order"));
    let o = strongpow(&["build", "--group", "zn:4x"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("position 4"));
    let o = strongpow(&["build", "--group", "table:/nonexistent.csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn build_from_table_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("klein.csv");
    std::fs::write(&path, "0,1,2,3\n1,0,3,2\n2,3,0,1\n3,2,1,0\n").unwrap();
    let spec = format!("table:{}", path.display());
    let o = strongpow(&["build", "--group", &spec]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(Graph::from_json(&stdout(&o)).unwrap().edge_count(), 6);
}

#[test]
fn invariants_bundles() {
    let o = strongpow(&["invariants", "--group", "zn:4", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["spectrum"], "4^1 3^1 1^1 0^1");
    assert_eq!(v["spanning_trees"], "3");
    assert_eq!(v["kappa"], 1);
    assert_eq!(v["chi"], 3);
    assert_eq!(v["per_laplacian"], "22");

    let o = strongpow(&["invariants", "--group", "klein", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["spectrum"], "4^3 0^1");
    assert_eq!(v["spanning_trees"], "16");
    assert_eq!((v["kappa"].as_u64(), v["chi"].as_u64()), (Some(3), Some(4)));

    let o = strongpow(&["invariants", "--group", "zn:5"]);
    let text = stdout(&o);
    assert!(text
        .lines()
        .any(|l| l.starts_with("kappa ") && l.ends_with(" 0")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("connected ") && l.ends_with("false")));
    assert!(text
        .lines()
        .any(|l| l.starts_with("spanning trees ") && l.ends_with(" 0")));

    let o = strongpow(&["invariants", "--group", "bogus"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_exit_codes() {
    let o = strongpow(&[
        "verify",
        "--family",
        "cyclic",
        "--range",
        "2..24",
        "--checks",
        "spectrum,tau",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1 + 2 * 23);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.split('\t').nth(3) == Some("agree")));

    let o = strongpow(&[
        "verify", "--family", "cyclic", "--range", "4..4", "--checks", "le",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let row: Vec<String> = stdout(&o)
        .lines()
        .nth(1)
        .unwrap()
        .split('\t')
        .map(String::from)
        .collect();
    assert_eq!(&row[..7], ["le", "zn:4", "4", "disagree", "4", "6", "yes"]);

    let o = strongpow(&[
        "verify",
        "--family",
        "corpus",
        "--range",
        "4..12",
        "--checks",
        "cayley,linegraph",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let records = v["records"].as_array().unwrap();
    assert!(!records.is_empty());
    assert!(records.iter().all(|r| r["status"] == "agree"));
}

#[test]
fn verify_usage_errors() {
    for args in [
        ["verify", "--range", "5..3", "--checks", "tau"],
        ["verify", "--range", "0..3", "--checks", "tau"],
        ["verify", "--range", "2..4", "--checks", "bogus"],
        ["verify", "--range", "x", "--checks", "tau"],
    ] {
        assert_eq!(strongpow(&args).status.code(), Some(2), "{args:?}");
    }
    let o = strongpow(&["verify", "--family", "planar", "--range", "2..3"]);
    assert_eq!(o.status.code(), Some(2));
    let o = strongpow(&["verify"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_strongpow"))
            .args([
                "verify", "--family", "cyclic", "--range", "2..12", "--checks", "all", "--format",
                "json",
            ])
            .env("STRONGPOW_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    let four = run("4");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, run("4").stdout);
}

#[test]
fn sweep_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let o = strongpow(&["sweep", "--range", "2..10", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut reader = csv_rows(&text);
    let header = reader.remove(0);
    assert_eq!(
        header,
        [
            "n",
            "phi",
            "spectrum",
            "a",
            "tau",
            "le",
            "kappa",
            "chi",
            "linegraph"
        ]
    );
    assert_eq!(reader.len(), 9);
    let row = |n: &str| reader.iter().find(|r| r[0] == n).unwrap().clone();
    assert_eq!(row("9")[8], "true");
    assert_eq!(row("6")[3], "3");

    let again = strongpow(&["sweep", "--range", "2..10"]);
    assert_eq!(stdout(&again), text);

    let o = strongpow(&[
        "sweep",
        "--range",
        "2..4",
        "--out",
        "/nonexistent/dir/t.csv",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let o = strongpow(&["sweep", "--range", "2..4", "--columns", "n,nope"]);
    assert_eq!(o.status.code(), Some(2));
}

/// Fields never contain quotes or commas in sweep output.
fn csv_rows(text: &str) -> Vec<Vec<String>> {
    text.lines()
        .map(|l| l.split(',').map(String::from).collect())
        .collect()
}
