use std::process::{Command, Output};

fn dowling(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dowling"))
        .args(args)
        .env_remove("DOWLING_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn r_lah_table() {
    let out = dowling(&["triangle", "--family", "r-lah", "--r", "2", "--nmax", "5", "--format", "table"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "\
n\\k     0     1     2    3   4  5
  0     1
  1     4     1
  2    20    10     1
  3   120    90    18    1
  4   840   840   252   28   1
  5  6720  8400  3360  560  40  1
"
    );
}

#[test]
fn whitney_csv() {
    let out = dowling(&["triangle", "--family", "whitney2", "--alpha", "3", "--nmax", "3", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "n,k,value\n0,0,1\n1,0,1\n1,1,1\n2,0,1\n2,1,5\n2,2,1\n3,0,1\n3,1,21\n3,2,12\n3,3,1\n"
    );
}

#[test]
fn single_row() {
    let out = dowling(&["triangle", "--family", "stirling1", "--nmax", "0", "--format", "csv"]);
    assert_eq!(stdout(&out), "n,k,value\n0,0,1\n");
    let out = dowling(&["triangle", "--family", "lah", "-n", "0"]);
    assert_eq!(stdout(&out), "n\\k  0\n  0  1\n");
}

#[test]
fn json_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.json");
    let out = dowling(&[
        "triangle", "--family", "hs1", "--alpha", "1/2", "--beta", "-1/3", "--gamma", "2", "--nmax", "6",
        "--format", "json", "--out", path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(value["family"], "hs1");
    assert_eq!(value["params"]["beta"], "-1/3");
    assert_eq!(value["nmax"], 6);
    assert!(value["rows"][6].as_array().unwrap().iter().all(|v| v.is_string()));
    let reparsed = dowling::cli::parse_json(&text).unwrap();
    assert_eq!(dowling::cli::to_json(&reparsed), text);
}

#[test]
fn big_entries_stay_exact() {
    let out = dowling(&["triangle", "--family", "stirling2", "--nmax", "60", "--format", "json"]);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    // S(60,30), far beyond 64 bits.
    assert_eq!(value["rows"][60][30], "956352885509440274475273302536897620138631741164099440");
}

#[test]
fn sums() {
    let cases: [(&[&str], &str); 6] = [
        (&["--family", "r-dowling", "--m", "2", "--r", "2", "--n", "4"], "257\n"),
        (&["--family", "dowling", "--alpha", "3", "--n", "3"], "35\n"),
        (&["--family", "bell", "--n", "0"], "1\n"),
        (&["--family", "r-bell", "--r", "2", "--n", "3"], "37\n"),
        (&["--family", "hs-bell", "--alpha", "0", "--beta", "2", "--gamma", "2", "--n", "4"], "257\n"),
        (&["--family", "cakic-bell", "--alpha", "1", "--n", "5"], "1\n"),
    ];
    for (args, want) in cases {
        let mut all = vec!["sum"];
        all.extend_from_slice(args);
        let out = dowling(&all);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(stdout(&out), want, "{args:?}");
    }
}

#[test]
fn verify_reports() {
    let out = dowling(&["verify", "--identity", "dow1", "--alpha", "3", "--nmax", "8"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{\"identity\":\"dow1\",\"params\":{\"alpha\":\"3\"},\"nmax\":8,\"pass\":true,\"failures\":[]}\n");

    let out = dowling(&["verify", "--identity", "ortho", "--nmax", "0"]);
    assert_eq!(code(&out), 0);

    let out = dowling(&["verify", "--identity", "expB", "--r", "2", "--nmax", "10", "--with-oracle"]);
    assert_eq!(code(&out), 0);
    let report: dowling::verify::VerifyReport = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(report.pass);
    assert_eq!(report.nmax, 10);

    let out = dowling(&["verify", "--list"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).lines().any(|l| l.starts_with("ugexp ")));
}

#[test]
fn verify_all() {
    let out = dowling(&["verify", "--identity", "all", "--nmax", "6"]);
    assert_eq!(code(&out), 0);
    let reports: Vec<dowling::verify::VerifyReport> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports.len(), dowling::verify::REGISTRY.len());
    assert!(reports.iter().all(|r| r.pass));
}

#[test]
fn paper_tables() {
    let out = dowling(&["paper-tables"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.ends_with("0 table mismatches, 4/4 spot checks pass\n"));
    assert_eq!(text.matches(" ok\n").count(), 10);
}

#[test]
fn specializations() {
    let out = dowling(&["specializations"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ok with (-1)^(n-k)"));
    assert!(!stdout(&out).contains("FAIL"));
}

#[test]
fn bench() {
    let out = dowling(&["bench", "--family", "stirling2", "--nmax", "0"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("entries     1\n"));
    let out = dowling(&["bench", "--family", "stirling2", "--nmax", "500"]);
    let text = stdout(&out);
    assert!(text.contains("centre bits 2283 at (500,250)"), "{text}");
    assert!(text.contains("wall time"));
}

#[test]
fn exit_codes() {
    for args in [
        &["triangle", "--family", "nope", "--nmax", "3"][..],
        &["triangle", "--family", "stirling2", "--r", "2", "--nmax", "3"],
        &["triangle", "--family", "r-lah", "--nmax", "3"],
        &["triangle", "--family", "r-lah", "--r", "x", "--nmax", "3"],
        &["triangle", "--family", "whitney2", "--alpha", "0", "--nmax", "3"],
        &["triangle", "--family", "lah", "--nmax", "3", "--format", "xml"],
        &["verify", "--identity", "nope"],
        &["verify", "--identity", "ortho", "--with-oracle"],
        &["verify", "--identity", "all", "--r", "2"],
        &["sum", "--family", "dowling", "--n", "3"],
        &["frobnicate"],
    ] {
        let out = dowling(args);
        assert_eq!(code(&out), 2, "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(code(&dowling(&["--help"])), 0);
}

#[test]
fn cache_directory() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_dowling"))
            .args(["triangle", "--family", "r-whitney-lah", "--m", "2", "--r", "2", "--nmax", "4", "--format", "csv"])
            .env("DOWLING_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run();
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 1);
    let second = run();
    assert_eq!(first.stdout, second.stdout);
    assert!(String::from_utf8_lossy(&first.stdout).ends_with("4,3,40\n4,4,1\n"));
}
