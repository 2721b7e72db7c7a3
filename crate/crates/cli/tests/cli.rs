use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn kronlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronlab"))
        .env("KRONLAB_CACHE_DIR", cache)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn documented_examples() {
    let tmp = TempDir::new().unwrap();
    let o = kronlab(tmp.path(), &["kron", "--lambda", "2,1", "--mu", "2,1", "--nu", "2,1"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "1\n"));
    let o = kronlab(tmp.path(), &["bcoeff", "--alpha", "3", "--beta", "3", "--gamma", "3"]);
    assert_eq!((code(&o), stdout(&o).as_str()), (0, "-1597\n"));
    let o = kronlab(tmp.path(), &["table", "--max-weight", "0", "--format", "csv"]);
    assert_eq!(stdout(&o), "alpha,beta,gamma,b_abc,b_bac,b_gab\n-,-,-,1,1,1\n");
    let o = kronlab(tmp.path(), &["reduced", "--alpha", "1", "--beta", "1", "--gamma", "1"]);
    assert_eq!(stdout(&o), "1\n");
}

#[test]
fn hook_form_and_series_dump() {
    let tmp = TempDir::new().unwrap();
    let dump = tmp.path().join("series.json");
    let o = kronlab(
        tmp.path(),
        &[
            "bcoeff",
            "--alpha",
            "2",
            "--beta",
            "1",
            "--gamma",
            "1",
            "--form",
            "hook",
            "--dump-series",
        ],
    );
    assert_eq!(code(&o), 2, "missing file argument");
    let o = kronlab(
        tmp.path(),
        &[
            "bcoeff",
            "--alpha",
            "2",
            "--beta",
            "1",
            "--gamma",
            "1",
            "--form",
            "hook",
            "--dump-series",
            dump.to_str().unwrap(),
        ],
    );
    assert_eq!(stdout(&o), "-25\n");
    let text = std::fs::read_to_string(&dump).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["caps"], serde_json::json!([2, 2, 2]));
    assert_eq!(v["coefficients"]["2|1|1"], "-25/1");
    let first_key = text
        .split("\"coefficients\"")
        .nth(1)
        .unwrap()
        .split('"')
        .nth(1)
        .unwrap();
    assert_eq!(first_key, "-|-|-");
}

#[test]
fn table_matches_fixture() {
    let tmp = TempDir::new().unwrap();
    let o = kronlab(tmp.path(), &["table", "--check"]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).lines().count(), 85);
    let o = kronlab(tmp.path(), &["table", "--format", "json", "--max-weight", "1"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 4);
    let o = kronlab(tmp.path(), &["table", "--format", "latex", "--max-weight", "1"]);
    assert!(stdout(&o).contains("$\\ep$ & $\\ep$ & $\\ep$ & 1 & 1 & 1 \\\\"));
}

#[test]
fn exit_codes() {
    let tmp = TempDir::new().unwrap();
    let cases: &[(&[&str], i32)] = &[
        (&["kron", "--lambda", "2,x", "--mu", "1", "--nu", "1"], 2),
        (&["kron", "--lambda", "1,2", "--mu", "2,1", "--nu", "3"], 2),
        (&["kron", "--lambda", "2", "--mu", "1", "--nu", "1"], 2),
        (&["table", "--format", "xml"], 2),
        (
            &[
                "stability",
                "--lambda",
                "1",
                "--mu",
                "1",
                "--nu",
                "1",
                "--vector",
                "2,0,0",
            ],
            2,
        ),
        (
            &[
                "stability",
                "--lambda",
                "1",
                "--mu",
                "1",
                "--nu",
                "1",
                "--vector",
                "2,0,0,1",
            ],
            2,
        ),
        (&["kron", "--lambda", "15", "--mu", "15", "--nu", "15"], 3),
        (&["reduced", "--alpha", "3", "--beta", "3", "--gamma", "3"], 3),
        (&["--max-n", "5", "kron", "--lambda", "6", "--mu", "6", "--nu", "6"], 3),
        (&["bcoeff", "--alpha", "5", "--beta", "-", "--gamma", "-"], 3),
        (&["table", "--max-weight", "5"], 3),
    ];
    for (args, expected) in cases {
        let o = kronlab(tmp.path(), args);
        assert_eq!(code(&o), *expected, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{args:?}");
    }
}

#[test]
fn deterministic_stdout() {
    let tmp = TempDir::new().unwrap();
    for args in [
        &["scan-conjecture", "--max-weight", "4"][..],
        &[
            "stability",
            "--lambda",
            "2,1",
            "--mu",
            "2,1",
            "--nu",
            "3",
            "--vector",
            "1,1,0,2",
        ][..],
        &["bounds", "--alpha", "3,2", "--beta", "1,1", "--gamma", "1"][..],
    ] {
        let a = kronlab(tmp.path(), args);
        let b = kronlab(tmp.path(), args);
        assert_eq!(code(&a), 0, "{args:?}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn scan_streams_timing_to_stderr_and_file() {
    let tmp = TempDir::new().unwrap();
    let out = tmp.path().join("scan.json");
    let o = kronlab(
        tmp.path(),
        &[
            "scan-conjecture",
            "--max-weight",
            "5",
            "--output",
            out.to_str().unwrap(),
        ],
    );
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["counterexamples"], serde_json::json!([]));
    assert!(v.get("elapsedMs").is_none());
    assert!(String::from_utf8_lossy(&o.stderr).contains("elapsed"));
    let file: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(file["elapsedMs"].is_u64());
    assert_eq!(file["triplesChecked"], v["triplesChecked"]);
}

#[test]
fn report_and_cache() {
    let tmp = TempDir::new().unwrap();
    let cache = tmp.path().join("cache");
    let report = tmp.path().join("report.json");
    let args = [
        "--report",
        report.to_str().unwrap(),
        "kron",
        "--lambda",
        "4,2,1",
        "--mu",
        "3,3,1",
        "--nu",
        "5,1,1",
    ];
    let read = || -> Value { serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap() };

    let cold = kronlab(&cache, &args);
    let r = read();
    for field in ["command", "inputs", "outputs", "elapsed_ms", "cache", "version"] {
        assert!(r.get(field).is_some(), "missing {field}");
    }
    assert_eq!(r["command"], "kron");
    assert_eq!(r["cache"]["hits"], 0);
    assert_eq!(r["cache"]["misses"], 1);
    let file: Value =
        serde_json::from_str(&std::fs::read_to_string(cache.join("chartable-v1-n7.json")).unwrap()).unwrap();
    assert_eq!(file["n"], 7);
    assert_eq!(file["version"], 1);
    assert_eq!(file["classes"].as_array().unwrap().len(), 15);

    let warm = kronlab(&cache, &args);
    assert_eq!(read()["cache"]["hits"], 1);
    assert_eq!(read()["cache"]["misses"], 0);
    assert_eq!(cold.stdout, warm.stdout);

    let mut no_cache = vec!["--no-cache"];
    no_cache.extend_from_slice(&args);
    let uncached = kronlab(&cache, &no_cache);
    assert_eq!(uncached.stdout, cold.stdout);
    assert_eq!(read()["cache"]["misses"], 1);

    // A stale cache version is ignored and rebuilt.
    let path = cache.join("chartable-v1-n7.json");
    let text = std::fs::read_to_string(&path)
        .unwrap()
        .replace("\"version\":1", "\"version\":0");
    std::fs::write(&path, text).unwrap();
    let rebuilt = kronlab(&cache, &args);
    assert_eq!(rebuilt.stdout, cold.stdout);
    assert_eq!(read()["cache"]["misses"], 1);
}

#[test]
fn sequential_and_parallel_agree() {
    let tmp = TempDir::new().unwrap();
    let seq = kronlab(tmp.path(), &["--jobs", "1", "table", "--max-weight", "2"]);
    let par = kronlab(tmp.path(), &["--jobs", "4", "table", "--max-weight", "2"]);
    assert_eq!(code(&seq), 0);
    assert_eq!(seq.stdout, par.stdout);
}
