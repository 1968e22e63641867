//! End-to-end tests of the `polyfft` binary: document formats, exit codes,
//! and agreement between the subcommands.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn write_file(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyfft"))
        .args(args)
        .output()
        .expect("binary should spawn")
}

fn stdout_json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout should be JSON")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("process should exit normally")
}

#[test]
fn fft_worked_example_from_plaintext() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "p.txt", "1 2 3 4\n");
    for algo in ["recursive", "butterfly", "iterative"] {
        let out = run(&[
            "fft",
            input.to_str().unwrap(),
            "--n",
            "2",
            "--root",
            "4",
            "--modulus",
            "17",
            "--algo",
            algo,
        ]);
        let doc = stdout_json(&out);
        assert_eq!(doc["domain"], "prime");
        assert_eq!(doc["modulus"], 17);
        assert_eq!(doc["coeffs"], serde_json::json!([10, 7, 15, 6]));
    }
}

#[test]
fn fft_inverse_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(
        dir.path(),
        "p.json",
        r#"{"domain":"prime","modulus":17,"coeffs":[5,0,11]}"#,
    );
    let forward = dir.path().join("forward.json");
    let out = run(&[
        "fft",
        input.to_str().unwrap(),
        "--n",
        "2",
        "--root",
        "4",
        "--output",
        forward.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "fft",
        forward.to_str().unwrap(),
        "--n",
        "2",
        "--root",
        "4",
        "--inverse",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["coeffs"], serde_json::json!([5, 0, 11]));
}

#[test]
fn fft_auto_root_complex_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(
        dir.path(),
        "c.json",
        r#"{"domain":"complex","epsilon":1e-9,"coeffs":[[1,0],[2,0],[3,0],[4,0]]}"#,
    );
    let forward = dir.path().join("forward.json");
    let out = run(&[
        "fft",
        input.to_str().unwrap(),
        "--n",
        "2",
        "--auto",
        "--output",
        forward.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = run(&[
        "fft",
        forward.to_str().unwrap(),
        "--n",
        "2",
        "--auto",
        "--inverse",
    ]);
    let doc = stdout_json(&out);
    let coeffs = doc["coeffs"].as_array().unwrap();
    for (got, want) in coeffs.iter().zip([1.0, 2.0, 3.0, 4.0]) {
        assert!((got[0].as_f64().unwrap() - want).abs() < 1e-9);
        assert!(got[1].as_f64().unwrap().abs() < 1e-9);
    }
}

#[test]
fn trace_emits_every_stage() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "p.txt", "1 2 3 4");
    let out = run(&[
        "trace",
        input.to_str().unwrap(),
        "--n",
        "2",
        "--root",
        "4",
        "--modulus",
        "17",
    ]);
    let doc = stdout_json(&out);
    let stages = doc["stages"].as_array().unwrap();
    assert_eq!(stages.len(), 3);
    // first stage: bit-reversed input, trivial root
    assert_eq!(stages[0]["depth"], 2);
    assert_eq!(stages[0]["root"], 1);
    assert_eq!(stages[0]["coeffs"], serde_json::json!([1, 3, 2, 4]));
    // last stage: the transform itself under the original root
    assert_eq!(stages[2]["depth"], 0);
    assert_eq!(stages[2]["root"], 4);
    assert_eq!(stages[2]["coeffs"], serde_json::json!([10, 7, 15, 6]));
}

#[test]
fn mul_fft_agrees_with_naive() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_file(dir.path(), "a.txt", "1 2 3 4 5 6 7");
    let b = write_file(dir.path(), "b.txt", "9 8 7 6");
    let fft = run(&[
        "mul",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--algo",
        "fft",
    ]);
    let naive = run(&[
        "mul",
        a.to_str().unwrap(),
        b.to_str().unwrap(),
        "--algo",
        "naive",
    ]);
    assert_eq!(stdout_json(&fft), stdout_json(&naive));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad_json = write_file(dir.path(), "bad.json", r#"{"domain":"prime"}"#);
    let bad_text = write_file(dir.path(), "bad.txt", "1 two 3");
    let prime = write_file(dir.path(), "p.txt", "1 2 3");
    let complex = write_file(
        dir.path(),
        "c.json",
        r#"{"domain":"complex","epsilon":1e-9,"coeffs":[[1,0]]}"#,
    );
    let composite = write_file(
        dir.path(),
        "composite.json",
        r#"{"domain":"prime","modulus":15,"coeffs":[1]}"#,
    );

    let out = run(&["fft", bad_json.to_str().unwrap(), "--n", "1", "--auto"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["fft", bad_text.to_str().unwrap(), "--n", "1", "--auto"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["fft", composite.to_str().unwrap(), "--n", "1", "--auto"]);
    assert_eq!(exit_code(&out), 2);
    // missing file
    let out = run(&["fft", "does-not-exist.txt", "--n", "1", "--auto"]);
    assert_eq!(exit_code(&out), 2);
    // neither --root nor --auto
    let out = run(&["fft", prime.to_str().unwrap(), "--n", "1"]);
    assert_eq!(exit_code(&out), 2);
    // mixed domains
    let out = run(&["mul", prime.to_str().unwrap(), complex.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    // mismatched moduli
    let seventeen = write_file(
        dir.path(),
        "z17.json",
        r#"{"domain":"prime","modulus":17,"coeffs":[1]}"#,
    );
    let out = run(&["mul", prime.to_str().unwrap(), seventeen.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn precondition_errors_exit_3() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_file(dir.path(), "p.txt", "1 2 3 4");
    // 17 - 1 = 2^4 only: no 2^5-th root exists
    let out = run(&[
        "fft",
        input.to_str().unwrap(),
        "--n",
        "5",
        "--auto",
        "--modulus",
        "17",
    ]);
    assert_eq!(exit_code(&out), 3);
    // four coefficients do not fit a length-2 transform
    let out = run(&[
        "fft",
        input.to_str().unwrap(),
        "--n",
        "1",
        "--auto",
        "--modulus",
        "17",
    ]);
    assert_eq!(exit_code(&out), 3);
    // 16 has order 2, not 4
    let out = run(&[
        "fft",
        input.to_str().unwrap(),
        "--n",
        "2",
        "--root",
        "16",
        "--modulus",
        "17",
    ]);
    assert_eq!(exit_code(&out), 3);
    // bench over a field without enough roots
    let out = run(&["bench", "--sizes", "1024", "--modulus", "17"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn bench_reports_every_requested_cell() {
    let out = run(&[
        "bench", "--sizes", "8,16", "--repeat", "2", "--seed", "7",
    ]);
    let doc = stdout_json(&out);
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["repeat"], 2);
    let results = doc["results"].as_array().unwrap();
    assert_eq!(results.len(), 4); // 2 sizes x {naive, fft}
    for row in results {
        assert_eq!(row["samples_ns"].as_array().unwrap().len(), 2);
        assert!(row["min_ns"].as_u64().unwrap() > 0);
        assert!(row["median_ns"].as_u64().unwrap() >= row["min_ns"].as_u64().unwrap());
    }
    let out = run(&[
        "bench", "--sizes", "8", "--algos", "naive", "--format", "csv",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algo,size,min_ns,median_ns"));
    assert!(lines.next().unwrap().starts_with("naive,8,"));
    // non-power-of-two size is an input error
    let out = run(&["bench", "--sizes", "12"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn selfcheck_reports_all_suites() {
    let out = run(&["selfcheck", "--trials", "20", "--max-n", "4", "--seed", "3"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    for name in [
        "fftE", "fft1E", "step1E", "istep_fft1", "fftK", "poly_even_odd",
        "poly_take_drop", "reverse_polyS", "take_step", "drop_step",
        "all_results_fft1_reverse_poly", "all_results_fft1_step",
        "prim_exp2nS", "prim_sqr",
    ] {
        assert!(text.contains(&format!("{name}: ")), "missing suite {name}");
    }
    assert!(!text.contains("FAILED"));

    // zero trials runs nothing but still succeeds
    let out = run(&["selfcheck", "--trials", "0"]);
    assert!(out.status.success());
}
