use std::path::PathBuf;
use std::process::{Command, Output};

fn ramyip(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ramyip"))
        .args(args)
        .env_remove("RAMYIP_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("ramyip-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn zero_weight_is_one() {
    let o = ramyip(&["compute", "--system", "cc", "--n", "2", "--mu", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1");
}

#[test]
fn ry_d_box_prints_one_line_per_weight() {
    let o = ramyip(&["verify", "--prop", "ry-d", "--n", "2", "--mu-box", "1", "--mode", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 9);
    assert!(lines.iter().all(|l| l["status"] == "pass" && l["type"] == "D"));
    assert_eq!(lines[0]["mu"], serde_json::json!([-1, -1]));
}

#[test]
fn specialize_reads_compute_output() {
    let e = ramyip(&["compute", "--system", "cc", "--n", "2", "--mu", "1,0", "--format", "json"]);
    assert_eq!(e.status.code(), Some(0));
    let input = scratch("e10.json");
    std::fs::write(&input, &e.stdout).unwrap();
    let out = scratch("e10-cn.json");
    let o = ramyip(&["specialize", "--rule", "Cn", "--input", input.to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let p: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(p["terms"].is_array());

    // the same rule applied before summing gives the same polynomial
    let direct = ramyip(&["compute", "--system", "cc", "--n", "2", "--mu", "1,0", "--rule", "Cn"]);
    let via = ramyip(&["specialize", "--rule", "Cn", "--input", out.to_str().unwrap(), "--format", "text"]);
    assert_eq!(stdout(&direct), stdout(&via));
}

#[test]
fn half_integer_weight_is_refused() {
    let o = ramyip(&["compute", "--system", "cc", "--n", "2", "--mu", "1/2,1/2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("half-integer"));
}

#[test]
fn eval_mode_needs_a_seed() {
    let o = ramyip(&["verify", "--prop", "ry-c", "--n", "2", "--mu", "1", "--mode", "eval"]);
    assert_eq!(o.status.code(), Some(2));
    let o = ramyip(&["verify", "--prop", "ry-c", "--n", "2", "--mu", "1", "--mode", "eval", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(ramyip(&["compute", "--system", "xx", "--n", "2", "--mu", "0"]).status.code(), Some(2));
    assert_eq!(ramyip(&["compute", "--system", "cc", "--n", "1", "--mu", "0"]).status.code(), Some(2));
    assert_eq!(ramyip(&["delta-check", "--subsystem", "G2", "--n", "2"]).status.code(), Some(2));
}

#[test]
fn worker_count_does_not_change_output() {
    let run = |w: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_ramyip"))
            .args(["compute", "--system", "cc", "--n", "3", "--mu", "1,0,-1", "--format", "json"])
            .env("RAMYIP_WORKERS", w)
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        o.stdout
    };
    let one = run("1");
    assert_eq!(one, run("2"));
    assert_eq!(one, run("4"));
}

#[test]
fn delta_check_all_rows() {
    let o = ramyip(&["delta-check", "--n", "2", "--cutoff", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 9);
}

#[test]
fn selftest_passes() {
    let o = ramyip(&["selftest"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}
