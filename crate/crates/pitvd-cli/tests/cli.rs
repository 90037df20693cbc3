use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn pitvd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pitvd")).args(args).output().expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn cycles(count: u32, len: u32, k: usize) -> String {
    let mut out = format!("p pitvd {} {} {k}\n", count * len, count * len);
    for c in 0..count {
        for i in 0..len {
            out += &format!("e {} {} 1\n", c * len + i + 1, c * len + (i + 1) % len + 1);
        }
    }
    out
}

#[test]
fn pitg_input_gives_an_empty_kernel() {
    let dir = TempDir::new().unwrap();
    let input = write(dir.path(), "tri.txt", "c triangle\np pitvd 3 3 1\ne 1 2 1\ne 2 3 1\ne 1 3 1\n");
    let o = pitvd(&["kernelize", &input]);
    assert_eq!(code(&o), 0);
    assert_eq!(String::from_utf8(o.stdout).unwrap(), "p pitvd 0 0 1\n");
    let stats: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(stats["decided_no"], false);
    assert_eq!(stats["kernel"]["vertices"], 0);
}

#[test]
fn too_many_disjoint_long_cycles_exit_20() {
    let dir = TempDir::new().unwrap();
    for k in 0..3 {
        let input = write(dir.path(), "c7.txt", &cycles(k as u32 + 1, 7, k));
        let out = dir.path().join("kernel.txt");
        let o = pitvd(&["kernelize", &input, "-o", out.to_str().unwrap()]);
        assert_eq!(code(&o), 20, "k = {k}");
        assert!(fs::read_to_string(&out).unwrap().starts_with("c decided-no"));
    }
    let input = write(dir.path(), "c7.txt", &cycles(2, 7, 2));
    assert_eq!(code(&pitvd(&["kernelize", &input])), 0);
}

#[test]
fn malformed_input_exits_2() {
    let dir = TempDir::new().unwrap();
    for bad in ["p pitvd 2 1 0\ne 1 1 1\n", "p pitvd 2 1 0\ne 1 3 1\n", "e 1 2 1\n", "p pitvd 2 2 0\ne 1 2 1\n"] {
        let input = write(dir.path(), "bad.txt", bad);
        let o = pitvd(&["kernelize", &input]);
        assert_eq!(code(&o), 2, "{bad:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("parse error"));
    }
}

#[test]
fn duplicate_records_add_up() {
    let dir = TempDir::new().unwrap();
    // Two records make a double edge, which needs one deletion.
    let input = write(dir.path(), "dup.txt", "p pitvd 2 2 0\ne 1 2 1\ne 2 1 1\n");
    assert_eq!(code(&pitvd(&["kernelize", &input])), 20);
    let input = write(dir.path(), "dup.txt", "p pitvd 2 2 1\ne 1 2 1\ne 2 1 1\n");
    assert_eq!(code(&pitvd(&["kernelize", &input])), 0);
}

#[test]
fn trace_replays_to_the_same_kernel_bytes() {
    let dir = TempDir::new().unwrap();
    let inst = dir.path().join("g.txt");
    let kernel = dir.path().join("kernel.txt");
    let again = dir.path().join("again.txt");
    let trace = dir.path().join("trace.json");
    let [inst_s, kernel_s, again_s, trace_s] = [&inst, &kernel, &again, &trace].map(|p| p.to_str().unwrap().to_string());
    for seed in 1..=40 {
        let n = (6 + seed % 9).to_string();
        let k = (seed % 4).to_string();
        let seed = seed.to_string();
        assert_eq!(code(&pitvd(&["generate", "-n", &n, "-k", &k, "--density", "0.35", "--seed", &seed, "-o", &inst_s])), 0);
        let first = code(&pitvd(&["kernelize", &inst_s, "-o", &kernel_s, "--trace", &trace_s]));
        let second = code(&pitvd(&["replay", &inst_s, "--trace", &trace_s, "-o", &again_s]));
        assert_eq!(first, second, "seed {seed}");
        assert_eq!(fs::read(&kernel).unwrap(), fs::read(&again).unwrap(), "seed {seed}");
    }
}

#[test]
fn verify_passes_and_is_reproducible() {
    let o = pitvd(&["verify", "--count", "100", "--max-n", "10", "--seed", "1"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.ends_with("100 instances, 100 passed, 0 failed\n"), "{text}");
    assert_eq!(text, String::from_utf8(pitvd(&["verify", "--count", "100", "--max-n", "10", "--seed", "1"]).stdout).unwrap());
    let empty = pitvd(&["verify", "--count", "0"]);
    assert_eq!(code(&empty), 0);
    assert_eq!(String::from_utf8(empty.stdout).unwrap(), "0 instances, 0 passed, 0 failed\n");
}

#[test]
fn verify_json_lines() {
    let o = pitvd(&["verify", "--count", "5", "--json"]);
    let text = String::from_utf8(o.stdout).unwrap();
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    assert_eq!(first["index"], 0);
}

#[test]
fn mutation_test_is_detected() {
    let o = pitvd(&["verify", "--count", "100", "--mutation-test", "1"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8(o.stdout).unwrap().contains("FAIL"));
    assert_eq!(code(&pitvd(&["verify", "--mutation-test", "15"])), 2);
}

#[test]
fn generate_is_deterministic_and_honours_extremes() {
    let a = pitvd(&["generate", "-n", "9", "--seed", "4"]).stdout;
    assert_eq!(a, pitvd(&["generate", "-n", "9", "--seed", "4"]).stdout);
    assert_ne!(a, pitvd(&["generate", "-n", "9", "--seed", "5"]).stdout);
    let edgeless = String::from_utf8(pitvd(&["generate", "-n", "7", "--density", "0"]).stdout).unwrap();
    assert!(edgeless.lines().any(|l| l == "p pitvd 7 0 2"));
    let doubled = String::from_utf8(pitvd(&["generate", "-n", "6", "--density", "1", "--double-rate", "1"]).stdout).unwrap();
    let records: Vec<&str> = doubled.lines().filter(|l| l.starts_with("e ")).collect();
    assert_eq!(records.len(), 15);
    assert!(records.iter().all(|l| !l.ends_with(" 1")));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_pitvd"))
        .args(["kernelize", "-"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(b"p pitvd 4 4 0\ne 1 2 1\ne 2 3 1\ne 3 4 1\ne 4 1 1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(code(&o), 20);
}
