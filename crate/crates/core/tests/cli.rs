use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn vtsa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vtsa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let o = vtsa(&full);
    let v = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn write_example(dir: &Path, name: &str, extra: &[&str]) -> PathBuf {
    let mut args = vec!["example", name, "--write", dir.to_str().unwrap()];
    args.extend_from_slice(extra);
    let o = vtsa(&args);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    dir.join(format!("{name}.pair"))
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

#[test]
fn verify_ex1() {
    let o = vtsa(&["example", "ex1", "--n", "8", "--verify"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("ex1: all assertions pass"));
}

#[test]
fn verify_json_is_stable() {
    let (a, code) = json(&["verify", "k33"]);
    let (b, _) = json(&["verify", "k33"]);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a["pass"], Value::Bool(true));
}

#[test]
fn reduce_hamming_names_k5() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "hamming", &[]);
    let o = vtsa(&["reduce", p(&pair)]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("K_5"), "{text}");
    assert!(text.contains("|G_0| = 12"), "{text}");
    let (v, _) = json(&["reduce", p(&pair)]);
    assert_eq!(v["outcome"]["kind"], "reduced_qp");
    assert_eq!(v["outcome"]["summary"]["stabiliser_order"], "12");
    assert_eq!(v["reduced_graphs"][0], "K_5");
}

#[test]
fn analyze_k33() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "k33", &[]);
    let (v, code) = json(&["analyze", p(&pair)]);
    assert_eq!(code, 0);
    assert_eq!(v["profile"]["biquasiprimitive"], true);
    assert_eq!(v["route"], "far_half_transitive");
    assert_eq!(v["outcome"], "bounded");
}

#[test]
fn reduce_unclassified_exit_code() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "hamming_direct", &[]);
    let (v, code) = json(&["reduce", p(&pair)]);
    assert_eq!(code, 2);
    assert_eq!(v["outcome"]["kind"], "unclassified");
}

#[test]
fn quotient_ex1_by_base() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "ex1", &["--n", "8"]);
    let normal = dir.path().join("ex1.N.group");
    let (v, code) = json(&["quotient", p(&pair), "--normal", p(&normal)]);
    assert_eq!(code, 0);
    assert_eq!(v["quotient_graph"], "C_8");
    assert_eq!(v["kernel_order"], "256");
    assert_eq!(v["d"], 5);
    assert_eq!(v["d_prime"], 2);
    assert_eq!(v["quotient"]["block_map"].as_array().unwrap().len(), 16);
}

#[test]
fn local_report() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "petersen", &[]);
    let (v, code) = json(&["local", p(&pair), "--vertex", "4"]);
    assert_eq!(code, 0);
    assert_eq!(v["induced_order"], "6");
    assert_eq!(v["flags"]["two_transitive"], true);
    let o = vtsa(&["local", p(&pair), "--vertex", "10"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn bounds_commands() {
    let dir = TempDir::new().unwrap();
    let file = dir.path().join("b.sexp");
    std::fs::write(&file, "# (3 * 3!)!\n(fact (mul 3 (fact 3)))\n").unwrap();
    let (v, _) = json(&["bounds", "cmp", p(&file), "6402373705728000"]);
    assert_eq!(v["result"], "less_or_equal");
    let (v, _) = json(&["bounds", "cmp", p(&file), "6402373705728001"]);
    assert_eq!(v["result"], "greater");
    let (v, code) = json(&["bounds", "eval", "--f3", "d=3", "f1=1", "f2=2"]);
    assert_eq!(code, 0);
    assert_eq!(v["value"], "720");
    let (v, _) = json(&["bounds", "eval", "--f-hat", "d=4", "g=1"]);
    assert_eq!(v["value"], "24");
}

#[test]
fn parse_errors_carry_line_numbers() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "k33", &[]);
    std::fs::write(dir.path().join("k33.group"), "degree 6\n1 2 0 3 4 5\n0 1 2 3 3 5\n").unwrap();
    let o = vtsa(&["analyze", p(&pair)]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn dry_run_and_refusal() {
    let o = vtsa(&["example", "ex3", "--dry-run"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("SL(3,9)"));
    assert_eq!(vtsa(&["example", "ex3"]).status.code(), Some(3));
    assert_eq!(vtsa(&["example", "hypercube", "--k", "20"]).status.code(), Some(3));
    assert_eq!(vtsa(&["example", "nope"]).status.code(), Some(3));
}

#[test]
fn max_order_guard() {
    let o = vtsa(&["example", "hamming", "--max-order", "1000"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn seed_does_not_change_output() {
    let dir = TempDir::new().unwrap();
    let pair = write_example(dir.path(), "biqp_product", &[]);
    let (a, _) = json(&["reduce", p(&pair), "--seed", "1"]);
    let (b, _) = json(&["reduce", p(&pair), "--seed", "99"]);
    assert_eq!(a, b);
}
