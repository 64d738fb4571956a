use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_clifford-factor"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn rep_complex_as_real_block() {
    let o = run(&["rep", "--sig", "0,1", "--route", "real2", "1+2*eps1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "R(2)\n[1, -2]\n[2, 1]\n");
}

#[test]
fn rep_default_complex_route() {
    let o = run(&["rep", "--sig", "0,1", "1+2*eps1"]);
    assert_eq!(stdout(&o), "C(1)\n[1+2i]\n");
}

#[test]
fn rep_diagonal_and_zero() {
    assert_eq!(stdout(&run(&["rep", "--sig", "2,0", "e1"])), "R(2)\n[1, 0]\n[0, -1]\n");
    assert_eq!(stdout(&run(&["rep", "--sig", "0,1", "--route", "real2", "0"])), "R(2)\n[0, 0]\n[0, 0]\n");
}

#[test]
fn inverse_examples() {
    assert_eq!(stdout(&run(&["inverse", "--sig", "0,2", "1+eps1"])), "1/2 - 1/2*eps1\n");
    assert_eq!(stdout(&run(&["inverse", "--sig", "1,0", "1+e1"])), "non-invertible\n");
    assert_eq!(stdout(&run(&["inverse", "--sig", "0,1", "eps1"])), "-1*eps1\n");
}

#[test]
fn expression_from_stdin() {
    let mut child = bin()
        .args(["inverse", "--sig", "0,2", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"1+eps1\n").unwrap();
    let o = child.wait_with_output().unwrap();
    assert_eq!(stdout(&o), "1/2 - 1/2*eps1\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["rep", "--sig", "2,0", "e1+"]).status.code(), Some(2));
    assert_eq!(run(&["rep", "--sig", "2,0", "e3"]).status.code(), Some(2));
    assert_eq!(run(&["rep", "--sig", "11,0", "e1"]).status.code(), Some(3));
    assert_eq!(run(&["verify", "--sig", "6,6"]).status.code(), Some(3));
    assert_eq!(run(&["rep", "--sig", "0,1", "--route", "real4", "eps1"]).status.code(), Some(3));
}

#[test]
fn classification_table_rows() {
    let t = stdout(&run(&["table", "--max-n", "10"]));
    assert!(t.contains("n=2  (2,0) R(2)*  (1,1) R(2)*  (0,2) H*"), "{t}");
    assert!(t.contains("n=3  (3,0) C(2)*  (2,1) ²R(2)*  (1,2) C(2)*  (0,3) ²H*"), "{t}");
    assert!(t.contains("(9,0) ²R(16)*"), "{t}");
    assert!(t.contains("(8,1) C(16)*"), "{t}");
    assert!(t.contains("(10,0) R(32)*"), "{t}");
    let rec = stdout(&run(&["--format", "records", "table", "--max-n", "2"]));
    assert_eq!(rec.lines().count(), 5);
    assert!(rec.contains("(0,2)\tH\t1\tconstructed"));
}

#[test]
fn classify_spots() {
    assert_eq!(stdout(&run(&["classify", "--sig", "3,1"])), "(3,1) R(4)\n");
    assert_eq!(stdout(&run(&["classify", "--sig", "2,1"])), "(2,1) ²R(2)\n");
    assert_eq!(stdout(&run(&["--format", "records", "classify", "--sig", "0,2"])), "(0,2)\tH\t1\n");
}

#[test]
fn verify_single_signature() {
    let o = run(&["verify", "--sig", "9,0", "--trials", "5"]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o = run(&["--format", "records", "verify", "--sig", "0,2", "--seed", "3", "--trials", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.split('\t').count() >= 5), "{text}");
    assert_eq!(text, stdout(&run(&["--format", "records", "verify", "--sig", "0,2", "--seed", "3", "--trials", "5"])));
}

#[test]
fn catalog_writes_both_files() {
    let dir = std::env::temp_dir().join(format!("clifford-factor-cli-{}", std::process::id()));
    let o = run(&["catalog", "--out", dir.to_str().unwrap()]);
    assert!(o.status.success());
    let cat = std::fs::read_to_string(dir.join("catalog.txt")).unwrap();
    let cor = std::fs::read_to_string(dir.join("corrections.md")).unwrap();
    assert!(cat.lines().any(|l| l.starts_with("(9,0) periodic ²R(16)")), "{cat}");
    assert!(cat.lines().any(|l| l.starts_with("(0,2) real4 R(4)")), "{cat}");
    assert!(cor.starts_with("# Corrections"));
    let _ = std::fs::remove_dir_all(dir);
}
