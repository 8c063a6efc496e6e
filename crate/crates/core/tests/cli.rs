use std::path::PathBuf;
use std::process::{Command, Output};

use orbit_braid::{rho_word, shift_c, BraidWord, GroupParams};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_orbit-braid")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("orbit-braid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eq_rejects_bad_words() {
    let o = run(&["eq", "--space", "plane", "--p", "2", "--n", "2", "b7", ""]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).is_empty());
    assert!(!o.stderr.is_empty());
    let o = run(&["eq", "--space", "punctured", "--p", "3", "--n", "1", "b^3", ""]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("not-equal\n", Some(1)));
}

#[test]
fn endo_examples() {
    let o = run(&["endo", "--p", "2", "--n", "2", "b"]);
    assert!(stdout(&o).lines().any(|l| l == "x0.1 -> x0.0^-1 x0.1 x0.0"));
    let o = run(&["endo", "--p", "2", "--n", "2", ""]);
    assert_eq!(stdout(&o), "x0.0 -> x0.0\nx0.1 -> x0.1\nx1.0 -> x1.0\nx1.1 -> x1.1\n");
    let o = run(&["endo", "--p", "2", "--n", "2", "b^2"]);
    assert!(stdout(&o).lines().any(|l| l == "x0.1 -> x1.0^-1 x0.0^-1 x0.1 x0.0 x1.0"));
}

#[test]
fn decompose_examples() {
    let pr = GroupParams::new(2, 2).unwrap();
    let file = scratch("b0.endo");
    std::fs::write(&file, rho_word(&BraidWord::parse("b0", &pr).unwrap(), &pr).unwrap().to_string()).unwrap();
    let o = run(&["decompose", "--p", "2", "--n", "2", file.to_str().unwrap()]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("b0\ntwist: 0\n", Some(0)));

    let o = run(&["endo", "--p", "2", "--n", "2", ""]);
    std::fs::write(&file, o.stdout).unwrap();
    let o = run(&["decompose", "--p", "2", "--n", "2", file.to_str().unwrap()]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("\ntwist: 0\n", Some(0)));

    std::fs::write(&file, "x0.0 -> x0.0 x0.0\n").unwrap();
    let o = run(&["decompose", "--p", "2", "--n", "2", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    // a permutation that is not a boundary rotation
    std::fs::write(&file, "x0.0 -> x0.1\nx0.1 -> x0.0\nx1.0 -> x1.1\nx1.1 -> x1.0\n").unwrap();
    let o = run(&["decompose", "--p", "2", "--n", "2", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn decompose_reports_the_orbit_shift_as_a_braid() {
    let pr = GroupParams::new(2, 2).unwrap();
    let file = scratch("shift.endo");
    std::fs::write(&file, shift_c(&pr, 1).to_string()).unwrap();
    let o = run(&["decompose", "--p", "2", "--n", "2", file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("twist: 0\n"));
}

#[test]
fn comb_examples() {
    let o = run(&["comb", "--p", "2", "--n", "2", "b0^2"]);
    assert_eq!((stdout(&o).as_str(), o.status.code()), ("L1: -\nL2: A0.0.1\n", Some(0)));
    let o = run(&["comb", "--p", "2", "--n", "2", ""]);
    assert_eq!(stdout(&o), "L1: -\nL2: -\n");
    let o = run(&["comb", "--p", "2", "--n", "2", "b^2"]);
    assert_eq!(stdout(&o), "L1: -\nL2: A0\n");
    let o = run(&["comb", "--p", "2", "--n", "2", "b0"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["comb", "--p", "2", "--n", "3", "--max-basis-length", "0", "b0^2 b1^2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn selftest_report() {
    let o = run(&["selftest", "--p", "2..2", "--n", "2..2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.starts_with("[p=2 n=2]\n"));
    assert!(text.lines().any(|l| l == "(bb0)^p == (b0b)^p : PASS"));

    let o = run(&["selftest", "--p", "3..3", "--n", "2..2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("(bb0)^p == (b0b)^p : RECORDED")));

    let o = run(&["selftest", "--p", "2..4", "--n", "1..4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("FAIL"));
    assert_eq!(stdout(&o).matches("[p=").count(), 12);
}

#[test]
fn render_writes_svg() {
    let file = scratch("b0.svg");
    let o = run(&["render", "--p", "2", "--n", "2", "--out", file.to_str().unwrap(), "b0 b^2"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = std::fs::read_to_string(&file).unwrap();
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<path").count(), 4);
}
