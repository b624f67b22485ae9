use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hwdesign"))
        .args(args)
        .env_remove("DESIGN_FIXTURE_DIR")
        .output()
        .expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("arcs.cert");
    let o = run(&["build", "arcs", "--k", "9", "--t", "1", "-o", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify", path(&out)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("VALID"));
}

#[test]
fn nonexistent_arcs_exits_2() {
    let o = run(&["build", "arcs", "--k", "3", "--t", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("NONEXISTENT"));
}

#[test]
fn open_arcs_exits_2() {
    let o = run(&["build", "arcs", "--k", "11", "--t", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("OPEN"));
}

#[test]
fn hw_dispatches_to_fixture() {
    let o = run(&["build", "hw", "--v", "35", "--m", "5", "--n", "7", "--alpha", "9", "--beta", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let c = hwdesign::format::parse(&text).unwrap();
    assert!(hwdesign::verify::check_certificate(&c).is_valid());
    assert_eq!(c.measured_profile().hw(5, 7), (9, 8));
    assert!(c.provenance.render().contains("L4.6"), "{}", c.provenance.render());
}

#[test]
fn hw_necessary_failure_exits_2() {
    let o = run(&["build", "hw", "--v", "20", "--m", "3", "--n", "5", "--alpha", "3", "--beta", "6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("NECESSARY_FAIL"));
}

#[test]
fn theorem_15_without_base_reports_missing_ingredient() {
    let o = run(&["build", "hw", "--v", "16", "--m", "4", "--n", "8", "--alpha", "3", "--beta", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).starts_with("MISSING_INGREDIENT"), "{}", stdout(&o));
}

#[test]
fn mutated_fixture_exits_3_with_witness() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("l41.cert");
    assert_eq!(run(&["build", "fixture", "--name", "L4.1", "-o", path(&good)]).status.code(), Some(0));
    // duplicate the first class block
    let text = std::fs::read_to_string(&good).unwrap();
    let start = text.find("\nclass ").unwrap() + 1;
    let end = start + 1 + text[start + 1..].find("\nclass ").unwrap() + 1;
    let block = &text[start..end];
    let mut bad = text.clone();
    bad.insert_str(end, block);
    // keep the claimed profile honest so only the edge cover fails
    let bad = bad.replace("C3=6", "C3=7");
    let bad_path = dir.path().join("bad.cert");
    std::fs::write(&bad_path, bad).unwrap();
    let o = run(&["verify", path(&bad_path)]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("DOUBLE_COVERED_EDGE"), "{}", stdout(&o));
}

#[test]
fn truncated_file_exits_65() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("a.cert");
    run(&["build", "arcs", "--k", "9", "--t", "1", "-o", path(&good)]);
    let text = std::fs::read_to_string(&good).unwrap();
    let cut = dir.path().join("cut.cert");
    std::fs::write(&cut, &text[..text.len() / 2]).unwrap();
    let o = run(&["verify", path(&cut)]);
    assert_eq!(o.status.code(), Some(65));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));
}

#[test]
fn status_examples() {
    let o = run(&["status", "--v", "39", "--m", "3", "--n", "13", "--alpha", "8", "--beta", "11"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "SOLVABLE(fixture L4.7)");
    let o = run(&["status", "--v", "21", "--m", "3", "--n", "7", "--alpha", "9", "--beta", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("OPEN"));
    let o = run(&["status", "--v", "20", "--m", "3", "--n", "5", "--alpha", "4", "--beta", "5"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("NECESSARY_FAIL"));
    let o = run(&["status", "arcs", "--k", "3", "--t", "1"]);
    assert!(stdout(&o).starts_with("NONEXISTENT"));
    let o = run(&["status", "factorization", "--k", "3", "--u", "6", "--g", "2"]);
    assert!(stdout(&o).starts_with("NECESSARY_FAIL"));
}

#[test]
fn status_without_counts_lists_splits() {
    let o = run(&["status", "--v", "20", "--m", "3", "--n", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 10);
    assert!(text.lines().skip(1).all(|l| l.contains("NECESSARY_FAIL")));
}

#[test]
fn bad_flags_exit_64() {
    assert_eq!(run(&["build", "arcs", "--k", "9"]).status.code(), Some(64));
    assert_eq!(run(&["build", "arcs", "--k", "x", "--t", "1"]).status.code(), Some(64));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(run(&["build", "cayley", "--construction", "2l", "--k", "17"]).status.code(), Some(64));
    assert_eq!(run(&["build", "arcs", "--k", "2", "--t", "1"]).status.code(), Some(64));
}

#[test]
fn unknown_fixture_is_a_flag_error() {
    let o = run(&["build", "fixture", "--name", "L9.9"]);
    assert_eq!(o.status.code(), Some(64));
    assert!(stdout(&o).starts_with("UNKNOWN_FIXTURE"));
}

#[test]
fn cayley_constructions() {
    for args in [
        vec!["build", "cayley", "--construction", "00", "--k", "9", "--t", "1"],
        vec!["build", "cayley", "--construction", "2l", "--k", "17", "--t", "1", "--l", "14"],
        vec!["build", "cayley", "--construction", "2ku", "--k", "3", "--u", "4"],
        vec!["build", "cayley", "--construction", "cmn", "--m", "3", "--n", "9"],
        vec!["build", "cayley", "--construction", "cm9", "--m", "5"],
    ] {
        let o = run(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
        let c = hwdesign::format::parse(&stdout(&o)).unwrap();
        assert!(hwdesign::verify::check_certificate(&c).is_valid(), "{args:?}");
    }
}

#[test]
fn frame_build() {
    let o = run(&["build", "frame", "--k", "3", "--g", "2", "--u", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let c = hwdesign::format::parse(&stdout(&o)).unwrap();
    assert!(hwdesign::verify::check_certificate(&c).is_valid());
}
