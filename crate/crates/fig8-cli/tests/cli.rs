use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fig8(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fig8")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn first_line(o: &Output) -> String {
    stdout(o).lines().next().unwrap_or("").to_string()
}

#[test]
fn classify_intersection_points() {
    let o = fig8(&["classify", "--coords", "4,4,8,8,3,3,3,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(first_line(&o), "XTR XPR V0");
    let o = fig8(&["classify", "--coords", "2,2,2,2,1,1,1,1"]);
    assert_eq!(first_line(&o), "XPR V0 V1 V2");
    assert!(stdout(&o).contains("x1=0"));
}

#[test]
fn classify_exit_codes() {
    let o = fig8(&["classify", "--coords", "1,1,1,1,1,1,1,1"]);
    assert_eq!(o.status.code(), Some(3));
    assert_eq!(first_line(&o), "");
    assert_eq!(fig8(&["classify", "--coords", "1,2,x"]).status.code(), Some(2));
    assert_eq!(fig8(&["classify", "--coords", "1,1,1,1,1,1,1,s"]).status.code(), Some(2));
}

#[test]
fn classify_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.json");
    std::fs::write(&path, r#"{"coords": ["4","4","8","8","3","3","3","3"]}"#).unwrap();
    let o = fig8(&["classify", "--file", path.to_str().unwrap()]);
    assert_eq!(first_line(&o), "XTR XPR V0");
}

#[test]
fn symmetry_h_example() {
    let o = fig8(&["symmetry", "--op", "h", "--coords", "3,3,3,3,1,1,2,2"]);
    assert_eq!(stdout(&o).trim(), "3,3,6,6,2,2,1,1");
    let o = fig8(&["symmetry", "--op", "w", "--coords", "1,0,0,0,0,0,0,0"]);
    assert_eq!(stdout(&o).trim(), "w,0,0,0,0,0,0,0");
}

#[test]
fn trace_fixtures() {
    let o = fig8(&["trace", "--rep", fixture("identity.json").to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "3,3,3,3,3,3,3,3 eta=3");
    let o = fig8(&["trace", "--rep", fixture("broken.json").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&o.stderr).contains("relation"));
    let o = fig8(&["trace", "--rep", fixture("dehn_example.json").to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "3,3,3,3,1,1,7/2+1/2*s,7/2-1/2*s eta=3");
}

#[test]
fn construct_v0_then_trace_orbit() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("v0.json");
    let o = fig8(&["construct", "--component", "V0", "--params", "3,3", "--branch", "+", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = fig8(&["trace", "--rep", out.to_str().unwrap(), "--orbit"]);
    let text = stdout(&o);
    assert!(text.starts_with("y^3=64 yb^3=64 y*yb=16 z^3=512 zb^3=512"), "{text}");
}

#[test]
fn construct_trace_classify_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("XTR", "2,-1/3", "XTR"),
        ("XPR", "2,3", "XPR"),
        ("V0", "2,-1/2", "V0"),
        ("V1", "3,-1/2", "V1"),
        ("V2", "3,-1/2", "V2"),
    ];
    for (kind, params, want) in cases {
        for branch in ["+", "-"] {
            let out = dir.path().join(format!("{kind}{branch}.json"));
            let o = fig8(&["construct", "--component", kind, "--params", params, "--branch", branch, "--out", out.to_str().unwrap()]);
            assert_eq!(o.status.code(), Some(0), "{kind} {branch}: {}", String::from_utf8_lossy(&o.stderr));
            let cls = first_line(&fig8(&["classify", "--rep", out.to_str().unwrap()]));
            assert!(cls.split(' ').any(|c| c == want), "{kind} {branch}: {cls}");
        }
    }
}

#[test]
fn sl_family_trace_and_classify() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("xtr.json");
    fig8(&["construct", "--component", "XTR", "--params", "2,-1/3", "--out", out.to_str().unwrap()]);
    let line = stdout(&fig8(&["trace", "--rep", out.to_str().unwrap()]));
    let coords = line.split_whitespace().next().unwrap().to_string();
    assert_eq!(first_line(&fig8(&["classify", "--coords", &coords])), "XTR");
}

#[test]
fn construct_excluded_locus() {
    let o = fig8(&["construct", "--component", "V0", "--params", "2,2"]);
    assert_eq!(o.status.code(), Some(5), "{}", String::from_utf8_lossy(&o.stderr));
    let o = fig8(&["construct", "--component", "SLICE", "--params", "2,2", "--branch", "-"]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn slice_file_traces_to_w() {
    let o = fig8(&["construct", "--component", "SLICE", "--params", "0,0"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("kl.json");
    std::fs::write(&path, o.stdout).unwrap();
    let t = stdout(&fig8(&["trace", "--rep", path.to_str().unwrap()]));
    assert!(t.starts_with("nu=0 nub=0 zeta="), "{t}");
}

#[test]
fn suite_reports() {
    let o = fig8(&["suite", "--name", "V0-radical18", "--mode", "sampled", "--n", "5", "--seed", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("RESULT PASS\n"));
    let a = stdout(&fig8(&["suite", "--name", "W-discriminants", "--mode", "symbolic", "--json"]));
    let b = stdout(&fig8(&["suite", "--name", "W-discriminants", "--mode", "symbolic", "--json"]));
    assert_eq!(a, b);
    assert!(a.contains("\"verdict\": \"pass\""));
    assert_eq!(stdout(&fig8(&["suite", "--list"])).lines().count(), 16);
    assert_eq!(fig8(&["suite", "--name", "nope"]).status.code(), Some(2));
}
