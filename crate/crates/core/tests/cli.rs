use std::path::Path;
use std::process::{Command, Output};

fn dorroh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dorroh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn emit(name: &str, dir: &Path) -> std::path::PathBuf {
    let file = dir.join(format!("{}.json", name.replace(['(', ')', ','], "_")));
    let o = dorroh(&["gallery", "--emit", name, "-o", path(&file)]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    file
}

#[test]
fn unitization_of_nilpotent_builds_dual_numbers() {
    let dir = tempfile::tempdir().unwrap();
    let pair = emit("unitization(nilpotent1)", dir.path());
    let built = dir.path().join("built.json");
    let o = dorroh(&["build", path(&pair), "-o", path(&built)]);
    assert_eq!(o.status.code(), Some(0));
    let o = dorroh(&["check", path(&built)]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS identity element: found"));
    let text = std::fs::read_to_string(&built).unwrap();
    let built: serde_json::Value = serde_json::from_str(&text).unwrap();
    let dual = dorroh(&["gallery", "--emit", "dual_numbers"]);
    let dual: serde_json::Value = serde_json::from_slice(&dual.stdout).unwrap();
    assert_eq!(built["dim"], 2);
    assert_eq!(built["mul"], dual["mul"]);
}

#[test]
fn out_of_range_index_is_located() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(
        &bad,
        r#"{"format": "dorroh/1", "field": "Q", "kind": "algebra", "dim": 1, "mul": [[0, 1, 0, "1"]]}"#,
    )
    .unwrap();
    let o = dorroh(&["check", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.mul[0]"));
}

#[test]
fn double_dual_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = emit("M2", dir.path());
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    assert_eq!(dorroh(&["dualize", path(&a), "-o", path(&once)]).status.code(), Some(0));
    assert_eq!(dorroh(&["dualize", path(&once), "-o", path(&twice)]).status.code(), Some(0));
    let kind: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&once).unwrap()).unwrap();
    assert_eq!(kind["kind"], "coalgebra");
    let o = dorroh(&["iso", "--which", "duality", path(&a)]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_reports_carry_witnesses() {
    let dir = tempfile::tempdir().unwrap();
    let fib = emit("fibonacci", dir.path());
    let o = dorroh(&["--report", "json", "findual", "--seq", path(&fib), "--command", "vanish", "--poly=-2,1"]);
    assert_eq!(o.status.code(), Some(1));
    let rep: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rep["status"], "fail");
    let failed = rep["checks"].as_array().unwrap().iter().find(|c| c["status"] == "fail").unwrap();
    assert_eq!(failed["witness"], serde_json::json!([0]));

    let o = dorroh(&["--report", "json", "findual", "--seq", path(&fib), "--command", "vanish", "--poly=-1,-1,1"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(dorroh(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dorroh(&["check"]).status.code(), Some(2));
    assert_eq!(dorroh(&["--help"]).status.code(), Some(0));
}

#[test]
fn gallery_lists_catalog() {
    let o = dorroh(&["gallery", "--list"]);
    assert_eq!(o.status.code(), Some(0));
    let listing = stdout(&o);
    for name in ["M2", "Mc2", "fibonacci", "regular(kZ2)", "grouplike"] {
        assert!(listing.contains(name), "{name} missing");
    }
}
