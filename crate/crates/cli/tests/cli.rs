use std::process::{Command, Output};

const KNOWN_RED: [&str; 2] = [
    "c04 ternary eta table against listed values",
    "c08 (0,1,2,3,6)[12] det",
];

fn cnalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cnalg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn cubesearch_finds_smallest_row() {
    let o = cnalg(&["cubesearch", "--limit", "40"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.split_whitespace().take(4).eq(["2", "3", "3", "2"])));

    let o = cnalg(&["cubesearch", "--limit", "40", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let rows = v.as_array().unwrap();
    assert!(rows.iter().any(|r| r["a"] == 2 && r["b"] == 3 && r["c"] == 3 && r["d"] == 2 && r["primitive"] == true));
    assert!(rows.iter().all(|r| r["c"].as_u64().unwrap() <= 40));

    let o = cnalg(&["cubesearch", "--limit", "42", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["a"] == 5 && r["b"] == 25 && r["c"] == 42 && r["d"] == 42));
}

#[test]
fn berger_build_e8() {
    let o = cnalg(&["berger", "build", "--k", "0,1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("h 30"));

    let o = cnalg(&["berger", "build", "--k", "0,1,2,3", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["status"], "pass");
}

#[test]
fn berger_validate_reads_matrix_file() {
    let dir = std::env::temp_dir().join(format!("cnalg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("a2.json");
    std::fs::write(&good, r#"{"size": 3, "rows": [[2,-1,-1],[-1,2,-1],[-1,-1,2]]}"#).unwrap();
    assert_eq!(cnalg(&["berger", "validate", "--matrix", good.to_str().unwrap()]).status.code(), Some(0));

    // A3 finite type: det 4, not affine
    let finite = dir.join("a3.json");
    std::fs::write(&finite, r#"{"size": 3, "rows": [[2,-1,0],[-1,2,-1],[0,-1,2]]}"#).unwrap();
    assert_eq!(cnalg(&["berger", "validate", "--matrix", finite.to_str().unwrap()]).status.code(), Some(1));

    let bad = dir.join("bad.json");
    std::fs::write(&bad, r#"{"size": 2, "rows": [[2,-1,-1]]}"#).unwrap();
    assert_eq!(cnalg(&["berger", "validate", "--matrix", bad.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cnalg(&["bogus"]).status.code(), Some(2));
    assert_eq!(cnalg(&["pythagoras", "--rho", "abc"]).status.code(), Some(2));
    assert_eq!(cnalg(&["euler", "--n", "3", "--phi", "0.7,x"]).status.code(), Some(2));
    assert_eq!(cnalg(&["norm", "--n", "99"]).status.code(), Some(2));
    assert_eq!(cnalg(&["dirac", "--n", "5"]).status.code(), Some(2));
}

#[test]
fn module_commands_pass() {
    for args in [
        &["norm", "--n", "3"][..],
        &["norm", "--n", "4", "--eps", "-1"],
        &["factor"],
        &["euler", "--n", "3", "--eps", "+1", "--phi", "0.7,-0.2"],
        &["holocheck", "--n", "3", "--power", "4"],
        &["pythagoras", "--rho", "1", "--grid", "20"],
        &["chartable", "12"],
        &["dirac", "--n", "4"],
    ] {
        let o = cnalg(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}\n{}", stdout(&o));
    }
}

#[test]
fn json_report_round_trips() {
    let o = cnalg(&["euler", "--n", "4", "--eps", "-1", "--phi", "0.3,-0.1,0.2", "--json"]);
    let s = stdout(&o);
    let r = cnalg::report::Report::from_json(&s).unwrap();
    assert_eq!(r.command, "euler");
    assert!(r.checks.iter().all(|c| c.residual.is_some()));
    assert_eq!(format!("{}\n", r.to_json()), s);
}

#[test]
fn suite_json_fails_only_on_known_reds() {
    let o = cnalg(&["suite", "--json", "--parallel"]);
    let r = cnalg::report::Report::from_json(&stdout(&o)).unwrap();
    let failing: Vec<&str> = r.failures().iter().map(|c| c.name.as_str()).collect();
    assert_eq!(failing, KNOWN_RED);
    assert_eq!(o.status.code(), Some(1));
    let mut names: Vec<_> = r.checks.iter().map(|c| c.name.clone()).collect();
    names.sort();
    assert_eq!(names, r.checks.iter().map(|c| c.name.clone()).collect::<Vec<_>>());
}
