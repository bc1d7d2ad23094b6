//! One pass/fail line per acceptance criterion.
//!
//! Two graded checks disagree with printed values and are left failing rather than
//! adjusted; they are listed in KNOWN_RED. Any other failure fails this test.

use std::process::ExitCode;

use cnalg::report::{Report, Status};
use cnalg::suite::{run_suite, summarize, DEFAULT_SEED};

const KNOWN_RED: [&str; 2] = [
    "c04 ternary eta table against listed values",
    "c08 (0,1,2,3,6)[12] det",
];

fn acceptance() -> Result<(), String> {
    let report = run_suite(DEFAULT_SEED, true);
    for s in summarize(&report) {
        let line = if s.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} [{line}] {} ({} graded checks)", s.id, s.title, s.graded);
        for f in &s.failing {
            let c = report.checks.iter().find(|c| &c.name == f).unwrap();
            println!("    failing: {f}\n      expected: {}\n      actual:   {}", c.expected, c.actual);
        }
    }
    println!("suite wall time: {} ms", report.wall_time_ms);

    let unexpected: Vec<_> = report
        .failures()
        .into_iter()
        .filter(|c| !KNOWN_RED.contains(&c.name.as_str()))
        .map(|c| c.name.clone())
        .collect();
    if !unexpected.is_empty() {
        return Err(format!("unexpected failures: {unexpected:?}"));
    }
    if (report.status == Status::Pass) != report.failures().is_empty() {
        return Err("status disagrees with failures".into());
    }
    Ok(())
}

fn suite_is_deterministic_and_round_trips() -> Result<(), String> {
    let a = run_suite(7, false);
    let b = run_suite(7, true);
    if a.checks != b.checks {
        return Err("sequential and parallel runs differ".into());
    }
    let s = a.to_json();
    if Report::from_json(&s).map_err(|e| e.to_string())?.to_json() != s {
        return Err("JSON round trip is not byte-identical".into());
    }
    Ok(())
}

fn main() -> ExitCode {
    let tests: [(&str, fn() -> Result<(), String>); 2] = [
        ("acceptance", acceptance),
        ("suite_is_deterministic_and_round_trips", suite_is_deterministic_and_round_trips),
    ];
    let mut failed = 0;
    for (name, t) in tests {
        match t() {
            Ok(()) => println!("test {name} ... ok"),
            Err(e) => {
                failed += 1;
                println!("test {name} ... FAILED: {e}");
            }
        }
    }
    println!("acceptance: {} passed; {failed} failed", tests.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
