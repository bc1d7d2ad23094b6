//! Uniform check records shared by the CLI and the acceptance battery.

use std::time::Instant;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Informational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub expected: String,
    pub actual: String,
    /// Present for every numeric check.
    pub residual: Option<f64>,
    pub provenance: String,
    pub passed: bool,
    pub informational: bool,
}

impl Check {
    pub fn exact(name: impl Into<String>, expected: impl Into<String>, actual: impl Into<String>, passed: bool, provenance: &str) -> Self {
        Check {
            name: name.into(),
            expected: expected.into(),
            actual: actual.into(),
            residual: None,
            provenance: provenance.to_string(),
            passed,
            informational: false,
        }
    }

    /// Passes when |residual| ≤ tol.
    pub fn numeric(name: impl Into<String>, residual: f64, tol: f64, provenance: &str) -> Self {
        Check {
            name: name.into(),
            expected: format!("|residual| <= {}", fmt_num(tol)),
            actual: fmt_num(residual),
            residual: Some(residual),
            provenance: provenance.to_string(),
            passed: residual.abs() <= tol,
            informational: false,
        }
    }

    pub fn info(mut self) -> Self {
        self.informational = true;
        self
    }

    pub fn outcome(&self) -> &'static str {
        match (self.informational, self.passed) {
            (true, _) => "INFO",
            (false, true) => "PASS",
            (false, false) => "FAIL",
        }
    }
}

/// 15 significant digits.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10();
    if (-4.0..15.0).contains(&mag) {
        let decimals = (14 - mag.floor() as i32).max(0) as usize;
        let s = format!("{x:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s
        }
    } else {
        format!("{x:.14e}")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub checks: Vec<Check>,
    pub wall_time_ms: u64,
}

impl Report {
    pub fn new(command: impl Into<String>, checks: Vec<Check>, started: Instant) -> Self {
        let mut r = Report {
            command: command.into(),
            status: Status::Pass,
            checks,
            wall_time_ms: started.elapsed().as_millis() as u64,
        };
        r.status = r.compute_status();
        r
    }

    fn compute_status(&self) -> Status {
        let graded: Vec<_> = self.checks.iter().filter(|c| !c.informational).collect();
        if graded.is_empty() {
            Status::Informational
        } else if graded.iter().all(|c| c.passed) {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.informational && !c.passed).collect()
    }

    /// 0 pass or informational, 1 check failure.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.status == Status::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(s)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out.push_str(&format!("{:<4}  {}\n", c.outcome(), c.name));
            if !c.passed || c.informational {
                out.push_str(&format!("      expected: {}\n      actual:   {}\n", c.expected, c.actual));
            }
        }
        let status = match self.status {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Informational => "informational",
        };
        out.push_str(&format!("{}: {} ({} checks, {} ms)\n", self.command, status, self.checks.len(), self.wall_time_ms));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_ignores_informational() {
        let t = Instant::now();
        let ok = Check::numeric("a", 1e-13, 1e-12, "identity");
        let bad = Check::numeric("b", 1.0, 1e-12, "identity").info();
        let r = Report::new("x", vec![ok.clone(), bad.clone()], t);
        assert_eq!(r.status, Status::Pass);
        assert_eq!(Report::new("x", vec![bad.clone()], t).status, Status::Informational);
        let fail = Check::exact("c", "1", "2", false, "oracle");
        assert_eq!(Report::new("x", vec![ok, fail], t).exit_code(), 1);
    }

    #[test]
    fn json_round_trip_is_byte_identical() {
        let r = Report::new(
            "suite",
            vec![
                Check::numeric("n", 0.1 + 0.2 - 0.3, 1e-9, "identity"),
                Check::exact("e", "j", "j^2", false, "printed").info(),
            ],
            Instant::now(),
        );
        let s = r.to_json();
        let back = Report::from_json(&s).unwrap();
        assert_eq!(back, r);
        assert_eq!(back.to_json(), s);
    }

    #[test]
    fn fifteen_digits() {
        assert_eq!(fmt_num(1.0 / 3.0), "0.333333333333333");
        assert_eq!(fmt_num(2.0), "2");
        assert_eq!(fmt_num(1.5e-20), "1.50000000000000e-20");
        assert_eq!(fmt_num(123456.789), "123456.789");
    }
}
