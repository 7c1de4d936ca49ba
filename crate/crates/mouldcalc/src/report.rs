//! Suite reports: text and JSON rendering.

use std::fmt::{self, Write};
use std::time::Duration;

use serde_json::{json, Value};

/// Enumeration bounds shared by all suites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub letters: Vec<u32>,
    pub max_len: usize,
    pub max_weight: u32,
    pub growth_weight: u32,
    pub max_vertices: usize,
    pub decorations: Vec<u32>,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            letters: vec![1, 2, 3],
            max_len: 4,
            max_weight: 6,
            growth_weight: 8,
            max_vertices: 4,
            decorations: vec![1, 2],
            seed: 0,
        }
    }
}

fn list(v: &[u32]) -> String {
    v.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "letters={} max-len={} max-weight={} growth-weight={} max-vertices={} decorations={} seed={}",
            list(&self.letters),
            self.max_len,
            self.max_weight,
            self.growth_weight,
            self.max_vertices,
            list(&self.decorations),
            self.seed
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    /// A documented non-identity; the counterexample was found as expected.
    ExpectedFail(Counterexample),
    Fail(Counterexample),
}

impl Outcome {
    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "PASS",
            Outcome::ExpectedFail(_) => "EXPECTED-FAIL",
            Outcome::Fail(_) => "FAIL",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub cases: usize,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: String,
    pub bounds: Bounds,
    pub checks: Vec<CheckResult>,
    /// Wall-clock time; kept out of the rendered report so reruns compare equal.
    pub elapsed: Duration,
}

impl SuiteReport {
    pub fn failures(&self) -> usize {
        self.checks
            .iter()
            .filter(|c| matches!(c.outcome, Outcome::Fail(_)))
            .count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    fn counts(&self) -> (usize, usize, usize) {
        let mut out = (0, 0, 0);
        for c in &self.checks {
            match c.outcome {
                Outcome::Pass => out.0 += 1,
                Outcome::ExpectedFail(_) => out.1 += 1,
                Outcome::Fail(_) => out.2 += 1,
            }
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "suite {}", self.suite);
        let _ = writeln!(s, "bounds {}", self.bounds);
        for c in &self.checks {
            let _ = writeln!(s, "  {:<13} {} ({} cases)", c.outcome.label(), c.name, c.cases);
            if let Outcome::ExpectedFail(x) | Outcome::Fail(x) = &c.outcome {
                let _ = writeln!(s, "                counterexample: {}", x.input);
                let _ = writeln!(s, "                lhs: {}", x.lhs);
                let _ = writeln!(s, "                rhs: {}", x.rhs);
            }
        }
        let (p, e, f) = self.counts();
        let _ = writeln!(
            s,
            "result {}: {} pass, {} expected-fail, {} fail",
            if f == 0 { "PASS" } else { "FAIL" },
            p,
            e,
            f
        );
        s
    }

    pub fn to_json(&self) -> Value {
        let checks: Vec<Value> = self
            .checks
            .iter()
            .map(|c| {
                let mut v = json!({
                    "name": c.name,
                    "cases": c.cases,
                    "outcome": c.outcome.label(),
                });
                if let Outcome::ExpectedFail(x) | Outcome::Fail(x) = &c.outcome {
                    v["counterexample"] = json!({"input": x.input, "lhs": x.lhs, "rhs": x.rhs});
                }
                v
            })
            .collect();
        let b = &self.bounds;
        let (p, e, f) = self.counts();
        json!({
            "suite": self.suite,
            "bounds": {
                "letters": b.letters,
                "max_len": b.max_len,
                "max_weight": b.max_weight,
                "growth_weight": b.growth_weight,
                "max_vertices": b.max_vertices,
                "decorations": b.decorations,
                "seed": b.seed,
            },
            "checks": checks,
            "summary": {"pass": p, "expected_fail": e, "fail": f},
        })
    }
}
