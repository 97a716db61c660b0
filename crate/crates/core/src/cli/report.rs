//! Machine-readable reports. Fields are declared in alphabetical order so the serialized
//! key order is canonical, and scalars are stored in their canonical printed form; parsing
//! a report and serializing it again reproduces it byte for byte.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::multilinear::{BasisSpace, Tensor};
use crate::solver::{LinearSolution, SampleOutcome};
use crate::structures::{CheckReport, Verdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualEntry {
    pub index: Vec<String>,
    pub value: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityEntry {
    pub name: String,
    pub residual_count: usize,
    pub residuals: Vec<ResidualEntry>,
    pub verdict: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub arguments: Vec<String>,
    pub assumptions_used: Vec<String>,
    pub identities: Vec<IdentityEntry>,
    pub kind: String,
    pub residual_count: usize,
    pub verdict: String,
}

impl CheckEntry {
    pub fn new(kind: &str, arguments: &[String], r: &CheckReport) -> Self {
        let identities = r
            .identities
            .iter()
            .map(|name| {
                let residuals: Vec<ResidualEntry> = r
                    .residuals_of(name)
                    .map(|x| ResidualEntry {
                        index: x.index.clone(),
                        value: x.value.to_string(),
                    })
                    .collect();
                let verdict = if !residuals.is_empty() {
                    Verdict::Fail
                } else if r.verdict == Verdict::ConditionalPass {
                    Verdict::ConditionalPass
                } else {
                    Verdict::Pass
                };
                IdentityEntry {
                    name: name.clone(),
                    residual_count: residuals.len(),
                    residuals,
                    verdict: verdict.to_string(),
                }
            })
            .collect();
        CheckEntry {
            arguments: arguments.to_vec(),
            assumptions_used: r.assumptions_used.iter().map(|a| a.to_string()).collect(),
            identities,
            kind: kind.to_string(),
            residual_count: r.residuals.len(),
            verdict: r.verdict.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail.as_str()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckFileReport {
    pub assumptions: Vec<String>,
    pub checks: Vec<CheckEntry>,
    pub file: String,
    pub verdict: String,
}

impl CheckFileReport {
    pub fn new(file: &str, assumptions: Vec<String>, checks: Vec<CheckEntry>) -> Self {
        let verdict = if checks.iter().any(|c| !c.passed()) {
            Verdict::Fail
        } else if checks.iter().any(|c| c.verdict == Verdict::ConditionalPass.as_str()) {
            Verdict::ConditionalPass
        } else {
            Verdict::Pass
        };
        CheckFileReport {
            assumptions,
            checks,
            file: file.to_string(),
            verdict: verdict.to_string(),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail.as_str()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}: {}", self.file, self.verdict).ok();
        if !self.assumptions.is_empty() {
            writeln!(out, "assumptions: {}", self.assumptions.join(", ")).ok();
        }
        for c in &self.checks {
            writeln!(out, "check {} {}: {} ({} residuals)", c.kind, c.arguments.join(" "), c.verdict, c.residual_count).ok();
            if !c.assumptions_used.is_empty() {
                writeln!(out, "  under: {}", c.assumptions_used.join(", ")).ok();
            }
            for i in &c.identities {
                writeln!(out, "  {:<28} {:<16} {}", i.name, i.verdict, i.residual_count).ok();
                for r in &i.residuals {
                    writeln!(out, "    ({}) = {}", r.index.join(","), r.value).ok();
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisElement {
    pub entries: Vec<ResidualEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveReport {
    pub assumptions_used: Vec<String>,
    pub basis: Vec<BasisElement>,
    pub dimension: usize,
    pub file: String,
    pub problem: String,
    pub rank: usize,
    pub unknown_dimension: usize,
}

impl SolveReport {
    pub fn new(file: &str, sol: &LinearSolution, space: &BasisSpace) -> Self {
        SolveReport {
            assumptions_used: sol.assumptions_used.iter().map(|a| a.to_string()).collect(),
            basis: sol.basis.iter().map(|t| BasisElement { entries: entries(t, space) }).collect(),
            dimension: sol.dimension(),
            file: file.to_string(),
            problem: sol.problem.to_string(),
            rank: sol.rank,
            unknown_dimension: sol.unknown_dim,
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "{}: {} solution space of dimension {} (unknown dimension {}, rank {})",
            self.file, self.problem, self.dimension, self.unknown_dimension, self.rank
        )
        .ok();
        if !self.assumptions_used.is_empty() {
            writeln!(out, "under: {}", self.assumptions_used.join(", ")).ok();
        }
        for (k, b) in self.basis.iter().enumerate() {
            writeln!(out, "basis {}:", k + 1).ok();
            for e in &b.entries {
                writeln!(out, "  ({}) = {}", e.index.join(","), e.value).ok();
            }
        }
        out
    }
}

fn entries(t: &Tensor, space: &BasisSpace) -> Vec<ResidualEntry> {
    t.nonzero()
        .into_iter()
        .map(|(i, v)| ResidualEntry {
            index: i.iter().map(|&k| space.label(k).to_string()).collect(),
            value: v.to_string(),
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleEntry {
    pub arguments: Vec<String>,
    /// `parameter = value` pairs of the refuting point; empty when confirmed.
    pub assignment: Vec<String>,
    pub kind: String,
    /// "confirmed-zero" (evidence only) or "refuted".
    pub outcome: String,
    pub residual: Option<String>,
    pub trials: usize,
}

impl SampleEntry {
    pub fn new(kind: &str, arguments: &[String], o: &SampleOutcome, trials: usize) -> Self {
        match o {
            SampleOutcome::ConfirmedZero(n) => SampleEntry {
                arguments: arguments.to_vec(),
                assignment: vec![],
                kind: kind.to_string(),
                outcome: "confirmed-zero".into(),
                residual: None,
                trials: *n,
            },
            SampleOutcome::RefutedAt { assignment, residual } => SampleEntry {
                arguments: arguments.to_vec(),
                assignment: assignment.iter().map(|(k, v)| format!("{k} = {v}")).collect(),
                kind: kind.to_string(),
                outcome: "refuted".into(),
                residual: Some(residual.to_string()),
                trials,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleReport {
    pub file: String,
    pub results: Vec<SampleEntry>,
    pub seed: u64,
}

impl SampleReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}: sampling with seed {}", self.file, self.seed).ok();
        for r in &self.results {
            match &r.residual {
                None => writeln!(out, "  {} {}: no nonzero residual in {} samples (evidence, not proof)", r.kind, r.arguments.join(" "), r.trials),
                Some(res) => writeln!(out, "  {} {}: refuted at {}: {res}", r.kind, r.arguments.join(" "), r.assignment.join(", ")),
            }
            .ok();
        }
        out
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::s;
    use crate::structures::Residual;

    fn sample() -> CheckFileReport {
        let r = CheckReport {
            verdict: Verdict::Fail,
            identities: vec!["antisymmetry".into(), "jacobi".into()],
            residuals: vec![Residual {
                identity: "jacobi".into(),
                index: vec!["e".into(), "f".into(), "g".into()],
                value: s("(-1*k1*k5 + k1*k9)/(4*k3)"),
            }],
            assumptions_used: vec![],
        };
        CheckFileReport::new("x.lieb", vec!["k3 != 0".into()], vec![CheckEntry::new("lie-algebra", &["L".into()], &r)])
    }

    #[test]
    fn json_round_trips_byte_for_byte() {
        let text = to_json(&sample());
        let back: CheckFileReport = serde_json::from_str(&text).unwrap();
        assert_eq!(to_json(&back), text);
        assert_eq!(back, sample());
        let top: Vec<&str> = text
            .lines()
            .filter(|l| l.starts_with("  \"") && !l.starts_with("   "))
            .map(|l| l.trim_start().split('"').nth(1).unwrap())
            .collect();
        assert_eq!(top, ["assumptions", "checks", "file", "verdict"]);
    }

    #[test]
    fn per_identity_verdicts() {
        let r = sample();
        assert_eq!(r.verdict, "fail");
        let ids = &r.checks[0].identities;
        assert_eq!((ids[0].verdict.as_str(), ids[1].verdict.as_str()), ("pass", "fail"));
        assert!(r.to_text().contains("(e,f,g) = (-1*k1*k5 + k1*k9)/(4*k3)"));
    }
}
