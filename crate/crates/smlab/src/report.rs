//! JSON and text renderings of a suite run.

use serde::Serialize;
use smlab_core::{CheckReport, Status};

/// One check as written to JSON; keys and order are fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub theorem: String,
    pub instances_scanned: u64,
    pub hypothesis_satisfied: u64,
    pub vacuous: u64,
    pub status: &'static str,
    pub witness: Option<WitnessJson>,
    pub wall_time_ms: Option<u64>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub detail: String,
    pub spec: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Checks whose hypotheses held on no instance of the catalog.
    pub vacuous_ids: Vec<String>,
    pub failed_ids: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteJson {
    pub caps: String,
    pub seed: u64,
    pub mutation: Option<String>,
    pub reports: Vec<ReportJson>,
    pub summary: Summary,
}

/// A finished check with its optional timing.
pub struct Timed {
    pub report: CheckReport,
    pub wall_time_ms: Option<u64>,
}

impl ReportJson {
    pub fn from_report(t: &Timed) -> ReportJson {
        let r = &t.report;
        let witness = match &r.status {
            Status::Fail(w) => Some(WitnessJson { detail: w.detail.clone(), spec: w.spec.clone() }),
            Status::Skipped(reason) => Some(WitnessJson { detail: reason.clone(), spec: String::new() }),
            Status::Pass => r.example.as_ref().map(|w| WitnessJson { detail: w.detail.clone(), spec: w.spec.clone() }),
        };
        ReportJson {
            theorem: r.theorem.to_string(),
            instances_scanned: r.instances_scanned,
            hypothesis_satisfied: r.hypothesis_satisfied,
            vacuous: r.vacuous,
            status: r.status.word(),
            witness,
            wall_time_ms: t.wall_time_ms,
            seed: r.seed,
        }
    }
}

pub fn summarize(runs: &[Timed]) -> Summary {
    let ids = |pred: &dyn Fn(&CheckReport) -> bool| {
        runs.iter().map(|t| &t.report).filter(|r| pred(r)).map(|r| r.theorem.to_string()).collect::<Vec<_>>()
    };
    Summary {
        total: runs.len(),
        passed: runs.iter().filter(|t| t.report.passed()).count(),
        failed: runs.iter().filter(|t| t.report.failed()).count(),
        skipped: runs.iter().filter(|t| matches!(t.report.status, Status::Skipped(_))).count(),
        vacuous_ids: ids(&|r| r.hypothesis_satisfied == 0),
        failed_ids: ids(&|r| r.failed()),
    }
}

pub fn suite_json(caps: &str, seed: u64, mutation: Option<&str>, runs: &[Timed]) -> SuiteJson {
    SuiteJson {
        caps: caps.to_string(),
        seed,
        mutation: mutation.map(str::to_string),
        reports: runs.iter().map(ReportJson::from_report).collect(),
        summary: summarize(runs),
    }
}

pub fn to_json(s: &SuiteJson) -> String {
    let mut out = serde_json::to_string_pretty(s).expect("report types serialize");
    out.push('\n');
    out
}

pub fn to_text(s: &SuiteJson) -> String {
    let mut out = format!("caps {} seed {}", s.caps, s.seed);
    if let Some(m) = &s.mutation {
        out.push_str(&format!(" mutation {m}"));
    }
    out.push('\n');
    for r in &s.reports {
        out.push_str(&format!(
            "{:<24} {:<7} scanned {:>7}  satisfied {:>7}  vacuous {:>7}",
            r.theorem, r.status, r.instances_scanned, r.hypothesis_satisfied, r.vacuous
        ));
        if let Some(ms) = r.wall_time_ms {
            out.push_str(&format!("  {ms} ms"));
        }
        out.push('\n');
        if r.status != "pass" {
            if let Some(w) = &r.witness {
                out.push_str(&format!("    {}\n", w.detail));
                for line in w.spec.lines().filter(|l| !l.starts_with('#')) {
                    out.push_str(&format!("    | {line}\n"));
                }
            }
        }
    }
    let sm = &s.summary;
    out.push_str(&format!("{} checks: {} pass, {} fail, {} skipped\n", sm.total, sm.passed, sm.failed, sm.skipped));
    if !sm.vacuous_ids.is_empty() {
        out.push_str(&format!("vacuous on the whole catalog: {}\n", sm.vacuous_ids.join(", ")));
    }
    if !sm.failed_ids.is_empty() {
        out.push_str(&format!("failed: {}\n", sm.failed_ids.join(", ")));
    }
    out
}
