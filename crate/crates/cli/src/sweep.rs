//! Per-task analysis of representation pencils and the parallel sweep.

use std::sync::atomic::{AtomicUsize, Ordering};

use jk_core::check::{pencil_checks, rep_checks, Check, Status};
use jk_core::oracle::{predict, MatchReport, PredictedJK, Verdict};
use jk_core::pencil::jk_invariants;
use jk_core::rep::{canonical_pair_with_seed, random_pair, rep_pencil, Family, Point, RepSpec};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::{PairSource, SweepConfig};
use crate::CliError;

/// Pairs tried per task before a mismatch is reported.
pub const MAX_ATTEMPTS: u64 = 5;

/// Where the pair `(x, a)` of a task comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    Canonical,
    Random { seed: u64, bound: u64 },
    Explicit { x: Point, a: Point },
}

impl Source {
    /// The pair for retry number `attempt`, labelled for reports.
    fn pair(&self, spec: &RepSpec, attempt: u64) -> Result<(String, Point, Point), CliError> {
        let (label, (x, a)) = match self {
            Source::Canonical if attempt == 0 => ("canonical".to_string(), canonical_pair_with_seed(spec, 0)?),
            Source::Canonical => (format!("canonical:{attempt}"), canonical_pair_with_seed(spec, attempt)?),
            Source::Random { seed, bound } if attempt == 0 => {
                (format!("random:{seed}"), random_pair(spec, *seed, *bound))
            }
            Source::Random { seed, bound } => {
                // Retries live far from the configured seeds so tasks stay independent.
                let s = seed.wrapping_add(attempt << 32);
                (format!("random:{seed}#{attempt}"), random_pair(spec, s, *bound))
            }
            Source::Explicit { x, a } => ("explicit".to_string(), (x.clone(), a.clone())),
        };
        Ok((label, x, a))
    }

    /// Canonical pairs are deterministic except for the seeded part of `b(n)`;
    /// explicit pairs are taken as given.
    fn attempts(&self, spec: &RepSpec) -> u64 {
        match self {
            Source::Canonical if spec.family == Family::BSum => MAX_ATTEMPTS,
            Source::Canonical | Source::Explicit { .. } => 1,
            Source::Random { .. } => MAX_ATTEMPTS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Task {
    pub spec: RepSpec,
    pub source: Source,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Attempt {
    pub pair_source: String,
    pub verdict: Verdict,
    pub discrepancies: Vec<String>,
}

/// Everything learned about one task: the final comparison, every attempt,
/// the law checks on the final pair and interpretation notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TaskReport {
    #[serde(flatten)]
    pub report: MatchReport,
    pub attempts: Vec<Attempt>,
    pub checks: Vec<Check>,
    pub anomaly: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TaskReport {
    pub fn failed(&self) -> bool {
        !self.report.is_match() || self.anomaly
    }

    pub fn oracle_status(&self) -> Option<&Status> {
        self.checks.iter().find(|c| c.name == "minor_oracle").map(|c| &c.status)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub matched: usize,
    pub mismatched: usize,
    pub anomalies: usize,
    /// Tasks whose final pair passed the minor-gcd oracle.
    pub oracle_checked: usize,
    /// Tasks whose final pair exceeded the minor-oracle cap.
    pub oracle_skipped: usize,
}

impl Summary {
    pub fn of(reports: &[TaskReport]) -> Self {
        let mut s = Summary { total: reports.len(), ..Summary::default() };
        for r in reports {
            if r.report.is_match() {
                s.matched += 1;
            } else {
                s.mismatched += 1;
            }
            if r.anomaly {
                s.anomalies += 1;
            }
            match r.oracle_status() {
                Some(Status::Pass) => s.oracle_checked += 1,
                Some(Status::Skipped(_)) => s.oracle_skipped += 1,
                _ => {}
            }
        }
        s
    }

    pub fn success(&self) -> bool {
        self.mismatched == 0 && self.anomalies == 0
    }
}

const BOREL_NOTE: &str = "b(n) Jordan blocks of size 1 are an interpretation of the closed form";

/// Runs one task: analyzes pairs until the invariants match the prediction
/// or the attempts run out, then checks the structural laws on the last pair.
/// A failed law or a mismatch after all attempts marks the task anomalous.
pub fn run_task(task: &Task, minor_cap: u128) -> Result<TaskReport, CliError> {
    let spec = &task.spec;
    let predicted: PredictedJK = predict(spec)?;
    let mut attempts = Vec::new();
    let total = task.source.attempts(spec);
    let mut last = None;
    for i in 0..total {
        let (label, x, a) = task.source.pair(spec, i)?;
        let pencil = rep_pencil(spec, &x, &a)?;
        let computed = jk_invariants(&pencil)?;
        let report = MatchReport::new(*spec, label.clone(), computed, predicted.clone());
        attempts.push(Attempt {
            pair_source: label,
            verdict: report.verdict,
            discrepancies: report.discrepancies.clone(),
        });
        let done = report.is_match();
        last = Some((report, pencil, x, a));
        if done {
            break;
        }
    }
    let (report, pencil, x, a) = last.expect("at least one attempt");
    let mut checks = pencil_checks(&pencil, &report.computed, minor_cap);
    checks.extend(rep_checks(spec, &x, &a, &report.computed)?);
    let exhausted = !report.is_match() && total > 1;
    let anomaly = exhausted || checks.iter().any(Check::failed);
    let mut notes = Vec::new();
    if spec.family == Family::BSum {
        notes.push(BOREL_NOTE.to_string());
    }
    if exhausted {
        notes.push(format!("no matching pair in {total} attempts"));
    }
    Ok(TaskReport { report, attempts, checks, anomaly, notes })
}

/// Tasks of a configuration in key order: spec first, then pair seed.
pub fn expand(cfg: &SweepConfig) -> Result<Vec<Task>, CliError> {
    let specs = cfg.specs()?;
    let mut tasks = Vec::new();
    for spec in specs {
        match &cfg.pair_source {
            PairSource::Canonical => tasks.push(Task { spec, source: Source::Canonical }),
            PairSource::Random { seeds, bound } => {
                let mut seeds = seeds.clone();
                seeds.sort_unstable();
                seeds.dedup();
                for seed in seeds {
                    tasks.push(Task { spec, source: Source::Random { seed, bound: *bound } });
                }
            }
        }
    }
    Ok(tasks)
}

/// Runs every task of `cfg` on `jobs` threads (0 = all processors). Reports
/// come back in task order. With `fail_fast` the list ends at the first
/// failing task in that order, whatever the scheduling.
pub fn run_sweep(cfg: &SweepConfig, jobs: usize, minor_cap: u128) -> Result<Vec<TaskReport>, CliError> {
    let tasks = expand(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Internal(format!("thread pool: {e}")))?;
    let first_fail = AtomicUsize::new(usize::MAX);
    let results: Vec<Option<Result<TaskReport, CliError>>> = pool.install(|| {
        tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| {
                if cfg.fail_fast && first_fail.load(Ordering::Relaxed) < i {
                    return None;
                }
                log::debug!("task {i}: {} {:?}", t.spec, t.source);
                let r = run_task(t, minor_cap);
                if cfg.fail_fast && r.as_ref().map_or(true, TaskReport::failed) {
                    first_fail.fetch_min(i, Ordering::Relaxed);
                }
                Some(r)
            })
            .collect()
    });
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        let Some(r) = r else { break };
        let r = r?;
        let stop = cfg.fail_fast && r.failed();
        out.push(r);
        if stop {
            break;
        }
    }
    Ok(out)
}

/// Fixed-width text rendering of a sweep.
pub fn table(reports: &[TaskReport]) -> String {
    let mut s = format!("{:<28} {:<12} {:<9} {:<8} {}\n", "spec", "pair", "verdict", "anomaly", "detail");
    for r in reports {
        let verdict = if r.report.is_match() { "MATCH" } else { "MISMATCH" };
        let mut detail: Vec<String> = r.report.discrepancies.clone();
        detail.extend(r.checks.iter().filter(|c| c.failed()).map(|c| format!("{} failed", c.name)));
        s.push_str(&format!(
            "{:<28} {:<12} {:<9} {:<8} {}\n",
            r.report.spec.to_string(),
            r.report.pair_source,
            verdict,
            if r.anomaly { "yes" } else { "no" },
            detail.join("; ")
        ));
    }
    s
}
