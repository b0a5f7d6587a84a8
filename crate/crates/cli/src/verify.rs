//! Run registry checks over a corpus and merge the results in input order.

use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use matchforce_core::families::write_graph6;
use matchforce_core::graph::ResourceBudget;
use matchforce_core::{Error, Result};

use crate::analysis::{Analysis, GraphCase};
use crate::checks::{conflict_json, CheckDef, Outcome};
use crate::sources::Source;
use crate::SCHEMA;

/// Graphs analysed per parallel batch; bounds memory on large corpora.
const BATCH: usize = 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: &'static str,
    pub statement: &'static str,
    pub corpus: String,
    pub status: Status,
    pub checked: usize,
    pub not_applicable: usize,
    pub budget_skipped: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub schema: &'static str,
    pub corpus: String,
    pub graphs: usize,
    pub checks: Vec<TheoremCheck>,
}

impl VerifyReport {
    pub fn any_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }
}

#[derive(Default)]
struct Tally {
    checked: usize,
    not_applicable: usize,
    budget_skipped: usize,
    failures: usize,
    counterexample: Option<Value>,
    first_budget_error: Option<Error>,
    notes: Vec<String>,
}

impl Tally {
    fn add(&mut self, case: &GraphCase, outcome: Result<Outcome>) {
        match outcome {
            Ok(Outcome::Pass { note }) => {
                self.checked += 1;
                self.notes.extend(note);
            }
            Ok(Outcome::NotApplicable { note }) => {
                self.not_applicable += 1;
                self.notes.extend(note);
            }
            Ok(Outcome::Fail(conflict)) => {
                self.checked += 1;
                self.failures += 1;
                if self.counterexample.is_none() {
                    self.counterexample =
                        Some(conflict_json(&write_graph6(&case.graph), &conflict));
                }
            }
            Err(e) => {
                self.budget_skipped += 1;
                self.first_budget_error.get_or_insert(e);
            }
        }
    }

    fn finish(self, def: &'static CheckDef, corpus: &str) -> TheoremCheck {
        let status = if self.failures > 0 {
            Status::Fail
        } else if self.checked > 0 {
            Status::Pass
        } else {
            Status::Skipped
        };
        let reason = (status == Status::Skipped).then(|| match &self.first_budget_error {
            Some(e) => format!("no graph could be evaluated: {e}"),
            None => format!("no graph in the corpus is in scope: {}", def.scope),
        });
        TheoremCheck {
            id: def.id,
            statement: def.statement,
            corpus: corpus.to_string(),
            status,
            checked: self.checked,
            not_applicable: self.not_applicable,
            budget_skipped: self.budget_skipped,
            failures: self.failures,
            counterexample: self.counterexample,
            reason,
            detail: def.describe(&self.notes),
        }
    }
}

/// Evaluate `checks` on every graph of `sources`, using `jobs` worker
/// threads (0 for the default). Output does not depend on `jobs`.
pub fn verify(
    sources: &[Source],
    checks: &[&'static CheckDef],
    budget: ResourceBudget,
    jobs: usize,
) -> Result<VerifyReport> {
    for s in sources {
        s.validate()?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParams(format!("thread pool: {e}")))?;
    let corpus = sources
        .iter()
        .map(Source::descriptor)
        .collect::<Vec<_>>()
        .join("+");
    let mut tallies: Vec<Tally> = checks.iter().map(|_| Tally::default()).collect();
    let mut graphs = 0;
    let mut batch: Vec<GraphCase> = Vec::with_capacity(BATCH);
    let flush = |batch: &mut Vec<GraphCase>, tallies: &mut Vec<Tally>| {
        let results: Vec<Vec<Result<Outcome>>> = pool.install(|| {
            batch
                .par_iter()
                .map(|case| {
                    let a = Analysis::new(case, budget);
                    checks.iter().map(|c| c.evaluate(&a)).collect()
                })
                .collect()
        });
        for (case, row) in batch.iter().zip(results) {
            for (tally, outcome) in tallies.iter_mut().zip(row) {
                tally.add(case, outcome);
            }
        }
        batch.clear();
    };
    for source in sources {
        for case in source.cases()? {
            graphs += 1;
            batch.push(case);
            if batch.len() == BATCH {
                flush(&mut batch, &mut tallies);
            }
        }
    }
    flush(&mut batch, &mut tallies);
    Ok(VerifyReport {
        schema: SCHEMA,
        corpus: corpus.clone(),
        graphs,
        checks: checks
            .iter()
            .zip(tallies)
            .map(|(def, t)| t.finish(def, &corpus))
            .collect(),
    })
}
