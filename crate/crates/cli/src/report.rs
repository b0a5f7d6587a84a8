//! The invariant report emitted by `compute`.

use std::collections::BTreeMap;
use std::time::Instant;

use serde::Serialize;

use matchforce_core::families::write_graph6;
use matchforce_core::forcing::MinimumSet;
use matchforce_core::graph::{Edge, Graph, ResourceBudget};
use matchforce_core::matching::Matching;
use matchforce_core::{Error, Result};

use crate::analysis::{Analysis, GraphCase};
use crate::checks::{lookup, Outcome};
use crate::SCHEMA;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassGReport {
    pub member: bool,
    /// Vertex sequences of the two odd cycles, for non-members.
    pub witness: Option<[Vec<usize>; 2]>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FpmWitnessReport {
    pub cycles: Vec<Vec<usize>>,
    pub matching: Vec<Edge>,
    /// Edge values in edge order, as `p/q` strings.
    pub vector: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FpmReport {
    pub equal: bool,
    pub witness: Option<FpmWitnessReport>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Extremum {
    pub value: usize,
    /// First perfect matching attaining the value.
    pub matching: Vec<Edge>,
    pub witness: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SetReport {
    pub value: usize,
    pub witness: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MatchingRow {
    pub matching: Vec<Edge>,
    pub f: usize,
    pub f_witness: Vec<Edge>,
    pub af: usize,
    pub af_witness: Vec<Edge>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvariantReport {
    pub schema: &'static str,
    pub source: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labeling: Option<&'static str>,
    pub graph6: String,
    pub n: usize,
    pub e: usize,
    /// Cyclomatic number `e - n + components`.
    pub c: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub delta_min: usize,
    pub delta_max: usize,
    pub matching_covered: bool,
    #[serde(rename = "in_class_G")]
    pub in_class_g: ClassGReport,
    /// `null` when the graph is too large for the odd-shore scan.
    pub brick: Option<bool>,
    /// `null` for graphs that are not matching covered or too large.
    pub solid: Option<bool>,
    pub fpm_equals_pm: Option<FpmReport>,
    pub phi: usize,
    pub f: Extremum,
    #[serde(rename = "F")]
    pub f_max: Extremum,
    pub af: Extremum,
    #[serde(rename = "Af")]
    pub af_max: Extremum,
    pub gf: SetReport,
    pub per_matching: Vec<MatchingRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub runtime_ms: Option<BTreeMap<&'static str, f64>>,
}

/// Errors that only mean "too large to decide" become `None`.
fn optional<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::SizeLimit { .. }) | Err(Error::NotMatchingCovered) => Ok(None),
        Err(e) => Err(e),
    }
}

fn pairs(g: &Graph, set: &MinimumSet) -> Vec<Edge> {
    set.pairs(g)
}

fn extremum(g: &Graph, value: usize, m: &Matching, witness: &MinimumSet) -> Extremum {
    Extremum {
        value,
        matching: m.pairs(g),
        witness: pairs(g, witness),
    }
}

struct Clock {
    enabled: bool,
    times: BTreeMap<&'static str, f64>,
}

impl Clock {
    fn time<T>(&mut self, field: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if self.enabled {
            let ms = start.elapsed().as_secs_f64() * 1000.0;
            self.times.insert(field, (ms * 1000.0).round() / 1000.0);
        }
        out
    }
}

/// Build the report. The T01 to T05 relations are re-checked before the
/// report is returned; a violation comes back as [`ReportError::SelfAudit`].
pub fn build_report(
    case: &GraphCase,
    source: String,
    budget: ResourceBudget,
    timings: bool,
) -> std::result::Result<InvariantReport, ReportError> {
    let a = Analysis::new(case, budget);
    let g = a.graph();
    if !a.has_pm() {
        return Err(ReportError::Core(Error::NoPerfectMatching));
    }
    let mut clock = Clock {
        enabled: timings,
        times: BTreeMap::new(),
    };
    clock.time("enumeration", || a.structure().map(|_| ()))?;
    let s = clock.time("forcing", || a.summary())?;
    let class_g = clock.time("in_class_g", || a.class_g())?;
    let fpm = clock.time("fpm_equals_pm", || optional(a.fpm()))?;
    let matching_covered = clock.time("matching_covered", || a.matching_covered());
    let brick = clock.time("brick", || optional(a.brick()))?;
    let solid = clock.time("solid", || optional(a.solid()))?;

    for id in ["T01", "T02", "T03", "T04", "T05"] {
        let check = lookup(id).expect("registered");
        if let Outcome::Fail(conflict) = check.evaluate(&a)? {
            return Err(ReportError::SelfAudit(format!(
                "{id} violated on {}: {} = {} vs {} = {}",
                write_graph6(g),
                conflict.left.label,
                conflict.left.value,
                conflict.right.label,
                conflict.right.value
            )));
        }
    }

    let basic = a.basic();
    let f_min = s.f_min_witness();
    let f_max = s.f_max_witness();
    let af_min = s.af_min_witness();
    let af_max = s.af_max_witness();
    Ok(InvariantReport {
        schema: SCHEMA,
        source,
        labeling: case.family.as_ref().map(|f| f.labeling()),
        graph6: write_graph6(g),
        n: basic.n,
        e: basic.e,
        c: basic.cyclomatic,
        connected: basic.connected,
        bipartite: basic.bipartite,
        delta_min: basic.delta_min,
        delta_max: basic.delta_max,
        matching_covered,
        in_class_g: ClassGReport {
            member: class_g.member,
            witness: class_g
                .witness
                .as_ref()
                .map(|(c, d)| [c.vertices().to_vec(), d.vertices().to_vec()]),
        },
        brick,
        solid,
        fpm_equals_pm: fpm.map(|v| FpmReport {
            equal: v.equal,
            witness: v.witness.as_ref().map(|w| FpmWitnessReport {
                cycles: w.cycles.iter().map(|c| c.vertices().to_vec()).collect(),
                matching: w.matching.clone(),
                vector: w.vector.values().iter().map(|x| x.to_string()).collect(),
            }),
        }),
        phi: a.structure()?.phi(),
        f: extremum(g, s.f_min, &f_min.matching, &f_min.forcing),
        f_max: extremum(g, s.f_max, &f_max.matching, &f_max.forcing),
        af: extremum(g, s.af_min, &af_min.matching, &af_min.anti_forcing),
        af_max: extremum(g, s.af_max, &af_max.matching, &af_max.anti_forcing),
        gf: SetReport {
            value: s.gf.size,
            witness: pairs(g, &s.gf),
        },
        per_matching: s
            .per_matching
            .iter()
            .map(|r| MatchingRow {
                matching: r.matching.pairs(g),
                f: r.forcing.size,
                f_witness: pairs(g, &r.forcing),
                af: r.anti_forcing.size,
                af_witness: pairs(g, &r.anti_forcing),
            })
            .collect(),
        runtime_ms: timings.then_some(clock.times),
    })
}

#[derive(Debug, Clone, PartialEq)]
pub enum ReportError {
    Core(Error),
    /// A computed value contradicts a proven relation; always a bug.
    SelfAudit(String),
}

impl From<Error> for ReportError {
    fn from(e: Error) -> Self {
        ReportError::Core(e)
    }
}
