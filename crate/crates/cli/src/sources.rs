//! Graph sources for the verification harness.

use std::path::PathBuf;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use matchforce_core::families::{
    enumerate_corpus, generate, parse_graph6, CorpusFilter, FamilySpec, MAX_DEDUP_ORDER,
};
use matchforce_core::graph::Graph;
use matchforce_core::matching::has_perfect_matching;
use matchforce_core::{Error, Result};

use crate::analysis::GraphCase;

/// Largest order for the labeled `--all` corpus.
pub const MAX_ALL_LABELED: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// Every graph with a perfect matching on at most `n` vertices.
    All {
        n: usize,
        dedup: bool,
    },
    Family(FamilySpec),
    Graph6File(PathBuf),
    /// Connected graphs with a perfect matching drawn from `G(order, 1/2)`
    /// by rejection.
    Random {
        count: usize,
        order: usize,
        seed: u64,
    },
}

impl Source {
    pub fn descriptor(&self) -> String {
        match self {
            Source::All { n, dedup: false } => format!("all:{n}"),
            Source::All { n, dedup: true } => format!("all:{n}:dedup"),
            Source::Family(spec) => format!("family:{spec}"),
            Source::Graph6File(path) => format!("graph6-file:{}", path.display()),
            Source::Random { count, order, seed } => {
                format!("random:{count}x{order}:seed={seed}")
            }
        }
    }

    /// Reject parameters outside the supported range before any work.
    pub fn validate(&self) -> Result<()> {
        match *self {
            Source::All { n, dedup } => {
                let max = if dedup {
                    MAX_DEDUP_ORDER
                } else {
                    MAX_ALL_LABELED
                };
                if n > max {
                    return Err(Error::SizeLimit {
                        what: "--all corpus",
                        n,
                        max,
                    });
                }
            }
            Source::Random { order, .. }
                if (order % 2 == 1
                    || !(2..=matchforce_core::graph::MAX_VERTICES).contains(&order)) =>
            {
                return Err(Error::InvalidParams(format!(
                    "random order must be even and between 2 and {}",
                    matchforce_core::graph::MAX_VERTICES
                )));
            }
            _ => {}
        }
        Ok(())
    }

    pub fn cases(&self) -> Result<Box<dyn Iterator<Item = GraphCase>>> {
        self.validate()?;
        Ok(match self {
            Source::All { n, dedup } => {
                let filter = CorpusFilter {
                    require_pm: true,
                    require_connected: false,
                    dedup_iso: *dedup,
                };
                Box::new(enumerate_corpus(*n, filter)?.map(GraphCase::plain))
            }
            Source::Family(spec) => Box::new(std::iter::once(GraphCase {
                graph: generate(spec)?,
                family: Some(spec.clone()),
            })),
            Source::Graph6File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Malformed {
                    offset: 0,
                    message: format!("{}: {e}", path.display()),
                })?;
                let graphs = read_graph6_lines(&text)?;
                Box::new(graphs.into_iter().map(GraphCase::plain))
            }
            Source::Random { count, order, seed } => {
                Box::new(random_pm_graphs(*count, *order, *seed).map(GraphCase::plain))
            }
        })
    }
}

/// One graph per non-blank line; errors report offsets within the file.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for line in text.split_inclusive('\n') {
        let body = line.trim_end_matches(['\n', '\r']);
        if !body.trim().is_empty() {
            let g = parse_graph6(body).map_err(|e| match e {
                Error::Malformed {
                    offset: at,
                    message,
                } => Error::Malformed {
                    offset: offset + at,
                    message,
                },
                other => other,
            })?;
            out.push(g);
        }
        offset += line.len();
    }
    Ok(out)
}

/// Connected graphs with a perfect matching from `G(order, 1/2)`, rejecting
/// draws that fail either condition.
pub fn random_pm_graphs(count: usize, order: usize, seed: u64) -> impl Iterator<Item = Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::iter::from_fn(move || loop {
        let mut edges = Vec::new();
        for a in 0..order {
            for b in a + 1..order {
                if rng.gen_bool(0.5) {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::new(order, edges).expect("valid pairs");
        if g.is_connected() && has_perfect_matching(&g) {
            return Some(g);
        }
    })
    .take(count)
}
