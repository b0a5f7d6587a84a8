//! Named graph families, small-graph corpora, and text formats.

mod corpus;
mod edgelist;
mod graph6;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub use corpus::{
    canonical_code, enumerate_corpus, labeled_graph, Corpus, CorpusFilter, MAX_DEDUP_ORDER,
    MAX_LABELED_ORDER,
};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{parse_graph6, write_graph6};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CompleteBipartite,
    CompleteBipartiteMinusEdge,
    Complete,
    PrismChain,
    OddDumbbell,
    Cycle,
    Path,
    HalfGraph,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::CompleteBipartite,
        Family::CompleteBipartiteMinusEdge,
        Family::Complete,
        Family::PrismChain,
        Family::OddDumbbell,
        Family::Cycle,
        Family::Path,
        Family::HalfGraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::CompleteBipartite => "complete_bipartite",
            Family::CompleteBipartiteMinusEdge => "complete_bipartite_minus_edge",
            Family::Complete => "complete",
            Family::PrismChain => "prism_chain",
            Family::OddDumbbell => "odd_dumbbell",
            Family::Cycle => "cycle",
            Family::Path => "path",
            Family::HalfGraph => "half_graph",
        }
    }

    fn arity(self) -> usize {
        match self {
            Family::OddDumbbell => 3,
            _ => 1,
        }
    }
}

/// A family name with its integer parameters, written `name:p1,p2,...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub params: Vec<usize>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<usize>) -> Result<Self> {
        let spec = FamilySpec { family, params };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        let bad = |why: &str| Err(Error::InvalidParams(format!("{self}: {why}")));
        if self.params.len() != self.family.arity() {
            return bad(&format!("expected {} parameter(s)", self.family.arity()));
        }
        let p = &self.params;
        let n = p[0];
        match self.family {
            Family::CompleteBipartite if n < 1 => bad("need n >= 1"),
            Family::CompleteBipartiteMinusEdge if n < 2 => bad("need n >= 2"),
            Family::Complete if n < 2 || n % 2 == 1 => bad("need an even order >= 2"),
            Family::PrismChain if n < 1 => bad("need k >= 1"),
            Family::OddDumbbell
                if p[0] < 3 || p[1] < 3 || p[0].is_multiple_of(2) || p[1].is_multiple_of(2) =>
            {
                bad("cycle lengths must be odd and >= 3")
            }
            Family::OddDumbbell if p[2].is_multiple_of(2) => bad("path length must be odd"),
            Family::Cycle if n < 3 => bad("need n >= 3"),
            Family::Path | Family::HalfGraph if n < 1 => bad("need n >= 1"),
            _ => {
                let order = self.order();
                if order > crate::graph::MAX_VERTICES {
                    bad(&format!(
                        "{order} vertices exceeds {}",
                        crate::graph::MAX_VERTICES
                    ))
                } else {
                    Ok(())
                }
            }
        }
    }

    /// Number of vertices of the generated graph.
    pub fn order(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::CompleteBipartite | Family::CompleteBipartiteMinusEdge | Family::HalfGraph => {
                2 * p[0]
            }
            Family::Complete | Family::Cycle | Family::Path => p[0],
            Family::PrismChain => 6 * p[0],
            Family::OddDumbbell => p[0] + p[1] + p[2] - 1,
        }
    }

    /// How the vertices of the generated graph are numbered.
    pub fn labeling(&self) -> &'static str {
        match self.family {
            Family::CompleteBipartite => "u_i = i-1, v_j = n+j-1",
            Family::CompleteBipartiteMinusEdge => "u_i = i-1, v_j = n+j-1; edge u_1 v_1 removed",
            Family::Complete => "0..n-1",
            Family::PrismChain => {
                "u_j of copy i = 6(i-1)+(j-1); triangles u1u2u3, u4u5u6; rungs u1u4, u2u5, u3u6; \
                 copies joined by u1u1 and u4u4"
            }
            Family::OddDumbbell => {
                "cycle A on 0..p-1; path interior p..p+l-2; cycle B from p+l-1; path runs from 0 \
                 to the first vertex of B"
            }
            Family::Cycle => "0..n-1 in cyclic order",
            Family::Path => "0..n-1 in path order",
            Family::HalfGraph => "v_i = 2(i-1), u_i = 2(i-1)+1; edges u_i v_j for i <= j",
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.family.name())?;
        for (i, p) in self.params.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidParams(format!("{s:?}: expected name:params")))?;
        let family = Family::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::InvalidParams(format!("unknown family {name:?}")))?;
        let params = rest
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidParams(format!("{s:?}: bad parameter {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        FamilySpec::new(family, params)
    }
}

/// Build the family member described by `spec`.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let p = &spec.params;
    let n = p[0];
    let mut edges: Vec<Edge> = Vec::new();
    match spec.family {
        Family::CompleteBipartite | Family::CompleteBipartiteMinusEdge => {
            for i in 0..n {
                for j in 0..n {
                    edges.push((i, n + j));
                }
            }
            if spec.family == Family::CompleteBipartiteMinusEdge {
                edges.retain(|&e| e != (0, n));
            }
        }
        Family::Complete => {
            for a in 0..n {
                for b in a + 1..n {
                    edges.push((a, b));
                }
            }
        }
        Family::PrismChain => {
            for i in 0..n {
                let u = |j: usize| 6 * i + j - 1;
                edges.extend([
                    (u(1), u(2)),
                    (u(2), u(3)),
                    (u(1), u(3)),
                    (u(4), u(5)),
                    (u(5), u(6)),
                    (u(4), u(6)),
                    (u(1), u(4)),
                    (u(2), u(5)),
                    (u(3), u(6)),
                ]);
                if i + 1 < n {
                    edges.push((u(1), u(1) + 6));
                    edges.push((u(4), u(4) + 6));
                }
            }
        }
        Family::OddDumbbell => {
            let (a, b, len) = (p[0], p[1], p[2]);
            let start_b = a + len - 1;
            for i in 0..a {
                edges.push((i, (i + 1) % a));
            }
            for i in 0..b {
                edges.push((start_b + i, start_b + (i + 1) % b));
            }
            let mut route = vec![0];
            route.extend(a..start_b);
            route.push(start_b);
            for w in route.windows(2) {
                edges.push((w[0], w[1]));
            }
        }
        Family::Cycle => edges.extend((0..n).map(|i| (i, (i + 1) % n))),
        Family::Path => edges.extend((1..n).map(|i| (i - 1, i))),
        Family::HalfGraph => {
            for i in 0..n {
                for j in i..n {
                    edges.push((2 * i + 1, 2 * j));
                }
            }
        }
    }
    Graph::new(spec.order(), edges)
}
