//! Matching covered graphs, tight and separating cuts, bricks and solid
//! graphs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{full_mask, mask_vertices, vertex_mask, Edge, EdgeSet, Graph, ResourceBudget};
use crate::matching::{enumerate_perfect_matchings, Matching, PmOracle};

/// Largest order for which odd shores are enumerated.
pub const MAX_SHORE_VERTICES: usize = 16;

fn check_shore_limit(g: &Graph, what: &'static str) -> Result<()> {
    if g.n() > MAX_SHORE_VERTICES {
        return Err(Error::SizeLimit {
            what,
            n: g.n(),
            max: MAX_SHORE_VERTICES,
        });
    }
    Ok(())
}

/// Connected, at least one edge, and every edge lies in a perfect matching.
pub fn is_matching_covered(g: &Graph) -> bool {
    if g.n() < 2 || !g.is_connected() {
        return false;
    }
    let mut oracle = PmOracle::new(g);
    let all = g.vertex_mask();
    if !oracle.has_pm(all) {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(a, b)| oracle.has_pm(all & !(1 << a) & !(1 << b)))
}

/// `G{X}`: shrink the complement of `shore` to a single vertex.
///
/// Vertices of the shore keep their relative order and become `0..|X|`; the
/// contracted vertex is `|X|`.
pub fn contract_complement(g: &Graph, shore: u32) -> Graph {
    let (inner, map) = g.induced_subgraph(shore);
    let hub = map.len();
    let outside = g.vertex_mask() & !shore;
    let mut edges: Vec<Edge> = inner.edges().to_vec();
    for (new, &old) in map.iter().enumerate() {
        if g.neighbor_mask(old) & outside != 0 {
            edges.push((new, hub));
        }
    }
    Graph::new(hub + 1, edges).expect("contraction of a simple graph is simple")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CutReport {
    pub shore: Vec<usize>,
    pub cut_edges: Vec<Edge>,
    pub is_tight: bool,
    pub is_separating: bool,
    pub is_trivial: bool,
}

fn validate_shore(g: &Graph, shore: &[usize]) -> Result<u32> {
    let mut mask = 0u32;
    for &v in shore {
        if v >= g.n() || mask >> v & 1 == 1 {
            return Err(Error::InvalidShore(format!(
                "vertex {v} repeated or out of range"
            )));
        }
        mask |= 1 << v;
    }
    if shore.len().is_multiple_of(2) {
        return Err(Error::InvalidShore(format!(
            "shore has even size {}",
            shore.len()
        )));
    }
    if shore.len() >= g.n() {
        return Err(Error::InvalidShore("shore must be a proper subset".into()));
    }
    Ok(mask)
}

fn meets_once(cut: EdgeSet, matchings: &[Matching]) -> bool {
    matchings.iter().all(|m| (m.edges() & cut).len() == 1)
}

/// A cut of a matching covered graph is separating iff every edge lies in
/// some perfect matching meeting the cut exactly once.
fn separating_by_matchings(g: &Graph, cut: EdgeSet, matchings: &[Matching]) -> bool {
    let mut covered = EdgeSet::EMPTY;
    for m in matchings {
        if (m.edges() & cut).len() == 1 {
            covered |= m.edges();
        }
    }
    covered == g.all_edges()
}

/// Classify `∂(X)` for an odd shore `X` of a matching covered graph.
pub fn classify_cut(g: &Graph, shore: &[usize], budget: &ResourceBudget) -> Result<CutReport> {
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let mask = validate_shore(g, shore)?;
    let cut = g.cut(mask);
    let matchings = enumerate_perfect_matchings(g, budget)?;
    let is_tight = meets_once(cut, &matchings);
    let is_separating = is_matching_covered(&contract_complement(g, mask))
        && is_matching_covered(&contract_complement(g, g.vertex_mask() & !mask));
    debug_assert!(
        !is_tight || is_separating,
        "tight cut that is not separating"
    );
    debug_assert_eq!(is_separating, separating_by_matchings(g, cut, &matchings));
    let size = shore.len();
    Ok(CutReport {
        shore: mask_vertices(mask).collect(),
        cut_edges: g.edge_list(cut),
        is_tight,
        is_separating,
        is_trivial: size == 1 || size == g.n() - 1,
    })
}

/// Odd shores containing vertex 0 with both sides of size at least 3; each
/// non-trivial cut of an even graph appears exactly once.
fn nontrivial_shores(n: usize) -> impl Iterator<Item = u32> {
    let rest = n.saturating_sub(1);
    (0u32..1 << rest).filter_map(move |bits| {
        let shore = bits << 1 | 1;
        let size = shore.count_ones() as usize;
        (size % 2 == 1 && size >= 3 && n - size >= 3).then_some(shore)
    })
}

/// Non-bipartite, matching covered, and every tight cut trivial.
///
/// In debug builds the answer is checked against the 3-connected and
/// bicritical characterisation.
pub fn is_brick(g: &Graph, budget: &ResourceBudget) -> Result<bool> {
    check_shore_limit(g, "brick test")?;
    let by_definition = brick_by_tight_cuts(g, budget)?;
    debug_assert_eq!(
        by_definition,
        is_bicritical_three_connected(g),
        "brick characterisations disagree on {g:?}"
    );
    Ok(by_definition)
}

fn brick_by_tight_cuts(g: &Graph, budget: &ResourceBudget) -> Result<bool> {
    if g.is_bipartite() || !is_matching_covered(g) {
        return Ok(false);
    }
    let matchings = enumerate_perfect_matchings(g, budget)?;
    Ok(nontrivial_shores(g.n()).all(|shore| !meets_once(g.cut(shore), &matchings)))
}

/// At least four vertices, connected after deleting any two, and every
/// two-vertex deletion leaves a graph with a perfect matching.
pub fn is_bicritical_three_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 4 {
        return false;
    }
    let all = full_mask(n);
    let mut oracle = PmOracle::new(g);
    for a in 0..n {
        for b in a + 1..n {
            let rest = all & !(1 << a) & !(1 << b);
            if !oracle.has_pm(rest) {
                return false;
            }
            let start = rest.trailing_zeros() as usize;
            if g.reach(start, rest) != rest {
                return false;
            }
        }
    }
    true
}

/// Every separating cut is tight.
pub fn is_solid(g: &Graph, budget: &ResourceBudget) -> Result<bool> {
    check_shore_limit(g, "solidity test")?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let matchings = enumerate_perfect_matchings(g, budget)?;
    // trivial cuts are always tight in a matching covered graph
    Ok(nontrivial_shores(g.n()).all(|shore| {
        let cut = g.cut(shore);
        meets_once(cut, &matchings) || !separating_by_matchings(g, cut, &matchings)
    }))
}

/// First non-trivial separating cut that is not tight, if any.
pub fn non_tight_separating_shore(
    g: &Graph,
    budget: &ResourceBudget,
) -> Result<Option<Vec<usize>>> {
    check_shore_limit(g, "solidity test")?;
    if !is_matching_covered(g) {
        return Err(Error::NotMatchingCovered);
    }
    let matchings = enumerate_perfect_matchings(g, budget)?;
    Ok(nontrivial_shores(g.n())
        .find(|&shore| {
            let cut = g.cut(shore);
            !meets_once(cut, &matchings) && separating_by_matchings(g, cut, &matchings)
        })
        .map(|s| mask_vertices(s).collect()))
}

/// Convenience wrapper taking a vertex list.
pub fn shore_mask(shore: &[usize]) -> u32 {
    vertex_mask(shore)
}
