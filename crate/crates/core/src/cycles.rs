//! Simple cycles: enumeration, M-alternating cycles and nice cycles.
//!
//! A cycle is stored as its canonical vertex sequence: smallest vertex
//! first, then the smaller of its two neighbours on the cycle.

use std::cmp::Ordering;

use crate::error::{BudgetKind, Error, Result};
use crate::graph::{mask_vertices, EdgeSet, Graph, ResourceBudget};
use crate::matching::{Matching, PmOracle};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: EdgeSet,
    mask: u32,
}

impl Cycle {
    /// Build a cycle of `g` from a cyclic vertex sequence in any rotation or
    /// direction.
    pub fn new(g: &Graph, sequence: &[usize]) -> Result<Self> {
        if sequence.len() < 3 {
            return Err(Error::InvalidGraph(
                "a cycle needs at least 3 vertices".into(),
            ));
        }
        let mut mask = 0u32;
        for &v in sequence {
            if v >= g.n() || mask >> v & 1 == 1 {
                return Err(Error::InvalidGraph(format!(
                    "cycle vertex {v} repeated or out of range"
                )));
            }
            mask |= 1 << v;
        }
        let vertices = canonical_rotation(sequence);
        let edges = cycle_edges(g, &vertices)
            .ok_or_else(|| Error::InvalidGraph("consecutive cycle vertices not adjacent".into()))?;
        Ok(Cycle {
            vertices,
            edges,
            mask,
        })
    }

    /// Assumes `vertices` is already canonical and a cycle of `g`.
    fn from_canonical(g: &Graph, vertices: Vec<usize>) -> Self {
        debug_assert_eq!(canonical_rotation(&vertices), vertices);
        let edges = cycle_edges(g, &vertices).expect("path closes into a cycle");
        let mask = vertices.iter().fold(0, |m, &v| m | 1 << v);
        Cycle {
            vertices,
            edges,
            mask,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn vertex_mask(&self) -> u32 {
        self.mask
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.vertices.len().is_multiple_of(2)
    }

    /// Whether the edges alternate in and out of `m`.
    pub fn alternates(&self, m: &Matching) -> bool {
        self.is_even() && (self.edges & m.edges()).len() * 2 == self.len()
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vertices
            .len()
            .cmp(&other.vertices.len())
            .then_with(|| self.vertices.cmp(&other.vertices))
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Rotate so the smallest vertex comes first and reflect so its smaller
/// neighbour follows.
pub fn canonical_rotation(sequence: &[usize]) -> Vec<usize> {
    let len = sequence.len();
    if len == 0 {
        return Vec::new();
    }
    let start = (0..len).min_by_key(|&i| sequence[i]).unwrap();
    let next = sequence[(start + 1) % len];
    let prev = sequence[(start + len - 1) % len];
    if next <= prev {
        (0..len).map(|k| sequence[(start + k) % len]).collect()
    } else {
        (0..len)
            .map(|k| sequence[(start + len - k) % len])
            .collect()
    }
}

fn cycle_edges(g: &Graph, vertices: &[usize]) -> Option<EdgeSet> {
    let len = vertices.len();
    let mut s = EdgeSet::EMPTY;
    for k in 0..len {
        s.insert(g.edge_index(vertices[k], vertices[(k + 1) % len])?);
    }
    Some(s)
}

/// A duplicate-free list of cycles of one host graph, ordered by length and
/// then by canonical vertex sequence.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CycleFamily {
    pub cycles: Vec<Cycle>,
    /// Edges of the host graph.
    pub universe: EdgeSet,
}

impl CycleFamily {
    fn new(g: &Graph, mut cycles: Vec<Cycle>) -> Self {
        cycles.sort();
        debug_assert!(cycles.windows(2).all(|w| w[0] != w[1]));
        CycleFamily {
            cycles,
            universe: g.all_edges(),
        }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Cycle> {
        self.cycles.iter()
    }
}

fn over_budget(limit: usize, reached: usize) -> Error {
    Error::BudgetExceeded {
        budget: BudgetKind::Cycles,
        limit,
        reached,
    }
}

/// Every simple cycle of `g`.
pub fn all_cycles(g: &Graph, budget: &ResourceBudget) -> Result<CycleFamily> {
    bounded_cycles(g, g.n(), false, budget)
}

/// Odd cycles of length at most `max_len`.
pub fn odd_cycles_up_to(g: &Graph, max_len: usize, budget: &ResourceBudget) -> Result<CycleFamily> {
    bounded_cycles(g, max_len, true, budget)
}

fn bounded_cycles(
    g: &Graph,
    max_len: usize,
    odd_only: bool,
    budget: &ResourceBudget,
) -> Result<CycleFamily> {
    struct Search<'a> {
        g: &'a Graph,
        start: usize,
        path: Vec<usize>,
        out: Vec<Cycle>,
        limit: usize,
        max_len: usize,
        odd_only: bool,
    }
    impl Search<'_> {
        fn extend(&mut self, v: usize, visited: u32) -> Result<()> {
            let allowed = self.g.neighbor_mask(v)
                & !visited
                & !((1u32 << self.start) | ((1u32 << self.start) - 1));
            if self.path.len() >= 3
                && (!self.odd_only || self.path.len() % 2 == 1)
                && self.g.has_edge(v, self.start)
                && self.path[1] < v
            {
                if self.out.len() == self.limit {
                    return Err(over_budget(self.limit, self.out.len()));
                }
                self.out
                    .push(Cycle::from_canonical(self.g, self.path.clone()));
            }
            if self.path.len() == self.max_len {
                return Ok(());
            }
            for w in mask_vertices(allowed) {
                self.path.push(w);
                self.extend(w, visited | 1 << w)?;
                self.path.pop();
            }
            Ok(())
        }
    }
    let mut search = Search {
        g,
        start: 0,
        path: Vec::with_capacity(g.n()),
        out: Vec::new(),
        limit: budget.max_cycles,
        max_len,
        odd_only,
    };
    for s in 0..g.n() {
        search.start = s;
        search.path.clear();
        search.path.push(s);
        search.extend(s, 1 << s)?;
    }
    Ok(CycleFamily::new(g, search.out))
}

/// All `m`-alternating cycles of `g`, found by walking edges alternately in
/// and out of `m`.
pub fn alternating_cycles(g: &Graph, m: &Matching, budget: &ResourceBudget) -> Result<CycleFamily> {
    if !m.is_perfect(g) {
        return Err(Error::NotPerfectMatching);
    }
    let partner = m.partners(g);
    let limit = budget.max_cycles;
    let mut out = Vec::new();

    // `x` was just entered along its matching edge; leave along a
    // non-matching edge.
    #[allow(clippy::too_many_arguments)]
    fn walk(
        g: &Graph,
        partner: &[usize],
        start: usize,
        x: usize,
        visited: u32,
        path: &mut Vec<usize>,
        out: &mut Vec<Cycle>,
        limit: usize,
    ) -> Result<()> {
        let above = !((1u32 << start) | ((1u32 << start) - 1));
        if path.len() >= 4 && g.has_edge(x, start) && partner[x] != start {
            if out.len() == limit {
                return Err(over_budget(limit, out.len()));
            }
            out.push(Cycle::from_canonical(g, canonical_rotation(path)));
        }
        for y in mask_vertices(g.neighbor_mask(x) & !visited & above) {
            if y == partner[x] {
                continue;
            }
            let z = partner[y];
            if visited >> z & 1 == 1 || z < start {
                continue;
            }
            path.push(y);
            path.push(z);
            walk(
                g,
                partner,
                start,
                z,
                visited | 1 << y | 1 << z,
                path,
                out,
                limit,
            )?;
            path.pop();
            path.pop();
        }
        Ok(())
    }

    let mut path = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        let t = partner[s];
        if t < s {
            continue;
        }
        path.clear();
        path.push(s);
        path.push(t);
        walk(
            g,
            &partner,
            s,
            t,
            1 << s | 1 << t,
            &mut path,
            &mut out,
            limit,
        )?;
    }
    Ok(CycleFamily::new(g, out))
}

/// Even cycles `C` such that `g - V(C)` has a perfect matching.
pub fn nice_cycles(g: &Graph, budget: &ResourceBudget) -> Result<CycleFamily> {
    let all = all_cycles(g, budget)?;
    let mut oracle = PmOracle::new(g);
    Ok(nice_subfamily(&all, &mut oracle))
}

/// Restrict an enumerated family to its nice cycles.
pub fn nice_subfamily(all: &CycleFamily, oracle: &mut PmOracle<'_>) -> CycleFamily {
    let g = oracle.graph();
    let rest = g.vertex_mask();
    let cycles = all
        .iter()
        .filter(|c| c.is_even() && oracle.has_pm(rest & !c.vertex_mask()))
        .cloned()
        .collect();
    CycleFamily {
        cycles,
        universe: all.universe,
    }
}

/// The `m`-alternating members of a family of nice cycles.
pub fn alternating_subfamily(nice: &CycleFamily, m: &Matching) -> CycleFamily {
    CycleFamily {
        cycles: nice.iter().filter(|c| c.alternates(m)).cloned().collect(),
        universe: nice.universe,
    }
}
