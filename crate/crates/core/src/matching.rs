//! Perfect matchings: enumeration, counting and existence on vertex subsets.

use std::collections::HashMap;

use crate::error::{BudgetKind, Error, Result};
use crate::graph::{mask_vertices, Edge, EdgeSet, Graph, ResourceBudget};

/// An edge subset of a host graph whose edges are pairwise disjoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    edges: EdgeSet,
}

impl Matching {
    /// Wrap an edge set of `g`, checking the edges are pairwise disjoint.
    pub fn new(g: &Graph, edges: EdgeSet) -> Result<Self> {
        let mut covered = 0u32;
        for i in edges.iter() {
            if i >= g.edge_count() {
                return Err(Error::InvalidGraph(format!("edge index {i} out of range")));
            }
            let (a, b) = g.edge(i);
            let ends = 1 << a | 1 << b;
            if covered & ends != 0 {
                return Err(Error::InvalidGraph(format!(
                    "edges of a matching share vertex {}",
                    (covered & ends).trailing_zeros()
                )));
            }
            covered |= ends;
        }
        Ok(Matching { edges })
    }

    pub fn from_pairs(g: &Graph, pairs: &[Edge]) -> Result<Self> {
        Self::new(g, g.edge_set(pairs)?)
    }

    /// A perfect matching of `g` given as vertex pairs.
    pub fn perfect(g: &Graph, pairs: &[Edge]) -> Result<Self> {
        let m = Self::from_pairs(g, pairs)?;
        if !m.is_perfect(g) {
            return Err(Error::NotPerfectMatching);
        }
        Ok(m)
    }

    #[inline]
    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn pairs(&self, g: &Graph) -> Vec<Edge> {
        g.edge_list(self.edges)
    }

    pub fn is_perfect(&self, g: &Graph) -> bool {
        g.covered_vertices(self.edges) == g.vertex_mask() && 2 * self.len() == g.n()
    }

    /// Partner of every vertex (`usize::MAX` when uncovered).
    pub fn partners(&self, g: &Graph) -> Vec<usize> {
        let mut p = vec![usize::MAX; g.n()];
        for i in self.edges.iter() {
            let (a, b) = g.edge(i);
            p[a] = b;
            p[b] = a;
        }
        p
    }
}

/// All perfect matchings of `g`, in lexicographic order of their sorted edge
/// lists. The graph on zero vertices has exactly one, the empty matching.
pub fn enumerate_perfect_matchings(g: &Graph, budget: &ResourceBudget) -> Result<Vec<Matching>> {
    let mut out = Vec::new();
    // Always matching the smallest uncovered vertex to its neighbours in
    // increasing order visits edge lists in lexicographic order.
    fn go(g: &Graph, free: u32, acc: EdgeSet, out: &mut Vec<Matching>, limit: usize) -> Result<()> {
        if free == 0 {
            if out.len() == limit {
                return Err(Error::BudgetExceeded {
                    budget: BudgetKind::Matchings,
                    limit,
                    reached: out.len(),
                });
            }
            out.push(Matching { edges: acc });
            return Ok(());
        }
        let v = free.trailing_zeros() as usize;
        let rest = free & !(1 << v);
        for w in mask_vertices(g.neighbor_mask(v) & rest) {
            let e = g.edge_index(v, w).expect("adjacent");
            let mut next = acc;
            next.insert(e);
            go(g, rest & !(1 << w), next, out, limit)?;
        }
        Ok(())
    }
    if g.n() % 2 == 1 {
        return Ok(out);
    }
    go(
        g,
        g.vertex_mask(),
        EdgeSet::EMPTY,
        &mut out,
        budget.max_matchings,
    )?;
    Ok(out)
}

/// Number of perfect matchings, without materialising them.
pub fn count_perfect_matchings(g: &Graph) -> u64 {
    PmOracle::new(g).count(g.vertex_mask())
}

/// Whether `g` has a perfect matching.
pub fn has_perfect_matching(g: &Graph) -> bool {
    PmOracle::new(g).has_pm(g.vertex_mask())
}

/// Memoised perfect-matching existence and counting on induced subgraphs.
pub struct PmOracle<'g> {
    g: &'g Graph,
    exists: HashMap<u32, bool>,
    counts: HashMap<u32, u64>,
}

impl<'g> PmOracle<'g> {
    pub fn new(g: &'g Graph) -> Self {
        PmOracle {
            g,
            exists: HashMap::new(),
            counts: HashMap::new(),
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.g
    }

    /// Whether the subgraph induced by `mask` has a perfect matching.
    /// The empty vertex set has one.
    pub fn has_pm(&mut self, mask: u32) -> bool {
        if mask == 0 {
            return true;
        }
        if mask.count_ones() % 2 == 1 {
            return false;
        }
        if let Some(&r) = self.exists.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut found = false;
        for w in mask_vertices(self.g.neighbor_mask(v) & rest) {
            if self.has_pm(rest & !(1 << w)) {
                found = true;
                break;
            }
        }
        self.exists.insert(mask, found);
        found
    }

    /// Lexicographically first perfect matching of the subgraph induced by
    /// `mask`, as edges of the host graph.
    pub fn first_pm(&mut self, mask: u32) -> Option<EdgeSet> {
        if !self.has_pm(mask) {
            return None;
        }
        let mut edges = EdgeSet::EMPTY;
        let mut free = mask;
        while free != 0 {
            let v = free.trailing_zeros() as usize;
            let rest = free & !(1 << v);
            let w = mask_vertices(self.g.neighbor_mask(v) & rest)
                .find(|&w| self.has_pm(rest & !(1 << w)))
                .expect("a perfect matching extends");
            edges.insert(self.g.edge_index(v, w).expect("adjacent"));
            free = rest & !(1 << w);
        }
        Some(edges)
    }

    /// Number of perfect matchings of the subgraph induced by `mask`.
    pub fn count(&mut self, mask: u32) -> u64 {
        if mask == 0 {
            return 1;
        }
        if mask.count_ones() % 2 == 1 {
            return 0;
        }
        if let Some(&c) = self.counts.get(&mask) {
            return c;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut total = 0u64;
        for w in mask_vertices(self.g.neighbor_mask(v) & rest) {
            total += self.count(rest & !(1 << w));
        }
        self.counts.insert(mask, total);
        total
    }
}
