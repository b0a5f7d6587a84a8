//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Edges are kept sorted lexicographically, and an edge's position in that
//! order is its index. Edge subsets are bitmasks over those indices
//! ([`EdgeSet`]); vertex subsets are `u32` masks.

use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Unordered edge stored as `(a, b)` with `a < b`.
pub type Edge = (usize, usize);

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 32;
/// Largest edge count a [`Graph`] can hold.
pub const MAX_EDGES: usize = 128;

const NO_EDGE: u8 = u8::MAX;

/// Bitmask over edge indices of a host graph.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(pub u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    #[inline]
    pub fn singleton(i: usize) -> Self {
        EdgeSet(1u128 << i)
    }

    /// The first `len` indices.
    #[inline]
    pub fn full(len: usize) -> Self {
        if len >= 128 {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << len) - 1)
        }
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u128 << i;
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u128 << i);
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: EdgeSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Smallest index in the set.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let i = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(i)
            }
        })
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl BitOr for EdgeSet {
    type Output = EdgeSet;
    fn bitor(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for EdgeSet {
    fn bitor_assign(&mut self, rhs: EdgeSet) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for EdgeSet {
    type Output = EdgeSet;
    fn bitand(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for EdgeSet {
    fn bitand_assign(&mut self, rhs: EdgeSet) {
        self.0 &= rhs.0;
    }
}

impl Sub for EdgeSet {
    type Output = EdgeSet;
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !rhs.0)
    }
}

impl Not for EdgeSet {
    type Output = EdgeSet;
    fn not(self) -> EdgeSet {
        EdgeSet(!self.0)
    }
}

/// Iterate the members of a vertex mask in increasing order.
pub fn mask_vertices(mask: u32) -> impl Iterator<Item = usize> {
    let mut bits = mask;
    std::iter::from_fn(move || {
        if bits == 0 {
            None
        } else {
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        }
    })
}

/// Mask with the first `n` vertices set.
#[inline]
pub fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Vertex mask of the given vertex list.
pub fn vertex_mask(vertices: &[usize]) -> u32 {
    vertices.iter().fold(0, |m, &v| m | 1 << v)
}

/// A simple undirected graph in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adjacency: Vec<u32>,
    incident: Vec<EdgeSet>,
    edge_ids: Vec<u8>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Build a graph, normalising each pair to `(min, max)` and sorting.
    ///
    /// Self-loops, duplicate edges and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                what: "graph",
                n,
                max: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a}, {b}) has an endpoint outside 0..{n}"
                )));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge ({}, {})",
                w[0].0, w[0].1
            )));
        }
        if list.len() > MAX_EDGES {
            return Err(Error::InvalidGraph(format!(
                "{} edges exceed the supported maximum of {MAX_EDGES}",
                list.len()
            )));
        }
        Ok(Self::from_sorted(n, list))
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![0u32; n];
        let mut incident = vec![EdgeSet::EMPTY; n];
        let mut edge_ids = vec![NO_EDGE; n * n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adjacency[a] |= 1 << b;
            adjacency[b] |= 1 << a;
            incident[a].insert(i);
            incident[b].insert(i);
            edge_ids[a * n + b] = i as u8;
            edge_ids[b * n + a] = i as u8;
        }
        Graph {
            n,
            edges,
            adjacency,
            incident,
            edge_ids,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, i: usize) -> Edge {
        self.edges[i]
    }

    #[inline]
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        match self.edge_ids[a * self.n + b] {
            NO_EDGE => None,
            i => Some(i as usize),
        }
    }

    #[inline]
    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && b < self.n && self.adjacency[a] >> b & 1 == 1
    }

    /// Neighbour mask of `v`.
    #[inline]
    pub fn neighbor_mask(&self, v: usize) -> u32 {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        mask_vertices(self.adjacency[v])
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    /// Edges incident with `v`.
    #[inline]
    pub fn incident(&self, v: usize) -> EdgeSet {
        self.incident[v]
    }

    #[inline]
    pub fn vertex_mask(&self) -> u32 {
        full_mask(self.n)
    }

    #[inline]
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Edge set of a list of vertex pairs; fails if a pair is not an edge.
    pub fn edge_set(&self, pairs: &[Edge]) -> Result<EdgeSet> {
        let mut s = EdgeSet::EMPTY;
        for &(a, b) in pairs {
            let i = self.edge_index(a, b).ok_or_else(|| {
                Error::InvalidGraph(format!("({a}, {b}) is not an edge of the graph"))
            })?;
            s.insert(i);
        }
        Ok(s)
    }

    /// Vertex pairs of an edge set, in edge order.
    pub fn edge_list(&self, set: EdgeSet) -> Vec<Edge> {
        set.iter().map(|i| self.edges[i]).collect()
    }

    /// Vertices touched by an edge set.
    pub fn covered_vertices(&self, set: EdgeSet) -> u32 {
        set.iter()
            .fold(0, |m, i| m | 1 << self.edges[i].0 | 1 << self.edges[i].1)
    }

    /// Edges with exactly one end in `mask`.
    pub fn cut(&self, mask: u32) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if (mask >> a & 1) != (mask >> b & 1) {
                s.insert(i);
            }
        }
        s
    }

    /// Edges with both ends in `mask`.
    pub fn induced_edges(&self, mask: u32) -> EdgeSet {
        let mut s = EdgeSet::EMPTY;
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if mask >> a & 1 == 1 && mask >> b & 1 == 1 {
                s.insert(i);
            }
        }
        s
    }

    /// Spanning subgraph keeping only the edges in `keep`.
    pub fn spanning_subgraph(&self, keep: EdgeSet) -> Graph {
        let edges = keep.iter().map(|i| self.edges[i]).collect();
        Graph::from_sorted(self.n, edges)
    }

    /// Subgraph induced by `mask`, relabelled densely in increasing order.
    ///
    /// Returns the graph and the map from new labels to old ones.
    pub fn induced_subgraph(&self, mask: u32) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = mask_vertices(mask & self.vertex_mask()).collect();
        let mut inverse = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| inverse[a] != usize::MAX && inverse[b] != usize::MAX)
            .map(|&(a, b)| (inverse[a], inverse[b]))
            .collect();
        // relabelling is monotone, so the order is preserved
        (Graph::from_sorted(map.len(), edges), map)
    }

    /// Apply `perm` (old label -> new label).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidGraph("permutation length mismatch".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen >> p & 1 == 1 {
                return Err(Error::InvalidGraph("not a permutation".into()));
            }
            seen |= 1 << p;
        }
        Graph::new(self.n, self.edges.iter().map(|&(a, b)| (perm[a], perm[b])))
    }

    /// Connected components as vertex masks, ordered by smallest vertex.
    pub fn components(&self) -> Vec<u32> {
        self.components_within(self.vertex_mask())
    }

    /// Components of the subgraph induced by `mask`.
    pub fn components_within(&self, mask: u32) -> Vec<u32> {
        let mut left = mask;
        let mut out = Vec::new();
        while left != 0 {
            let start = left.trailing_zeros() as usize;
            let comp = self.reach(start, mask);
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// Vertices reachable from `start` inside `mask`.
    pub fn reach(&self, start: usize, mask: u32) -> u32 {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= self.adjacency[v] & mask;
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0, self.vertex_mask()) == self.vertex_mask()
    }

    /// Whether the spanning subgraph with edge set `keep` is connected.
    pub fn spans_connected(&self, keep: EdgeSet) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut adj = vec![0u32; self.n];
        for i in keep.iter() {
            let (a, b) = self.edges[i];
            adj[a] |= 1 << b;
            adj[b] |= 1 << a;
        }
        let all = self.vertex_mask();
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0;
            for v in mask_vertices(frontier) {
                next |= adj[v];
            }
            frontier = next & !seen;
            seen |= frontier;
        }
        seen == all
    }

    /// Proper 2-colouring, if one exists. The smallest vertex of every
    /// component gets colour 0.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for s in 0..self.n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for w in self.neighbors(v) {
                    if color[w] == u8::MAX {
                        color[w] = 1 - color[v];
                        stack.push(w);
                    } else if color[w] == color[v] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.two_coloring().is_some()
    }

    /// Bridges of the graph, in edge order.
    pub fn bridges(&self) -> EdgeSet {
        // iterative lowpoint DFS
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = EdgeSet::EMPTY;
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge index, remaining neighbours)
            let mut stack: Vec<(usize, usize, u32)> =
                vec![(root, usize::MAX, self.adjacency[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(top) = stack.last_mut() {
                let (v, pe, rest) = *top;
                if rest != 0 {
                    let w = rest.trailing_zeros() as usize;
                    top.2 &= rest - 1;
                    let e = self.edge_ids[v * n + w] as usize;
                    if e == pe {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, self.adjacency[w]));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(parent) = stack.last() {
                        let u = parent.0;
                        low[u] = low[u].min(low[v]);
                        if low[v] > disc[u] {
                            out.insert(pe);
                        }
                    }
                }
            }
        }
        out
    }

    /// Degree / connectivity / cycle-space summary.
    pub fn basic_invariants(&self) -> BasicInvariants {
        let components = self.components().len();
        BasicInvariants {
            n: self.n,
            e: self.edges.len(),
            cyclomatic: self.edges.len() + components - self.n,
            connected: components <= 1,
            bipartite: self.is_bipartite(),
            delta_min: self.min_degree(),
            delta_max: self.max_degree(),
        }
    }
}

/// Output of [`Graph::basic_invariants`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicInvariants {
    pub n: usize,
    pub e: usize,
    /// `e - n + components`, the dimension of the cycle space.
    pub cyclomatic: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub delta_min: usize,
    pub delta_max: usize,
}

/// Limits on enumeration sizes. Exceeding one is an error, never a silent
/// truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceBudget {
    pub max_matchings: usize,
    pub max_cycles: usize,
}

impl ResourceBudget {
    pub fn new(max_matchings: usize, max_cycles: usize) -> Result<Self> {
        if max_matchings == 0 || max_cycles == 0 {
            return Err(Error::InvalidParams("budgets must be positive".into()));
        }
        Ok(ResourceBudget {
            max_matchings,
            max_cycles,
        })
    }
}

impl Default for ResourceBudget {
    fn default() -> Self {
        ResourceBudget {
            max_matchings: 100_000,
            max_cycles: 1_000_000,
        }
    }
}
