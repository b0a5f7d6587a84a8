use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::has_perfect_matching;

/// Largest order for labeled enumeration.
pub const MAX_LABELED_ORDER: usize = 8;
/// Largest order for isomorphism-reduced enumeration.
pub const MAX_DEDUP_ORDER: usize = 7;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CorpusFilter {
    pub require_pm: bool,
    pub require_connected: bool,
    pub dedup_iso: bool,
}

/// Labeled graph on `n` vertices whose edges are the set bits of `mask`,
/// bit `i` standing for the `i`-th vertex pair in lexicographic order.
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for a in 0..n {
        for b in a + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((a, b));
            }
            bit += 1;
        }
    }
    Graph::new(n, edges).expect("pairs of distinct in-range vertices")
}

/// Graphs on `1..=n_max` vertices passing `filter`, by order and then by
/// edge mask; with `dedup_iso` only the first member of each isomorphism
/// class is kept.
pub fn enumerate_corpus(n_max: usize, filter: CorpusFilter) -> Result<Corpus> {
    let max = if filter.dedup_iso {
        MAX_DEDUP_ORDER
    } else {
        MAX_LABELED_ORDER
    };
    if n_max > max {
        return Err(Error::SizeLimit {
            what: "corpus enumeration",
            n: n_max,
            max,
        });
    }
    Ok(Corpus {
        n_max,
        filter,
        n: 1,
        mask: 0,
        seen: HashSet::new(),
    })
}

/// Streaming corpus; see [`enumerate_corpus`].
#[derive(Debug, Clone)]
pub struct Corpus {
    n_max: usize,
    filter: CorpusFilter,
    n: usize,
    mask: u64,
    seen: HashSet<u64>,
}

impl Iterator for Corpus {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.n <= self.n_max {
            let n = self.n;
            let pairs = n * (n - 1) / 2;
            if self.mask >= 1 << pairs || (self.filter.require_pm && n % 2 == 1) {
                self.n += 1;
                self.mask = 0;
                self.seen.clear();
                continue;
            }
            let g = labeled_graph(n, self.mask);
            self.mask += 1;
            if self.filter.require_connected && !g.is_connected() {
                continue;
            }
            if self.filter.require_pm && !has_perfect_matching(&g) {
                continue;
            }
            if self.filter.dedup_iso && !self.seen.insert(canonical_code(&g)) {
                continue;
            }
            return Some(g);
        }
        None
    }
}

/// Isomorphism invariant: the smallest adjacency code over all relabelings
/// that list vertices by non-decreasing degree. Pairs are read column by
/// column, `(0,1), (0,2), (1,2), (0,3), ...`, first pair most significant.
pub fn canonical_code(g: &Graph) -> u64 {
    let n = g.n();
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| g.degree(v));
    let slot_degree: Vec<usize> = by_degree.iter().map(|&v| g.degree(v)).collect();
    let mut search = Canon {
        g,
        slot_degree,
        total: n * n.saturating_sub(1) / 2,
        order: Vec::with_capacity(n),
        best: None,
    };
    search.place(0, 0);
    search.best.unwrap_or(0)
}

struct Canon<'a> {
    g: &'a Graph,
    slot_degree: Vec<usize>,
    total: usize,
    order: Vec<usize>,
    best: Option<u64>,
}

impl Canon<'_> {
    /// `prefix` holds the code bits for pairs among the placed vertices.
    fn place(&mut self, used: u32, prefix: u64) {
        let j = self.order.len();
        let bits = j * j.saturating_sub(1) / 2;
        if let Some(best) = self.best {
            let best_prefix = best >> (self.total - bits);
            if prefix > best_prefix {
                return;
            }
        }
        if j == self.g.n() {
            self.best = Some(self.best.map_or(prefix, |b| b.min(prefix)));
            return;
        }
        for v in 0..self.g.n() {
            if used >> v & 1 == 1 || self.g.degree(v) != self.slot_degree[j] {
                continue;
            }
            let mut next = prefix;
            for &u in &self.order {
                next = next << 1 | self.g.has_edge(u, v) as u64;
            }
            self.order.push(v);
            self.place(used | 1 << v, next);
            self.order.pop();
        }
    }
}
