//! Forcing, anti-forcing and global forcing numbers.
//!
//! All three reduce to a minimum hitting set over a cycle family:
//! a forcing set of `M` hits the `M`-edges of every `M`-alternating cycle,
//! an anti-forcing set hits their non-`M` edges, and a global forcing set
//! hits every nice cycle.

use rayon::prelude::*;

use crate::cycles::{
    all_cycles, alternating_cycles, alternating_subfamily, nice_subfamily, CycleFamily,
};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, ResourceBudget};
use crate::hitting::{min_hitting_set, HittingInstance};
use crate::matching::{enumerate_perfect_matchings, Matching, PmOracle};
use crate::util::{combinations, subsets_of_size};

/// A minimum edge set together with its size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinimumSet {
    pub size: usize,
    pub witness: EdgeSet,
}

impl MinimumSet {
    pub fn pairs(&self, g: &Graph) -> Vec<Edge> {
        g.edge_list(self.witness)
    }
}

/// Minimum subset of `allowed` meeting every cycle of `family`.
///
/// Elements are the edges of `allowed` in edge order, so the witness is
/// the lexicographically smallest minimum edge set.
pub fn min_edge_hitting_set(family: &CycleFamily, allowed: EdgeSet) -> Result<MinimumSet> {
    let universe: Vec<usize> = allowed.iter().collect();
    let mut position = [usize::MAX; 128];
    for (k, &e) in universe.iter().enumerate() {
        position[e] = k;
    }
    let sets = family
        .iter()
        .map(|c| (c.edges() & allowed).iter().map(|e| position[e]).collect())
        .collect();
    let sol = min_hitting_set(&HittingInstance::new(universe.len(), sets)?);
    Ok(MinimumSet {
        size: sol.size,
        witness: sol.witness.iter().map(|k| universe[k]).collect(),
    })
}

/// Smallest forcing set of `m`, as a subset of `m`.
pub fn forcing_number(g: &Graph, m: &Matching, budget: &ResourceBudget) -> Result<MinimumSet> {
    let family = alternating_cycles(g, m, budget)?;
    min_edge_hitting_set(&family, m.edges())
}

/// Smallest anti-forcing set of `m`, as a subset of `E(g) \ m`.
pub fn anti_forcing_number(g: &Graph, m: &Matching, budget: &ResourceBudget) -> Result<MinimumSet> {
    let family = alternating_cycles(g, m, budget)?;
    min_edge_hitting_set(&family, g.all_edges() - m.edges())
}

/// Perfect matchings and cycle families of a graph, enumerated once and
/// shared by the forcing computations.
#[derive(Debug, Clone)]
pub struct MatchingStructure {
    pub matchings: Vec<Matching>,
    pub cycles: CycleFamily,
    pub nice: CycleFamily,
}

impl MatchingStructure {
    pub fn new(g: &Graph, budget: &ResourceBudget) -> Result<Self> {
        let matchings = enumerate_perfect_matchings(g, budget)?;
        if matchings.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let cycles = all_cycles(g, budget)?;
        let mut oracle = PmOracle::new(g);
        let nice = nice_subfamily(&cycles, &mut oracle);
        Ok(MatchingStructure {
            matchings,
            cycles,
            nice,
        })
    }

    pub fn phi(&self) -> usize {
        self.matchings.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatchingForcing {
    pub matching: Matching,
    pub forcing: MinimumSet,
    pub anti_forcing: MinimumSet,
}

/// Extremal forcing numbers over all perfect matchings, plus `gf`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForcingSummary {
    pub f_min: usize,
    pub f_max: usize,
    pub af_min: usize,
    pub af_max: usize,
    pub gf: MinimumSet,
    /// Rows in perfect-matching order; each extremum's witness is taken
    /// from the first row attaining it.
    pub per_matching: Vec<MatchingForcing>,
}

impl ForcingSummary {
    fn first_row(&self, pick: impl Fn(&MatchingForcing) -> bool) -> &MatchingForcing {
        self.per_matching
            .iter()
            .find(|r| pick(r))
            .expect("non-empty")
    }

    pub fn f_min_witness(&self) -> &MatchingForcing {
        self.first_row(|r| r.forcing.size == self.f_min)
    }

    pub fn f_max_witness(&self) -> &MatchingForcing {
        self.first_row(|r| r.forcing.size == self.f_max)
    }

    pub fn af_min_witness(&self) -> &MatchingForcing {
        self.first_row(|r| r.anti_forcing.size == self.af_min)
    }

    pub fn af_max_witness(&self) -> &MatchingForcing {
        self.first_row(|r| r.anti_forcing.size == self.af_max)
    }
}

/// `f`, `af` for every perfect matching and `gf`, from shared enumerations.
pub fn summarize(g: &Graph, structure: &MatchingStructure) -> Result<ForcingSummary> {
    let all = g.all_edges();
    let per_matching = structure
        .matchings
        .par_iter()
        .map(|m| {
            let alt = alternating_subfamily(&structure.nice, m);
            Ok(MatchingForcing {
                matching: *m,
                forcing: min_edge_hitting_set(&alt, m.edges())?,
                anti_forcing: min_edge_hitting_set(&alt, all - m.edges())?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let gf = min_edge_hitting_set(&structure.nice, all)?;
    let f = per_matching.iter().map(|r| r.forcing.size);
    let af = per_matching.iter().map(|r| r.anti_forcing.size);
    Ok(ForcingSummary {
        f_min: f.clone().min().expect("at least one matching"),
        f_max: f.max().expect("at least one matching"),
        af_min: af.clone().min().expect("at least one matching"),
        af_max: af.max().expect("at least one matching"),
        gf,
        per_matching,
    })
}

pub fn forcing_summary(g: &Graph, budget: &ResourceBudget) -> Result<ForcingSummary> {
    summarize(g, &MatchingStructure::new(g, budget)?)
}

/// Minimum global forcing set: a minimum edge set meeting every nice cycle.
///
/// On disconnected graphs this is taken as the definition.
pub fn global_forcing_number(g: &Graph, budget: &ResourceBudget) -> Result<MinimumSet> {
    let structure = MatchingStructure::new(g, budget)?;
    min_edge_hitting_set(&structure.nice, g.all_edges())
}

/// `gf` through the complement: a largest connected spanning subgraph that
/// contains no nice cycle of `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementForcing {
    pub gf: usize,
    /// Edges of the subgraph `T`.
    pub kept: EdgeSet,
}

/// Exhaustive search over removed edge sets of increasing size; the first
/// removal leaving a connected spanning subgraph free of nice cycles wins.
pub fn global_forcing_via_subgraph(
    g: &Graph,
    budget: &ResourceBudget,
) -> Result<ComplementForcing> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let structure = MatchingStructure::new(g, budget)?;
    let nice: Vec<EdgeSet> = structure.nice.iter().map(|c| c.edges()).collect();
    let all = g.all_edges();
    let e = g.edge_count();
    for k in 0..=e {
        for removed in combinations(e, k) {
            let removed: EdgeSet = removed.into_iter().collect();
            let kept = all - removed;
            if nice.iter().all(|c| !c.is_subset(kept)) && g.spans_connected(kept) {
                return Ok(ComplementForcing { gf: k, kept });
            }
        }
    }
    unreachable!("removing every edge of a cycle-carrying graph kills all cycles")
}

/// Result of [`extend_to_unique_pm`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniquePmExtension {
    /// Edges of `s` put back.
    pub added: EdgeSet,
    /// The only perfect matching of `g - (s \ added)`.
    pub matching: Matching,
}

/// Given a global forcing set `s`, find the first subset `F` of `s` in
/// size-then-lexicographic order such that `g - s + F` has a perfect
/// matching. That matching is then unique.
pub fn extend_to_unique_pm(
    g: &Graph,
    s: EdgeSet,
    budget: &ResourceBudget,
) -> Result<UniquePmExtension> {
    let structure = MatchingStructure::new(g, budget)?;
    if !s.is_subset(g.all_edges()) {
        return Err(Error::InvalidGraph(
            "edge set has indices outside the graph".into(),
        ));
    }
    if structure.nice.iter().any(|c| !c.edges().intersects(s)) {
        return Err(Error::NotGlobalForcingSet);
    }
    let base = g.all_edges() - s;
    for added in subsets_of_size(s) {
        let h = g.spanning_subgraph(base | added);
        let mut oracle = PmOracle::new(&h);
        if !oracle.has_pm(h.vertex_mask()) {
            continue;
        }
        let count = oracle.count(h.vertex_mask());
        if count != 1 {
            return Err(Error::NotUniquePerfectMatching { count });
        }
        let only = enumerate_perfect_matchings(&h, budget)?;
        let pairs = only[0].pairs(&h);
        return Ok(UniquePmExtension {
            added,
            matching: Matching::from_pairs(g, &pairs)?,
        });
    }
    unreachable!("adding all of s restores g, which has a perfect matching")
}

/// Output of [`lm_reduce`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LmReduction {
    pub reduced: Graph,
    /// Label in `g` of each vertex of `reduced`.
    pub vertex_map: Vec<usize>,
    /// `(pendant, neighbour)` pairs in removal order, in labels of `g`.
    pub removed: Vec<Edge>,
}

/// Repeatedly delete the smallest pendant vertex with its neighbour until
/// the minimum degree is at least 2 or no vertex is left.
pub fn lm_reduce(g: &Graph) -> Result<LmReduction> {
    if !PmOracle::new(g).has_pm(g.vertex_mask()) {
        return Err(Error::NoPerfectMatching);
    }
    let mut alive = g.vertex_mask();
    let mut removed = Vec::new();
    loop {
        let pendant = crate::graph::mask_vertices(alive)
            .find(|&v| (g.neighbor_mask(v) & alive).count_ones() == 1);
        let Some(u) = pendant else { break };
        let v = (g.neighbor_mask(u) & alive).trailing_zeros() as usize;
        alive &= !(1 << u | 1 << v);
        removed.push((u, v));
    }
    let (reduced, vertex_map) = g.induced_subgraph(alive);
    Ok(LmReduction {
        reduced,
        vertex_map,
        removed,
    })
}

/// Whether `m` meets the adjacency criterion for attaining
/// `af(G, M) = (2e - v) / 4`: for matching edges `xy` and `uv`, `xu` is an
/// edge exactly when `yv` is, and `xv` exactly when `yu` is.
pub fn is_nice_matching(g: &Graph, m: &Matching) -> bool {
    let pairs = m.pairs(g);
    pairs.iter().enumerate().all(|(i, &(x, y))| {
        pairs[i + 1..].iter().all(|&(u, v)| {
            g.has_edge(x, u) == g.has_edge(y, v) && g.has_edge(x, v) == g.has_edge(y, u)
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        Graph::new(n, (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)))).unwrap()
    }

    fn kn_n(n: usize) -> Graph {
        Graph::new(2 * n, (0..n).flat_map(|a| (n..2 * n).map(move |b| (a, b)))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn p4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    fn budget() -> ResourceBudget {
        ResourceBudget::default()
    }

    #[test]
    fn k4_single_matching_numbers() {
        let g = complete(4);
        let m = Matching::perfect(&g, &[(0, 1), (2, 3)]).unwrap();
        let f = forcing_number(&g, &m, &budget()).unwrap();
        assert_eq!(f.size, 1);
        assert_eq!(f.pairs(&g), vec![(0, 1)]);
        let af = anti_forcing_number(&g, &m, &budget()).unwrap();
        assert_eq!(af.size, 2);
        // lexicographically first: {02, 03}? 02 hits 0-1-3-2, 03 hits 0-1-2-3
        assert_eq!(af.pairs(&g), vec![(0, 2), (0, 3)]);
    }

    #[test]
    fn c6_and_p4() {
        let c6 = cycle(6);
        let m = Matching::perfect(&c6, &[(0, 1), (2, 3), (4, 5)]).unwrap();
        assert_eq!(forcing_number(&c6, &m, &budget()).unwrap().size, 1);
        assert_eq!(anti_forcing_number(&c6, &m, &budget()).unwrap().size, 1);
        let g = p4();
        let m = Matching::perfect(&g, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(forcing_number(&g, &m, &budget()).unwrap().size, 0);
    }

    #[test]
    fn summaries() {
        let s = forcing_summary(&complete(4), &budget()).unwrap();
        assert_eq!((s.f_max, s.af_max, s.gf.size), (1, 2, 2));
        let s = forcing_summary(&kn_n(3), &budget()).unwrap();
        assert_eq!((s.af_max, s.gf.size), (3, 4));
        let tree = Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 4)]).unwrap();
        let s = forcing_summary(&tree, &budget()).unwrap();
        assert_eq!(
            (s.f_min, s.f_max, s.af_min, s.af_max, s.gf.size),
            (0, 0, 0, 0, 0)
        );
    }

    #[test]
    fn summary_rejects_no_pm() {
        assert_eq!(
            forcing_summary(&complete(3), &budget()),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn prism_rung_matching_anti_forcing() {
        let g = Graph::new(
            6,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap();
        let m = Matching::perfect(&g, &[(0, 3), (1, 4), (2, 5)]).unwrap();
        assert_eq!(anti_forcing_number(&g, &m, &budget()).unwrap().size, 3);
    }

    #[test]
    fn complement_route_examples() {
        let k4 = global_forcing_via_subgraph(&complete(4), &budget()).unwrap();
        assert_eq!((k4.gf, k4.kept.len()), (2, 4));
        let c6 = global_forcing_via_subgraph(&cycle(6), &budget()).unwrap();
        assert_eq!((c6.gf, c6.kept.len()), (1, 5));
        // K_{2n}: e(T) = 3n - 2
        for n in 2..=3 {
            let t = global_forcing_via_subgraph(&complete(2 * n), &budget()).unwrap();
            assert_eq!(t.kept.len(), 3 * n - 2);
        }
        let two_edges = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            global_forcing_via_subgraph(&two_edges, &budget()),
            Err(Error::Disconnected)
        );
    }

    #[test]
    fn extension_examples() {
        let c4 = cycle(4);
        let s = c4.edge_set(&[(0, 1)]).unwrap();
        let ext = extend_to_unique_pm(&c4, s, &budget()).unwrap();
        assert!(ext.added.is_empty());
        assert_eq!(ext.matching.pairs(&c4), vec![(0, 3), (1, 2)]);

        // K_{3,3} with u_i = i-1, v_j = 2+j
        let g = kn_n(3);
        let s = g.edge_set(&[(1, 4), (1, 5), (2, 4), (2, 5)]).unwrap();
        let ext = extend_to_unique_pm(&g, s, &budget()).unwrap();
        assert_eq!(g.edge_list(ext.added), vec![(1, 4)]);
        assert_eq!(ext.matching.pairs(&g), vec![(0, 5), (1, 4), (2, 3)]);

        let k4 = complete(4);
        let s = k4.edge_set(&[(0, 1), (0, 2)]).unwrap();
        let ext = extend_to_unique_pm(&k4, s, &budget()).unwrap();
        assert!(ext.added.is_empty());
        assert_eq!(ext.matching.pairs(&k4), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn extension_rejects_non_global_forcing_set() {
        let k4 = complete(4);
        let s = k4.edge_set(&[(0, 1)]).unwrap();
        assert_eq!(
            extend_to_unique_pm(&k4, s, &budget()),
            Err(Error::NotGlobalForcingSet)
        );
    }

    #[test]
    fn lm_reduce_examples() {
        let r = lm_reduce(&p4()).unwrap();
        assert_eq!(r.reduced.n(), 0);
        assert_eq!(r.removed, vec![(0, 1), (2, 3)]);

        let dumbbell =
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
        let r = lm_reduce(&dumbbell).unwrap();
        assert_eq!(r.reduced, dumbbell);
        assert!(r.removed.is_empty());

        // C6 plus a pendant edge 6-7 hanging from vertex 0 by edge 0-6
        let mut edges: Vec<Edge> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        edges.extend([(0, 6), (6, 7)]);
        let g = Graph::new(8, edges).unwrap();
        let r = lm_reduce(&g).unwrap();
        assert_eq!(r.removed, vec![(7, 6)]);
        assert_eq!(r.reduced, cycle(6));
        assert_eq!(global_forcing_number(&g, &budget()).unwrap().size, 1);
        assert_eq!(
            global_forcing_number(&r.reduced, &budget()).unwrap().size,
            1
        );

        assert_eq!(lm_reduce(&complete(3)), Err(Error::NoPerfectMatching));
    }

    #[test]
    fn nice_matching_criterion() {
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let m = Matching::perfect(&c4, &[(0, 1), (2, 3)]).unwrap();
        assert!(is_nice_matching(&c4, &m));
        let paw = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 2)]).unwrap();
        let m = Matching::perfect(&paw, &[(0, 1), (2, 3)]).unwrap();
        assert!(!is_nice_matching(&paw, &m));
    }
}
