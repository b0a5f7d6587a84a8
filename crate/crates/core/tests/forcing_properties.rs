use std::collections::BTreeSet;

use proptest::prelude::*;

use matchforce_core::cycles::canonical_rotation;
use matchforce_core::families::{enumerate_corpus, CorpusFilter};
use matchforce_core::forcing::{extend_to_unique_pm, lm_reduce, MatchingStructure};
use matchforce_core::matching::has_perfect_matching;
use matchforce_core::{
    alternating_cycles, count_perfect_matchings, enumerate_perfect_matchings, forcing_summary,
    global_forcing_number, nice_cycles, Cycle, EdgeSet, Graph, ResourceBudget,
};

fn budget() -> ResourceBudget {
    ResourceBudget::default()
}

fn pm_corpus(n_max: usize, dedup: bool) -> impl Iterator<Item = Graph> {
    let filter = CorpusFilter {
        require_pm: true,
        require_connected: false,
        dedup_iso: dedup,
    };
    enumerate_corpus(n_max, filter).unwrap()
}

/// Random graph with a perfect matching: a planted matching plus random edges.
fn graph_with_pm(max_half: usize) -> impl Strategy<Value = Graph> {
    (1..=max_half)
        .prop_flat_map(|k| {
            let n = 2 * k;
            (
                Just(n),
                permutation(n),
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2),
            )
        })
        .prop_map(|(n, perm, bits)| {
            let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
            let mut i = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[i] {
                        edges.insert((a, b));
                    }
                    i += 1;
                }
            }
            for pair in perm.chunks(2) {
                edges.insert((pair[0].min(pair[1]), pair[0].max(pair[1])));
            }
            Graph::new(n, edges).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<usize>>()).prop_shuffle()
}

fn hits_all(family: &[EdgeSet], set: EdgeSet) -> bool {
    family.iter().all(|c| c.intersects(set))
}

#[test]
fn nice_cycles_are_the_union_of_alternating_cycles() {
    for g in pm_corpus(6, false) {
        let nice = nice_cycles(&g, &budget()).unwrap();
        let mut union: BTreeSet<Vec<usize>> = BTreeSet::new();
        let pms = enumerate_perfect_matchings(&g, &budget()).unwrap();
        for m in &pms {
            for c in alternating_cycles(&g, m, &budget()).unwrap().iter() {
                union.insert(c.vertices().to_vec());
            }
        }
        let direct: BTreeSet<Vec<usize>> = nice.iter().map(|c| c.vertices().to_vec()).collect();
        assert_eq!(direct, union, "{g:?}");
        assert_eq!(pms.len() as u64, count_perfect_matchings(&g));
        assert_eq!(pms.len() >= 2, !nice.is_empty(), "{g:?}");
        for c in nice.iter() {
            assert!(c.is_even());
            assert_eq!(canonical_rotation(c.vertices()), c.vertices());
            assert_eq!(Cycle::new(&g, c.vertices()).unwrap(), *c);
        }
    }
}

#[test]
fn unique_pm_extension_from_minimum_global_forcing_sets() {
    for g in pm_corpus(6, true) {
        let gf = global_forcing_number(&g, &budget()).unwrap();
        let ext = extend_to_unique_pm(&g, gf.witness, &budget()).unwrap();
        assert!(ext.added.is_subset(gf.witness));
        let h = g.spanning_subgraph((g.all_edges() - gf.witness) | ext.added);
        assert_eq!(count_perfect_matchings(&h), 1, "{g:?}");
        assert!(ext.matching.is_perfect(&g));
    }
}

#[test]
fn lm_reduce_examples() {
    let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
    let r = lm_reduce(&p4).unwrap();
    assert_eq!(r.reduced.n(), 0);
    assert_eq!(r.removed.len(), 2);

    // Hexagon 0..5 with a pendant edge 6-7 hung from vertex 0 through 0-6.
    let mut edges: Vec<(usize, usize)> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
    edges.extend([(0, 6), (6, 7)]);
    let g = Graph::new(8, edges).unwrap();
    let r = lm_reduce(&g).unwrap();
    assert_eq!(r.reduced.n(), 6);
    assert_eq!(r.removed, vec![(7, 6)]);
    assert_eq!(global_forcing_number(&g, &budget()).unwrap().size, 1);
    assert_eq!(
        global_forcing_number(&r.reduced, &budget()).unwrap().size,
        1
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_do_not_depend_on_labels(
        (g, perm) in graph_with_pm(4).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), permutation(n))
        })
    ) {
        let n = g.n();
        let h = g.relabel(&perm).unwrap();
        let a = forcing_summary(&g, &budget()).unwrap();
        let b = forcing_summary(&h, &budget()).unwrap();
        prop_assert_eq!(
            (a.f_min, a.f_max, a.af_min, a.af_max, a.gf.size, a.per_matching.len()),
            (b.f_min, b.f_max, b.af_min, b.af_max, b.gf.size, b.per_matching.len())
        );
        // The relabeled witness, mapped back, is a minimum global forcing set of g.
        let mut inverse = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        let back: Vec<(usize, usize)> = b.gf.pairs(&h).into_iter()
            .map(|(x, y)| (inverse[x].min(inverse[y]), inverse[x].max(inverse[y])))
            .collect();
        let back = g.edge_set(&back).unwrap();
        let nice: Vec<EdgeSet> = MatchingStructure::new(&g, &budget()).unwrap()
            .nice.iter().map(|c| c.edges()).collect();
        prop_assert_eq!(back.len(), a.gf.size);
        prop_assert!(hits_all(&nice, back));
    }

    #[test]
    fn lm_reduce_preserves_gf_and_witnesses(g in graph_with_pm(5)) {
        let r = lm_reduce(&g).unwrap();
        prop_assert!(r.reduced.n() == 0 || r.reduced.min_degree() >= 2);
        prop_assert!(has_perfect_matching(&r.reduced));
        let full = global_forcing_number(&g, &budget()).unwrap();
        let small = global_forcing_number(&r.reduced, &budget()).unwrap();
        prop_assert_eq!(full.size, small.size);
        // A reduced witness lifted to g is a global forcing set of g.
        let lifted: Vec<(usize, usize)> = small.pairs(&r.reduced).into_iter()
            .map(|(x, y)| (r.vertex_map[x], r.vertex_map[y]))
            .collect();
        let lifted = g.edge_set(&lifted).unwrap();
        let nice: Vec<EdgeSet> = MatchingStructure::new(&g, &budget()).unwrap()
            .nice.iter().map(|c| c.edges()).collect();
        prop_assert!(hits_all(&nice, lifted));
    }

    #[test]
    fn forcing_bounds_per_matching(g in graph_with_pm(4)) {
        let s = forcing_summary(&g, &budget()).unwrap();
        let delta = g.max_degree();
        for row in &s.per_matching {
            prop_assert!(row.forcing.size <= row.anti_forcing.size);
            prop_assert!(row.anti_forcing.size <= delta.saturating_sub(1) * row.forcing.size);
        }
        prop_assert!(s.gf.size >= s.f_max);
    }

    #[test]
    fn relabel_round_trip(
        (g, perm) in graph_with_pm(5).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), permutation(n))
        })
    ) {
        let n = g.n();
        let h = g.relabel(&perm).unwrap();
        let mut inverse = vec![0; n];
        for (old, &new) in perm.iter().enumerate() {
            inverse[new] = old;
        }
        prop_assert_eq!(h.relabel(&inverse).unwrap(), g);
    }
}
