//! Graphs with a unique perfect matching: the matching bridge, the
//! triangular labeling of the bipartite case, and odd dumbbells.

use serde::{Deserialize, Serialize};

use crate::cycles::{all_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{mask_vertices, Edge, EdgeSet, Graph, ResourceBudget};
use crate::matching::{count_perfect_matchings, enumerate_perfect_matchings, Matching};

/// The perfect matching of `g`, or an error when there is not exactly one.
pub fn unique_perfect_matching(g: &Graph) -> Result<Matching> {
    match count_perfect_matchings(g) {
        1 => {
            let budget = ResourceBudget::default();
            Ok(enumerate_perfect_matchings(g, &budget)?[0])
        }
        0 => Err(Error::NoPerfectMatching),
        count => Err(Error::NotUniquePerfectMatching { count }),
    }
}

/// Smallest edge of the unique perfect matching that is a bridge.
pub fn kotzig_cut_edge(g: &Graph) -> Result<Edge> {
    let m = unique_perfect_matching(g)?;
    let bridge = (m.edges() & g.bridges())
        .first()
        .expect("a graph with a unique perfect matching has a matching bridge");
    Ok(g.edge(bridge))
}

/// Orderings `u_1..u_n`, `v_1..v_n` with matching `{u_i v_i}` and every edge
/// of the form `u_i v_j` with `i <= j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BipartiteLabeling {
    pub u: Vec<usize>,
    pub v: Vec<usize>,
}

impl BipartiteLabeling {
    /// Check the labeling against `g`.
    pub fn validate(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = self.u.len();
        if self.v.len() != n || 2 * n != g.n() {
            return Err("labeling does not cover the vertex set".into());
        }
        let mut index = vec![None; g.n()];
        for (i, (&a, &b)) in self.u.iter().zip(&self.v).enumerate() {
            if index[a].is_some() || index[b].is_some() {
                return Err(format!("vertex repeated at position {i}"));
            }
            index[a] = Some((0u8, i));
            index[b] = Some((1u8, i));
            if !g.has_edge(a, b) {
                return Err(format!("u_{0} v_{0} is not an edge", i + 1));
            }
        }
        for &(a, b) in g.edges() {
            let (sa, ia) = index[a].expect("covered");
            let (sb, ib) = index[b].expect("covered");
            let ok = match (sa, sb) {
                (0, 1) => ia <= ib,
                (1, 0) => ib <= ia,
                _ => false,
            };
            if !ok {
                return Err(format!("edge ({a}, {b}) breaks the triangular order"));
            }
        }
        Ok(())
    }
}

/// Triangular labeling of a bipartite graph with a unique perfect matching.
///
/// The side containing vertex 0 (and the smallest vertex of every other
/// component) plays the role of `V`. Each step takes the smallest remaining
/// `V` vertex with exactly one remaining neighbour.
pub fn bipartite_unique_pm_labeling(g: &Graph) -> Result<BipartiteLabeling> {
    let colors = g.two_coloring().ok_or(Error::NotBipartite)?;
    unique_perfect_matching(g)?;
    let mut alive = g.vertex_mask();
    let half = g.n() / 2;
    let mut labeling = BipartiteLabeling {
        u: Vec::with_capacity(half),
        v: Vec::with_capacity(half),
    };
    while alive != 0 {
        let x = mask_vertices(alive)
            .find(|&x| colors[x] == 0 && (g.neighbor_mask(x) & alive).count_ones() == 1)
            .expect("a unique perfect matching leaves a pendant vertex on each side");
        let y = (g.neighbor_mask(x) & alive).trailing_zeros() as usize;
        labeling.v.push(x);
        labeling.u.push(y);
        alive &= !(1 << x) & !(1 << y);
    }
    debug_assert!(labeling.validate(g).is_ok());
    let e = g.edge_count();
    assert!(e <= half * (half + 1) / 2, "edge bound violated: {e} edges");
    Ok(labeling)
}

/// Two vertex-disjoint odd cycles joined by a path of odd length whose
/// interior avoids both cycles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddDumbbell {
    pub cycle_a: Cycle,
    pub cycle_b: Cycle,
    /// Runs from a vertex of `cycle_a` to a vertex of `cycle_b`.
    pub path: Vec<usize>,
    /// Perfect matching of the dumbbell, contained in the graph's matching.
    pub pm: Vec<Edge>,
}

impl OddDumbbell {
    pub fn vertex_mask(&self) -> u32 {
        self.cycle_a.vertex_mask()
            | self.cycle_b.vertex_mask()
            | self.path.iter().fold(0, |m, &v| m | 1 << v)
    }

    pub fn edges(&self, g: &Graph) -> EdgeSet {
        let mut set = self.cycle_a.edges() | self.cycle_b.edges();
        for w in self.path.windows(2) {
            if let Some(i) = g.edge_index(w[0], w[1]) {
                set.insert(i);
            }
        }
        set
    }

    /// Check every structural requirement, and that `pm` lies inside `m`.
    pub fn validate(&self, g: &Graph, m: &Matching) -> std::result::Result<(), String> {
        let (a, b) = (self.cycle_a.vertex_mask(), self.cycle_b.vertex_mask());
        if self.cycle_a.is_even() || self.cycle_b.is_even() {
            return Err("cycle of even length".into());
        }
        if a & b != 0 {
            return Err("cycles share a vertex".into());
        }
        let path = &self.path;
        if path.len() < 2 || !path.len().is_multiple_of(2) {
            return Err(format!(
                "path has {} edges, need an odd number",
                path.len().saturating_sub(1)
            ));
        }
        if a >> path[0] & 1 == 0 || b >> path[path.len() - 1] & 1 == 0 {
            return Err("path does not join the two cycles".into());
        }
        let mut seen = 0u32;
        for (i, &v) in path.iter().enumerate() {
            if seen >> v & 1 == 1 {
                return Err(format!("path repeats vertex {v}"));
            }
            seen |= 1 << v;
            let interior = i > 0 && i + 1 < path.len();
            if interior && (a | b) >> v & 1 == 1 {
                return Err(format!("path interior vertex {v} lies on a cycle"));
            }
            if i > 0 && !g.has_edge(path[i - 1], v) {
                return Err(format!("({}, {v}) is not an edge", path[i - 1]));
            }
        }
        let edges = self.edges(g);
        let pm = g.edge_set(&self.pm).map_err(|e| e.to_string())?;
        if !pm.is_subset(edges) {
            return Err("matching uses an edge outside the dumbbell".into());
        }
        if !pm.is_subset(m.edges()) {
            return Err("matching is not contained in the given matching".into());
        }
        let covered = g.covered_vertices(pm);
        if covered != self.vertex_mask() || 2 * pm.len() != covered.count_ones() as usize {
            return Err("matching is not a perfect matching of the dumbbell".into());
        }
        let sub = g.spanning_subgraph(edges);
        let (inner, _) = sub.induced_subgraph(self.vertex_mask());
        if count_perfect_matchings(&inner) != 1 {
            return Err("dumbbell has more than one perfect matching".into());
        }
        Ok(())
    }
}

/// Odd dumbbell in a graph with a unique perfect matching and minimum
/// degree at least two.
///
/// Starts from the smallest matching bridge `uv` and grows a longest
/// alternating path from each end; the last vertex of each closes an odd
/// cycle back onto its path.
pub fn find_odd_dumbbell(g: &Graph) -> Result<OddDumbbell> {
    let m = unique_perfect_matching(g)?;
    if let Some(v) = (0..g.n()).find(|&v| g.degree(v) < 2) {
        return Err(Error::PendantVertex(v));
    }
    if let Some(found) = constructive_dumbbell(g, &m) {
        if found.validate(g, &m).is_ok() {
            return Ok(found);
        }
    }
    exhaustive_odd_dumbbell(g, &m, &ResourceBudget::default())?
        .ok_or_else(|| Error::InvalidGraph("no odd dumbbell found".into()))
}

fn constructive_dumbbell(g: &Graph, m: &Matching) -> Option<OddDumbbell> {
    let bridge = (m.edges() & g.bridges()).first()?;
    let (u, v) = g.edge(bridge);
    let partner = m.partners(g);
    let (stem_a, cyc_a) = half_dumbbell(g, &partner, u)?;
    let (stem_b, cyc_b) = half_dumbbell(g, &partner, v)?;
    let mut path: Vec<usize> = stem_a.into_iter().rev().collect();
    path.extend(stem_b);
    let mut d = OddDumbbell {
        cycle_a: Cycle::new(g, &cyc_a).ok()?,
        cycle_b: Cycle::new(g, &cyc_b).ok()?,
        path,
        pm: Vec::new(),
    };
    let mask = d.vertex_mask();
    d.pm = m
        .pairs(g)
        .into_iter()
        .filter(|&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
        .collect();
    Some(d)
}

/// Stem `p_0..p_j` and odd cycle `p_j..p_k` from a longest alternating path
/// starting at `start` with a non-matching edge.
fn half_dumbbell(g: &Graph, partner: &[usize], start: usize) -> Option<(Vec<usize>, Vec<usize>)> {
    let mut best = vec![start];
    let mut path = vec![start];
    longest_alternating(
        g,
        partner,
        &mut path,
        1 << start | 1 << partner[start],
        &mut best,
    );
    let k = best.len() - 1;
    let last = best[k];
    // another neighbour of the end sits at an even position; the nearest
    // one gives the shortest cycle
    let j = (0..k.saturating_sub(1))
        .rev()
        .find(|&j| j % 2 == 0 && g.has_edge(last, best[j]))?;
    Some((best[..=j].to_vec(), best[j..].to_vec()))
}

fn longest_alternating(
    g: &Graph,
    partner: &[usize],
    path: &mut Vec<usize>,
    used: u32,
    best: &mut Vec<usize>,
) {
    if path.len() > best.len() {
        best.clone_from(path);
    }
    let x = *path.last().unwrap();
    for y in g.neighbors(x) {
        if used >> y & 1 == 1 || partner[x] == y {
            continue;
        }
        let z = partner[y];
        path.push(y);
        path.push(z);
        longest_alternating(g, partner, path, used | 1 << y | 1 << z, best);
        path.pop();
        path.pop();
    }
}

/// Smallest odd dumbbell whose perfect matching lies inside `m`, by
/// exhaustive search over pairs of odd cycles and connecting paths.
pub fn exhaustive_odd_dumbbell(
    g: &Graph,
    m: &Matching,
    budget: &ResourceBudget,
) -> Result<Option<OddDumbbell>> {
    let odd: Vec<Cycle> = all_cycles(g, budget)?
        .cycles
        .into_iter()
        .filter(|c| !c.is_even())
        .collect();
    let partner = m.partners(g);
    for (i, ca) in odd.iter().enumerate() {
        for cb in &odd[i + 1..] {
            if ca.vertex_mask() & cb.vertex_mask() != 0 {
                continue;
            }
            let blocked = ca.vertex_mask() | cb.vertex_mask();
            for &s in ca.vertices() {
                let mut path = vec![s];
                if let Some(d) = search_paths(g, &partner, m, ca, cb, blocked, &mut path) {
                    return Ok(Some(d));
                }
            }
        }
    }
    Ok(None)
}

fn search_paths(
    g: &Graph,
    partner: &[usize],
    m: &Matching,
    ca: &Cycle,
    cb: &Cycle,
    blocked: u32,
    path: &mut Vec<usize>,
) -> Option<OddDumbbell> {
    let x = *path.last().unwrap();
    let on_path = path.iter().fold(0u32, |acc, &v| acc | 1 << v);
    for y in g.neighbors(x) {
        if cb.vertex_mask() >> y & 1 == 1 {
            path.push(y);
            if path.len().is_multiple_of(2) {
                let mask = blocked | on_path | 1 << y;
                if mask_vertices(mask).all(|v| mask >> partner[v] & 1 == 1) {
                    let d = OddDumbbell {
                        cycle_a: ca.clone(),
                        cycle_b: cb.clone(),
                        path: path.clone(),
                        pm: m
                            .pairs(g)
                            .into_iter()
                            .filter(|&(a, b)| mask >> a & 1 == 1 && mask >> b & 1 == 1)
                            .collect(),
                    };
                    if d.validate(g, m).is_ok() {
                        return Some(d);
                    }
                }
            }
            path.pop();
        } else if (blocked | on_path) >> y & 1 == 0 {
            path.push(y);
            if let Some(d) = search_paths(g, partner, m, ca, cb, blocked, path) {
                return Some(d);
            }
            path.pop();
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Two triangles joined by an edge: the smallest odd dumbbell.
    fn two_triangles() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3)]).unwrap()
    }

    #[test]
    fn bridge_of_two_triangles() {
        assert_eq!(kotzig_cut_edge(&two_triangles()).unwrap(), (0, 3));
        let c4 = Graph::new(4, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert_eq!(
            kotzig_cut_edge(&c4),
            Err(Error::NotUniquePerfectMatching { count: 2 })
        );
    }

    #[test]
    fn dumbbell_of_two_triangles() {
        let g = two_triangles();
        let d = find_odd_dumbbell(&g).unwrap();
        assert_eq!(d.cycle_a.vertices(), &[0, 1, 2]);
        assert_eq!(d.cycle_b.vertices(), &[3, 4, 5]);
        assert_eq!(d.path, vec![0, 3]);
        assert_eq!(d.pm, vec![(0, 3), (1, 2), (4, 5)]);
        let m = unique_perfect_matching(&g).unwrap();
        assert!(d.validate(&g, &m).is_ok());
        assert!(exhaustive_odd_dumbbell(&g, &m, &ResourceBudget::default())
            .unwrap()
            .is_some());
    }

    #[test]
    fn dumbbell_with_long_handle() {
        // triangles 0-1-2 and 5-6-7 joined through 3, 4
        let g = Graph::new(
            8,
            [
                (0, 1),
                (1, 2),
                (0, 2),
                (0, 3),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 7),
                (5, 7),
            ],
        )
        .unwrap();
        let d = find_odd_dumbbell(&g).unwrap();
        assert_eq!(d.path.len(), 4);
        assert!(d
            .validate(&g, &unique_perfect_matching(&g).unwrap())
            .is_ok());
    }

    #[test]
    fn pendant_rejected() {
        let p2 = Graph::new(2, [(0, 1)]).unwrap();
        assert_eq!(find_odd_dumbbell(&p2), Err(Error::PendantVertex(0)));
    }

    #[test]
    fn triangular_labeling() {
        // u_i = 2i+1, v_j = 2j, edges u_i v_j for i <= j (half graph, n = 3)
        let mut edges = Vec::new();
        for i in 0..3 {
            for j in i..3 {
                edges.push((2 * i + 1, 2 * j));
            }
        }
        let g = Graph::new(6, edges).unwrap();
        let l = bipartite_unique_pm_labeling(&g).unwrap();
        assert_eq!(l.v, vec![0, 2, 4]);
        assert_eq!(l.u, vec![1, 3, 5]);
        assert!(l.validate(&g).is_ok());

        let k33 = Graph::new(6, (0..3).flat_map(|a| (3..6).map(move |c| (a, c)))).unwrap();
        assert_eq!(
            bipartite_unique_pm_labeling(&k33),
            Err(Error::NotUniquePerfectMatching { count: 6 })
        );
        let tri = Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(bipartite_unique_pm_labeling(&tri), Err(Error::NotBipartite));
    }
}
