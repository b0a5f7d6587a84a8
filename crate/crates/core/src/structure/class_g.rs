//! The class of graphs with a perfect matching and no two vertex-disjoint
//! odd cycles whose removal leaves a graph with a perfect matching.

use crate::cycles::{odd_cycles_up_to, Cycle, CycleFamily};
use crate::error::{Error, Result};
use crate::graph::{Graph, ResourceBudget};
use crate::matching::PmOracle;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassGVerdict {
    pub member: bool,
    /// For non-members, the pair `(C, C')` with `C < C'` minimising
    /// `|C| + |C'|` and then the canonical forms.
    pub witness: Option<(Cycle, Cycle)>,
}

/// Membership test; `g` must have a perfect matching.
pub fn in_class_g(g: &Graph, budget: &ResourceBudget) -> Result<ClassGVerdict> {
    let mut oracle = PmOracle::new(g);
    if !oracle.has_pm(g.vertex_mask()) {
        return Err(Error::NoPerfectMatching);
    }
    let cycles = odd_cycles_up_to(g, g.n().saturating_sub(3), budget)?;
    Ok(in_class_g_with(g, &cycles, &mut oracle))
}

/// Same test over an already enumerated family containing at least every
/// odd cycle of length up to `n - 3`.
pub fn in_class_g_with(
    g: &Graph,
    cycles: &CycleFamily,
    oracle: &mut PmOracle<'_>,
) -> ClassGVerdict {
    // family order is by length then vertices, so the odd cycles inherit it
    let odd: Vec<&Cycle> = cycles.iter().filter(|c| !c.is_even()).collect();
    let all = g.vertex_mask();
    let mut best: Option<(usize, usize, usize)> = None;
    for (i, a) in odd.iter().enumerate() {
        for (j, b) in odd.iter().enumerate().skip(i + 1) {
            let total = a.len() + b.len();
            if total > g.n() || best.is_some_and(|(t, _, _)| total > t) {
                break;
            }
            if best.is_some_and(|(t, _, _)| total == t) {
                // an earlier pair of the same total already wins
                break;
            }
            let used = a.vertex_mask() | b.vertex_mask();
            if a.vertex_mask() & b.vertex_mask() == 0 && oracle.has_pm(all & !used) {
                best = Some((total, i, j));
            }
        }
    }
    ClassGVerdict {
        member: best.is_none(),
        witness: best.map(|(_, i, j)| (odd[i].clone(), odd[j].clone())),
    }
}
