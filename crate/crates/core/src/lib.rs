//! Forcing, anti-forcing and global forcing numbers of perfect matchings in
//! small graphs, together with the matching structure theory they rely on.

pub mod cycles;
pub mod error;
pub mod families;
pub mod forcing;
pub mod graph;
pub mod hitting;
pub mod matching;
pub mod polytope;
pub mod structure;
mod util;

pub use cycles::{
    all_cycles, alternating_cycles, nice_cycles, odd_cycles_up_to, Cycle, CycleFamily,
};
pub use error::{BudgetKind, Error, Result};
pub use families::{generate, parse_graph6, write_graph6, Family, FamilySpec};
pub use forcing::{
    anti_forcing_number, forcing_number, forcing_summary, global_forcing_number,
    global_forcing_via_subgraph, is_nice_matching, ForcingSummary, MatchingStructure, MinimumSet,
};
pub use graph::{Edge, EdgeSet, Graph, ResourceBudget};
pub use hitting::{min_hitting_set, HittingInstance, HittingSolution};
pub use matching::{count_perfect_matchings, enumerate_perfect_matchings, Matching};
pub use polytope::{
    fpm_equals_pm, is_one_regular, pm_polytope_membership, FpmVerdict, MembershipVerdict, Rational,
    RationalEdgeVector, Violation,
};
pub use structure::{
    bipartite_unique_pm_labeling, classify_cut, find_odd_dumbbell, in_class_g, is_brick,
    is_matching_covered, is_solid, kotzig_cut_edge, ClassGVerdict, CutReport, OddDumbbell,
};
