//! Structural tests on matchings: unique perfect matchings, membership in
//! the class of graphs with two disjoint odd cycles, and cut theory.

pub mod class_g;
pub mod cuts;
pub mod unique_pm;

pub use class_g::{in_class_g, in_class_g_with, ClassGVerdict};
pub use cuts::{
    classify_cut, is_bicritical_three_connected, is_brick, is_matching_covered, is_solid, CutReport,
};
pub use unique_pm::{
    bipartite_unique_pm_labeling, exhaustive_odd_dumbbell, find_odd_dumbbell, kotzig_cut_edge,
    unique_perfect_matching, BipartiteLabeling, OddDumbbell,
};
