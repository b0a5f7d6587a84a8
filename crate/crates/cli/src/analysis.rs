//! Per-graph invariants computed on first use and cached.

use std::cell::OnceCell;

use matchforce_core::families::FamilySpec;
use matchforce_core::forcing::{summarize, ForcingSummary, MatchingStructure};
use matchforce_core::graph::{BasicInvariants, Graph, ResourceBudget};
use matchforce_core::matching::has_perfect_matching;
use matchforce_core::polytope::{fpm_equals_pm, FpmVerdict};
use matchforce_core::structure::{
    in_class_g_with, is_brick, is_matching_covered, is_solid, ClassGVerdict,
};
use matchforce_core::{odd_cycles_up_to, Error, Result};

/// A graph together with the family it was generated from, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphCase {
    pub graph: Graph,
    pub family: Option<FamilySpec>,
}

impl GraphCase {
    pub fn plain(graph: Graph) -> Self {
        GraphCase {
            graph,
            family: None,
        }
    }
}

pub struct Analysis<'a> {
    pub case: &'a GraphCase,
    pub budget: ResourceBudget,
    basic: BasicInvariants,
    has_pm: OnceCell<bool>,
    structure: OnceCell<Result<MatchingStructure>>,
    summary: OnceCell<Result<ForcingSummary>>,
    class_g: OnceCell<Result<ClassGVerdict>>,
    fpm: OnceCell<Result<FpmVerdict>>,
    matching_covered: OnceCell<bool>,
    brick: OnceCell<Result<bool>>,
    solid: OnceCell<Result<bool>>,
}

fn cached<T>(cell: &OnceCell<Result<T>>, init: impl FnOnce() -> Result<T>) -> Result<&T> {
    cell.get_or_init(init).as_ref().map_err(Clone::clone)
}

impl<'a> Analysis<'a> {
    pub fn new(case: &'a GraphCase, budget: ResourceBudget) -> Self {
        Analysis {
            basic: case.graph.basic_invariants(),
            case,
            budget,
            has_pm: OnceCell::new(),
            structure: OnceCell::new(),
            summary: OnceCell::new(),
            class_g: OnceCell::new(),
            fpm: OnceCell::new(),
            matching_covered: OnceCell::new(),
            brick: OnceCell::new(),
            solid: OnceCell::new(),
        }
    }

    pub fn graph(&self) -> &'a Graph {
        &self.case.graph
    }

    pub fn basic(&self) -> &BasicInvariants {
        &self.basic
    }

    pub fn has_pm(&self) -> bool {
        *self
            .has_pm
            .get_or_init(|| has_perfect_matching(self.graph()))
    }

    pub fn structure(&self) -> Result<&MatchingStructure> {
        cached(&self.structure, || {
            MatchingStructure::new(self.graph(), &self.budget)
        })
    }

    pub fn summary(&self) -> Result<&ForcingSummary> {
        cached(&self.summary, || summarize(self.graph(), self.structure()?))
    }

    pub fn gf(&self) -> Result<usize> {
        Ok(self.summary()?.gf.size)
    }

    pub fn class_g(&self) -> Result<&ClassGVerdict> {
        cached(&self.class_g, || {
            let g = self.graph();
            if !self.has_pm() {
                return Err(Error::NoPerfectMatching);
            }
            let odd = odd_cycles_up_to(g, g.n().saturating_sub(3), &self.budget)?;
            let mut oracle = matchforce_core::matching::PmOracle::new(g);
            Ok(in_class_g_with(g, &odd, &mut oracle))
        })
    }

    pub fn fpm(&self) -> Result<&FpmVerdict> {
        cached(&self.fpm, || fpm_equals_pm(self.graph(), &self.budget))
    }

    pub fn matching_covered(&self) -> bool {
        *self
            .matching_covered
            .get_or_init(|| is_matching_covered(self.graph()))
    }

    pub fn brick(&self) -> Result<bool> {
        cached(&self.brick, || is_brick(self.graph(), &self.budget)).copied()
    }

    pub fn solid(&self) -> Result<bool> {
        cached(&self.solid, || is_solid(self.graph(), &self.budget)).copied()
    }
}
