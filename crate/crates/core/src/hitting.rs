//! Exact minimum hitting set by branch and bound.
//!
//! Elements are indices `0..universe_size` (at most 128) and sets are
//! bitmasks over them. The search runs in two passes: a branch and bound that
//! branches on the element hitting the most open sets and proves the optimum
//! size, then a depth-first search in element order bounded by that size,
//! whose first hit is the lexicographically smallest minimum witness.

use crate::error::{Error, Result};
use crate::graph::EdgeSet;

/// Bitmask over the elements of a hitting-set universe.
pub type ElementSet = EdgeSet;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingInstance {
    universe_size: usize,
    sets: Vec<ElementSet>,
}

impl HittingInstance {
    pub fn new(universe_size: usize, sets: Vec<ElementSet>) -> Result<Self> {
        if universe_size > 128 {
            return Err(Error::InvalidInstance(format!(
                "universe of {universe_size} elements exceeds 128"
            )));
        }
        let full = ElementSet::full(universe_size);
        for (i, s) in sets.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::InvalidInstance(format!("set {i} is empty")));
            }
            if !s.is_subset(full) {
                return Err(Error::InvalidInstance(format!(
                    "set {i} has elements outside the universe"
                )));
            }
        }
        Ok(HittingInstance {
            universe_size,
            sets,
        })
    }

    /// Instance from index lists.
    pub fn from_lists(universe_size: usize, sets: &[Vec<usize>]) -> Result<Self> {
        if let Some(&bad) = sets
            .iter()
            .flatten()
            .find(|&&e| e >= universe_size.min(128))
        {
            return Err(Error::InvalidInstance(format!(
                "element {bad} outside the universe"
            )));
        }
        Self::new(
            universe_size,
            sets.iter().map(|s| s.iter().copied().collect()).collect(),
        )
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn sets(&self) -> &[ElementSet] {
        &self.sets
    }

    pub fn is_hit_by(&self, chosen: ElementSet) -> bool {
        self.sets.iter().all(|s| s.intersects(chosen))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSolution {
    pub size: usize,
    /// Lexicographically smallest minimum hitting set.
    pub witness: ElementSet,
}

/// Solve exactly. The witness is the lexicographically smallest (as a
/// sorted index list) among all minimum hitting sets.
pub fn min_hitting_set(instance: &HittingInstance) -> HittingSolution {
    let sets = reduce(&instance.sets);
    if sets.is_empty() {
        return HittingSolution {
            size: 0,
            witness: ElementSet::EMPTY,
        };
    }
    let full = ElementSet::full(instance.universe_size).0;
    let greedy = greedy_cover(&sets, full);
    let mut best = greedy.count_ones() as usize;
    optimise(&sets, full, 0, &mut best);
    let witness = first_lex(&sets, 0, 0, best).expect("a hitting set of the optimal size exists");
    debug_assert_eq!(witness.count_ones() as usize, best);
    HittingSolution {
        size: best,
        witness: EdgeSet(witness),
    }
}

/// Drop duplicates and supersets; they never change the answer.
fn reduce(sets: &[ElementSet]) -> Vec<u128> {
    let mut v: Vec<u128> = sets.iter().map(|s| s.0).collect();
    v.sort_by_key(|s| (s.count_ones(), *s));
    v.dedup();
    let mut kept: Vec<u128> = Vec::with_capacity(v.len());
    for s in v {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

fn most_frequent(sets: &[u128], avail: u128) -> Option<u32> {
    let mut counts = [0u32; 128];
    let mut any = 0u128;
    for &s in sets {
        let mut bits = s & avail;
        any |= bits;
        while bits != 0 {
            counts[bits.trailing_zeros() as usize] += 1;
            bits &= bits - 1;
        }
    }
    if any == 0 {
        return None;
    }
    let mut best = any.trailing_zeros();
    let mut bits = any;
    while bits != 0 {
        let e = bits.trailing_zeros();
        if counts[e as usize] > counts[best as usize] {
            best = e;
        }
        bits &= bits - 1;
    }
    Some(best)
}

fn greedy_cover(sets: &[u128], avail: u128) -> u128 {
    let mut open: Vec<u128> = sets.to_vec();
    let mut chosen = 0u128;
    while !open.is_empty() {
        let e = most_frequent(&open, avail).expect("every set meets the universe");
        chosen |= 1 << e;
        open.retain(|&s| s >> e & 1 == 0);
    }
    chosen
}

/// Lower bound: size of a greedy packing of pairwise disjoint open sets.
fn packing_bound(sets: &[u128], avail: u128) -> usize {
    let mut order: Vec<u128> = sets.iter().map(|&s| s & avail).collect();
    order.sort_unstable_by_key(|s| s.count_ones());
    let mut used = 0u128;
    let mut count = 0;
    for s in order {
        if s & used == 0 {
            used |= s;
            count += 1;
        }
    }
    count
}

/// Branch and bound on the optimum size; improves `best` in place.
fn optimise(open: &[u128], avail: u128, chosen: u32, best: &mut usize) {
    let mut chosen = chosen;
    let mut open: Vec<u128> = open.to_vec();
    // unit propagation
    loop {
        let mut forced = 0u128;
        for &s in &open {
            let live = s & avail;
            if live == 0 {
                return;
            }
            if live.count_ones() == 1 {
                forced |= live;
            }
        }
        if forced == 0 {
            break;
        }
        chosen += forced.count_ones();
        open.retain(|&s| s & forced == 0);
    }
    let size = chosen as usize;
    if open.is_empty() {
        if size < *best {
            *best = size;
        }
        return;
    }
    if size + packing_bound(&open, avail) >= *best {
        return;
    }
    let e = most_frequent(&open, avail).expect("open sets meet avail");
    let bit = 1u128 << e;
    let rest: Vec<u128> = open.iter().copied().filter(|&s| s & bit == 0).collect();
    optimise(&rest, avail & !bit, chosen + 1, best);
    optimise(&open, avail & !bit, chosen, best);
}

/// First hitting set of size at most `budget` in lexicographic order, using
/// only elements with index `>= from`.
fn first_lex(open: &[u128], from: u32, chosen: u128, budget: usize) -> Option<u128> {
    if open.is_empty() {
        return Some(chosen);
    }
    if budget == 0 || from >= 128 {
        return None;
    }
    let avail = !((1u128 << from) - 1);
    let mut union = 0u128;
    for &s in open {
        let live = s & avail;
        if live == 0 {
            return None;
        }
        union |= live;
    }
    if packing_bound(open, avail) > budget {
        return None;
    }
    // elements that hit no open set can never be part of a minimum witness
    let j = union.trailing_zeros();
    let bit = 1u128 << j;
    let rest: Vec<u128> = open.iter().copied().filter(|&s| s & bit == 0).collect();
    if let Some(found) = first_lex(&rest, j + 1, chosen | bit, budget - 1) {
        return Some(found);
    }
    first_lex(open, j + 1, chosen, budget)
}
