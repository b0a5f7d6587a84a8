//! Exact rational edge vectors, membership in the perfect matching polytope,
//! and the test of whether that polytope equals the set of non-negative
//! 1-regular vectors.

use std::fmt;

use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::cycles::{odd_cycles_up_to, Cycle};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, Graph, ResourceBudget};
use crate::matching::{Matching, PmOracle};
use crate::util::combinations;

pub type Rational = Ratio<i64>;

/// Largest order accepted by the odd-set scan.
pub const MAX_POLYTOPE_VERTICES: usize = 16;

/// One exact rational value per edge of a host graph, in edge-index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalEdgeVector {
    values: Vec<Rational>,
}

impl RationalEdgeVector {
    pub fn new(g: &Graph, values: Vec<Rational>) -> Result<Self> {
        if values.len() != g.edge_count() {
            return Err(Error::VectorLength {
                expected: g.edge_count(),
                got: values.len(),
            });
        }
        Ok(RationalEdgeVector { values })
    }

    pub fn zero(g: &Graph) -> Self {
        RationalEdgeVector {
            values: vec![Rational::zero(); g.edge_count()],
        }
    }

    /// Incidence vector of an edge set.
    pub fn indicator(g: &Graph, set: EdgeSet) -> Self {
        let values = (0..g.edge_count())
            .map(|i| {
                if set.contains(i) {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        RationalEdgeVector { values }
    }

    pub fn incidence(g: &Graph, m: &Matching) -> Self {
        Self::indicator(g, m.edges())
    }

    /// Weighted sum of perfect matching incidence vectors.
    pub fn combination(g: &Graph, terms: &[(Matching, Rational)]) -> Self {
        let mut values = vec![Rational::zero(); g.edge_count()];
        for (m, w) in terms {
            for e in m.edges().iter() {
                values[e] += *w;
            }
        }
        RationalEdgeVector { values }
    }

    /// Values separated by whitespace or commas, each `p/q` or an integer.
    pub fn parse(g: &Graph, text: &str) -> Result<Self> {
        let mut values = Vec::new();
        let mut offset = 0;
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if !token.is_empty() {
                values.push(
                    parse_rational(token)
                        .map_err(|message| Error::Malformed { offset, message })?,
                );
            }
            offset += token.len() + 1;
        }
        Self::new(g, values)
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn get(&self, edge: usize) -> Rational {
        self.values[edge]
    }

    /// `x(F)`.
    pub fn sum_over(&self, set: EdgeSet) -> Rational {
        set.iter().map(|e| self.values[e]).sum()
    }
}

impl fmt::Display for RationalEdgeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parse `p/q` or an integer, rejecting a zero denominator.
pub fn parse_rational(token: &str) -> std::result::Result<Rational, String> {
    let (num, den) = match token.split_once('/') {
        Some((p, q)) => (p, q),
        None => (token, "1"),
    };
    let p: i64 = num
        .parse()
        .map_err(|_| format!("bad numerator in {token:?}"))?;
    let q: i64 = den
        .parse()
        .map_err(|_| format!("bad denominator in {token:?}"))?;
    if q == 0 {
        return Err(format!("zero denominator in {token:?}"));
    }
    Ok(Rational::new(p, q))
}

/// The first constraint found violated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Negative { edge: Edge, value: Rational },
    Degree { vertex: usize, value: Rational },
    OddSet { set: Vec<usize>, value: Rational },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Negative { edge, value } => {
                write!(f, "x({}, {}) = {value} < 0", edge.0, edge.1)
            }
            Violation::Degree { vertex, value } => write!(f, "x(∂({vertex})) = {value} ≠ 1"),
            Violation::OddSet { set, value } => write!(f, "x(∂({set:?})) = {value} < 1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MembershipVerdict {
    pub in_polytope: bool,
    pub violated: Option<Violation>,
}

/// Check `x` against the perfect matching polytope: non-negativity, then
/// degree constraints by vertex, then odd-set constraints by set size and
/// lexicographic order. For odd `n` the whole vertex set is one of the odd
/// sets.
pub fn pm_polytope_membership(g: &Graph, x: &RationalEdgeVector) -> Result<MembershipVerdict> {
    let n = g.n();
    if n > MAX_POLYTOPE_VERTICES {
        return Err(Error::SizeLimit {
            what: "polytope membership",
            n,
            max: MAX_POLYTOPE_VERTICES,
        });
    }
    if x.values.len() != g.edge_count() {
        return Err(Error::VectorLength {
            expected: g.edge_count(),
            got: x.values.len(),
        });
    }
    let fail = |v: Violation| {
        Ok(MembershipVerdict {
            in_polytope: false,
            violated: Some(v),
        })
    };
    if let Some(i) = (0..g.edge_count()).find(|&i| x.values[i] < Rational::zero()) {
        return fail(Violation::Negative {
            edge: g.edge(i),
            value: x.values[i],
        });
    }
    for v in 0..n {
        let value = x.sum_over(g.incident(v));
        if value != Rational::one() {
            return fail(Violation::Degree { vertex: v, value });
        }
    }
    // for even n an odd set and its complement define the same cut, and
    // complements of singletons are covered by the degree constraints
    let largest = if n % 2 == 1 { n } else { n.saturating_sub(3) };
    for size in (3..=largest).step_by(2) {
        for set in combinations(n, size) {
            let mask = set.iter().fold(0u32, |m, &v| m | 1 << v);
            let value = x.sum_over(g.cut(mask));
            if value < Rational::one() {
                return fail(Violation::OddSet { set, value });
            }
        }
    }
    Ok(MembershipVerdict {
        in_polytope: true,
        violated: None,
    })
}

/// Every vertex has `x(∂(v)) = 1`.
pub fn is_one_regular(g: &Graph, x: &RationalEdgeVector) -> bool {
    x.values.len() == g.edge_count()
        && (0..g.n()).all(|v| x.sum_over(g.incident(v)) == Rational::one())
}

/// Disjoint odd cycles (an even number, at least two) and a perfect matching
/// of the remaining vertices; `1/2` on the cycles and `1` on the matching is
/// a non-negative 1-regular vector outside the polytope.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfIntegralWitness {
    pub cycles: Vec<Cycle>,
    pub matching: Vec<Edge>,
    pub vector: RationalEdgeVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpmVerdict {
    pub equal: bool,
    pub witness: Option<HalfIntegralWitness>,
}

/// Whether every non-negative 1-regular vector lies in the perfect matching
/// polytope.
///
/// Vertices of the non-negative 1-regular polytope are half-integral: a
/// matching plus disjoint odd cycles carrying `1/2`. The polytopes agree
/// exactly when no such vertex has a cycle. The witness minimises the total
/// cycle length, then the cycle list lexicographically.
pub fn fpm_equals_pm(g: &Graph, budget: &ResourceBudget) -> Result<FpmVerdict> {
    let n = g.n();
    if n > MAX_POLYTOPE_VERTICES {
        return Err(Error::SizeLimit {
            what: "polytope equality test",
            n,
            max: MAX_POLYTOPE_VERTICES,
        });
    }
    let mut oracle = PmOracle::new(g);
    if !oracle.has_pm(g.vertex_mask()) {
        return Err(Error::NoPerfectMatching);
    }
    let odd = odd_cycles_up_to(g, n.saturating_sub(3), budget)?.cycles;
    let mut search = StructureSearch {
        g,
        odd: &odd,
        oracle,
        chosen: Vec::new(),
        best: None,
    };
    search.extend(0, 0, 0);
    let Some((_, picks)) = search.best else {
        return Ok(FpmVerdict {
            equal: true,
            witness: None,
        });
    };
    let cycles: Vec<Cycle> = picks.iter().map(|&i| odd[i].clone()).collect();
    let used = cycles.iter().fold(0u32, |m, c| m | c.vertex_mask());
    let matching = search
        .oracle
        .first_pm(g.vertex_mask() & !used)
        .expect("structure was accepted with a matching");
    let half = Rational::new(1, 2);
    let mut values = vec![Rational::zero(); g.edge_count()];
    for c in &cycles {
        for e in c.edges().iter() {
            values[e] = half;
        }
    }
    for e in matching.iter() {
        values[e] = Rational::one();
    }
    Ok(FpmVerdict {
        equal: false,
        witness: Some(HalfIntegralWitness {
            cycles,
            matching: g.edge_list(matching),
            vector: RationalEdgeVector { values },
        }),
    })
}

struct StructureSearch<'a> {
    g: &'a Graph,
    odd: &'a [Cycle],
    oracle: PmOracle<'a>,
    chosen: Vec<usize>,
    best: Option<(usize, Vec<usize>)>,
}

impl StructureSearch<'_> {
    /// Picks cycles in index order, so the first structure found at a given
    /// total length is the lexicographically smallest one.
    fn extend(&mut self, from: usize, used: u32, total: usize) {
        let count = self.chosen.len();
        if count >= 2
            && count.is_multiple_of(2)
            && self.best.as_ref().is_none_or(|(t, _)| total < *t)
            && self.oracle.has_pm(self.g.vertex_mask() & !used)
        {
            self.best = Some((total, self.chosen.clone()));
        }
        for i in from..self.odd.len() {
            let c = &self.odd[i];
            let next = total + c.len();
            // an odd count still needs one more cycle of length >= 3
            let floor = if count.is_multiple_of(2) {
                next + 3
            } else {
                next
            };
            if let Some((t, _)) = &self.best {
                if floor >= *t {
                    break;
                }
            }
            if next > self.g.n() {
                break;
            }
            if c.vertex_mask() & used != 0 {
                continue;
            }
            self.chosen.push(i);
            self.extend(i + 1, used | c.vertex_mask(), next);
            self.chosen.pop();
        }
    }
}
