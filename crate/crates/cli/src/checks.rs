//! Registry of theorem checks T01..T16 and their per-graph evaluation.

use serde::Serialize;
use serde_json::{json, Value};

use matchforce_core::families::Family;
use matchforce_core::forcing::is_nice_matching;
use matchforce_core::Result;

use crate::analysis::Analysis;

/// Two sides of a violated relation, plus context.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Conflict {
    pub left: Side,
    pub right: Side,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Side {
    pub label: String,
    pub value: Value,
}

fn side(label: impl Into<String>, value: impl Into<Value>) -> Side {
    Side {
        label: label.into(),
        value: value.into(),
    }
}

/// Result of one check on one graph.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass { note: Option<String> },
    Fail(Conflict),
    NotApplicable { note: Option<String> },
}

const PASS: Outcome = Outcome::Pass { note: None };
const NA: Outcome = Outcome::NotApplicable { note: None };

fn verdict(ok: bool, left: Side, right: Side) -> Outcome {
    if ok {
        PASS
    } else {
        Outcome::Fail(Conflict {
            left,
            right,
            note: None,
        })
    }
}

pub struct CheckDef {
    pub id: &'static str,
    pub statement: &'static str,
    /// Graphs the statement applies to (all of them have a perfect matching).
    pub scope: &'static str,
    run: fn(&Analysis<'_>) -> Result<Outcome>,
    describe: fn(&[String]) -> Option<String>,
}

impl CheckDef {
    /// Evaluate on one graph; graphs without a perfect matching are outside
    /// every statement.
    pub fn evaluate(&self, a: &Analysis<'_>) -> Result<Outcome> {
        if !a.has_pm() {
            return Ok(NA);
        }
        (self.run)(a)
    }

    /// Summary line built from the notes collected over a corpus.
    pub fn describe(&self, notes: &[String]) -> Option<String> {
        (self.describe)(notes)
    }
}

fn no_detail(_: &[String]) -> Option<String> {
    None
}

pub const REGISTRY: [CheckDef; 16] = [
    CheckDef {
        id: "T01",
        scope: "graphs with a perfect matching",
        statement: "f(G,M) <= af(G,M) <= (Δ(G)-1) f(G,M) for every perfect matching M",
        run: t01,
        describe: no_detail,
    },
    CheckDef {
        id: "T02",
        scope: "connected graphs",
        statement: "connected G: Af(G) <= c(G), strictly when G is non-bipartite",
        run: t02,
        describe: no_detail,
    },
    CheckDef {
        id: "T03",
        scope: "connected graphs",
        statement: "connected G: gf(G) <= c(G), with equality iff every cycle is nice",
        run: t03,
        describe: no_detail,
    },
    CheckDef {
        id: "T04",
        scope: "graphs with a perfect matching",
        statement: "gf(G) >= ceil(log2 Φ(G))",
        run: t04,
        describe: no_detail,
    },
    CheckDef {
        id: "T05",
        scope: "graphs with a perfect matching",
        statement: "gf(G) >= F(G)",
        run: t05,
        describe: no_detail,
    },
    CheckDef {
        id: "T06",
        scope: "bipartite graphs",
        statement: "bipartite G: gf(G) >= Af(G)",
        run: t06,
        describe: no_detail,
    },
    CheckDef {
        id: "T07",
        scope: "connected bipartite graphs on at least 6 vertices",
        statement: "connected bipartite G on 2n >= 6 vertices: 0 <= gf-Af <= (n-1)(n-2)/2, \
                    with equality on the right iff G is K_{n,n}",
        run: t07,
        describe: no_detail,
    },
    CheckDef {
        id: "T08",
        scope: "graphs with a perfect matching",
        statement: "Af(G) <= (2e(G) - v(G)) / 4",
        run: t08,
        describe: no_detail,
    },
    CheckDef {
        id: "T09",
        scope: "graphs with a perfect matching",
        statement: "M meets the nice-matching adjacency criterion iff af(G,M) = (2e(G) - v(G)) / 4",
        run: t09,
        describe: no_detail,
    },
    CheckDef {
        id: "T10",
        scope: "connected graphs with a nice perfect matching",
        statement: "connected G on 2n vertices with a nice perfect matching: gf(G) >= n-1",
        run: t10,
        describe: no_detail,
    },
    CheckDef {
        id: "T11",
        scope: "connected bipartite graphs on at least 8 vertices",
        statement:
            "connected bipartite G on 2n >= 8 vertices: G is K_{n,n}-e iff gf(G) = n^2-2n-1, \
                    and then gf-Af = (n^2-3n)/2",
        run: t11,
        describe: no_detail,
    },
    CheckDef {
        id: "T12",
        scope: "members of class G",
        statement: "G in class G: gf(G) >= Af(G)",
        run: t12,
        describe: describe_t12,
    },
    CheckDef {
        id: "T13",
        scope: "graphs with PM(G) equal to the 1-regular vectors",
        statement: "PM(G) equals the non-negative 1-regular vectors => G in class G",
        run: t13,
        describe: no_detail,
    },
    CheckDef {
        id: "T14",
        scope: "bricks on at most 16 vertices",
        statement:
            "brick G: solid <=> in class G <=> PM(G) equals the non-negative 1-regular vectors",
        run: t14,
        describe: no_detail,
    },
    CheckDef {
        id: "T15",
        scope: "connected graphs on at least 4 vertices",
        statement: "connected G on 2n >= 4 vertices: -(n^2-n-2)/2 <= gf-Af <= (n-1)(n-2), \
                    with equality on the left iff n = 2",
        run: t15,
        describe: no_detail,
    },
    CheckDef {
        id: "T16",
        scope: "complete, balanced complete bipartite and prism_chain graphs",
        statement: "gf(K_2n) = 2(n-1)^2 and Af(K_2n) = n^2-n; gf(K_{n,n}) = (n-1)^2; \
                    G_k: gf = 3k-1, Af = 4k-1, matching covered",
        run: t16,
        describe: describe_t16,
    },
];

pub fn lookup(id: &str) -> Option<&'static CheckDef> {
    REGISTRY.iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Cyclomatic number of a connected graph.
fn cyclomatic(a: &Analysis<'_>) -> Option<usize> {
    let b = a.basic();
    b.connected.then_some(b.cyclomatic)
}

fn half_order(a: &Analysis<'_>) -> usize {
    a.graph().n() / 2
}

fn ceil_log2(x: usize) -> usize {
    if x <= 1 {
        0
    } else {
        (usize::BITS - (x - 1).leading_zeros()) as usize
    }
}

/// Connected bipartite with both colour classes of size `n` and `edges`
/// edges.
fn balanced_bipartite_with(a: &Analysis<'_>, edges: usize) -> bool {
    let g = a.graph();
    let b = a.basic();
    b.connected && b.bipartite && g.n().is_multiple_of(2) && g.edge_count() == edges && {
        let colors = g.two_coloring().expect("bipartite");
        2 * colors.iter().filter(|&&c| c == 0).count() == g.n()
    }
}

fn t01(a: &Analysis<'_>) -> Result<Outcome> {
    let s = a.summary()?;
    let delta = a.basic().delta_max;
    for row in &s.per_matching {
        let (f, af) = (row.forcing.size, row.anti_forcing.size);
        let upper = delta.saturating_sub(1) * f;
        let failed = if f > af {
            Some((side("f(G,M)", f), side("af(G,M)", af)))
        } else if af > upper {
            Some((side("af(G,M)", af), side("(Δ-1)f(G,M)", upper)))
        } else {
            None
        };
        if let Some((left, right)) = failed {
            return Ok(Outcome::Fail(Conflict {
                left,
                right,
                note: Some(format!("M = {:?}", row.matching.pairs(a.graph()))),
            }));
        }
    }
    Ok(PASS)
}

fn t02(a: &Analysis<'_>) -> Result<Outcome> {
    let Some(c) = cyclomatic(a) else {
        return Ok(NA);
    };
    let af = a.summary()?.af_max;
    let ok = af <= c && (a.basic().bipartite || af < c);
    Ok(verdict(ok, side("Af", af), side("c", c)))
}

fn t03(a: &Analysis<'_>) -> Result<Outcome> {
    let Some(c) = cyclomatic(a) else {
        return Ok(NA);
    };
    let gf = a.gf()?;
    let st = a.structure()?;
    let all_nice = st.cycles.len() == st.nice.len();
    if gf > c {
        return Ok(verdict(false, side("gf", gf), side("c", c)));
    }
    Ok(verdict(
        (gf == c) == all_nice,
        side("gf = c", gf == c),
        side("all cycles nice", all_nice),
    ))
}

fn t04(a: &Analysis<'_>) -> Result<Outcome> {
    let phi = a.structure()?.phi();
    let gf = a.gf()?;
    let bound = ceil_log2(phi);
    Ok(verdict(
        gf >= bound,
        side("gf", gf),
        side("ceil(log2 Φ)", bound),
    ))
}

fn t05(a: &Analysis<'_>) -> Result<Outcome> {
    let s = a.summary()?;
    Ok(verdict(
        s.gf.size >= s.f_max,
        side("gf", s.gf.size),
        side("F", s.f_max),
    ))
}

fn t06(a: &Analysis<'_>) -> Result<Outcome> {
    if !a.basic().bipartite {
        return Ok(NA);
    }
    let s = a.summary()?;
    Ok(verdict(
        s.gf.size >= s.af_max,
        side("gf", s.gf.size),
        side("Af", s.af_max),
    ))
}

fn t07(a: &Analysis<'_>) -> Result<Outcome> {
    let n = half_order(a);
    if !(a.basic().connected && a.basic().bipartite && n >= 3) {
        return Ok(NA);
    }
    let s = a.summary()?;
    let diff = s.gf.size as i64 - s.af_max as i64;
    let upper = ((n - 1) * (n - 2) / 2) as i64;
    if diff < 0 || diff > upper {
        let (l, r) = if diff < 0 { (0, diff) } else { (diff, upper) };
        return Ok(verdict(
            false,
            side(if diff < 0 { "0" } else { "gf-Af" }, l),
            side(if diff < 0 { "gf-Af" } else { "(n-1)(n-2)/2" }, r),
        ));
    }
    let complete = balanced_bipartite_with(a, n * n);
    Ok(verdict(
        (diff == upper) == complete,
        side("gf-Af = (n-1)(n-2)/2", diff == upper),
        side("G is K_{n,n}", complete),
    ))
}

fn t08(a: &Analysis<'_>) -> Result<Outcome> {
    let g = a.graph();
    let af = a.summary()?.af_max;
    let bound = 2 * g.edge_count() as i64 - g.n() as i64;
    Ok(verdict(
        4 * af as i64 <= bound,
        side("4Af", 4 * af),
        side("2e-v", bound),
    ))
}

fn t09(a: &Analysis<'_>) -> Result<Outcome> {
    let g = a.graph();
    let s = a.summary()?;
    let bound = 2 * g.edge_count() as i64 - g.n() as i64;
    for row in &s.per_matching {
        let criterion = is_nice_matching(g, &row.matching);
        let attains = 4 * row.anti_forcing.size as i64 == bound;
        if criterion != attains {
            return Ok(Outcome::Fail(Conflict {
                left: side("adjacency criterion", criterion),
                right: side("4af(G,M) = 2e-v", attains),
                note: Some(format!("M = {:?}", row.matching.pairs(g))),
            }));
        }
    }
    Ok(PASS)
}

fn t10(a: &Analysis<'_>) -> Result<Outcome> {
    if !a.basic().connected {
        return Ok(NA);
    }
    let g = a.graph();
    let st = a.structure()?;
    if !st.matchings.iter().any(|m| is_nice_matching(g, m)) {
        return Ok(NA);
    }
    let gf = a.gf()?;
    let bound = half_order(a).saturating_sub(1);
    Ok(verdict(gf >= bound, side("gf", gf), side("n-1", bound)))
}

fn t11(a: &Analysis<'_>) -> Result<Outcome> {
    let n = half_order(a);
    if !(a.basic().connected && a.basic().bipartite && n >= 4) {
        return Ok(NA);
    }
    let s = a.summary()?;
    let minus_edge = balanced_bipartite_with(a, n * n - 1);
    let target = n * n - 2 * n - 1;
    if minus_edge != (s.gf.size == target) {
        return Ok(verdict(
            false,
            side("G is K_{n,n}-e", minus_edge),
            side("gf = n^2-2n-1", s.gf.size == target),
        ));
    }
    if minus_edge {
        let diff = s.gf.size as i64 - s.af_max as i64;
        let expected = ((n * n - 3 * n) / 2) as i64;
        return Ok(verdict(
            diff == expected,
            side("gf-Af", diff),
            side("(n^2-3n)/2", expected),
        ));
    }
    Ok(PASS)
}

const OUTSIDE_WITH_GF_GE_AF: &str = "outside class, gf >= Af";

fn t12(a: &Analysis<'_>) -> Result<Outcome> {
    let member = a.class_g()?.member;
    let s = a.summary()?;
    if !member {
        let note = (s.gf.size >= s.af_max).then(|| OUTSIDE_WITH_GF_GE_AF.to_string());
        return Ok(Outcome::NotApplicable { note });
    }
    Ok(verdict(
        s.gf.size >= s.af_max,
        side("gf", s.gf.size),
        side("Af", s.af_max),
    ))
}

fn describe_t12(notes: &[String]) -> Option<String> {
    let count = notes.iter().filter(|n| *n == OUTSIDE_WITH_GF_GE_AF).count();
    Some(format!("{count} graph(s) outside the class with gf >= Af"))
}

fn t13(a: &Analysis<'_>) -> Result<Outcome> {
    let fpm = a.fpm()?.equal;
    if !fpm {
        return Ok(NA);
    }
    let member = a.class_g()?.member;
    Ok(verdict(
        member,
        side("PM(G) = FPM(G)", fpm),
        side("in class G", member),
    ))
}

fn t14(a: &Analysis<'_>) -> Result<Outcome> {
    if !a.brick()? {
        return Ok(NA);
    }
    let solid = a.solid()?;
    let member = a.class_g()?.member;
    let fpm = a.fpm()?.equal;
    if solid != member {
        return Ok(verdict(
            false,
            side("solid", solid),
            side("in class G", member),
        ));
    }
    Ok(verdict(
        member == fpm,
        side("in class G", member),
        side("PM(G) = FPM(G)", fpm),
    ))
}

fn t15(a: &Analysis<'_>) -> Result<Outcome> {
    let n = half_order(a) as i64;
    if !a.basic().connected || n < 2 {
        return Ok(NA);
    }
    let s = a.summary()?;
    let diff = s.gf.size as i64 - s.af_max as i64;
    let lower = -(n * n - n - 2) / 2;
    let upper = (n - 1) * (n - 2);
    if diff < lower {
        return Ok(verdict(
            false,
            side("gf-Af", diff),
            side("-(n^2-n-2)/2", lower),
        ));
    }
    if diff > upper {
        return Ok(verdict(
            false,
            side("gf-Af", diff),
            side("(n-1)(n-2)", upper),
        ));
    }
    Ok(verdict(
        (diff == lower) == (n == 2),
        side("gf-Af = -(n^2-n-2)/2", diff == lower),
        side("n = 2", n == 2),
    ))
}

fn t16(a: &Analysis<'_>) -> Result<Outcome> {
    let g = a.graph();
    let v = g.n();
    let prism_k = a
        .case
        .family
        .as_ref()
        .filter(|f| f.family == Family::PrismChain)
        .map(|f| f.params[0]);
    let n = v / 2;
    let (label, gf_expected, af_expected) = if let Some(k) = prism_k {
        (format!("prism_chain:{k}"), 3 * k - 1, Some(4 * k - 1))
    } else if v >= 2 && v.is_multiple_of(2) && g.edge_count() == v * (v - 1) / 2 {
        (
            format!("complete:{v}"),
            2 * (n - 1) * (n - 1),
            Some(n * n - n),
        )
    } else if balanced_bipartite_with(a, n * n) && n >= 1 {
        (format!("complete_bipartite:{n}"), (n - 1) * (n - 1), None)
    } else {
        return Ok(NA);
    };
    let s = a.summary()?;
    let (gf, af) = (s.gf.size, s.af_max);
    if gf != gf_expected {
        return Ok(verdict(
            false,
            side("gf", gf),
            side(format!("gf({label})"), gf_expected),
        ));
    }
    if let Some(expected) = af_expected {
        if af != expected {
            return Ok(verdict(
                false,
                side("Af", af),
                side(format!("Af({label})"), expected),
            ));
        }
    }
    if prism_k.is_some() && !a.matching_covered() {
        return Ok(verdict(
            false,
            side("matching covered", false),
            side(label, true),
        ));
    }
    Ok(Outcome::Pass {
        note: Some(format!("{label} gf={gf} Af={af}")),
    })
}

fn describe_t16(notes: &[String]) -> Option<String> {
    let mut distinct: Vec<&str> = Vec::new();
    for n in notes {
        if !distinct.contains(&n.as_str()) {
            distinct.push(n);
        }
    }
    (!distinct.is_empty()).then(|| distinct.join("; "))
}

/// JSON form of a conflict for the counterexample record.
pub fn conflict_json(graph6: &str, conflict: &Conflict) -> Value {
    let mut v = json!({
        "graph6": graph6,
        "left": conflict.left,
        "right": conflict.right,
    });
    if let Some(note) = &conflict.note {
        v["note"] = json!(note);
    }
    v
}
