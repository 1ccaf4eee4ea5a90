//! Recognizability verdicts for labeled prime graphs.

use std::fmt;

use num_bigint::BigUint;

use crate::census::{count_almost_simple, enumerate_simple, f_bound, pi_of, LieFamily, SimpleGroupId};
use crate::graph::{gk_from_spectrum, LabeledGraph, COCLIQUE_LIMIT};
use crate::group::{spectrum, GroupError, PermGroup};
use crate::tables::{gk_2g2_27, gk_e8};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Unrecognizable,
    CandidatesFinite,
    SpecialIdentified,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Unrecognizable => "UNRECOGNIZABLE",
            Status::CandidatesFinite => "CANDIDATES_FINITE",
            Status::SpecialIdentified => "SPECIAL_IDENTIFIED",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A cited condition with a stable tag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reason {
    pub tag: &'static str,
    pub text: String,
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.tag, self.text)
    }
}

pub const TAG_TWO_ADJACENT_TO_ALL_ODD: &str = "two-adjacent-to-all-odd";
pub const TAG_NO_THREE_COCLIQUE: &str = "no-three-coclique";
pub const TAG_NECESSARY_PASS: &str = "necessary-conditions-pass";
pub const TAG_E8_2_GRAPH: &str = "e8-2-graph";
pub const TAG_SIX_COMPONENTS: &str = "six-components";
pub const TAG_FIVE_COMPONENTS: &str = "five-components";
pub const TAG_BIPARTITE_1_5: &str = "bipartite-1-5";
pub const TAG_ALMOST_SIMPLE: &str = "almost-simple-bound";

/// The result of the two necessary conditions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NecessaryCheck {
    pub passed: bool,
    pub reasons: Vec<Reason>,
    pub witnesses: Vec<String>,
    /// Independence number when the graph is small enough for the exact search.
    pub independence_number: Option<usize>,
}

fn three_coclique(g: &LabeledGraph) -> Option<[u64; 3]> {
    let v = g.vertices();
    for (i, &a) in v.iter().enumerate() {
        for (j, &b) in v.iter().enumerate().skip(i + 1) {
            if g.has_edge(a, b) {
                continue;
            }
            for &c in &v[j + 1..] {
                if !g.has_edge(a, c) && !g.has_edge(b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

/// A group with prime graph `g` is unrecognizable if 2 is adjacent to every
/// odd vertex (then `G x C2` has the same graph) or if `g` has no coclique of
/// size 3.
pub fn necessary_conditions(g: &LabeledGraph) -> NecessaryCheck {
    let mut reasons = Vec::new();
    let mut witnesses = Vec::new();
    if g.contains(2) {
        let odd: Vec<u64> = g.vertices().iter().copied().filter(|&p| p != 2).collect();
        if odd.iter().all(|&p| g.has_edge(2, p)) {
            reasons.push(Reason {
                tag: TAG_TWO_ADJACENT_TO_ALL_ODD,
                text: "2 is adjacent to every odd vertex, so G x C2 has the same prime graph as G".into(),
            });
            witnesses.push("Γ(G) = Γ(G x C2) = Γ(G x C2 x C2) = ...".into());
        }
    }
    let independence_number = if g.len() <= COCLIQUE_LIMIT { g.independence_number().ok() } else { None };
    match three_coclique(g) {
        None => reasons.push(Reason {
            tag: TAG_NO_THREE_COCLIQUE,
            text: format!(
                "no 3 pairwise non-adjacent vertices (independence number {})",
                independence_number.map_or("< 3".to_string(), |t| t.to_string())
            ),
        }),
        Some(c) => {
            if reasons.is_empty() {
                reasons.push(Reason {
                    tag: TAG_NECESSARY_PASS,
                    text: format!("2 has a non-neighbour and {{{}, {}, {}}} is a coclique", c[0], c[1], c[2]),
                });
            }
        }
    }
    let passed = reasons.iter().all(|r| r.tag == TAG_NECESSARY_PASS);
    NecessaryCheck { passed, reasons, witnesses, independence_number }
}

/// A graph shape that pins down the group or family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub group: String,
    pub reason: Reason,
    pub notes: Vec<String>,
}

fn pi_matches(id: &SimpleGroupId, vertices: &[u64]) -> bool {
    pi_of(id).is_ok_and(|p| p == vertices)
}

/// Shapes with a known answer; `notes` collects shape matches that do not
/// amount to an identification.
pub fn special_detect(g: &LabeledGraph, notes: &mut Vec<String>) -> Option<Identification> {
    if gk_e8(2).is_ok_and(|e8| &e8 == g) {
        return Some(Identification {
            group: "E8(2)".into(),
            reason: Reason {
                tag: TAG_E8_2_GRAPH,
                text: "equal to the prime graph of E8(2), which determines the group".into(),
            },
            notes: vec![],
        });
    }
    let components = g.components().count();
    if components == 6 {
        let mut extra = Vec::new();
        let j4 = SimpleGroupId::sporadic("J4").expect("table entry");
        if !pi_matches(&j4, g.vertices()) {
            extra.push("vertex labels differ from π(J4), so no group has exactly this labeled graph".into());
        }
        return Some(Identification {
            group: "J4".into(),
            reason: Reason {
                tag: TAG_SIX_COMPONENTS,
                text: "J4 is the only group whose prime graph has six connected components".into(),
            },
            notes: extra,
        });
    }
    if components == 5 {
        let mut extra = Vec::new();
        let matching: Vec<String> = enumerate_simple(g.vertices())
            .into_iter()
            .filter(|id| matches!(id, SimpleGroupId::Lie { family: LieFamily::E8, .. }))
            .filter(|id| pi_matches(id, g.vertices()))
            .map(|id| id.to_string())
            .collect();
        if matching.is_empty() {
            extra.push("no E8(q) has exactly this vertex set".into());
        } else {
            extra.push(format!("E8 groups with this vertex set: {}", matching.join(", ")));
        }
        return Some(Identification {
            group: "E8(q), q = 0,1,4 mod 5".into(),
            reason: Reason {
                tag: TAG_FIVE_COMPONENTS,
                text: "a group whose prime graph has five connected components is E8(q) with q = 0,1,4 mod 5".into(),
            },
            notes: extra,
        });
    }
    if g.bipartite_shape() == Some((1, 5)) {
        let ree = gk_2g2_27().expect("embedded graph");
        if g == &ree {
            return Some(Identification {
                group: "2G2(27)".into(),
                reason: Reason {
                    tag: TAG_BIPARTITE_1_5,
                    text: "bipartite with parts of sizes 1 and 5 forces π = {2,3,7,13,19,37} and G/O_2(G) = 2G2(27), \
                           and 2G2(27) is determined by its prime graph"
                        .into(),
                },
                notes: vec![],
            });
        }
        if g.vertices() == ree.vertices() {
            notes.push(format!(
                "[{TAG_BIPARTITE_1_5}] labels match {{2,3,7,13,19,37}} but the edges differ from Γ(2G2(27)); no group has this graph"
            ));
        } else {
            notes.push(format!(
                "[{TAG_BIPARTITE_1_5}] bipartite with parts 1 and 5 but the vertex set is not {{2,3,7,13,19,37}}; no group has this graph"
            ));
        }
    }
    None
}

/// Socle candidates: simple groups whose prime set lies inside the vertex set.
pub fn candidate_socles(g: &LabeledGraph) -> Vec<SimpleGroupId> {
    if g.is_empty() {
        return vec![];
    }
    enumerate_simple(g.vertices())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reasons: Vec<Reason>,
    pub witnesses: Vec<String>,
    pub identification: Option<String>,
    pub notes: Vec<String>,
    pub candidate_socles: Vec<SimpleGroupId>,
    pub almost_simple_count: u64,
    pub f_bound_value: BigUint,
    pub independence_number: Option<usize>,
    pub components: usize,
}

/// Combines the necessary conditions, special shapes, socle candidates and
/// the almost simple count into one verdict. Positive recognizability is
/// never claimed outside the special shapes.
pub fn analyze(g: &LabeledGraph) -> Verdict {
    let check = necessary_conditions(g);
    let mut notes = Vec::new();
    let mut reasons = check.reasons.clone();
    let special = if check.passed { special_detect(g, &mut notes) } else { None };
    let candidate_socles = candidate_socles(g);
    let almost_simple_count = if g.is_empty() { 0 } else { count_almost_simple(g.vertices()).total };
    let f_bound_value = f_bound(g.len() as u64);
    let status = if !check.passed {
        Status::Unrecognizable
    } else if special.is_some() {
        Status::SpecialIdentified
    } else {
        Status::CandidatesFinite
    };
    let identification = special.map(|s| {
        reasons.push(s.reason);
        notes.extend(s.notes);
        s.group
    });
    if status != Status::Unrecognizable {
        reasons.push(Reason {
            tag: TAG_ALMOST_SIMPLE,
            text: "a group with finitely many companions is almost simple, and there are at most \
                   almost_simple_count <= f_bound almost simple groups on these primes"
                .into(),
        });
        if status == Status::CandidatesFinite {
            notes.push("recognizability itself is not decided here".into());
        }
    }
    Verdict {
        status,
        reasons,
        witnesses: check.witnesses,
        identification,
        notes,
        candidate_socles,
        almost_simple_count,
        f_bound_value,
        independence_number: check.independence_number,
        components: g.components().count(),
    }
}

impl Verdict {
    /// One `key=value` pair per line; list values are comma separated.
    pub fn to_key_value(&self) -> String {
        let mut out = String::new();
        let mut put = |k: &str, v: String| out.push_str(&format!("{k}={v}\n"));
        put("status", self.status.to_string());
        put("identification", self.identification.clone().unwrap_or_default());
        put("reasons", self.reasons.iter().map(|r| r.tag).collect::<Vec<_>>().join(","));
        put("components", self.components.to_string());
        put("independence_number", self.independence_number.map_or(String::new(), |t| t.to_string()));
        put("candidate_socles", self.candidate_socles.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(","));
        put("candidate_count", self.candidate_socles.len().to_string());
        put("almost_simple_count", self.almost_simple_count.to_string());
        put("f_bound", self.f_bound_value.to_string());
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "status: {}", self.status)?;
        if let Some(id) = &self.identification {
            writeln!(f, "identified: {id}")?;
        }
        for r in &self.reasons {
            writeln!(f, "reason: {r}")?;
        }
        for w in &self.witnesses {
            writeln!(f, "witness: {w}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        let t = self.independence_number.map_or("not computed".to_string(), |t| t.to_string());
        writeln!(f, "components: {}  independence number: {t}", self.components)?;
        let socles: Vec<String> = self.candidate_socles.iter().map(|s| s.to_string()).collect();
        writeln!(f, "candidate socles ({}): {}", socles.len(), socles.join(" "))?;
        writeln!(f, "almost simple groups on these primes: {}", self.almost_simple_count)?;
        writeln!(f, "F bound: {}", self.f_bound_value)
    }
}

/// Checks `Γ(G) = Γ(G x C2)` by enumeration.
pub fn c2_witness_holds(g: &PermGroup, cap: u64) -> Result<bool, GroupError> {
    let doubled = g.direct_product(&PermGroup::cyclic(2));
    Ok(gk_from_spectrum(&spectrum(g, cap)?) == gk_from_spectrum(&spectrum(&doubled, cap)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{embedded_group, spectrum};

    fn graph(v: &[u64], e: &[(u64, u64)]) -> LabeledGraph {
        LabeledGraph::new(v.iter().copied(), e.iter().copied()).unwrap()
    }

    fn a10_graph() -> LabeledGraph {
        graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (3, 5), (3, 7)])
    }

    #[test]
    fn a10_has_no_three_coclique() {
        let v = analyze(&a10_graph());
        assert_eq!(v.status, Status::Unrecognizable);
        assert!(v.reasons.iter().any(|r| r.tag == TAG_NO_THREE_COCLIQUE));
        assert_eq!(v.independence_number, Some(2));
    }

    #[test]
    fn triangle_is_unrecognizable_with_witness() {
        let v = analyze(&graph(&[2, 3, 5], &[(2, 3), (2, 5), (3, 5)]));
        assert_eq!(v.status, Status::Unrecognizable);
        assert!(v.reasons.iter().any(|r| r.tag == TAG_TWO_ADJACENT_TO_ALL_ODD));
        assert!(!v.witnesses.is_empty());
        assert_eq!(v.candidate_socles.len(), 3);
    }

    #[test]
    fn e8_2_is_identified() {
        let g = gk_e8(2).unwrap();
        let check = necessary_conditions(&g);
        assert!(check.passed);
        assert_eq!(g.t_at(2).unwrap(), 5);
        assert!(g.is_coclique(&[151, 241, 331]));
        let v = analyze(&g);
        assert_eq!(v.status, Status::SpecialIdentified);
        assert_eq!(v.identification.as_deref(), Some("E8(2)"));
        let e8 = SimpleGroupId::lie(LieFamily::E8, 8, 2).unwrap();
        assert!(v.candidate_socles.contains(&e8));
        assert!(BigUint::from(v.almost_simple_count) <= v.f_bound_value);
    }

    #[test]
    fn six_components_give_j4() {
        let g = graph(&[2, 3, 5, 7, 11, 23, 29, 31, 37, 43], &[(2, 3), (2, 5), (2, 7), (2, 11), (3, 5), (3, 7), (3, 11), (5, 7)]);
        assert_eq!(g.components().count(), 6);
        let v = analyze(&g);
        assert_eq!(v.status, Status::SpecialIdentified);
        assert_eq!(v.identification.as_deref(), Some("J4"));
        let relabeled = graph(&[2, 3, 5, 7, 11, 13], &[]);
        let v = analyze(&relabeled);
        assert_eq!(v.identification.as_deref(), Some("J4"));
        assert!(v.notes.iter().any(|n| n.contains("labels differ")));
    }

    #[test]
    fn ree_graph_is_identified() {
        let v = analyze(&gk_2g2_27().unwrap());
        assert_eq!(v.status, Status::SpecialIdentified);
        assert_eq!(v.identification.as_deref(), Some("2G2(27)"));
        let shifted = graph(&[2, 3, 5, 7, 11, 13], &[(2, 3), (2, 5), (2, 7)]);
        let v = analyze(&shifted);
        assert_eq!(v.status, Status::CandidatesFinite);
        assert!(v.notes.iter().any(|n| n.contains(TAG_BIPARTITE_1_5)));
    }

    #[test]
    fn five_components_name_the_e8_family() {
        let mut notes = Vec::new();
        let g = graph(&[2, 3, 5, 7, 11], &[]);
        let id = special_detect(&g, &mut notes).unwrap();
        assert!(id.group.starts_with("E8(q)"));
        assert!(id.notes.iter().any(|n| n.contains("no E8(q)")));
    }

    #[test]
    fn a5_has_no_special_shape() {
        let g = gk_from_spectrum(&spectrum(&PermGroup::alternating(5), 100).unwrap());
        let mut notes = Vec::new();
        assert!(special_detect(&g, &mut notes).is_none());
        assert_eq!(analyze(&g).status, Status::CandidatesFinite);
    }

    #[test]
    fn socles_for_small_sets() {
        let names = |v: &[u64]| -> Vec<String> {
            candidate_socles(&LabeledGraph::new(v.iter().copied(), []).unwrap()).iter().map(|s| s.to_string()).collect()
        };
        assert_eq!(names(&[2, 3, 5]), vec!["Alt(5)", "Alt(6)", "2A3(2)"]);
        assert!(names(&[2, 3]).is_empty());
        let v = analyze(&LabeledGraph::new([2, 3], []).unwrap());
        assert_eq!(v.status, Status::Unrecognizable);
    }

    #[test]
    fn key_value_report() {
        let kv = analyze(&a10_graph()).to_key_value();
        assert!(kv.starts_with("status=UNRECOGNIZABLE\n"));
        assert!(kv.contains("reasons=no-three-coclique\n"));
        assert!(kv.contains("candidate_socles=Alt(5),A1(7),Alt(6),A1(8),"), "{kv}");
    }

    #[test]
    fn c2_witness() {
        // In M10 the vertex 2 is isolated, so doubling adds edges.
        let c2 = PermGroup::cyclic(2);
        for g in [PermGroup::cyclic(30), PermGroup::alternating(4).direct_product(&c2), PermGroup::alternating(5).direct_product(&c2)] {
            let gamma = gk_from_spectrum(&spectrum(&g, 10_000).unwrap());
            assert!(necessary_conditions(&gamma).reasons.iter().any(|r| r.tag == TAG_TWO_ADJACENT_TO_ALL_ODD));
            assert!(c2_witness_holds(&g, 10_000).unwrap());
        }
        assert!(!c2_witness_holds(&embedded_group("M10").unwrap(), 10_000).unwrap());
    }

    #[test]
    fn analysis_is_deterministic() {
        let g = gk_e8(2).unwrap();
        assert_eq!(analyze(&g), analyze(&g));
    }
}
