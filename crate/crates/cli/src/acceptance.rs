//! The acceptance suite: twelve timed checks, each reported on one line.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use primegraph::census::{audit_frontier, count_almost_simple, enumerate_simple, f_bound, order_value, LieFamily, SimpleGroupId};
use primegraph::corpus::{extended_corpus, small_corpus};
use primegraph::elemgraph::{eppo_equivalence, gk_from_clique_sizes, GraphKind};
use primegraph::graph::{gk_from_spectrum, LabeledGraph};
use primegraph::group::linear::semidirect_spectrum;
use primegraph::group::{embedded_group, embedded_module, is_solvable, spectrum, PermGroup};
use primegraph::numtheory::{ppd_exists_divisor_form, ppd_exists_order_form};
use primegraph::recognize::{analyze, c2_witness_holds, necessary_conditions, Status, TAG_NO_THREE_COCLIQUE, TAG_TWO_ADJACENT_TO_ALL_ODD};
use primegraph::tables::{gk_2g2_27, gk_e8, table2_e8_2, table3_monster};

pub const DEFAULT_CAP: u64 = 20_000_000;

/// Prime sets run through the census checks.
pub const CENSUS_SETS: &[&[u64]] = &[&[2, 3], &[2, 3, 5], &[2, 3, 7], &[2, 3, 5, 7], &[2, 3, 5, 7, 11, 13]];

type Check = fn() -> Result<String, String>;

pub struct Criterion {
    pub number: u32,
    pub title: &'static str,
    pub limit: Duration,
    check: Check,
}

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub number: u32,
    pub title: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub limit: Duration,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {:>2} {} [{:.2}s / {}s] {}: {}",
            self.number,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.limit.as_secs(),
            self.title,
            self.detail
        )
    }
}

impl Criterion {
    pub fn run(&self) -> CriterionResult {
        let start = Instant::now();
        let outcome = (self.check)();
        let elapsed = start.elapsed();
        let (mut passed, mut detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e),
        };
        if passed && elapsed > self.limit {
            passed = false;
            detail = format!("over time limit; {detail}");
        }
        CriterionResult { number: self.number, title: self.title, passed, detail, elapsed, limit: self.limit }
    }
}

const fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { number: 1, title: "spectra and prime graphs of S5, S6, A5, A6", limit: secs(1), check: small_examples },
        Criterion { number: 2, title: "prime graphs of A10 and Aut(J2)", limit: secs(120), check: a10_and_j2_2 },
        Criterion { number: 3, title: "E8(2) graph equals its embedded table", limit: secs(1), check: e8_2_table },
        Criterion { number: 4, title: "Monster table self-consistency", limit: secs(1), check: monster_table },
        Criterion { number: 5, title: "EPPO simple list by enumeration", limit: secs(60), check: eppo_list },
        Criterion { number: 6, title: "natural-module extensions", limit: secs(30), check: natural_modules },
        Criterion { number: 7, title: "simple group census", limit: secs(60), check: census },
        Criterion { number: 8, title: "primitive divisor exception sets", limit: secs(60), check: zsigmondy },
        Criterion { number: 9, title: "prime graphs from maximal clique sizes", limit: secs(120), check: clique_sizes },
        Criterion { number: 10, title: "recognizability verdicts", limit: secs(30), check: verdicts },
        Criterion { number: 11, title: "almost simple counts", limit: secs(60), check: almost_simple },
        Criterion { number: 12, title: "solvability and cocliques over the corpus", limit: secs(60), check: corpus_properties },
    ]
}

pub fn run_all() -> Vec<CriterionResult> {
    criteria().iter().map(Criterion::run).collect()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gamma(g: &PermGroup) -> Result<LabeledGraph, String> {
    Ok(gk_from_spectrum(&spectrum(g, DEFAULT_CAP).map_err(|e| e.to_string())?))
}

fn graph(vertices: &[u64], edges: &[(u64, u64)]) -> LabeledGraph {
    LabeledGraph::new(vertices.to_vec(), edges.to_vec()).expect("well-formed graph")
}

/// The prime graph of A10 as computed from its spectrum.
pub fn a10_graph() -> Result<LabeledGraph, String> {
    gamma(&PermGroup::alternating(10))
}

pub fn triangle_235() -> LabeledGraph {
    graph(&[2, 3, 5], &[(2, 3), (2, 5), (3, 5)])
}

/// A graph with six connected components.
pub fn six_component_graph() -> LabeledGraph {
    graph(&[2, 3, 5, 7, 11, 23, 29, 31, 37, 43], &[(2, 3), (2, 5), (2, 7), (2, 11), (3, 5), (3, 7), (3, 11), (5, 7)])
}

fn small_examples() -> Result<String, String> {
    let s5 = spectrum(&PermGroup::symmetric(5), DEFAULT_CAP).map_err(|e| e.to_string())?;
    let s6 = spectrum(&PermGroup::symmetric(6), DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(s5.orders() == s6.orders(), || format!("omega(S5) = {s5} but omega(S6) = {s6}"))?;
    ensure(s5.group_order() == 120 && s6.group_order() == 720, || "unexpected orders of S5, S6".into())?;
    let a5 = spectrum(&PermGroup::alternating(5), DEFAULT_CAP).map_err(|e| e.to_string())?;
    let a6 = spectrum(&PermGroup::alternating(6), DEFAULT_CAP).map_err(|e| e.to_string())?;
    ensure(a5.orders() != a6.orders(), || "omega(A5) = omega(A6)".into())?;
    ensure(gk_from_spectrum(&a5) == gk_from_spectrum(&a6), || "prime graphs of A5 and A6 differ".into())?;
    Ok(format!("omega(S5) = omega(S6) = {s5}; omega(A5) = {a5}, omega(A6) = {a6}"))
}

fn a10_and_j2_2() -> Result<String, String> {
    let a10 = a10_graph()?;
    let j2_2 = gamma(&embedded_group("J2.2").map_err(|e| e.to_string())?)?;
    let want_a10 = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (3, 5), (3, 7)]);
    let want_j2_2 = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (2, 7), (3, 5)]);
    ensure(a10 == want_a10, || format!("A10 edges {:?}", a10.edges()))?;
    ensure(j2_2 == want_j2_2, || format!("Aut(J2) edges {:?}", j2_2.edges()))?;
    ensure(a10 != j2_2, || "graphs are equal as labeled graphs".into())?;
    let iso = a10.isomorphic(&j2_2).map_err(|e| e.to_string())?;
    ensure(iso, || "graphs are not isomorphic".into())?;
    Ok("edges as drawn; unequal as labeled graphs, isomorphic as graphs".into())
}

fn e8_2_table() -> Result<String, String> {
    let computed = gk_e8(2).map_err(|e| e.to_string())?;
    let table = table2_e8_2().and_then(|t| t.to_graph()).map_err(|e| e.to_string())?;
    ensure(computed == table, || "criterion graph differs from the table".into())?;
    let comps = computed.components();
    let pi1 = comps.component_of(2).map_or(0, <[u64]>::len);
    ensure(comps.count() == 4 && pi1 == 13, || format!("s = {}, |pi_1| = {pi1}", comps.count()))?;
    Ok(format!("{} vertices, s = 4, |pi_1| = 13", computed.len()))
}

fn monster_table() -> Result<String, String> {
    let t = table3_monster().map_err(|e| e.to_string())?;
    let mut problems = t.degree_mismatches();
    problems.extend(t.asymmetries());
    ensure(problems.is_empty(), || problems.join("; "))?;
    ensure(!t.rows.is_empty(), || "empty table".into())?;
    Ok(format!("{} rows consistent and symmetric", t.rows.len()))
}

fn eppo_list() -> Result<String, String> {
    let mut groups: Vec<PermGroup> = vec![
        PermGroup::alternating(5).with_name("A5"),
        PermGroup::alternating(6).with_name("A6"),
    ];
    for q in [7, 8, 17] {
        groups.push(PermGroup::psl2(q).map_err(|e| e.to_string())?.with_name(format!("PSL2({q})")));
    }
    groups.push(PermGroup::m10().with_name("M10"));
    groups.push(embedded_group("PSL3(4)").map_err(|e| e.to_string())?);
    groups.push(embedded_module("Sz(8)").map_err(|e| e.to_string())?.1.with_name("Sz(8)"));
    let mut checked = 0;
    for g in &groups {
        let name = g.name().unwrap_or("?").to_string();
        let s = spectrum(g, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(gk_from_spectrum(&s).is_edgeless(), || format!("{name} has an edge"))?;
        if s.group_order() <= 30_000 {
            let eq = eppo_equivalence(g, 30_000).map_err(|e| format!("{name}: {e}"))?;
            ensure(eq.agrees() && eq.power_equals_enhanced, || format!("{name}: power and enhanced power graphs differ"))?;
            checked += 1;
        }
    }
    Ok(format!("{} groups edgeless, power = enhanced power for {checked}", groups.len()))
}

fn natural_modules() -> Result<String, String> {
    let mut sizes = Vec::new();
    for name in ["SL2(4)", "SL2(8)", "Sz(8)"] {
        let (action, group) = embedded_module(name).map_err(|e| e.to_string())?;
        let s = semidirect_spectrum(&action, &group, DEFAULT_CAP).map_err(|e| format!("{name}: {e}"))?;
        ensure(gk_from_spectrum(&s).is_edgeless(), || format!("2^n:{name} has an edge: {s}"))?;
        if name == "SL2(4)" {
            let affine = action.affine_group().map_err(|e| e.to_string())?;
            let brute = spectrum(&affine, DEFAULT_CAP).map_err(|e| e.to_string())?;
            ensure(brute.group_order() == 960, || format!("explicit group has order {}", brute.group_order()))?;
            ensure(brute == s, || format!("brute force {brute} but criterion {s}"))?;
        }
        sizes.push(format!("{name}: {s}"));
    }
    Ok(sizes.join("; "))
}

/// Removes every prime of `pi` from `n`; the order lies over `pi` iff 1 remains.
fn strip(mut n: BigUint, pi: &[u64]) -> BigUint {
    for &p in pi {
        let p = BigUint::from(p);
        while (&n % &p).is_zero() {
            n /= &p;
        }
    }
    n
}

fn census() -> Result<String, String> {
    ensure(enumerate_simple(&[2, 3]).is_empty(), || "groups found over {2, 3}".into())?;
    let u42 = SimpleGroupId::lie(LieFamily::TwistedA, 3, 2).map_err(|e| e.to_string())?;
    let want: BTreeSet<SimpleGroupId> = [SimpleGroupId::alt(5).unwrap(), SimpleGroupId::alt(6).unwrap(), u42].into();
    let got: BTreeSet<SimpleGroupId> = enumerate_simple(&[2, 3, 5]).into_iter().collect();
    ensure(got == want, || format!("{{2, 3, 5}} gives {got:?}"))?;
    let mut total = 0;
    for pi in CENSUS_SETS {
        for id in enumerate_simple(pi) {
            let order = order_value(&id).map_err(|e| e.to_string())?;
            ensure(strip(order, pi).is_one(), || format!("|{id}| has a prime outside {pi:?}"))?;
            total += 1;
        }
        let audit = audit_frontier(pi);
        ensure(audit.passed(), || format!("frontier audit for {pi:?}: {}", audit.violations.join("; ")))?;
    }
    Ok(format!("{total} groups over {} prime sets re-factor inside their sets; frontier audits pass", CENSUS_SETS.len()))
}

/// Strips from `q^m - 1` every factor shared with `extra * prod_{i<m} (q^i - 1)`.
fn primitive_part_exceeds_one(q: u64, m: u64, extra: u32) -> bool {
    let qb = BigUint::from(q);
    let mut x = qb.pow(m as u32) - 1u32;
    let prod = (1..m).fold(BigUint::from(extra), |acc, i| acc * (qb.pow(i as u32) - 1u32));
    loop {
        let g = x.gcd(&prod);
        if g.is_one() {
            break;
        }
        x /= g;
    }
    x > BigUint::one()
}

fn zsigmondy() -> Result<String, String> {
    let mut divisor_form = Vec::new();
    let mut order_form = Vec::new();
    for q in 2..=100u64 {
        for m in 1..=50u64 {
            let d = primitive_part_exceeds_one(q, m, 1);
            ensure(d == ppd_exists_divisor_form(q, m), || format!("divisor form differs at q = {q}, m = {m}"))?;
            if !d {
                divisor_form.push((q, m));
            }
            // The prime 2 is primitive for q^m - 1 exactly when e(2, q) = m.
            let o = primitive_part_exceeds_one(q, m, 2) || (q % 2 == 1 && m == if q % 4 == 1 { 1 } else { 2 });
            ensure(o == ppd_exists_order_form(q, m), || format!("order form differs at q = {q}, m = {m}"))?;
            if !o {
                order_form.push((q, m));
            }
        }
    }
    ensure(order_form == [(2, 1), (2, 6), (3, 1)], || format!("order-form exceptions {order_form:?}"))?;
    let mersenne: Vec<(u64, u64)> = (2..7).map(|k| ((1u64 << k) - 1, 2)).collect();
    let mut want = vec![(2, 1), (2, 6)];
    want.extend(&mersenne);
    want.sort();
    ensure(divisor_form == want, || format!("divisor-form exceptions {divisor_form:?}"))?;
    Ok(format!("order form {order_form:?}; divisor form {divisor_form:?}"))
}

fn clique_sizes() -> Result<String, String> {
    let corpus = small_corpus();
    ensure(corpus.len() >= 30, || format!("only {} corpus groups", corpus.len()))?;
    for g in &corpus {
        let name = g.name().unwrap_or("?").to_string();
        let s = spectrum(g, 2000).map_err(|e| format!("{name}: {e}"))?;
        let want = gk_from_spectrum(&s);
        for kind in [GraphKind::EnhancedPower, GraphKind::Commuting] {
            let got = gk_from_clique_sizes(kind, g, 2000).map_err(|e| format!("{name}: {e}"))?;
            ensure(got == want, || format!("{name}: {kind} cliques give {:?}, spectrum gives {:?}", got.edges(), want.edges()))?;
        }
    }
    Ok(format!("{} groups of order at most 2000 agree for enhanced power and commuting graphs", corpus.len()))
}

fn verdicts() -> Result<String, String> {
    let a10 = analyze(&a10_graph()?);
    ensure(a10.status == Status::Unrecognizable, || format!("A10: {}", a10.status.label()))?;
    ensure(a10.reasons.iter().any(|r| r.tag == TAG_NO_THREE_COCLIQUE), || "A10: no coclique reason".into())?;
    let tri = analyze(&triangle_235());
    ensure(tri.status == Status::Unrecognizable, || format!("triangle: {}", tri.status.label()))?;
    ensure(tri.reasons.iter().any(|r| r.tag == TAG_TWO_ADJACENT_TO_ALL_ODD), || "triangle: no 2-adjacency reason".into())?;
    let mut witnesses = 0;
    for g in small_corpus() {
        let check = necessary_conditions(&gamma(&g)?);
        if check.reasons.iter().any(|r| r.tag == TAG_TWO_ADJACENT_TO_ALL_ODD) {
            let name = g.name().unwrap_or("?").to_string();
            ensure(c2_witness_holds(&g, 30_000).map_err(|e| e.to_string())?, || format!("{name}: C2 x G has a different graph"))?;
            witnesses += 1;
        }
    }
    ensure(witnesses >= 3, || format!("only {witnesses} witness instances"))?;
    let specials = [
        (six_component_graph(), "J4"),
        (gk_2g2_27().map_err(|e| e.to_string())?, "2G2(27)"),
        (gk_e8(2).map_err(|e| e.to_string())?, "E8(2)"),
    ];
    for (g, name) in &specials {
        let v = analyze(g);
        ensure(
            v.status == Status::SpecialIdentified && v.identification.as_deref() == Some(name),
            || format!("expected {name}, got {} {:?}", v.status.label(), v.identification),
        )?;
    }
    Ok(format!("A10 and triangle unrecognizable; {witnesses} C2 witnesses; J4, 2G2(27), E8(2) identified"))
}

/// Vertex sets of the graphs analysed in the verdict checks.
pub fn verdict_prime_sets() -> Result<Vec<Vec<u64>>, String> {
    Ok(vec![
        a10_graph()?.vertices().to_vec(),
        triangle_235().vertices().to_vec(),
        six_component_graph().vertices().to_vec(),
        gk_2g2_27().map_err(|e| e.to_string())?.vertices().to_vec(),
        gk_e8(2).map_err(|e| e.to_string())?.vertices().to_vec(),
    ])
}

fn almost_simple() -> Result<String, String> {
    let c = count_almost_simple(&[2, 3, 5]);
    let breakdown: Vec<(String, u64)> = c.per_socle.iter().map(|(s, n)| (s.to_string(), *n)).collect();
    let want = [("Alt(5)", 2), ("Alt(6)", 5), ("2A3(2)", 2)];
    ensure(
        c.total == 9 && breakdown.iter().map(|(s, n)| (s.as_str(), *n)).eq(want.iter().copied()),
        || format!("{{2, 3, 5}}: total {} with {breakdown:?}", c.total),
    )?;
    let mut sets: Vec<Vec<u64>> = CENSUS_SETS.iter().map(|s| s.to_vec()).collect();
    sets.extend(verdict_prime_sets()?);
    for pi in &sets {
        let n = count_almost_simple(pi).total;
        let bound = f_bound(pi.len() as u64);
        ensure(BigUint::from(n) <= bound, || format!("{pi:?}: {n} exceeds f = {bound}"))?;
    }
    Ok(format!("{{2, 3, 5}}: 9 = 2 + 5 + 2; bound holds for {} prime sets", sets.len()))
}

fn corpus_properties() -> Result<String, String> {
    let corpus = extended_corpus().map_err(|e| e.to_string())?;
    let (mut edgeless_solvable, mut wide) = (0, 0);
    for g in &corpus {
        let name = g.name().unwrap_or("?").to_string();
        let gk = gamma(g)?;
        let solvable = is_solvable(g);
        if solvable && gk.is_edgeless() {
            ensure(gk.len() <= 2, || format!("{name}: solvable, edgeless, {} primes", gk.len()))?;
            edgeless_solvable += 1;
        }
        let t = gk.independence_number().map_err(|e| e.to_string())?;
        if t >= 3 {
            ensure(!solvable, || format!("{name}: solvable with t = {t}"))?;
            wide += 1;
        }
    }
    Ok(format!("{} groups; {edgeless_solvable} solvable edgeless, {wide} with t >= 3", corpus.len()))
}
