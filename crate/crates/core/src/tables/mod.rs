//! The E8 adjacency criterion in characteristic 2 and the embedded graph tables.

mod expr;

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

pub use expr::Expr;

use crate::census::{pi_of, CensusError, LieFamily, SimpleGroupId};
use crate::data::{self, DataFile};
use crate::graph::{gk_from_spectrum, GraphError, LabeledGraph};
use crate::group::{embedded_group, embedded_module, spectrum, GroupError, PermGroup};
use crate::numtheory::{is_prime_u64, mult_order};

#[derive(Debug, Error)]
pub enum TableError {
    #[error("unknown table '{0}'")]
    UnknownTable(String),
    #[error("{0} is not in the prime set of E8({1})")]
    NotInPi(u64, u64),
    #[error("the two primes must differ")]
    SameVertex,
    #[error("{0} is not a power of 2")]
    NotPowerOfTwo(u64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("evaluation error: {0}")]
    Eval(String),
    #[error("checksum mismatch for {0}")]
    Checksum(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Census(#[from] CensusError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

pub const TABLE_NAMES: &[&str] = &["table1", "table2_e8_2", "table3_monster", "gk_2g2_27"];

fn power_of_two_exponent(q: u64) -> Result<u32, TableError> {
    if q < 2 || !q.is_power_of_two() {
        return Err(TableError::NotPowerOfTwo(q));
    }
    Ok(q.trailing_zeros())
}

fn e8_id(q: u64) -> Result<SimpleGroupId, TableError> {
    Ok(SimpleGroupId::lie(LieFamily::E8, 8, q)?)
}

/// `pi(E8(q))` for `q` a power of 2.
pub fn e8_primes(q: u64) -> Result<Vec<u64>, TableError> {
    power_of_two_exponent(q)?;
    Ok(pi_of(&e8_id(q)?)?)
}

/// The criterion without membership checks; `r != s`.
fn e8_criterion(r: u64, s: u64, q: u64) -> bool {
    let (r, s) = if s == 2 { (s, r) } else { (r, s) };
    if r == 2 {
        let es = mult_order(s, q).expect("odd prime coprime to q");
        return !matches!(es, 15 | 20 | 24 | 30);
    }
    let (er, es) = (mult_order(r, q).expect("coprime"), mult_order(s, q).expect("coprime"));
    if er == es {
        return true;
    }
    // Orient so that e(r, q) < e(s, q).
    let (r, er, es) = if er < es { (r, er, es) } else { (s, es, er) };
    let non_adjacent = match es {
        6 => er == 5,
        7 | 14 => er >= 3,
        // The bound on the smaller index is read as e(r, q) >= 4.
        9 => er >= 4,
        8 | 12 => er >= 5 && er != 6,
        10 => er >= 3 && er != 4 && er != 6,
        18 => !matches!(er, 1 | 2 | 6),
        20 => r * er != 20,
        15 | 24 | 30 => true,
        _ => false,
    };
    !non_adjacent
}

/// Whether `r` and `s` are adjacent in the prime graph of `E8(q)`, `q = 2^k`.
pub fn e8_adjacent(r: u64, s: u64, q: u64) -> Result<bool, TableError> {
    if r == s {
        return Err(TableError::SameVertex);
    }
    let pi = e8_primes(q)?;
    for x in [r, s] {
        if !pi.contains(&x) {
            return Err(TableError::NotInPi(x, q));
        }
    }
    Ok(e8_criterion(r, s, q))
}

/// The prime graph of `E8(q)` for `q` a power of 2, built from the criterion.
pub fn gk_e8(q: u64) -> Result<LabeledGraph, TableError> {
    let pi = e8_primes(q)?;
    let mut edges = Vec::new();
    for (i, &r) in pi.iter().enumerate() {
        for &s in &pi[i + 1..] {
            if e8_criterion(r, s, q) {
                edges.push((r, s));
            }
        }
    }
    Ok(LabeledGraph::new(pi, edges)?)
}

/// Field-size condition attached to a parametric row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Restriction {
    None,
    /// `q = 2^(2m+1) > 2`.
    OddPowerOfTwo,
    /// `q mod 5` lies in the list.
    Mod5(Vec<u64>),
}

impl Restriction {
    fn parse(text: &str) -> Result<Self, TableError> {
        let text = text.trim();
        if text == "-" {
            return Ok(Restriction::None);
        }
        if text == "q=2^(2m+1)>2" {
            return Ok(Restriction::OddPowerOfTwo);
        }
        if let Some(list) = text.strip_prefix("q=").and_then(|t| t.strip_suffix("mod 5")) {
            let values = list
                .split(',')
                .map(|v| v.trim().parse::<u64>().map_err(|_| TableError::Parse(format!("bad residue in '{text}'"))))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(Restriction::Mod5(values));
        }
        Err(TableError::Parse(format!("unknown restriction '{text}'")))
    }

    pub fn admits(&self, q: u64) -> bool {
        match self {
            Restriction::None => true,
            Restriction::OddPowerOfTwo => q > 2 && q.is_power_of_two() && q.trailing_zeros() % 2 == 1,
            Restriction::Mod5(r) => r.contains(&(q % 5)),
        }
    }
}

impl fmt::Display for Restriction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Restriction::None => write!(f, "-"),
            Restriction::OddPowerOfTwo => write!(f, "q=2^(2m+1)>2"),
            Restriction::Mod5(r) => {
                let list: Vec<String> = r.iter().map(u64::to_string).collect();
                write!(f, "q={} mod 5", list.join(","))
            }
        }
    }
}

/// One connected component of a row, as explicit primes or as `pi(expr)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ComponentSpec {
    Primes(BTreeSet<u64>),
    PiOf { text: String, expr: Expr },
}

impl ComponentSpec {
    fn parse(text: &str) -> Result<Self, TableError> {
        let text = text.trim();
        if let Some(inner) = text.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
            let primes = inner
                .split(',')
                .map(|p| p.trim().parse::<u64>().map_err(|_| TableError::Parse(format!("bad prime in '{text}'"))))
                .collect::<Result<BTreeSet<_>, _>>()?;
            return Ok(ComponentSpec::Primes(primes));
        }
        if let Some(inner) = text.strip_prefix("pi(").and_then(|t| t.strip_suffix(')')) {
            return Ok(ComponentSpec::PiOf { text: inner.to_string(), expr: Expr::parse(inner)? });
        }
        Err(TableError::Parse(format!("bad component '{text}'")))
    }

    pub fn evaluate(&self, q: Option<u64>) -> Result<BTreeSet<u64>, TableError> {
        match (self, q) {
            (ComponentSpec::Primes(p), _) => Ok(p.clone()),
            (ComponentSpec::PiOf { expr, .. }, Some(q)) => expr.prime_set(q),
            (ComponentSpec::PiOf { text, .. }, None) => {
                Err(TableError::Eval(format!("pi({text}) needs a value of q")))
            }
        }
    }
}

impl fmt::Display for ComponentSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComponentSpec::Primes(p) => {
                let list: Vec<String> = p.iter().map(u64::to_string).collect();
                write!(f, "{{{}}}", list.join(","))
            }
            ComponentSpec::PiOf { text, .. } => write!(f, "pi({text})"),
        }
    }
}

/// A simple group, or a family in `q`, whose prime graph has at least four components.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Table1Row {
    pub s: usize,
    pub group: String,
    pub restriction: Restriction,
    pub components: Vec<ComponentSpec>,
}

impl Table1Row {
    pub fn is_parametric(&self) -> bool {
        self.group.contains("(q)")
    }

    /// The concrete group for a field size, or the fixed group of the row.
    pub fn instance(&self, q: Option<u64>) -> Result<SimpleGroupId, TableError> {
        let name = match (self.is_parametric(), q) {
            (true, Some(q)) => self.group.replace("(q)", &format!("({q})")),
            (true, None) => return Err(TableError::Eval(format!("{} needs a value of q", self.group))),
            (false, _) => self.group.clone(),
        };
        Ok(name.parse::<SimpleGroupId>()?)
    }

    pub fn admits(&self, q: u64) -> bool {
        is_prime_power(q) && self.restriction.admits(q) && self.instance(Some(q)).is_ok_and(|id| id.validate().is_ok())
    }

    /// The first `count` admissible field sizes.
    pub fn sample_fields(&self, count: usize) -> Vec<u64> {
        if !self.is_parametric() {
            return vec![];
        }
        (2u64..).filter(|&q| self.admits(q)).take(count).collect()
    }

    pub fn evaluate(&self, q: Option<u64>) -> Result<Vec<BTreeSet<u64>>, TableError> {
        self.components.iter().map(|c| c.evaluate(q)).collect()
    }
}

impl fmt::Display for Table1Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let comps: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{} | {} | {} | {}", self.s, self.group, self.restriction, comps.join("; "))
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let p = (2..=q).find(|d| q % d == 0).expect("q >= 2");
    let mut x = q;
    while x % p == 0 {
        x /= p;
    }
    x == 1 && is_prime_u64(p)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty())
}

pub fn parse_table1(text: &str) -> Result<Vec<Table1Row>, TableError> {
    content_lines(text)
        .map(|(line, l)| {
            let parts: Vec<&str> = l.splitn(4, '|').collect();
            if parts.len() != 4 {
                return Err(TableError::Parse(format!("line {line}: expected four '|' separated fields")));
            }
            let s = parts[0].trim().parse().map_err(|_| TableError::Parse(format!("line {line}: bad count")))?;
            let components = parts[3].split(';').map(ComponentSpec::parse).collect::<Result<Vec<_>, _>>()?;
            Ok(Table1Row {
                s,
                group: parts[1].trim().to_string(),
                restriction: Restriction::parse(parts[2])?,
                components,
            })
        })
        .collect()
}

/// Rows `vertex degree : neighbours` as printed in an adjacency table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyTable {
    pub rows: Vec<AdjacencyRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdjacencyRow {
    pub vertex: u64,
    pub degree: usize,
    pub neighbors: Vec<u64>,
}

impl AdjacencyTable {
    pub fn parse(text: &str) -> Result<Self, TableError> {
        let rows = content_lines(text)
            .map(|(line, l)| {
                let bad = |m: &str| TableError::Parse(format!("line {line}: {m}"));
                let (head, tail) = l.split_once(':').ok_or_else(|| bad("missing ':'"))?;
                let head: Vec<&str> = head.split_whitespace().collect();
                if head.len() != 2 {
                    return Err(bad("expected 'vertex degree'"));
                }
                let vertex = head[0].parse().map_err(|_| bad("bad vertex"))?;
                let degree = head[1].parse().map_err(|_| bad("bad degree"))?;
                let neighbors = tail
                    .split_whitespace()
                    .map(|t| t.parse::<u64>().map_err(|_| bad("bad neighbour")))
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(AdjacencyRow { vertex, degree, neighbors })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(AdjacencyTable { rows })
    }

    pub fn vertices(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.vertex).collect()
    }

    /// Rows whose printed degree differs from the neighbour count.
    pub fn degree_mismatches(&self) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| r.degree != r.neighbors.len())
            .map(|r| format!("vertex {} lists degree {} but {} neighbours", r.vertex, r.degree, r.neighbors.len()))
            .collect()
    }

    /// Pairs listed in one row but not in the other.
    pub fn asymmetries(&self) -> Vec<String> {
        let mut out = Vec::new();
        for r in &self.rows {
            for &n in &r.neighbors {
                let back = self.rows.iter().find(|x| x.vertex == n).is_some_and(|x| x.neighbors.contains(&r.vertex));
                if !back {
                    out.push(format!("{} lists {} but not conversely", r.vertex, n));
                }
            }
        }
        out
    }

    pub fn to_graph(&self) -> Result<LabeledGraph, TableError> {
        let edges = self
            .rows
            .iter()
            .flat_map(|r| r.neighbors.iter().filter(move |&&n| r.vertex < n).map(move |&n| (r.vertex, n)));
        Ok(LabeledGraph::new(self.vertices(), edges)?)
    }
}

/// An embedded table, parsed.
#[derive(Clone, Debug)]
pub enum TableData {
    Table1(Vec<Table1Row>),
    Adjacency(AdjacencyTable),
    Graph(LabeledGraph),
}

fn data_file(name: &str) -> Result<&'static DataFile, TableError> {
    let d = data::DATA_FILES
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| TableError::UnknownTable(name.to_string()))?;
    if !d.checksum_ok() {
        return Err(TableError::Checksum(d.path.to_string()));
    }
    Ok(d)
}

pub fn table_data(name: &str) -> Result<TableData, TableError> {
    if !TABLE_NAMES.contains(&name) {
        return Err(TableError::UnknownTable(name.to_string()));
    }
    let text = data_file(name)?.text;
    Ok(match name {
        "table1" => TableData::Table1(parse_table1(text)?),
        "gk_2g2_27" => TableData::Graph(LabeledGraph::parse(text)?),
        _ => TableData::Adjacency(AdjacencyTable::parse(text)?),
    })
}

pub fn table1() -> Result<Vec<Table1Row>, TableError> {
    parse_table1(data_file("table1")?.text)
}

pub fn table2_e8_2() -> Result<AdjacencyTable, TableError> {
    AdjacencyTable::parse(data_file("table2_e8_2")?.text)
}

pub fn table3_monster() -> Result<AdjacencyTable, TableError> {
    AdjacencyTable::parse(data_file("table3_monster")?.text)
}

pub fn gk_2g2_27() -> Result<LabeledGraph, TableError> {
    Ok(LabeledGraph::parse(data_file("gk_2g2_27")?.text)?)
}

/// Differences between an expected and a computed graph.
pub fn graph_discrepancies(expected: &LabeledGraph, computed: &LabeledGraph) -> Vec<String> {
    let mut out = Vec::new();
    if expected.vertices() != computed.vertices() {
        out.push(format!("vertex sets differ: {:?} vs {:?}", expected.vertices(), computed.vertices()));
        return out;
    }
    for (p, q) in expected.edges() {
        if !computed.has_edge(p, q) {
            out.push(format!("{p}-{q} is in the table but not computed"));
        }
    }
    for (p, q) in computed.edges() {
        if !expected.has_edge(p, q) {
            out.push(format!("{p}-{q} is computed but not in the table"));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub name: String,
    pub failures: Vec<String>,
}

impl TableCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TableReport {
    pub checks: Vec<TableCheck>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(TableCheck::passed)
    }

    fn push(&mut self, name: &str, result: Result<Vec<String>, TableError>) {
        let failures = result.unwrap_or_else(|e| vec![e.to_string()]);
        self.checks.push(TableCheck { name: name.to_string(), failures });
    }
}

impl fmt::Display for TableReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed() { "PASS" } else { "FAIL" }, c.name)?;
            for m in &c.failures {
                writeln!(f, "  {m}")?;
            }
        }
        Ok(())
    }
}

/// Compares an adjacency table for `E8(2)` with the graph given by the criterion.
pub fn check_e8_table(text: &str) -> Result<Vec<String>, TableError> {
    let table = AdjacencyTable::parse(text)?;
    let mut failures = table.degree_mismatches();
    failures.extend(table.asymmetries());
    failures.extend(graph_discrepancies(&table.to_graph()?, &gk_e8(2)?));
    Ok(failures)
}

fn check_monster() -> Result<Vec<String>, TableError> {
    let table = table3_monster()?;
    let mut failures = table.degree_mismatches();
    failures.extend(table.asymmetries());
    let pi = pi_of(&SimpleGroupId::sporadic("M")?)?;
    if table.vertices() != pi {
        failures.push(format!("vertices {:?} differ from the prime set {:?}", table.vertices(), pi));
    }
    Ok(failures)
}

fn disjoint(sets: &[BTreeSet<u64>]) -> bool {
    let total: usize = sets.iter().map(BTreeSet::len).sum();
    let union: BTreeSet<u64> = sets.iter().flatten().copied().collect();
    total == union.len()
}

/// Checks one instance of a row: component count, disjointness and that the
/// components cover exactly the prime set from the order formula.
pub fn check_table1_instance(row: &Table1Row, q: Option<u64>) -> Result<Vec<String>, TableError> {
    let label = match q {
        Some(q) => format!("{} at q={q}", row.group),
        None => row.group.clone(),
    };
    let sets = row.evaluate(q)?;
    let mut failures = Vec::new();
    if sets.len() != row.s {
        failures.push(format!("{label}: {} components listed, s = {}", sets.len(), row.s));
    }
    if sets.iter().any(BTreeSet::is_empty) {
        failures.push(format!("{label}: empty component"));
    }
    if !disjoint(&sets) {
        failures.push(format!("{label}: components overlap"));
    }
    let union: Vec<u64> = sets.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
    let pi = pi_of(&row.instance(q)?)?;
    if union != pi {
        failures.push(format!("{label}: components cover {union:?}, order has {pi:?}"));
    }
    Ok(failures)
}

fn check_table1(samples: usize) -> Result<Vec<String>, TableError> {
    let mut failures = Vec::new();
    for row in table1()? {
        if !(4..=6).contains(&row.s) {
            failures.push(format!("{}: s = {} out of range", row.group, row.s));
        }
        if row.is_parametric() {
            for q in row.sample_fields(samples) {
                failures.extend(check_table1_instance(&row, Some(q))?);
            }
        } else {
            failures.extend(check_table1_instance(&row, None)?);
        }
    }
    Ok(failures)
}

/// Groups in the first table that can be enumerated, with their generators.
pub fn enumerable_table1_groups() -> Result<Vec<(String, Option<u64>, PermGroup)>, TableError> {
    Ok(vec![
        ("J1".into(), None, embedded_group("J1")?),
        ("M22".into(), None, embedded_group("M22")?),
        ("A2(4)".into(), None, embedded_group("PSL3(4)")?),
        ("2B2(q)".into(), Some(8), embedded_module("Sz(8)")?.1),
    ])
}

/// Components of the prime graph computed from the spectrum, against the row.
pub fn check_table1_by_enumeration(cap: u64) -> Result<Vec<String>, TableError> {
    let rows = table1()?;
    let mut failures = Vec::new();
    for (group, q, g) in enumerable_table1_groups()? {
        let row = rows
            .iter()
            .find(|r| r.group == group)
            .ok_or_else(|| TableError::UnknownTable(format!("row {group}")))?;
        let gamma = gk_from_spectrum(&spectrum(&g, cap)?);
        let mut computed = gamma.components().as_sets();
        let mut listed = row.evaluate(q)?;
        computed.sort();
        listed.sort();
        if computed != listed {
            failures.push(format!("{group}: computed components {computed:?}, table lists {listed:?}"));
        }
    }
    Ok(failures)
}

fn check_2g2_27() -> Result<Vec<String>, TableError> {
    let g = gk_2g2_27()?;
    let mut failures = Vec::new();
    if g.bipartite_shape() != Some((1, 5)) {
        failures.push(format!("bipartite shape is {:?}", g.bipartite_shape()));
    }
    let pi = pi_of(&"2G2(27)".parse::<SimpleGroupId>()?)?;
    if g.vertices() != pi.as_slice() {
        failures.push(format!("vertices {:?} differ from the prime set {:?}", g.vertices(), pi));
    }
    Ok(failures)
}

fn check_checksums() -> Vec<String> {
    TABLE_NAMES
        .iter()
        .filter_map(|n| data::DATA_FILES.iter().find(|d| d.name == *n).map(|d| (n, d)))
        .filter(|(_, d)| !d.checksum_ok())
        .map(|(n, d)| format!("{n}: checksum mismatch for {}", d.path))
        .collect()
}

/// Runs every table check.
pub fn verify_tables(cap: u64) -> TableReport {
    let mut report = TableReport::default();
    report.push("checksums", Ok(check_checksums()));
    report.push(
        "table2_e8_2 matches the E8 criterion",
        data_file("table2_e8_2").and_then(|d| check_e8_table(d.text)),
    );
    report.push("table3_monster degrees and vertices", check_monster());
    report.push("table1 components are disjoint and cover the order", check_table1(4));
    report.push("table1 rows match enumerated prime graphs", check_table1_by_enumeration(cap));
    report.push("gk_2g2_27 is K(1,5) on the prime set", check_2g2_27());
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    const E8_2_PRIMES: [u64; 16] = [2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 43, 73, 127, 151, 241, 331];

    #[test]
    fn criterion_examples() {
        assert!(e8_adjacent(41, 5, 2).unwrap());
        assert!(!e8_adjacent(2, 151, 2).unwrap());
        assert!(!e8_adjacent(19, 43, 2).unwrap());
        assert!(e8_adjacent(73, 7, 2).unwrap());
        assert!(!e8_adjacent(73, 5, 2).unwrap());
        assert!(matches!(e8_adjacent(2, 23, 2), Err(TableError::NotInPi(23, 2))));
        assert!(matches!(e8_adjacent(3, 3, 2), Err(TableError::SameVertex)));
        assert!(matches!(e8_adjacent(3, 5, 3), Err(TableError::NotPowerOfTwo(3))));
    }

    #[test]
    fn criterion_is_symmetric() {
        for q in [2u64, 4, 8] {
            let pi = e8_primes(q).unwrap();
            for &r in &pi {
                for &s in &pi {
                    if r != s {
                        assert_eq!(e8_criterion(r, s, q), e8_criterion(s, r, q), "{r} {s} {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn e8_2_graph() {
        let g = gk_e8(2).unwrap();
        assert_eq!(g.vertices(), E8_2_PRIMES);
        let degrees: Vec<usize> = E8_2_PRIMES.iter().map(|&p| g.degree(p).unwrap()).collect();
        assert_eq!(degrees, vec![11, 11, 8, 7, 3, 4, 4, 2, 4, 1, 2, 3, 2, 0, 0, 0]);
        assert_eq!(g.components().sizes(), vec![13, 1, 1, 1]);
        assert_eq!(g.degree(151).unwrap(), 0);
        assert_eq!(table2_e8_2().unwrap().to_graph().unwrap(), g);
    }

    #[test]
    fn corrupted_table_is_reported() {
        let text = data_file("table2_e8_2").unwrap().text.replace("41 1 : 5", "41 1 : 7").replace(
            "7 7 : 2 3 5 13 17 31 73",
            "7 8 : 2 3 5 13 17 31 41 73",
        );
        let failures = check_e8_table(&text).unwrap();
        assert!(failures.iter().any(|f| f.contains("7-41")), "{failures:?}");
        assert!(failures.iter().any(|f| f.contains("5 lists 41")), "{failures:?}");
    }

    #[test]
    fn monster_table() {
        let t = table3_monster().unwrap();
        let row = t.rows.iter().find(|r| r.vertex == 2).unwrap();
        assert_eq!(row.degree, 10);
        assert_eq!(row.neighbors, vec![3, 5, 7, 11, 13, 17, 19, 23, 31, 47]);
        assert!(check_monster().unwrap().is_empty());
    }

    #[test]
    fn suzuki_row_at_32() {
        let row = table1().unwrap().into_iter().find(|r| r.group == "2B2(q)").unwrap();
        let sets: Vec<Vec<u64>> = row.evaluate(Some(32)).unwrap().into_iter().map(|s| s.into_iter().collect()).collect();
        assert_eq!(sets, vec![vec![2], vec![31], vec![5], vec![41]]);
        assert_eq!(row.sample_fields(4), vec![8, 32, 128, 512]);
    }

    #[test]
    fn table1_rows_are_consistent() {
        let rows = table1().unwrap();
        assert_eq!(rows.len(), 12);
        assert!(check_table1(4).unwrap().is_empty(), "{:?}", check_table1(4));
    }

    #[test]
    fn e8_rows_sample_by_residue() {
        let rows = table1().unwrap();
        let e8: Vec<&Table1Row> = rows.iter().filter(|r| r.group == "E8(q)").collect();
        assert_eq!(e8[0].sample_fields(4), vec![2, 3, 7, 8]);
        assert_eq!(e8[1].sample_fields(4), vec![4, 5, 9, 11]);
    }

    #[test]
    fn ree_27_graph() {
        let g = gk_2g2_27().unwrap();
        assert_eq!(g.vertices(), [2, 3, 7, 13, 19, 37]);
        assert_eq!(g.edges(), vec![(2, 3), (2, 7), (2, 13)]);
        assert_eq!(g.bipartite_shape(), Some((1, 5)));
    }

    #[test]
    fn table_names() {
        for n in TABLE_NAMES {
            assert!(table_data(n).is_ok(), "{n}");
        }
        assert!(matches!(table_data("table4"), Err(TableError::UnknownTable(_))));
    }
}
