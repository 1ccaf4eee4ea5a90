//! Power, enhanced power and commuting graphs on group elements.

mod cliques;
mod eppo;

use std::fmt;

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use crate::graph::LabeledGraph;
use crate::group::{ElementSet, GroupError, PermGroup};
use crate::numtheory::prime_divisors;

pub use cliques::{bron_kerbosch, CLIQUE_SEARCH_LIMIT};
pub use eppo::{classify_eppo, eppo_equivalence, EppoCase, EppoEquivalence, EppoTag, FrobeniusKind};

/// Default group-order cap for element graphs.
pub const ELEMENT_GRAPH_CAP: u64 = 30_000;

#[derive(Debug, thiserror::Error)]
pub enum ElementGraphError {
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("EPPO group outside the known cases: {evidence}")]
    Unclassifiable { evidence: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphKind {
    /// `g ~ h` iff one is a power of the other.
    Power,
    /// `g ~ h` iff `<g, h>` is cyclic.
    EnhancedPower,
    /// `g ~ h` iff `gh = hg`.
    Commuting,
}

impl GraphKind {
    pub fn name(self) -> &'static str {
        match self {
            GraphKind::Power => "power",
            GraphKind::EnhancedPower => "enhanced_power",
            GraphKind::Commuting => "commuting",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "power" => Some(GraphKind::Power),
            "enhanced_power" | "enhanced" => Some(GraphKind::EnhancedPower),
            "commuting" => Some(GraphKind::Commuting),
            _ => None,
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A graph on the enumerated elements of a group; vertex 0 is the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ElementGraph {
    kind: GraphKind,
    rows: Vec<FixedBitSet>,
}

impl ElementGraph {
    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn vertex_count(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn row(&self, i: usize) -> &FixedBitSet {
        &self.rows[i]
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Whether every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &ElementGraph) -> bool {
        self.rows.len() == other.rows.len()
            && self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    pub fn same_edges(&self, other: &ElementGraph) -> bool {
        self.rows == other.rows
    }

    /// One-line summary: kind, vertex count and edge count.
    pub fn summary(&self) -> String {
        format!(
            "{} graph: {} vertices, {} edges",
            self.kind,
            self.vertex_count(),
            self.edge_count()
        )
    }

    /// Adjacency lists, one line `i: j k ..` per vertex.
    pub fn to_adjacency_text(&self) -> String {
        let mut out = format!("kind {}\nvertices {}\n", self.kind, self.vertex_count());
        for (i, row) in self.rows.iter().enumerate() {
            out.push_str(&i.to_string());
            out.push(':');
            for j in row.ones() {
                out.push_str(&format!(" {j}"));
            }
            out.push('\n');
        }
        out
    }

    fn empty(kind: GraphKind, n: usize) -> Self {
        ElementGraph {
            kind,
            rows: vec![FixedBitSet::with_capacity(n); n],
        }
    }

    fn connect(&mut self, i: usize, j: usize) {
        if i != j {
            self.rows[i].insert(j);
            self.rows[j].insert(i);
        }
    }
}

/// Cyclic subgroup data of an enumerated group.
pub struct CyclicStructure {
    /// `powers[i]` lists `e_i^k` for `k = 0 .. |e_i| - 1`.
    powers: Vec<Vec<usize>>,
    /// Maximal cyclic subgroups as sorted element lists.
    maximal: Vec<Vec<usize>>,
}

impl CyclicStructure {
    pub fn new(elements: &mut ElementSet) -> Self {
        let n = elements.len();
        let powers: Vec<Vec<usize>> = (0..n)
            .map(|i| {
                let mut p = vec![0];
                p.extend(elements.powers(i).into_iter().filter(|&x| x != 0));
                p
            })
            .collect();
        // e_i generates a maximal cyclic subgroup unless it is a proper power
        // of an element of larger order.
        let mut dominated = vec![false; n];
        if n > 1 {
            dominated[0] = true;
        }
        for list in &powers {
            let m = list.len();
            for (k, &x) in list.iter().enumerate().skip(1) {
                if k.gcd(&m) != 1 {
                    dominated[x] = true;
                }
            }
        }
        let mut seen = vec![false; n];
        let mut maximal = Vec::new();
        for i in 0..n {
            if dominated[i] || seen[i] {
                continue;
            }
            let m = powers[i].len();
            for (k, &x) in powers[i].iter().enumerate() {
                if k.gcd(&m) == 1 {
                    seen[x] = true;
                }
            }
            let mut c = powers[i].clone();
            c.sort_unstable();
            maximal.push(c);
        }
        CyclicStructure { powers, maximal }
    }

    /// The elements of `<e_i>` in order of exponent.
    pub fn powers(&self, i: usize) -> &[usize] {
        &self.powers[i]
    }

    pub fn maximal_cyclic_subgroups(&self) -> &[Vec<usize>] {
        &self.maximal
    }
}

/// Builds an element graph of `G`, enumerating at most `cap` elements.
pub fn build(kind: GraphKind, group: &PermGroup, cap: u64) -> Result<ElementGraph, GroupError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    Ok(build_from(kind, &mut elements))
}

pub fn build_from(kind: GraphKind, elements: &mut ElementSet) -> ElementGraph {
    let n = elements.len();
    let mut g = ElementGraph::empty(kind, n);
    match kind {
        GraphKind::Power => {
            for i in 0..n {
                let mut x = 0;
                loop {
                    g.connect(i, x);
                    x = elements.mul(x, i);
                    if x == 0 {
                        break;
                    }
                }
            }
        }
        GraphKind::EnhancedPower => {
            let cyc = CyclicStructure::new(elements);
            for c in cyc.maximal_cyclic_subgroups() {
                for &x in c {
                    for &y in c {
                        if x != y {
                            g.rows[x].insert(y);
                        }
                    }
                }
            }
        }
        GraphKind::Commuting => {
            for i in 0..n {
                for j in i + 1..n {
                    if elements.commute(i, j) {
                        g.connect(i, j);
                    }
                }
            }
        }
    }
    g
}

/// Maximal abelian subgroups reached from each maximal cyclic subgroup by
/// repeatedly adjoining the least centralizing element outside.
///
/// Every result is a maximal abelian subgroup, and every element lies in one
/// of them.
pub fn maximal_abelian_subgroups(elements: &mut ElementSet, cyc: &CyclicStructure) -> Vec<Vec<usize>> {
    let n = elements.len();
    let mut found: Vec<FixedBitSet> = Vec::new();
    for c in cyc.maximal_cyclic_subgroups() {
        let gen = *c
            .iter()
            .find(|&&x| cyc.powers(x).len() == c.len())
            .expect("a cyclic subgroup has a generator");
        let mut members = FixedBitSet::with_capacity(n);
        for &x in c {
            members.insert(x);
        }
        if found.iter().any(|a| members.is_subset(a)) {
            continue;
        }
        let mut centralizer: Vec<usize> = (0..n).filter(|&y| elements.commute(gen, y)).collect();
        loop {
            let Some(&z) = centralizer.iter().find(|&&y| !members.contains(y)) else {
                break;
            };
            // Closing under right multiplication by z gives <A, z> as A is abelian.
            let mut added: Vec<usize> = members.ones().collect();
            while let Some(x) = added.pop() {
                let y = elements.mul(x, z);
                if !members.contains(y) {
                    members.insert(y);
                    added.push(y);
                }
            }
            centralizer.retain(|&y| elements.commute(z, y));
        }
        if !found.contains(&members) {
            found.push(members);
        }
    }
    found.iter().map(|m| m.ones().collect()).collect()
}

/// The GK graph read off from maximal clique sizes of the enhanced power
/// graph (maximal cyclic subgroups) or of the commuting graph (maximal
/// abelian subgroups): `p ~ q` iff `pq` divides some maximal clique size.
pub fn gk_from_clique_sizes(kind: GraphKind, group: &PermGroup, cap: u64) -> Result<LabeledGraph, GroupError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    let sizes = maximal_clique_sizes(kind, &mut elements)?;
    let primes = prime_divisors(elements.len() as u64);
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if sizes.iter().any(|&s| s % (p * q) == 0) {
                edges.push((p, q));
            }
        }
    }
    Ok(LabeledGraph::new(primes, edges).expect("prime divisors of the group order"))
}

/// Sizes of the maximal cliques found group-theoretically.
pub fn maximal_clique_sizes(kind: GraphKind, elements: &mut ElementSet) -> Result<Vec<u64>, GroupError> {
    let cyc = CyclicStructure::new(elements);
    let mut sizes: Vec<u64> = match kind {
        GraphKind::EnhancedPower => cyc
            .maximal_cyclic_subgroups()
            .iter()
            .map(|c| c.len() as u64)
            .collect(),
        GraphKind::Commuting => maximal_abelian_subgroups(elements, &cyc)
            .iter()
            .map(|a| a.len() as u64)
            .collect(),
        GraphKind::Power => {
            return Err(GroupError::Unsupported(
                "clique sizes are defined for enhanced power and commuting graphs".into(),
            ))
        }
    };
    sizes.sort_unstable();
    sizes.dedup();
    Ok(sizes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gk_from_spectrum;
    use crate::group::spectrum;

    fn complete(g: &ElementGraph) -> bool {
        let n = g.vertex_count();
        g.edge_count() == n * (n - 1) / 2
    }

    #[test]
    fn abelian_and_cyclic_graphs_are_complete() {
        let c4 = PermGroup::cyclic(4);
        assert!(complete(&build(GraphKind::Commuting, &c4, 100).unwrap()));
        let c8 = PermGroup::cyclic(8);
        assert!(complete(&build(GraphKind::Power, &c8, 100).unwrap()));
        // In C6 the involution and the elements of order 3 are not powers of
        // each other; the enhanced power graph is complete.
        let c6 = PermGroup::cyclic(6);
        assert_eq!(build(GraphKind::Power, &c6, 100).unwrap().edge_count(), 13);
        assert!(complete(&build(GraphKind::EnhancedPower, &c6, 100).unwrap()));
        let v4 = PermGroup::cyclic(2).direct_product(&PermGroup::cyclic(2));
        assert!(!complete(&build(GraphKind::Power, &v4, 100).unwrap()));
    }

    #[test]
    fn power_and_enhanced_agree_on_s3() {
        let s3 = PermGroup::symmetric(3);
        let p = build(GraphKind::Power, &s3, 100).unwrap();
        let e = build(GraphKind::EnhancedPower, &s3, 100).unwrap();
        assert!(p.same_edges(&e));
        // Identity joined to 5 others, plus the 3-cycle pair.
        assert_eq!(p.edge_count(), 6);
    }

    #[test]
    fn gk_from_cliques() {
        let s5 = PermGroup::symmetric(5);
        let expected = gk_from_spectrum(&spectrum(&s5, 1000).unwrap());
        assert_eq!(gk_from_clique_sizes(GraphKind::EnhancedPower, &s5, 1000).unwrap(), expected);
        assert_eq!(gk_from_clique_sizes(GraphKind::Commuting, &s5, 1000).unwrap(), expected);
        let a5 = PermGroup::alternating(5);
        let mut e = a5.elements(100).unwrap();
        assert_eq!(maximal_clique_sizes(GraphKind::Commuting, &mut e).unwrap(), vec![3, 4, 5]);
        assert!(gk_from_clique_sizes(GraphKind::Commuting, &a5, 100).unwrap().is_edgeless());
        let c6 = gk_from_clique_sizes(GraphKind::EnhancedPower, &PermGroup::cyclic(6), 100).unwrap();
        assert_eq!(c6.edges(), vec![(2, 3)]);
    }

    #[test]
    fn maximal_abelian_subgroups_of_s4() {
        let mut e = PermGroup::symmetric(4).elements(100).unwrap();
        let cyc = CyclicStructure::new(&mut e);
        let mut sizes: Vec<usize> = maximal_abelian_subgroups(&mut e, &cyc).iter().map(Vec::len).collect();
        sizes.sort_unstable();
        // Four subgroups of order 3, three cyclic and three non-normal Klein
        // subgroups. The normal Klein group is maximal abelian too, but every
        // involution in it is a square, so no maximal cyclic seed reaches it.
        assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn cap_applies() {
        assert!(matches!(
            build(GraphKind::Power, &PermGroup::symmetric(6), 100),
            Err(GroupError::CapExceeded { .. })
        ));
    }
}
