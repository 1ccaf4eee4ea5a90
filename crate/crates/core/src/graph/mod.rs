//! Labeled prime graphs.

mod search;

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::group::Spectrum;
use crate::numtheory::{is_prime_u64, prime_divisors};

/// Vertex limit for the exact coclique search.
pub const COCLIQUE_LIMIT: usize = 40;
/// Vertex limit for the isomorphism search.
pub const ISOMORPHISM_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("{value} is not a prime")]
    NotPrime { value: u64 },
    #[error("duplicate vertex {0}")]
    DuplicateVertex(u64),
    #[error("{0} is not a vertex")]
    UnknownVertex(u64),
    #[error("loop at {0}")]
    Loop(u64),
    #[error("{n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// A simple graph whose vertices are distinct primes.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LabeledGraph {
    vertices: Vec<u64>,
    adjacency: Vec<FixedBitSet>,
}

impl LabeledGraph {
    /// Builds a graph from a vertex list and an edge list; vertices are sorted.
    pub fn new(
        vertices: impl IntoIterator<Item = u64>,
        edges: impl IntoIterator<Item = (u64, u64)>,
    ) -> Result<Self, GraphError> {
        let mut vs: Vec<u64> = vertices.into_iter().collect();
        vs.sort_unstable();
        for w in vs.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&p) = vs.iter().find(|&&p| !is_prime_u64(p)) {
            return Err(GraphError::NotPrime { value: p });
        }
        let n = vs.len();
        let mut g = LabeledGraph {
            vertices: vs,
            adjacency: vec![FixedBitSet::with_capacity(n); n],
        };
        for (p, q) in edges {
            g.add_edge(p, q)?;
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        LabeledGraph {
            vertices: Vec::new(),
            adjacency: Vec::new(),
        }
    }

    /// The complete graph on the given primes.
    pub fn complete(vertices: impl IntoIterator<Item = u64>) -> Result<Self, GraphError> {
        let mut g = LabeledGraph::new(vertices, [])?;
        let n = g.len();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    g.adjacency[i].insert(j);
                }
            }
        }
        Ok(g)
    }

    fn add_edge(&mut self, p: u64, q: u64) -> Result<(), GraphError> {
        if p == q {
            return Err(GraphError::Loop(p));
        }
        let i = self.index(p)?;
        let j = self.index(q)?;
        self.adjacency[i].insert(j);
        self.adjacency[j].insert(i);
        Ok(())
    }

    pub(crate) fn index(&self, p: u64) -> Result<usize, GraphError> {
        self.vertices
            .binary_search(&p)
            .map_err(|_| GraphError::UnknownVertex(p))
    }

    pub fn vertices(&self) -> &[u64] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, p: u64) -> bool {
        self.vertices.binary_search(&p).is_ok()
    }

    pub fn has_edge(&self, p: u64, q: u64) -> bool {
        match (self.index(p), self.index(q)) {
            (Ok(i), Ok(j)) => self.adjacency[i].contains(j),
            _ => false,
        }
    }

    /// Edges `(p, q)` with `p < q`, in lexicographic order.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.adjacency.iter().enumerate() {
            for j in row.ones().filter(|&j| j > i) {
                out.push((self.vertices[i], self.vertices[j]));
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn is_edgeless(&self) -> bool {
        self.adjacency.iter().all(|r| r.is_clear())
    }

    pub fn neighbors(&self, p: u64) -> Result<Vec<u64>, GraphError> {
        let i = self.index(p)?;
        Ok(self.adjacency[i].ones().map(|j| self.vertices[j]).collect())
    }

    pub fn degree(&self, p: u64) -> Result<usize, GraphError> {
        Ok(self.adjacency[self.index(p)?].count_ones(..))
    }

    /// Whether the given primes are vertices and pairwise non-adjacent.
    pub fn is_coclique(&self, set: &[u64]) -> bool {
        set.iter().all(|&p| self.contains(p))
            && set
                .iter()
                .enumerate()
                .all(|(i, &p)| set[i + 1..].iter().all(|&q| p != q && !self.has_edge(p, q)))
    }

    /// The subgraph induced on the given vertices.
    pub fn induced(&self, keep: &[u64]) -> Result<LabeledGraph, GraphError> {
        for &p in keep {
            self.index(p)?;
        }
        let edges = self
            .edges()
            .into_iter()
            .filter(|(p, q)| keep.contains(p) && keep.contains(q));
        LabeledGraph::new(keep.iter().copied(), edges)
    }

    pub fn complement(&self) -> LabeledGraph {
        let n = self.len();
        let mut g = self.clone();
        for i in 0..n {
            g.adjacency[i].toggle_range(..);
            g.adjacency[i].set(i, false);
        }
        g
    }

    /// Connected components, the one containing 2 first, the rest by least vertex.
    pub fn components(&self) -> ComponentPartition {
        let n = self.len();
        let mut seen = FixedBitSet::with_capacity(n);
        let mut parts = Vec::new();
        for start in 0..n {
            if seen.contains(start) {
                continue;
            }
            seen.insert(start);
            let mut stack = vec![start];
            let mut part = Vec::new();
            while let Some(i) = stack.pop() {
                part.push(self.vertices[i]);
                for j in self.adjacency[i].ones() {
                    if !seen.contains(j) {
                        seen.insert(j);
                        stack.push(j);
                    }
                }
            }
            part.sort_unstable();
            parts.push(part);
        }
        // Vertex order already puts the component of 2 first.
        ComponentPartition { parts }
    }

    pub fn is_connected(&self) -> bool {
        self.components().count() <= 1
    }

    /// The independence number `t`.
    pub fn independence_number(&self) -> Result<usize, GraphError> {
        Ok(search::maximum_coclique(&self.masks(COCLIQUE_LIMIT)?, None).len())
    }

    /// A maximum coclique, as sorted primes.
    pub fn maximum_coclique(&self) -> Result<Vec<u64>, GraphError> {
        let found = search::maximum_coclique(&self.masks(COCLIQUE_LIMIT)?, None);
        Ok(found.into_iter().map(|i| self.vertices[i]).collect())
    }

    /// `t(r)`: the largest coclique containing `r`.
    pub fn t_at(&self, r: u64) -> Result<usize, GraphError> {
        let i = self.index(r)?;
        Ok(search::maximum_coclique(&self.masks(COCLIQUE_LIMIT)?, Some(i)).len())
    }

    /// Isomorphism as unlabeled graphs.
    pub fn isomorphic(&self, other: &LabeledGraph) -> Result<bool, GraphError> {
        let a = self.masks(ISOMORPHISM_LIMIT)?;
        let b = other.masks(ISOMORPHISM_LIMIT)?;
        Ok(search::isomorphism(&a, &b).is_some())
    }

    /// An isomorphism onto `other`, as pairs `(vertex, image)`.
    pub fn isomorphism(&self, other: &LabeledGraph) -> Result<Option<Vec<(u64, u64)>>, GraphError> {
        let a = self.masks(ISOMORPHISM_LIMIT)?;
        let b = other.masks(ISOMORPHISM_LIMIT)?;
        Ok(search::isomorphism(&a, &b).map(|m| {
            m.iter()
                .enumerate()
                .map(|(i, &j)| (self.vertices[i], other.vertices[j]))
                .collect()
        }))
    }

    /// Parts of a complete bipartite graph, smaller part first.
    pub fn complete_bipartite_parts(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        // Complete bipartite iff the complement is two disjoint cliques.
        let parts = self.complement().components().parts;
        if parts.len() != 2 {
            return None;
        }
        let independent = |part: &Vec<u64>| self.is_coclique(part);
        if !parts.iter().all(independent) {
            return None;
        }
        let mut it = parts.into_iter();
        let (a, b) = (it.next()?, it.next()?);
        if a.len() <= b.len() {
            Some((a, b))
        } else {
            Some((b, a))
        }
    }

    pub fn is_complete_bipartite(&self) -> bool {
        self.complete_bipartite_parts().is_some()
    }

    /// The most unbalanced split of a bipartite graph with at least one edge
    /// into two cocliques: each component with edges sends its smaller colour
    /// class (the one with the least vertex on ties) to the first part, and
    /// isolated vertices go to the second.
    pub fn bipartite_parts(&self) -> Option<(Vec<u64>, Vec<u64>)> {
        if self.is_edgeless() {
            return None;
        }
        let n = self.len();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut small = Vec::new();
        for start in 0..n {
            if colour[start].is_some() || self.adjacency[start].is_clear() {
                continue;
            }
            colour[start] = Some(false);
            let mut stack = vec![start];
            let mut sides: [Vec<usize>; 2] = [vec![], vec![]];
            while let Some(i) = stack.pop() {
                let c = colour[i].expect("coloured");
                sides[c as usize].push(i);
                for j in self.adjacency[i].ones() {
                    match colour[j] {
                        None => {
                            colour[j] = Some(!c);
                            stack.push(j);
                        }
                        Some(d) if d == c => return None,
                        Some(_) => {}
                    }
                }
            }
            // Side 0 holds the least vertex of the component.
            let pick = if sides[1].len() < sides[0].len() { 1 } else { 0 };
            small.extend(sides[pick].iter().copied());
        }
        small.sort_unstable();
        let a: Vec<u64> = small.iter().map(|&i| self.vertices[i]).collect();
        let b: Vec<u64> = (0..n).filter(|i| small.binary_search(i).is_err()).map(|i| self.vertices[i]).collect();
        Some((a, b))
    }

    /// Part sizes of [`LabeledGraph::bipartite_parts`].
    pub fn bipartite_shape(&self) -> Option<(usize, usize)> {
        self.bipartite_parts().map(|(a, b)| (a.len(), b.len()))
    }

    fn masks(&self, limit: usize) -> Result<Vec<u64>, GraphError> {
        let n = self.len();
        if n > limit {
            return Err(GraphError::TooLarge { n, limit });
        }
        Ok(self
            .adjacency
            .iter()
            .map(|row| row.ones().fold(0u64, |m, j| m | 1 << j))
            .collect())
    }

    /// Canonical text form: a `vertices` line then one `edge p q` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = String::from("vertices");
        for p in &self.vertices {
            out.push_str(&format!(" {p}"));
        }
        out.push('\n');
        for (p, q) in self.edges() {
            out.push_str(&format!("edge {p} {q}\n"));
        }
        out
    }

    /// Parses the text form; blank lines and `#` comments are ignored.
    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let err = |line: usize, message: String| GraphError::Parse { line, message };
        let mut vertices: Option<Vec<u64>> = None;
        let mut edges = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let body = raw.split('#').next().unwrap_or("").trim();
            if body.is_empty() {
                continue;
            }
            let mut words = body.split_whitespace();
            let keyword = words.next().unwrap_or("");
            let numbers: Vec<u64> = words
                .map(|w| w.parse().map_err(|_| err(line, format!("bad number {w:?}"))))
                .collect::<Result<_, _>>()?;
            match keyword {
                "vertices" if vertices.is_none() => {
                    if numbers.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(err(line, "vertices must be strictly ascending".into()));
                    }
                    vertices = Some(numbers);
                }
                "vertices" => return Err(err(line, "repeated vertices line".into())),
                "edge" if vertices.is_some() => {
                    if numbers.len() != 2 {
                        return Err(err(line, "edge needs two vertices".into()));
                    }
                    if numbers[0] >= numbers[1] {
                        return Err(err(line, "edge endpoints must satisfy p < q".into()));
                    }
                    edges.push((numbers[0], numbers[1]));
                }
                "edge" => return Err(err(line, "edge before vertices line".into())),
                other => return Err(err(line, format!("unknown keyword {other:?}"))),
            }
        }
        let vertices = vertices.ok_or_else(|| err(1, "missing vertices line".into()))?;
        LabeledGraph::new(vertices, edges)
    }

    /// Graphviz rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph \"{}\" {{\n", name.replace('"', "\\\""));
        for p in &self.vertices {
            out.push_str(&format!("  {p};\n"));
        }
        for (p, q) in self.edges() {
            out.push_str(&format!("  {p} -- {q};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledGraph {{ vertices: {:?}, edges: {:?} }}", self.vertices, self.edges())
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges().iter().map(|(p, q)| format!("{p}-{q}")).collect();
        write!(f, "{:?} [{}]", self.vertices, edges.join(", "))
    }
}

/// The GK graph of a spectrum: primes of the group order, `p ~ q` iff `pq` is an element order.
pub fn gk_from_spectrum(s: &Spectrum) -> LabeledGraph {
    let primes = prime_divisors(s.group_order());
    let mut edges = Vec::new();
    for (i, &p) in primes.iter().enumerate() {
        for &q in &primes[i + 1..] {
            if s.contains(p * q) {
                edges.push((p, q));
            }
        }
    }
    LabeledGraph::new(primes, edges).expect("prime divisors form a valid vertex set")
}

/// Connected components of a labeled graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    parts: Vec<Vec<u64>>,
}

impl ComponentPartition {
    pub fn parts(&self) -> &[Vec<u64>] {
        &self.parts
    }

    /// `s`, the number of components.
    pub fn count(&self) -> usize {
        self.parts.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn component_of(&self, p: u64) -> Option<&[u64]> {
        self.parts
            .iter()
            .find(|c| c.binary_search(&p).is_ok())
            .map(Vec::as_slice)
    }

    pub fn as_sets(&self) -> Vec<BTreeSet<u64>> {
        self.parts.iter().map(|c| c.iter().copied().collect()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{spectrum, PermGroup};

    fn graph(vs: &[u64], es: &[(u64, u64)]) -> LabeledGraph {
        LabeledGraph::new(vs.iter().copied(), es.iter().copied()).unwrap()
    }

    #[test]
    fn gk_of_small_groups() {
        let a5 = gk_from_spectrum(&spectrum(&PermGroup::alternating(5), 1000).unwrap());
        assert_eq!(a5, graph(&[2, 3, 5], &[]));
        let s5 = gk_from_spectrum(&spectrum(&PermGroup::symmetric(5), 1000).unwrap());
        assert_eq!(s5, graph(&[2, 3, 5], &[(2, 3)]));
        let trivial = gk_from_spectrum(&Spectrum::new([1], 1).unwrap());
        assert!(trivial.is_empty());
    }

    #[test]
    fn components_put_two_first() {
        let g = graph(&[2, 3, 5, 7, 13], &[(3, 5), (2, 13)]);
        let c = g.components();
        assert_eq!(c.parts(), &[vec![2, 13], vec![3, 5], vec![7]]);
        assert_eq!(c.count(), 3);
        let sz8 = graph(&[2, 5, 7, 13], &[]);
        assert_eq!(sz8.components().sizes(), vec![1, 1, 1, 1]);
        assert_eq!(graph(&[3], &[]).components().count(), 1);
        assert_eq!(LabeledGraph::empty().components().count(), 0);
    }

    #[test]
    fn coclique_numbers() {
        assert_eq!(graph(&[2, 3, 5], &[]).independence_number().unwrap(), 3);
        assert_eq!(LabeledGraph::complete([2, 3, 5]).unwrap().independence_number().unwrap(), 1);
        let g = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (3, 5), (3, 7)]);
        assert_eq!(g.independence_number().unwrap(), 2);
        assert_eq!(g.t_at(3).unwrap(), 1);
        assert_eq!(g.t_at(2).unwrap(), 2);
        assert!(matches!(g.t_at(11), Err(GraphError::UnknownVertex(11))));
        let primes: Vec<u64> = (2..200).filter(|&p| is_prime_u64(p)).take(41).collect();
        let big = LabeledGraph::new(primes, []).unwrap();
        assert!(matches!(big.independence_number(), Err(GraphError::TooLarge { n: 41, .. })));
    }

    #[test]
    fn isomorphism_ignores_labels() {
        let a10 = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (3, 5), (3, 7)]);
        let j2 = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (2, 7), (3, 5)]);
        assert_ne!(a10, j2);
        assert!(a10.isomorphic(&j2).unwrap());
        let map = a10.isomorphism(&j2).unwrap().unwrap();
        assert!(map.contains(&(3, 2)) && map.contains(&(7, 7)));
        let path = graph(&[2, 3, 5, 7], &[(2, 3), (3, 5), (5, 7)]);
        let star = graph(&[2, 3, 5, 7], &[(2, 3), (2, 5), (2, 7)]);
        assert!(!path.isomorphic(&star).unwrap());
    }

    #[test]
    fn bipartite_shapes() {
        let star = graph(&[2, 3, 7, 13, 19, 37], &[(2, 3), (2, 7), (2, 13), (2, 19), (2, 37)]);
        assert_eq!(star.bipartite_shape(), Some((1, 5)));
        assert_eq!(star.bipartite_parts().unwrap().0, vec![2]);
        assert!(star.is_complete_bipartite());
        let ree = graph(&[2, 3, 7, 13, 19, 37], &[(2, 3), (2, 7), (2, 13)]);
        assert_eq!(ree.bipartite_parts(), Some((vec![2], vec![3, 7, 13, 19, 37])));
        assert!(!ree.is_complete_bipartite());
        assert_eq!(graph(&[2, 3, 5, 7], &[]).bipartite_shape(), None);
        let s5 = graph(&[2, 3, 5], &[(2, 3)]);
        assert_eq!(s5.bipartite_shape(), Some((1, 2)));
        assert_eq!(s5.complete_bipartite_parts(), None);
        assert_eq!(graph(&[2, 3, 5], &[(2, 3), (3, 5), (2, 5)]).bipartite_shape(), None);
        let k22 = graph(&[2, 3, 5, 7], &[(2, 3), (2, 7), (5, 3), (5, 7)]);
        assert_eq!(k22.complete_bipartite_parts(), Some((vec![2, 5], vec![3, 7])));
        assert_eq!(k22.bipartite_parts(), Some((vec![2, 5], vec![3, 7])));
    }

    #[test]
    fn invalid_graphs_are_rejected() {
        assert_eq!(
            LabeledGraph::new([2, 4], []).unwrap_err(),
            GraphError::NotPrime { value: 4 }
        );
        assert_eq!(LabeledGraph::new([3, 3], []).unwrap_err(), GraphError::DuplicateVertex(3));
        assert_eq!(LabeledGraph::new([3], [(3, 3)]).unwrap_err(), GraphError::Loop(3));
        assert_eq!(LabeledGraph::new([3], [(3, 5)]).unwrap_err(), GraphError::UnknownVertex(5));
    }

    #[test]
    fn text_round_trip() {
        let g = graph(&[2, 3, 5, 7], &[(3, 7), (2, 5), (2, 3)]);
        let text = g.to_text();
        assert_eq!(text, "vertices 2 3 5 7\nedge 2 3\nedge 2 5\nedge 3 7\n");
        assert_eq!(LabeledGraph::parse(&text).unwrap(), g);
        assert_eq!(
            LabeledGraph::parse("# comment\nvertices 2 3\n\nedge 2 3 # note\n").unwrap(),
            graph(&[2, 3], &[(2, 3)])
        );
        assert!(LabeledGraph::parse("vertices 3 2\n").is_err());
        assert!(LabeledGraph::parse("edge 2 3\nvertices 2 3\n").is_err());
        assert!(LabeledGraph::parse("vertices 2 3\nedge 3 2\n").is_err());
        assert!(g.to_dot("G").contains("  3 -- 7;"));
    }
}
