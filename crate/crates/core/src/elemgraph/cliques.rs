//! Exhaustive maximal clique enumeration for small element graphs.

use fixedbitset::FixedBitSet;

use super::ElementGraph;
use crate::group::GroupError;

/// Largest vertex count accepted by [`bron_kerbosch`].
pub const CLIQUE_SEARCH_LIMIT: usize = 360;

/// All maximal cliques, by Bron-Kerbosch with Tomita pivoting.
pub fn bron_kerbosch(g: &ElementGraph) -> Result<Vec<Vec<usize>>, GroupError> {
    let n = g.vertex_count();
    if n > CLIQUE_SEARCH_LIMIT {
        return Err(GroupError::Unsupported(format!(
            "clique search on {n} vertices exceeds {CLIQUE_SEARCH_LIMIT}"
        )));
    }
    let mut out = Vec::new();
    let mut p = FixedBitSet::with_capacity(n);
    p.insert_range(..);
    let x = FixedBitSet::with_capacity(n);
    let mut r = Vec::new();
    expand(g, &mut r, p, x, &mut out);
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn expand(g: &ElementGraph, r: &mut Vec<usize>, mut p: FixedBitSet, mut x: FixedBitSet, out: &mut Vec<Vec<usize>>) {
    if p.is_clear() {
        if x.is_clear() {
            out.push(r.clone());
        }
        return;
    }
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| g.row(u).intersection(&p).count())
        .expect("p is nonempty");
    let mut branch = p.clone();
    branch.difference_with(g.row(pivot));
    for v in branch.ones() {
        let mut np = p.clone();
        np.intersect_with(g.row(v));
        let mut nx = x.clone();
        nx.intersect_with(g.row(v));
        r.push(v);
        expand(g, r, np, nx, out);
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elemgraph::{build, build_from, maximal_abelian_subgroups, CyclicStructure, GraphKind};
    use crate::group::PermGroup;

    #[test]
    fn enhanced_cliques_are_maximal_cyclic_subgroups() {
        for g in [
            PermGroup::symmetric(4),
            PermGroup::symmetric(5),
            PermGroup::alternating(6),
            PermGroup::dihedral(12).unwrap(),
        ] {
            let mut e = g.elements(1000).unwrap();
            let graph = build_from(GraphKind::EnhancedPower, &mut e);
            let cliques = bron_kerbosch(&graph).unwrap();
            let mut cyclic = CyclicStructure::new(&mut e).maximal_cyclic_subgroups().to_vec();
            cyclic.sort();
            assert_eq!(cliques, cyclic);
        }
    }

    #[test]
    fn greedy_abelian_subgroups_are_commuting_cliques() {
        for g in [PermGroup::symmetric(4), PermGroup::symmetric(5), PermGroup::alternating(6)] {
            let mut e = g.elements(1000).unwrap();
            let graph = build_from(GraphKind::Commuting, &mut e);
            let cliques = bron_kerbosch(&graph).unwrap();
            let cyc = CyclicStructure::new(&mut e);
            let greedy = maximal_abelian_subgroups(&mut e, &cyc);
            for a in &greedy {
                assert!(cliques.contains(a));
            }
            let mut covered = vec![false; e.len()];
            for a in &greedy {
                for &x in a {
                    covered[x] = true;
                }
            }
            assert!(covered.iter().all(|&c| c));
        }
    }

    #[test]
    fn limit() {
        let g = build(GraphKind::Power, &PermGroup::alternating(6), 1000).unwrap();
        assert!(bron_kerbosch(&g).is_ok());
        let g = build(GraphKind::Power, &PermGroup::symmetric(6), 1000).unwrap();
        assert!(bron_kerbosch(&g).is_err());
    }
}
