//! Solvability, `O_p`, normal subgroups and Frobenius groups.

use std::collections::HashSet;

use fixedbitset::FixedBitSet;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::spectrum::conjugacy_classes;
use super::{Bsgs, ElementSet, GroupError, PermGroup};
use crate::perm::Permutation;

/// A subgroup of an enumerated group, as a set of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    members: FixedBitSet,
}

impl SubgroupSet {
    /// The subgroup generated by the given element indices.
    pub fn generated(elements: &mut ElementSet, gens: &[usize]) -> Self {
        let n = elements.len();
        let mut members = FixedBitSet::with_capacity(n);
        members.insert(0);
        let mut list = vec![0usize];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = elements.mul(x, g);
                if !members.contains(y) {
                    members.insert(y);
                    list.push(y);
                }
            }
        }
        SubgroupSet { members }
    }

    pub fn trivial(n: usize) -> Self {
        let mut members = FixedBitSet::with_capacity(n);
        members.insert(0);
        SubgroupSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersect(&self, other: &SubgroupSet) -> SubgroupSet {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        SubgroupSet { members }
    }

    /// A small generating set, chosen greedily in index order.
    pub fn generators(&self, elements: &mut ElementSet) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = SubgroupSet::trivial(elements.len());
        for x in self.iter() {
            if !span.contains(x) {
                gens.push(x);
                span = SubgroupSet::generated(elements, &gens);
                if span.len() == self.len() {
                    break;
                }
            }
        }
        gens
    }

    pub fn to_group(&self, elements: &mut ElementSet) -> PermGroup {
        let gens = self.generators(elements);
        let perms = gens.into_iter().map(|i| elements.get(i)).collect();
        PermGroup::new(elements.degree(), perms).expect("same degree")
    }
}

fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().compose(&b.inverse()).compose(a).compose(b)
}

/// Generators of the normal closure of `xs` in the group generated by `gens`.
fn normal_closure(degree: usize, gens: &[Permutation], xs: Vec<Permutation>) -> Vec<Permutation> {
    let mut ngens: Vec<Permutation> = xs.into_iter().filter(|x| !x.is_identity()).collect();
    let mut bsgs = Bsgs::new(degree, &ngens);
    let mut i = 0;
    while i < ngens.len() {
        for g in gens {
            let y = ngens[i].conjugate_by(g);
            if !bsgs.contains(&y) {
                ngens.push(y);
                bsgs = Bsgs::new(degree, &ngens);
            }
        }
        i += 1;
    }
    ngens
}

/// Solvability through the derived series, computed with Schreier-Sims.
pub fn is_solvable(group: &PermGroup) -> bool {
    let degree = group.degree();
    let mut gens = group.generators().to_vec();
    let mut order = Bsgs::new(degree, &gens).order();
    loop {
        if gens.is_empty() || order == 1u32.into() {
            return true;
        }
        let mut comms = Vec::new();
        for (i, a) in gens.iter().enumerate() {
            for b in &gens[i + 1..] {
                comms.push(commutator(a, b));
            }
        }
        let derived = normal_closure(degree, &gens, comms);
        let derived_order = Bsgs::new(degree, &derived).order();
        if derived_order == order {
            return false;
        }
        gens = derived;
        order = derived_order;
    }
}

fn p_part(mut n: u64, p: u64) -> u64 {
    let mut out = 1;
    while n % p == 0 {
        n /= p;
        out *= p;
    }
    out
}

/// Normalizer of `h` (given by generators) in the whole enumerated group.
fn normalizer(elements: &mut ElementSet, h: &SubgroupSet, hgens: &[usize]) -> Vec<usize> {
    let gens: Vec<Permutation> = hgens.iter().map(|&i| elements.get(i)).collect();
    let mut out = Vec::new();
    for g in 0..elements.len() {
        let gp = elements.get(g);
        if gens.iter().all(|x| {
            let c = x.conjugate_by(&gp);
            h.contains(elements.index_of(&c).expect("in group"))
        }) {
            out.push(g);
        }
    }
    out
}

/// A Sylow `p`-subgroup, grown one step at a time inside normalizers.
pub(crate) fn sylow(elements: &mut ElementSet, p: u64, seed: u64) -> SubgroupSet {
    let target = p_part(elements.len() as u64, p) as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut h = SubgroupSet::trivial(elements.len());
    let mut hgens: Vec<usize> = Vec::new();
    while h.len() < target {
        let mut candidates: Vec<usize> = normalizer(elements, &h, &hgens)
            .into_iter()
            .filter(|&g| !h.contains(g))
            .collect();
        candidates.shuffle(&mut rng);
        let y = candidates
            .into_iter()
            .find(|&y| {
                let mut z = y;
                for _ in 1..p {
                    z = elements.mul(z, y);
                }
                h.contains(z)
            })
            .expect("a p-element exists in N(H)/H while H is not Sylow");
        hgens.push(y);
        h = SubgroupSet::generated(elements, &hgens);
    }
    h
}

fn conjugate_subgroup(elements: &mut ElementSet, h: &SubgroupSet, g: &Permutation) -> SubgroupSet {
    let mut members = FixedBitSet::with_capacity(elements.len());
    let items: Vec<usize> = h.iter().collect();
    for x in items {
        members.insert(elements.conjugate(x, g));
    }
    SubgroupSet { members }
}

/// `O_p(G)`: the intersection of all Sylow `p`-subgroups.
///
/// One Sylow subgroup is found by a seeded randomized search; the result
/// does not depend on the seed.
pub fn core_p(group: &PermGroup, p: u64, cap: u64, seed: u64) -> Result<PermGroup, GroupError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    let core = core_p_set(&mut elements, p, seed);
    Ok(core.to_group(&mut elements))
}

pub(crate) fn core_p_set(elements: &mut ElementSet, p: u64, seed: u64) -> SubgroupSet {
    let n = elements.len();
    if p_part(n as u64, p) == 1 {
        return SubgroupSet::trivial(n);
    }
    let s = sylow(elements, p, seed);
    let gens: Vec<Permutation> = elements.generators().to_vec();
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    let mut queue = vec![s.clone()];
    seen.insert(s.clone());
    let mut core = s;
    while let Some(q) = queue.pop() {
        for g in &gens {
            let c = conjugate_subgroup(elements, &q, g);
            if seen.insert(c.clone()) {
                core = core.intersect(&c);
                queue.push(c);
            }
        }
    }
    core
}

/// All normal subgroups of an enumerated group, sorted by size.
pub fn normal_subgroups(elements: &mut ElementSet) -> Vec<SubgroupSet> {
    let classes = conjugacy_classes(elements);
    let mut found: Vec<SubgroupSet> = Vec::new();
    let mut seen: HashSet<SubgroupSet> = HashSet::new();
    for class in &classes {
        let s = SubgroupSet::generated(elements, class);
        if seen.insert(s.clone()) {
            found.push(s);
        }
    }
    let mut gens: Vec<Vec<usize>> = found.iter().map(|s| s.generators(elements)).collect();
    let minimal_count = found.len();
    let mut i = 0;
    while i < found.len() {
        for j in 0..minimal_count {
            if found[j].is_subset(&found[i]) {
                continue;
            }
            let mut g = gens[i].clone();
            g.extend(&gens[j]);
            let join = SubgroupSet::generated(elements, &g);
            if seen.insert(join.clone()) {
                gens.push(join.generators(elements));
                found.push(join);
            }
        }
        i += 1;
    }
    found.sort_by_key(|s| s.len());
    found
}

/// The Frobenius kernel, if the enumerated group is a Frobenius group.
pub(crate) fn frobenius_kernel(elements: &mut ElementSet) -> Option<SubgroupSet> {
    let n = elements.len();
    let classes = conjugacy_classes(elements);
    for k in normal_subgroups(elements) {
        if k.len() == 1 || k.len() == n {
            continue;
        }
        let ok = classes
            .iter()
            .filter(|c| c[0] != 0 && k.contains(c[0]))
            .all(|c| {
                let x = c[0];
                (0..n).all(|g| !elements.commute(x, g) || k.contains(g))
            });
        if ok {
            return Some(k);
        }
    }
    None
}

/// Whether `G` is a Frobenius group: some proper nontrivial normal subgroup
/// `K` contains the centralizer of each of its nonidentity elements.
pub fn is_frobenius(group: &PermGroup, cap: u64) -> Result<bool, GroupError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    Ok(frobenius_kernel(&mut elements).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solvability_of_small_groups() {
        assert!(is_solvable(&PermGroup::symmetric(4)));
        assert!(is_solvable(&PermGroup::cyclic(30)));
        assert!(is_solvable(&PermGroup::trivial(3)));
        assert!(!is_solvable(&PermGroup::alternating(5)));
        assert!(!is_solvable(&PermGroup::symmetric(6)));
        assert!(is_solvable(&PermGroup::dihedral(20).unwrap()));
    }

    #[test]
    fn frobenius_examples() {
        assert!(is_frobenius(&PermGroup::alternating(4), 1000).unwrap());
        assert!(is_frobenius(&PermGroup::symmetric(3), 1000).unwrap());
        assert!(is_frobenius(&PermGroup::dihedral(10).unwrap(), 1000).unwrap());
        assert!(!is_frobenius(&PermGroup::symmetric(4), 1000).unwrap());
        assert!(!is_frobenius(&PermGroup::cyclic(6), 1000).unwrap());
        assert!(!is_frobenius(&PermGroup::alternating(5), 1000).unwrap());
    }

    #[test]
    fn normal_subgroup_counts() {
        let mut e = ElementSet::enumerate(&PermGroup::symmetric(4), 100).unwrap();
        let sizes: Vec<usize> = normal_subgroups(&mut e).iter().map(|s| s.len()).collect();
        assert_eq!(sizes, vec![1, 4, 12, 24]);
        let mut e = ElementSet::enumerate(&PermGroup::cyclic(12), 100).unwrap();
        assert_eq!(normal_subgroups(&mut e).len(), 6);
    }

    #[test]
    fn p_cores() {
        let s4 = PermGroup::symmetric(4);
        assert_eq!(core_p(&s4, 2, 100, 1).unwrap().order(), 4u32.into());
        assert_eq!(core_p(&s4, 3, 100, 1).unwrap().order(), 1u32.into());
        let a5 = PermGroup::alternating(5);
        for seed in 0..5 {
            assert_eq!(core_p(&a5, 2, 100, seed).unwrap().order(), 1u32.into());
        }
        let c12 = PermGroup::cyclic(12);
        assert_eq!(core_p(&c12, 2, 100, 7).unwrap().order(), 4u32.into());
        assert_eq!(core_p(&c12, 5, 100, 7).unwrap().order(), 1u32.into());
    }
}
