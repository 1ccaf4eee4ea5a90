//! Explicit element lists of permutation groups.
//!
//! Elements are stored packed, one byte per point for degree at most 256 and
//! two bytes otherwise, and indexed through a hash table keyed on the packed
//! image list. Element `0` is always the identity.

use std::hash::{BuildHasher, Hash};

use hashbrown::{DefaultHashBuilder, HashTable};

use super::{GroupError, PermGroup};
use crate::perm::Permutation;

trait Point: Copy + Eq + Hash {
    fn from_u32(x: u32) -> Self;
    fn to_usize(self) -> usize;
}

impl Point for u8 {
    #[inline]
    fn from_u32(x: u32) -> Self {
        x as u8
    }
    #[inline]
    fn to_usize(self) -> usize {
        self as usize
    }
}

impl Point for u16 {
    #[inline]
    fn from_u32(x: u32) -> Self {
        x as u16
    }
    #[inline]
    fn to_usize(self) -> usize {
        self as usize
    }
}

struct Packed<P> {
    stride: usize,
    data: Vec<P>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
    scratch: Vec<P>,
}

impl<P: Point> Packed<P> {
    fn new(stride: usize) -> Self {
        Packed {
            stride,
            data: Vec::new(),
            table: HashTable::new(),
            hasher: DefaultHashBuilder::default(),
            scratch: vec![P::from_u32(0); stride],
        }
    }

    #[inline]
    fn len(&self) -> usize {
        if self.stride == 0 {
            self.table.len()
        } else {
            self.data.len() / self.stride
        }
    }

    #[inline]
    fn row(&self, i: usize) -> &[P] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn find(&self, key: &[P]) -> Option<usize> {
        let h = self.hasher.hash_one(key);
        self.table
            .find(h, |&i| self.row(i as usize) == key)
            .map(|&i| i as usize)
    }

    /// Inserts `scratch` if new; returns `(index, inserted)`.
    fn insert_scratch(&mut self) -> (usize, bool) {
        let h = self.hasher.hash_one(&self.scratch[..]);
        let stride = self.stride;
        let data = &self.data;
        let scratch = &self.scratch;
        if let Some(&i) = self
            .table
            .find(h, |&i| &data[i as usize * stride..(i as usize + 1) * stride] == &scratch[..])
        {
            return (i as usize, false);
        }
        let idx = self.len();
        self.data.extend_from_slice(&self.scratch);
        let hasher = &self.hasher;
        let data = &self.data;
        self.table.insert_unique(h, idx as u32, |&i| {
            hasher.hash_one(&data[i as usize * stride..(i as usize + 1) * stride])
        });
        (idx, true)
    }

    fn load_scratch(&mut self, images: &[u32]) {
        for (s, &x) in self.scratch.iter_mut().zip(images) {
            *s = P::from_u32(x);
        }
    }

    fn load_product(&mut self, i: usize, g: &[u32]) {
        let start = i * self.stride;
        for x in 0..self.stride {
            self.scratch[x] = P::from_u32(g[self.data[start + x].to_usize()]);
        }
    }

    fn load_product_idx(&mut self, i: usize, j: usize) {
        let (si, sj) = (i * self.stride, j * self.stride);
        for x in 0..self.stride {
            let y = self.data[si + x].to_usize();
            self.scratch[x] = self.data[sj + y];
        }
    }

    fn find_scratch(&self) -> Option<usize> {
        self.find(&self.scratch)
    }
}

enum Store {
    Byte(Packed<u8>),
    Word(Packed<u16>),
}

macro_rules! dispatch {
    ($self:expr, $p:ident => $body:expr) => {
        match $self {
            Store::Byte($p) => $body,
            Store::Word($p) => $body,
        }
    };
}

/// All elements of a finite permutation group.
pub struct ElementSet {
    degree: usize,
    store: Store,
    /// Breadth-first tree: element `i > 0` equals `parent[i].0 * gens[parent[i].1]`.
    parent: Vec<(u32, u32)>,
    generators: Vec<Permutation>,
}

impl ElementSet {
    /// Enumerates `G` by closure under right multiplication by generators.
    pub fn enumerate(group: &PermGroup, cap: u64) -> Result<Self, GroupError> {
        let degree = group.degree();
        if degree > u16::MAX as usize + 1 {
            return Err(GroupError::DegreeTooLarge(degree));
        }
        let store = if degree <= 256 {
            Store::Byte(Packed::new(degree))
        } else {
            Store::Word(Packed::new(degree))
        };
        let mut set = ElementSet {
            degree,
            store,
            parent: vec![(0, 0)],
            generators: group.generators().to_vec(),
        };
        let id: Vec<u32> = (0..degree as u32).collect();
        dispatch!(&mut set.store, p => {
            p.load_scratch(&id);
            p.insert_scratch();
        });
        if degree == 0 {
            return Ok(set);
        }
        let gens: Vec<Vec<u32>> = set.generators.iter().map(|g| g.images().to_vec()).collect();
        let mut head = 0usize;
        let parent = &mut set.parent;
        let result = dispatch!(&mut set.store, p => {
            let mut out = Ok(());
            'bfs: while head < p.len() {
                for (k, g) in gens.iter().enumerate() {
                    p.load_product(head, g);
                    if p.find_scratch().is_none() {
                        if p.len() as u64 >= cap {
                            out = Err(GroupError::CapExceeded { cap });
                            break 'bfs;
                        }
                        p.insert_scratch();
                        parent.push((head as u32, k as u32));
                    }
                }
                head += 1;
            }
            out
        });
        result.map(|_| set)
    }

    pub fn len(&self) -> usize {
        dispatch!(&self.store, p => p.len())
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Breadth-first parent of element `i` and the generator index used.
    pub fn parent(&self, i: usize) -> Option<(usize, usize)> {
        if i == 0 {
            None
        } else {
            let (p, k) = self.parent[i];
            Some((p as usize, k as usize))
        }
    }

    /// Image of point `x` under element `i`.
    #[inline]
    pub fn image(&self, i: usize, x: usize) -> usize {
        dispatch!(&self.store, p => p.data[i * p.stride + x].to_usize())
    }

    pub fn get(&self, i: usize) -> Permutation {
        let images = dispatch!(&self.store, p => p.row(i).iter().map(|&x| x.to_usize() as u32).collect());
        Permutation::from_images_unchecked(images)
    }

    pub fn iter(&self) -> impl Iterator<Item = Permutation> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        if g.degree() != self.degree {
            return None;
        }
        match &self.store {
            Store::Byte(p) => {
                let key: Vec<u8> = g.images().iter().map(|&x| x as u8).collect();
                p.find(&key)
            }
            Store::Word(p) => {
                let key: Vec<u16> = g.images().iter().map(|&x| x as u16).collect();
                p.find(&key)
            }
        }
    }

    /// Index of the product `e_i * e_j` (apply `e_i` first).
    pub fn mul(&mut self, i: usize, j: usize) -> usize {
        dispatch!(&mut self.store, p => {
            p.load_product_idx(i, j);
            p.find_scratch().expect("element set is closed under multiplication")
        })
    }

    /// Index of `e_i * g` for an arbitrary permutation `g` in the group.
    pub fn mul_perm(&mut self, i: usize, g: &Permutation) -> usize {
        dispatch!(&mut self.store, p => {
            p.load_product(i, g.images());
            p.find_scratch().expect("element set is closed under multiplication")
        })
    }

    /// Index of `g^-1 e_i g`.
    pub fn conjugate(&mut self, i: usize, g: &Permutation) -> usize {
        let c = self.get(i).conjugate_by(g);
        self.index_of(&c).expect("conjugate lies in the group")
    }

    pub fn inverse(&self, i: usize) -> usize {
        self.index_of(&self.get(i).inverse()).expect("inverse lies in the group")
    }

    /// Order of element `i`.
    pub fn order(&self, i: usize) -> u64 {
        let n = self.degree;
        let mut seen = vec![false; n];
        let mut acc = 1u64;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.image(i, x);
                len += 1;
            }
            acc = num_integer::lcm(acc, len);
        }
        acc
    }

    /// Whether elements `i` and `j` commute, compared point by point.
    pub fn commute(&self, i: usize, j: usize) -> bool {
        dispatch!(&self.store, p => {
            let (a, b) = (p.row(i), p.row(j));
            (0..p.stride).all(|x| b[a[x].to_usize()] == a[b[x].to_usize()])
        })
    }

    /// Indices of the distinct nontrivial powers `e_i^k`, `1 <= k < |e_i|`,
    /// in order of `k`.
    pub fn powers(&mut self, i: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut cur = i;
        while cur != 0 {
            out.push(cur);
            cur = self.mul(cur, i);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;

    #[test]
    fn enumerates_symmetric_groups() {
        for n in 1..=6 {
            let g = PermGroup::symmetric(n);
            let e = ElementSet::enumerate(&g, 1_000_000).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(e.len(), fact);
            assert!(e.get(0).is_identity());
        }
    }

    #[test]
    fn cap_is_enforced() {
        let g = PermGroup::symmetric(6);
        assert!(matches!(
            ElementSet::enumerate(&g, 100),
            Err(GroupError::CapExceeded { cap: 100 })
        ));
        assert!(ElementSet::enumerate(&g, 720).is_ok());
    }

    #[test]
    fn parent_tree_reconstructs_elements() {
        let g = PermGroup::alternating(5);
        let e = ElementSet::enumerate(&g, 1000).unwrap();
        for i in 1..e.len() {
            let (p, k) = e.parent(i).unwrap();
            assert_eq!(e.get(p).compose(&e.generators()[k]), e.get(i));
        }
    }

    #[test]
    fn wide_storage_works() {
        // a 3-cycle and a transposition on 300 points generate S3
        let a = Permutation::from_cycles(300, &[&[0, 150, 299]]).unwrap();
        let b = Permutation::from_cycles(300, &[&[0, 150]]).unwrap();
        let g = PermGroup::new(300, vec![a, b]).unwrap();
        let mut e = ElementSet::enumerate(&g, 100).unwrap();
        assert_eq!(e.len(), 6);
        let orders: Vec<u64> = (0..6).map(|i| e.order(i)).collect();
        assert_eq!(orders.iter().filter(|&&o| o == 2).count(), 3);
        let x = e.index_of(&g.generators()[0]).unwrap();
        assert_eq!(e.powers(x).len(), 2);
    }
}
