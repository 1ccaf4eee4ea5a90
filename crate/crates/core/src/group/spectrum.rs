//! Element-order spectra and conjugacy classes.

use std::collections::BTreeSet;
use std::fmt;

use super::{ElementSet, GroupError, PermGroup};
use crate::perm::Permutation;

/// The set of element orders of a finite group, together with its order.
///
/// Invariants: `1` is present, every order divides `group_order`, and the set
/// is closed under taking divisors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    orders: BTreeSet<u64>,
    group_order: u64,
}

impl Spectrum {
    /// Builds a spectrum from a set of orders, closing it under divisors.
    pub fn new(orders: impl IntoIterator<Item = u64>, group_order: u64) -> Result<Self, String> {
        let mut set = BTreeSet::new();
        set.insert(1);
        for o in orders {
            if o == 0 || group_order % o != 0 {
                return Err(format!("order {o} does not divide {group_order}"));
            }
            for d in divisors(o) {
                set.insert(d);
            }
        }
        Ok(Spectrum {
            orders: set,
            group_order,
        })
    }

    pub fn orders(&self) -> &BTreeSet<u64> {
        &self.orders
    }

    pub fn group_order(&self) -> u64 {
        self.group_order
    }

    pub fn contains(&self, n: u64) -> bool {
        self.orders.contains(&n)
    }

    /// Orders that are not proper divisors of another order.
    pub fn maximal_orders(&self) -> Vec<u64> {
        self.orders
            .iter()
            .copied()
            .filter(|&a| !self.orders.iter().any(|&b| b != a && b % a == 0))
            .collect()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// `omega(G)`, the set of element orders, by explicit enumeration.
pub fn spectrum(group: &PermGroup, cap: u64) -> Result<Spectrum, GroupError> {
    let elements = ElementSet::enumerate(group, cap)?;
    Ok(spectrum_of(&elements))
}

pub(crate) fn spectrum_of(elements: &ElementSet) -> Spectrum {
    let mut orders = BTreeSet::new();
    for i in 0..elements.len() {
        orders.insert(elements.order(i));
    }
    Spectrum::new(orders, elements.len() as u64).expect("element orders divide the group order")
}

/// Conjugacy classes as lists of element indices; the class of the identity
/// comes first and every class starts with its smallest index.
pub fn conjugacy_classes(elements: &mut ElementSet) -> Vec<Vec<usize>> {
    let n = elements.len();
    let gens: Vec<Permutation> = elements.generators().to_vec();
    let mut class_of = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for start in 0..n {
        if class_of[start] != usize::MAX {
            continue;
        }
        let id = classes.len();
        class_of[start] = id;
        let mut class = vec![start];
        let mut head = 0;
        while head < class.len() {
            let x = class[head];
            head += 1;
            for g in &gens {
                let y = elements.conjugate(x, g);
                if class_of[y] == usize::MAX {
                    class_of[y] = id;
                    class.push(y);
                }
            }
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_closure() {
        let s = Spectrum::new([6, 4], 24).unwrap();
        assert_eq!(s.orders().iter().copied().collect::<Vec<_>>(), vec![1, 2, 3, 4, 6]);
        assert_eq!(s.maximal_orders(), vec![4, 6]);
        assert!(Spectrum::new([5], 24).is_err());
    }

    #[test]
    fn small_spectra() {
        let s = spectrum(&PermGroup::alternating(5), 1000).unwrap();
        assert_eq!(s.to_string(), "{1, 2, 3, 5}");
        assert_eq!(s.group_order(), 60);
        let s = spectrum(&PermGroup::symmetric(6), 1000).unwrap();
        assert_eq!(s.to_string(), "{1, 2, 3, 4, 5, 6}");
        let s = spectrum(&PermGroup::cyclic(12), 1000).unwrap();
        assert_eq!(s.to_string(), "{1, 2, 3, 4, 6, 12}");
    }

    #[test]
    fn class_counts() {
        let mut e = ElementSet::enumerate(&PermGroup::symmetric(5), 1000).unwrap();
        assert_eq!(conjugacy_classes(&mut e).len(), 7);
        let mut e = ElementSet::enumerate(&PermGroup::alternating(5), 1000).unwrap();
        let classes = conjugacy_classes(&mut e);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 12, 12, 15, 20]);
    }
}
