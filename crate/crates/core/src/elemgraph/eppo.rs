//! Groups whose elements all have prime power order.

use std::collections::BTreeSet;
use std::fmt;

use super::{build_from, ElementGraphError, GraphKind};
use crate::group::spectrum::spectrum_of;
use crate::group::structure::{core_p_set, frobenius_kernel};
use crate::group::{is_solvable, ElementSet, GroupError, PermGroup};
use crate::numtheory::prime_divisors;

/// The two sides of the EPPO characterization for one group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EppoEquivalence {
    pub power_equals_enhanced: bool,
    pub gk_edgeless: bool,
}

impl EppoEquivalence {
    /// Whether both sides agree; this must hold for every group.
    pub fn agrees(&self) -> bool {
        self.power_equals_enhanced == self.gk_edgeless
    }
}

/// Compares the power and enhanced power graphs and checks whether `Γ(G)` is edgeless.
pub fn eppo_equivalence(group: &PermGroup, cap: u64) -> Result<EppoEquivalence, GroupError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    let power = build_from(GraphKind::Power, &mut elements);
    let enhanced = build_from(GraphKind::EnhancedPower, &mut elements);
    let spectrum = spectrum_of(&elements);
    let gk_edgeless = spectrum
        .orders()
        .iter()
        .all(|&m| prime_divisors(m).len() <= 1);
    Ok(EppoEquivalence {
        power_equals_enhanced: power.same_edges(&enhanced),
        gk_edgeless,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FrobeniusKind {
    Frobenius,
    /// Solvable, two primes, edgeless and not Frobenius; by the
    /// Gruenberg-Kegel trichotomy such a group is 2-Frobenius.
    TwoFrobenius,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EppoTag {
    PGroup { p: u64 },
    FrobOr2Frob(FrobeniusKind),
    SimpleList { name: &'static str },
    /// `G / O_2(G)` is `SL2(2^n)`.
    Sl2Natural { n: u32, o2_order: u64 },
    Psl34,
    /// `G / O_2(G)` is `Sz(2^n)`.
    SzNatural { n: u32, o2_order: u64 },
    NotEppo,
}

impl EppoTag {
    pub fn label(&self) -> &'static str {
        match self {
            EppoTag::PGroup { .. } => "P_GROUP",
            EppoTag::FrobOr2Frob(_) => "FROB_OR_2FROB",
            EppoTag::SimpleList { .. } => "SIMPLE_LIST",
            EppoTag::Sl2Natural { .. } => "SL2_NATURAL",
            EppoTag::Psl34 => "PSL3_4",
            EppoTag::SzNatural { .. } => "SZ_NATURAL",
            EppoTag::NotEppo => "NOT_EPPO",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EppoCase {
    pub tag: EppoTag,
    pub details: Vec<String>,
}

impl fmt::Display for EppoCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag.label())?;
        for d in &self.details {
            write!(f, "; {d}")?;
        }
        Ok(())
    }
}

/// An (order, spectrum) signature of a known group.
struct Signature {
    name: &'static str,
    order: u64,
    orders: &'static [u64],
}

const SIMPLE_LIST: &[Signature] = &[
    Signature { name: "A6", order: 360, orders: &[1, 2, 3, 4, 5] },
    Signature { name: "PSL2(7)", order: 168, orders: &[1, 2, 3, 4, 7] },
    Signature { name: "PSL2(17)", order: 2448, orders: &[1, 2, 3, 4, 8, 9, 17] },
    Signature { name: "M10", order: 720, orders: &[1, 2, 3, 4, 5, 8] },
];

const PSL3_4: Signature = Signature { name: "PSL3(4)", order: 20160, orders: &[1, 2, 3, 4, 5, 7] };

/// `SL2(2^n)` for `n = 2, 3` and `Sz(2^n)` for `n = 3, 5`.
const SL2: &[(u32, Signature)] = &[
    (2, Signature { name: "SL2(4)", order: 60, orders: &[1, 2, 3, 5] }),
    (3, Signature { name: "SL2(8)", order: 504, orders: &[1, 2, 3, 7, 9] }),
];
const SZ: &[(u32, Signature)] = &[
    (3, Signature { name: "Sz(8)", order: 29120, orders: &[1, 2, 4, 5, 7, 13] }),
    (5, Signature { name: "Sz(32)", order: 32_537_600, orders: &[1, 2, 4, 5, 25, 31, 41] }),
];

impl Signature {
    fn matches(&self, order: u64, orders: &BTreeSet<u64>) -> bool {
        self.order == order && orders.iter().copied().eq(self.orders.iter().copied())
    }
}

fn is_power_of(x: u64, base: u64) -> bool {
    let mut x = x;
    while x % base == 0 {
        x /= base;
    }
    x == 1
}

/// Places an EPPO group into one of the six known cases.
pub fn classify_eppo(group: &PermGroup, cap: u64) -> Result<EppoCase, ElementGraphError> {
    let mut elements = ElementSet::enumerate(group, cap)?;
    let n = elements.len() as u64;
    let spectrum = spectrum_of(&elements);
    if spectrum.orders().iter().any(|&m| prime_divisors(m).len() > 1) {
        let witness = spectrum
            .orders()
            .iter()
            .find(|&&m| prime_divisors(m).len() > 1)
            .copied()
            .unwrap_or_default();
        return Ok(EppoCase {
            tag: EppoTag::NotEppo,
            details: vec![format!("element of order {witness}")],
        });
    }
    let primes = prime_divisors(n);
    match primes.len() {
        0 | 1 => {
            return Ok(EppoCase {
                tag: EppoTag::PGroup { p: primes.first().copied().unwrap_or(1) },
                details: vec![format!("order {n}")],
            })
        }
        2 if is_solvable(group) => {
            let kind = if frobenius_kernel(&mut elements).is_some() {
                FrobeniusKind::Frobenius
            } else {
                FrobeniusKind::TwoFrobenius
            };
            let mut details = vec![format!("primes {primes:?}")];
            if kind == FrobeniusKind::TwoFrobenius {
                details.push("2-Frobenius (inferred: solvable, not Frobenius)".into());
            } else {
                details.push("Frobenius".into());
            }
            return Ok(EppoCase { tag: EppoTag::FrobOr2Frob(kind), details });
        }
        _ => {}
    }

    let o2 = core_p_set(&mut elements, 2, 0);
    let o2_order = o2.len() as u64;
    let quotient_order = n / o2_order;
    let mut quotient_orders = BTreeSet::new();
    for i in 0..elements.len() {
        let mut x = i;
        let mut k = 1u64;
        while !o2.contains(x) {
            x = elements.mul(x, i);
            k += 1;
        }
        quotient_orders.insert(k);
    }
    for (deg, sig) in SL2 {
        if sig.matches(quotient_order, &quotient_orders) && is_power_of(o2_order, 1 << (2 * deg)) {
            return Ok(EppoCase {
                tag: EppoTag::Sl2Natural { n: *deg, o2_order },
                details: vec![format!("G/O_2(G) = {}", sig.name), format!("|O_2(G)| = {o2_order}")],
            });
        }
    }
    for (deg, sig) in SZ {
        if sig.matches(quotient_order, &quotient_orders) && is_power_of(o2_order, 1 << (4 * deg)) {
            return Ok(EppoCase {
                tag: EppoTag::SzNatural { n: *deg, o2_order },
                details: vec![format!("G/O_2(G) = {}", sig.name), format!("|O_2(G)| = {o2_order}")],
            });
        }
    }
    if o2_order == 1 {
        if let Some(sig) = SIMPLE_LIST.iter().find(|s| s.matches(n, spectrum.orders())) {
            return Ok(EppoCase {
                tag: EppoTag::SimpleList { name: sig.name },
                details: vec![format!("G = {}", sig.name)],
            });
        }
        if PSL3_4.matches(n, spectrum.orders()) {
            return Ok(EppoCase {
                tag: EppoTag::Psl34,
                details: vec![format!("G = {}", PSL3_4.name)],
            });
        }
    }
    Err(ElementGraphError::Unclassifiable {
        evidence: format!(
            "|G| = {n}, spectrum {spectrum}, |O_2(G)| = {o2_order}, quotient orders {quotient_orders:?}"
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{embedded_group, embedded_module, spectrum};

    fn tag(g: &PermGroup) -> EppoTag {
        classify_eppo(g, 100_000).unwrap().tag
    }

    #[test]
    fn signatures_match_constructed_groups() {
        let groups = [
            (PermGroup::psl2(9).unwrap(), "A6"),
            (PermGroup::psl2(7).unwrap(), "PSL2(7)"),
            (PermGroup::psl2(17).unwrap(), "PSL2(17)"),
            (PermGroup::m10(), "M10"),
        ];
        for (g, name) in groups {
            let s = spectrum(&g, 10_000).unwrap();
            let sig = SIMPLE_LIST.iter().find(|s| s.name == name).unwrap();
            assert!(sig.matches(s.group_order(), s.orders()), "{name}");
        }
        let s = spectrum(&embedded_group("PSL3(4)").unwrap(), 30_000).unwrap();
        assert!(PSL3_4.matches(s.group_order(), s.orders()));
        for (q, sig) in [(4, &SL2[0].1), (8, &SL2[1].1)] {
            let s = spectrum(&PermGroup::psl2(q).unwrap(), 10_000).unwrap();
            assert!(sig.matches(s.group_order(), s.orders()));
        }
        let s = spectrum(&embedded_module("Sz(8)").unwrap().1, 30_000).unwrap();
        assert!(SZ[0].1.matches(s.group_order(), s.orders()));
    }

    #[test]
    fn equivalence_examples() {
        let a6 = eppo_equivalence(&PermGroup::alternating(6), 1000).unwrap();
        assert_eq!((a6.power_equals_enhanced, a6.gk_edgeless, a6.agrees()), (true, true, true));
        let s5 = eppo_equivalence(&PermGroup::symmetric(5), 1000).unwrap();
        assert_eq!((s5.power_equals_enhanced, s5.gk_edgeless, s5.agrees()), (false, false, true));
        let c4 = eppo_equivalence(&PermGroup::cyclic(4), 1000).unwrap();
        assert!(c4.power_equals_enhanced && c4.gk_edgeless);
    }

    #[test]
    fn classification_examples() {
        assert_eq!(tag(&PermGroup::psl2(17).unwrap()), EppoTag::SimpleList { name: "PSL2(17)" });
        assert_eq!(tag(&PermGroup::alternating(6)), EppoTag::SimpleList { name: "A6" });
        assert_eq!(tag(&PermGroup::m10()), EppoTag::SimpleList { name: "M10" });
        assert_eq!(tag(&PermGroup::symmetric(4)), EppoTag::FrobOr2Frob(FrobeniusKind::TwoFrobenius));
        assert_eq!(tag(&PermGroup::symmetric(3)), EppoTag::FrobOr2Frob(FrobeniusKind::Frobenius));
        assert_eq!(tag(&PermGroup::cyclic(8)), EppoTag::PGroup { p: 2 });
        assert_eq!(tag(&PermGroup::symmetric(5)), EppoTag::NotEppo);
        assert_eq!(tag(&PermGroup::alternating(5)), EppoTag::Sl2Natural { n: 2, o2_order: 1 });
        assert_eq!(tag(&PermGroup::psl2(8).unwrap()), EppoTag::Sl2Natural { n: 3, o2_order: 1 });
    }

    #[test]
    fn natural_module_extension() {
        let (action, _) = embedded_module("SL2(4)").unwrap();
        let g = action.affine_group().unwrap();
        assert_eq!(g.order(), 960u32.into());
        assert_eq!(tag(&g), EppoTag::Sl2Natural { n: 2, o2_order: 16 });
    }

    #[test]
    fn psl3_4_case() {
        let g = embedded_group("PSL3(4)").unwrap();
        assert_eq!(tag(&g), EppoTag::Psl34);
    }
}
