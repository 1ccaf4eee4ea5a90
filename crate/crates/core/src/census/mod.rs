//! Finite simple groups: identifiers, orders, prime sets and bounded search.

mod enumerate;
mod out;
mod sporadic;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use thiserror::Error;

use crate::numtheory::{cyclotomic_value, factorize_u64, factorize_with, is_prime_u64, FactorCache, Factorization};

pub use enumerate::{audit_frontier, enumerate_simple, FrontierAudit, NUM_SIMPLE_BOUND_DOC};
pub use out::{
    count_almost_simple, count_out_subgroups, f_bound, num_simple_bound, out_bound, out_group, out_structure,
    AlmostSimpleCount, G2Kind, OutStructure, SmallGroup,
};
pub use sporadic::{sporadic_table, SporadicEntry};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CensusError {
    #[error("invalid simple group identifier: {0}")]
    InvalidId(String),
    #[error("cannot parse {0:?} as a simple group")]
    Parse(String),
}

/// Families of simple groups of Lie type, in untwisted/twisted notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieFamily {
    A,
    B,
    C,
    D,
    TwistedA,
    TwistedD,
    E6,
    E7,
    E8,
    F4,
    G2,
    TwistedE6,
    Triality,
    Suzuki,
    Ree,
    BigRee,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::A,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::TwistedA,
        LieFamily::TwistedD,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::F4,
        LieFamily::G2,
        LieFamily::TwistedE6,
        LieFamily::Triality,
        LieFamily::Suzuki,
        LieFamily::Ree,
        LieFamily::BigRee,
    ];

    pub fn prefix(self) -> &'static str {
        match self {
            LieFamily::A => "A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::TwistedA => "2A",
            LieFamily::TwistedD => "2D",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::F4 => "F4",
            LieFamily::G2 => "G2",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::Triality => "3D4",
            LieFamily::Suzuki => "2B2",
            LieFamily::Ree => "2G2",
            LieFamily::BigRee => "2F4",
        }
    }

    /// Classical families carry a rank parameter.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            LieFamily::A | LieFamily::B | LieFamily::C | LieFamily::D | LieFamily::TwistedA | LieFamily::TwistedD
        )
    }

    /// Smallest rank for which the family is defined without overlaps.
    pub fn min_rank(self) -> u32 {
        match self {
            LieFamily::A => 1,
            LieFamily::B => 2,
            LieFamily::C => 3,
            LieFamily::D | LieFamily::TwistedD => 4,
            LieFamily::TwistedA => 2,
            LieFamily::E6 | LieFamily::TwistedE6 => 6,
            LieFamily::E7 => 7,
            LieFamily::E8 => 8,
            LieFamily::F4 | LieFamily::Triality => 4,
            LieFamily::G2 | LieFamily::Suzuki | LieFamily::Ree => 2,
            LieFamily::BigRee => 4,
        }
    }

    /// Characteristic forced by the family, if any.
    pub fn forced_characteristic(self) -> Option<u64> {
        match self {
            LieFamily::Suzuki | LieFamily::BigRee => Some(2),
            LieFamily::Ree => Some(3),
            _ => None,
        }
    }
}

/// A finite non-abelian simple group, named by family and parameters.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SimpleGroupId {
    Alt(u32),
    Sporadic(&'static str),
    /// Group of Lie type over `GF(p^l)`; `n` is the rank for classical
    /// families and the fixed rank otherwise.
    Lie { family: LieFamily, n: u32, p: u64, l: u32 },
}

impl SimpleGroupId {
    pub fn alt(n: u32) -> Result<Self, CensusError> {
        let id = SimpleGroupId::Alt(n);
        id.validate()?;
        Ok(id)
    }

    pub fn sporadic(name: &str) -> Result<Self, CensusError> {
        sporadic_table()
            .iter()
            .find(|e| e.name == name)
            .map(|e| SimpleGroupId::Sporadic(e.name))
            .ok_or_else(|| CensusError::InvalidId(name.to_string()))
    }

    /// A group of Lie type; `n` is ignored for exceptional families.
    pub fn lie(family: LieFamily, n: u32, q: u64) -> Result<Self, CensusError> {
        let (p, l) = prime_power(q).ok_or_else(|| CensusError::InvalidId(format!("{q} is not a prime power")))?;
        let n = if family.is_classical() { n } else { family.min_rank() };
        let id = SimpleGroupId::Lie { family, n, p, l };
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        let bad = |why: &str| Err(CensusError::InvalidId(format!("{self}: {why}")));
        match *self {
            SimpleGroupId::Alt(n) if n < 5 => bad("alternating groups need degree at least 5"),
            SimpleGroupId::Alt(_) => Ok(()),
            SimpleGroupId::Sporadic(name) => {
                if sporadic_table().iter().any(|e| e.name == name) {
                    Ok(())
                } else {
                    bad("unknown sporadic group")
                }
            }
            SimpleGroupId::Lie { family, n, p, l } => {
                if !is_prime_u64(p) || l == 0 {
                    return bad("field order must be a prime power");
                }
                if family.is_classical() {
                    if n < family.min_rank() {
                        return bad("rank below the family minimum");
                    }
                } else if n != family.min_rank() {
                    return bad("rank is fixed for this family");
                }
                if let Some(c) = family.forced_characteristic() {
                    if p != c || l % 2 == 0 {
                        return bad("needs an odd power of the forced characteristic");
                    }
                }
                let q = p.checked_pow(l);
                match (family, n, q) {
                    (LieFamily::A, 1, Some(2 | 3)) => bad("PSL2(2) and PSL2(3) are solvable"),
                    (LieFamily::B, 2, Some(2)) => bad("B2(2) is not simple"),
                    (LieFamily::TwistedA, 2, Some(2)) => bad("2A2(2) is solvable"),
                    (LieFamily::G2, _, Some(2)) => bad("G2(2) is not simple"),
                    (LieFamily::Suzuki, _, Some(2)) => bad("2B2(2) is solvable"),
                    (LieFamily::Ree, _, Some(3)) => bad("2G2(3) is not simple"),
                    (LieFamily::BigRee, _, Some(2)) => bad("2F4(2) is not simple; its derived group is listed as 2F4(2)'"),
                    _ => Ok(()),
                }
            }
        }
    }

    /// The canonical name under the standard exceptional isomorphisms, so
    /// that each abstract group has exactly one canonical identifier.
    pub fn canonical(&self) -> SimpleGroupId {
        if let SimpleGroupId::Lie { family, n, p, l } = *self {
            let q = p.checked_pow(l);
            match (family, n, q) {
                (LieFamily::A, 1, Some(4 | 5)) => return SimpleGroupId::Alt(5),
                (LieFamily::A, 1, Some(9)) => return SimpleGroupId::Alt(6),
                (LieFamily::A, 3, Some(2)) => return SimpleGroupId::Alt(8),
                (LieFamily::A, 2, Some(2)) => return SimpleGroupId::Lie { family: LieFamily::A, n: 1, p: 7, l: 1 },
                (LieFamily::B, 2, Some(3)) => return SimpleGroupId::Lie { family: LieFamily::TwistedA, n: 3, p: 2, l: 1 },
                (LieFamily::B, n, _) if p == 2 && n >= 3 => return SimpleGroupId::Lie { family: LieFamily::C, n, p, l },
                _ => {}
            }
        }
        self.clone()
    }

    pub fn is_canonical(&self) -> bool {
        self.canonical() == *self
    }

    /// `q = p^l` for groups of Lie type.
    pub fn field_order(&self) -> Option<BigUint> {
        match *self {
            SimpleGroupId::Lie { p, l, .. } => Some(BigUint::from(p).pow(l)),
            _ => None,
        }
    }
}

impl fmt::Display for SimpleGroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleGroupId::Alt(n) => write!(f, "Alt({n})"),
            SimpleGroupId::Sporadic(name) => f.write_str(name),
            SimpleGroupId::Lie { family, n, p, l } => {
                let q = BigUint::from(*p).pow(*l);
                if family.is_classical() {
                    write!(f, "{}{}({q})", family.prefix(), n)
                } else {
                    write!(f, "{}({q})", family.prefix())
                }
            }
        }
    }
}

impl FromStr for SimpleGroupId {
    type Err = CensusError;

    /// Accepts the display form, e.g. `Alt(7)`, `M23`, `A1(49)`, `2A3(2)`, `E8(2)`.
    fn from_str(s: &str) -> Result<Self, CensusError> {
        let s = s.trim();
        let err = || CensusError::Parse(s.to_string());
        if let Ok(id) = SimpleGroupId::sporadic(s) {
            return Ok(id);
        }
        let (head, rest) = s.split_once('(').ok_or_else(err)?;
        let arg = rest.strip_suffix(')').ok_or_else(err)?;
        let value: u64 = arg.parse().map_err(|_| err())?;
        if head == "Alt" {
            return SimpleGroupId::alt(value as u32);
        }
        for family in LieFamily::ALL {
            let prefix = family.prefix();
            if family.is_classical() {
                if let Some(rank) = head.strip_prefix(prefix) {
                    if let Ok(n) = rank.parse::<u32>() {
                        return SimpleGroupId::lie(family, n, value);
                    }
                }
            } else if head == prefix {
                return SimpleGroupId::lie(family, 0, value);
            }
        }
        Err(err())
    }
}

/// `(p, l)` with `n = p^l`, for a prime power `n > 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    if n < 2 {
        return None;
    }
    let f = factorize_u64(n);
    if f.factors().len() != 1 {
        return None;
    }
    let (p, &e) = f.factors().iter().next()?;
    Some((p.to_u64()?, e))
}

/// Order polynomial `q^N * prod Phi_d(q)^{m_d}` before division by the centre.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderShape {
    pub q_exponent: u64,
    pub cyclotomic: BTreeMap<u64, u32>,
}

impl OrderShape {
    fn new(q_exponent: u64) -> Self {
        OrderShape {
            q_exponent,
            cyclotomic: BTreeMap::new(),
        }
    }

    /// Multiplies in `q^i - 1`.
    fn minus(&mut self, i: u64) -> &mut Self {
        for d in 1..=i {
            if i % d == 0 {
                *self.cyclotomic.entry(d).or_insert(0) += 1;
            }
        }
        self
    }

    /// Multiplies in `q^i + 1 = (q^2i - 1) / (q^i - 1)`.
    fn plus(&mut self, i: u64) -> &mut Self {
        for d in 1..=2 * i {
            if (2 * i) % d == 0 && i % d != 0 {
                *self.cyclotomic.entry(d).or_insert(0) += 1;
            }
        }
        self
    }
}

/// The order polynomial of a Lie family at rank `n`.
pub fn order_shape(family: LieFamily, n: u32) -> OrderShape {
    let n = n as u64;
    let mut s;
    match family {
        LieFamily::A => {
            s = OrderShape::new(n * (n + 1) / 2);
            for i in 2..=n + 1 {
                s.minus(i);
            }
        }
        LieFamily::B | LieFamily::C => {
            s = OrderShape::new(n * n);
            for i in 1..=n {
                s.minus(2 * i);
            }
        }
        LieFamily::D => {
            s = OrderShape::new(n * (n - 1));
            s.minus(n);
            for i in 1..n {
                s.minus(2 * i);
            }
        }
        LieFamily::TwistedA => {
            s = OrderShape::new(n * (n + 1) / 2);
            for i in 2..=n + 1 {
                if i % 2 == 0 {
                    s.minus(i);
                } else {
                    s.plus(i);
                }
            }
        }
        LieFamily::TwistedD => {
            s = OrderShape::new(n * (n - 1));
            s.plus(n);
            for i in 1..n {
                s.minus(2 * i);
            }
        }
        LieFamily::G2 => {
            s = OrderShape::new(6);
            s.minus(6).minus(2);
        }
        LieFamily::F4 => {
            s = OrderShape::new(24);
            s.minus(12).minus(8).minus(6).minus(2);
        }
        LieFamily::E6 => {
            s = OrderShape::new(36);
            s.minus(12).minus(9).minus(8).minus(6).minus(5).minus(2);
        }
        LieFamily::TwistedE6 => {
            s = OrderShape::new(36);
            s.minus(12).plus(9).minus(8).minus(6).plus(5).minus(2);
        }
        LieFamily::E7 => {
            s = OrderShape::new(63);
            for i in [2, 6, 8, 10, 12, 14, 18] {
                s.minus(i);
            }
        }
        LieFamily::E8 => {
            s = OrderShape::new(120);
            for i in [2, 8, 12, 14, 18, 20, 24, 30] {
                s.minus(i);
            }
        }
        LieFamily::Triality => {
            // q^8 + q^4 + 1 = Phi_3(q) Phi_6(q) Phi_12(q)
            s = OrderShape::new(12);
            for d in [3, 6, 12] {
                *s.cyclotomic.entry(d).or_insert(0) += 1;
            }
            s.minus(6).minus(2);
        }
        LieFamily::Suzuki => {
            s = OrderShape::new(2);
            s.plus(2).minus(1);
        }
        LieFamily::Ree => {
            s = OrderShape::new(3);
            s.plus(3).minus(1);
        }
        LieFamily::BigRee => {
            s = OrderShape::new(12);
            s.plus(6).minus(4).plus(3).minus(1);
        }
    }
    s
}

fn gcd_with(k: u64, x: &BigUint) -> u64 {
    let r = (x % k).to_u64().expect("residue fits");
    k.gcd(&r)
}

/// Order of the centre of the universal version divided out of the order
/// polynomial.
pub fn center_order(family: LieFamily, n: u32, q: &BigUint) -> u64 {
    let qm1 = q - 1u32;
    let qp1 = q + 1u32;
    let n64 = n as u64;
    match family {
        LieFamily::A => gcd_with(n64 + 1, &qm1),
        LieFamily::TwistedA => gcd_with(n64 + 1, &qp1),
        LieFamily::B | LieFamily::C | LieFamily::E7 => gcd_with(2, &qm1),
        LieFamily::D => gcd_with(4, &(q.pow(n) - 1u32)),
        LieFamily::TwistedD => gcd_with(4, &(q.pow(n) + 1u32)),
        LieFamily::E6 => gcd_with(3, &qm1),
        LieFamily::TwistedE6 => gcd_with(3, &qp1),
        _ => 1,
    }
}

/// Exact order of a simple group as a big integer.
pub fn order_value(id: &SimpleGroupId) -> Result<BigUint, CensusError> {
    id.validate()?;
    Ok(match *id {
        SimpleGroupId::Alt(n) => (1..=n as u64).fold(BigUint::one(), |a, k| a * k) / 2u32,
        SimpleGroupId::Sporadic(name) => sporadic::entry(name).expect("validated").order.value().clone(),
        SimpleGroupId::Lie { family, n, p, l } => {
            let q = BigUint::from(p).pow(l);
            let shape = order_shape(family, n);
            let mut v = q.pow(shape.q_exponent as u32);
            for (&d, &m) in &shape.cyclotomic {
                v *= cyclotomic_value(d, &q).pow(m);
            }
            v / center_order(family, n, &q)
        }
    })
}

/// Factored order of a simple group; cyclotomic pieces are factored
/// separately and may use the on-disk cache.
pub fn order_of(id: &SimpleGroupId) -> Result<Factorization, CensusError> {
    order_of_with(id, None)
}

pub fn order_of_with(id: &SimpleGroupId, cache: Option<&FactorCache>) -> Result<Factorization, CensusError> {
    id.validate()?;
    Ok(match *id {
        SimpleGroupId::Alt(n) => {
            let mut f = Factorization::one();
            for k in 2..=n as u64 {
                f = f.mul(&factorize_u64(k));
            }
            f.div(&factorize_u64(2)).expect("n! is even")
        }
        SimpleGroupId::Sporadic(name) => sporadic::entry(name).expect("validated").order.clone(),
        SimpleGroupId::Lie { family, n, p, l } => {
            let q = BigUint::from(p).pow(l);
            let shape = order_shape(family, n);
            let mut f = factorize_u64(p).pow(l * shape.q_exponent as u32);
            for (&d, &m) in &shape.cyclotomic {
                f = f.mul(&factorize_with(cache, &cyclotomic_value(d, &q)).pow(m));
            }
            f.div(&factorize_u64(center_order(family, n, &q)))
                .expect("the centre order divides the order polynomial")
        }
    })
}

/// The prime divisors of `|S|`.
pub fn pi_of(id: &SimpleGroupId) -> Result<Vec<u64>, CensusError> {
    Ok(order_of(id)?
        .primes_u64()
        .expect("prime divisors of simple group orders in range fit in u64"))
}

/// Whether `x > 0` has all prime divisors in `primes`.
pub(crate) fn is_smooth(x: &BigUint, primes: &[u64]) -> bool {
    if x.is_zero() {
        return false;
    }
    let mut x = x.clone();
    for &p in primes {
        let p = BigUint::from(p);
        loop {
            let (q, r) = x.div_rem(&p);
            if !r.is_zero() {
                break;
            }
            x = q;
        }
    }
    x.is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn id(s: &str) -> SimpleGroupId {
        s.parse().unwrap()
    }

    fn plain_order(family: LieFamily, n: u64, q: u64) -> BigUint {
        // Direct product formulas, independent of the cyclotomic bookkeeping.
        let q = BigUint::from(q);
        let m = |i: u64| q.pow(i as u32) - 1u32;
        let pl = |i: u64| q.pow(i as u32) + 1u32;
        let prod = |it: Vec<BigUint>| it.into_iter().fold(BigUint::one(), |a, b| a * b);
        let (qe, body): (u64, BigUint) = match family {
            LieFamily::A => (n * (n + 1) / 2, prod((2..=n + 1).map(m).collect())),
            LieFamily::B | LieFamily::C => (n * n, prod((1..=n).map(|i| m(2 * i)).collect())),
            LieFamily::D => (n * (n - 1), m(n) * prod((1..n).map(|i| m(2 * i)).collect())),
            LieFamily::TwistedA => (
                n * (n + 1) / 2,
                prod((2..=n + 1).map(|i| if i % 2 == 0 { m(i) } else { pl(i) }).collect()),
            ),
            LieFamily::TwistedD => (n * (n - 1), pl(n) * prod((1..n).map(|i| m(2 * i)).collect())),
            LieFamily::G2 => (6, m(6) * m(2)),
            LieFamily::F4 => (24, m(12) * m(8) * m(6) * m(2)),
            LieFamily::E6 => (36, m(12) * m(9) * m(8) * m(6) * m(5) * m(2)),
            LieFamily::TwistedE6 => (36, m(12) * pl(9) * m(8) * m(6) * pl(5) * m(2)),
            LieFamily::E7 => (63, prod([2, 6, 8, 10, 12, 14, 18].map(m).to_vec())),
            LieFamily::E8 => (120, prod([2, 8, 12, 14, 18, 20, 24, 30].map(m).to_vec())),
            LieFamily::Triality => (12, (q.pow(8) + q.pow(4) + 1u32) * m(6) * m(2)),
            LieFamily::Suzuki => (2, pl(2) * m(1)),
            LieFamily::Ree => (3, pl(3) * m(1)),
            LieFamily::BigRee => (12, pl(6) * m(4) * pl(3) * m(1)),
        };
        q.pow(qe as u32) * body
    }

    #[test]
    fn small_orders() {
        let cases: &[(&str, u64)] = &[
            ("Alt(5)", 60),
            ("A1(7)", 168),
            ("A1(8)", 504),
            ("A1(17)", 2448),
            ("A2(4)", 20160),
            ("2A3(2)", 25920),
            ("B2(3)", 25920),
            ("2A2(3)", 6048),
            ("G2(3)", 4245696),
            ("2B2(8)", 29120),
            ("2B2(32)", 32537600),
            ("3D4(2)", 211341312),
            ("2G2(27)", 10073444472),
            ("M11", 7920),
        ];
        for &(name, order) in cases {
            assert_eq!(order_value(&id(name)).unwrap(), BigUint::from(order), "{name}");
            assert_eq!(order_of(&id(name)).unwrap().recompose(), BigUint::from(order), "{name}");
        }
        assert_eq!(order_of(&id("2B2(8)")).unwrap().to_compact(), "2^6 5^1 7^1 13^1");
    }

    #[test]
    fn cyclotomic_bookkeeping_matches_product_formulas() {
        for family in LieFamily::ALL {
            let ranks: Vec<u32> = if family.is_classical() {
                (family.min_rank()..family.min_rank() + 4).collect()
            } else {
                vec![family.min_rank()]
            };
            for n in ranks {
                for q in [2u64, 3, 4, 5, 7, 8, 9, 27, 32] {
                    let Ok(g) = SimpleGroupId::lie(family, n, q) else { continue };
                    let full = plain_order(family, n as u64, q);
                    let c = center_order(family, n, &BigUint::from(q));
                    assert_eq!(order_value(&g).unwrap() * c, full, "{g}");
                    // Dividing by the centre never removes a prime.
                    let primes_full = crate::numtheory::factorize(&full).primes_u64().unwrap();
                    assert_eq!(pi_of(&g).unwrap(), primes_full, "{g}");
                }
            }
        }
    }

    #[test]
    fn prime_sets() {
        assert_eq!(pi_of(&id("2B2(8)")).unwrap(), vec![2, 5, 7, 13]);
        assert_eq!(pi_of(&id("Alt(7)")).unwrap(), vec![2, 3, 5, 7]);
        assert_eq!(pi_of(&id("A1(7)")).unwrap(), vec![2, 3, 7]);
        assert_eq!(
            pi_of(&id("E8(2)")).unwrap(),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 31, 41, 43, 73, 127, 151, 241, 331]
        );
    }

    #[test]
    fn identifiers_validate() {
        for bad in ["Alt(4)", "A1(3)", "A1(6)", "B2(2)", "C2(5)", "D3(3)", "2B2(2)", "2B2(4)", "2G2(3)", "G2(2)", "2A2(2)", "2F4(2)", "Foo"] {
            assert!(bad.parse::<SimpleGroupId>().is_err(), "{bad}");
        }
        for good in ["Alt(5)", "A1(4)", "B2(4)", "C3(3)", "D4(2)", "2D4(2)", "2F4(8)", "2F4(2)'", "Fi24'", "E6(2)"] {
            let g = id(good);
            assert_eq!(g.to_string(), good);
        }
    }

    #[test]
    fn exceptional_isomorphisms() {
        assert_eq!(id("A1(4)").canonical(), id("Alt(5)"));
        assert_eq!(id("A1(5)").canonical(), id("Alt(5)"));
        assert_eq!(id("A1(9)").canonical(), id("Alt(6)"));
        assert_eq!(id("A3(2)").canonical(), id("Alt(8)"));
        assert_eq!(id("A2(2)").canonical(), id("A1(7)"));
        assert_eq!(id("B2(3)").canonical(), id("2A3(2)"));
        assert_eq!(id("B3(4)").canonical(), id("C3(4)"));
        assert!(id("B3(3)").is_canonical() && id("C3(3)").is_canonical());
        for (a, b) in [("A1(4)", "Alt(5)"), ("A1(9)", "Alt(6)"), ("A3(2)", "Alt(8)"), ("A2(2)", "A1(7)"), ("B2(3)", "2A3(2)")] {
            assert_eq!(order_value(&id(a)).unwrap(), order_value(&id(b)).unwrap());
        }
    }
}
