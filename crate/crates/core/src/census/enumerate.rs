//! Bounded search for simple groups whose order has primes in a given set.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::One;

use super::{
    center_order, is_smooth, order_shape, order_value, pi_of, sporadic_table, LieFamily, SimpleGroupId,
};
use crate::numtheory::{cyclotomic_value, is_prime_u64, mult_order};

/// How [`super::num_simple_bound`] is assembled.
pub const NUM_SIMPLE_BOUND_DOC: &str = "27 sporadic (with 2F4(2)') + 2(k+1)^2 alternating \
(degree below the (k+1)-st prime) + 6 classical families x k characteristics x (k+1) field \
exponents x (2k+3) ranks + 7 two-parameter exceptional families x k(k+1) + 3 one-parameter \
families x (k+1)";

fn normalize(pi: &[u64]) -> Vec<u64> {
    let set: BTreeSet<u64> = pi.iter().copied().filter(|&p| is_prime_u64(p)).collect();
    set.into_iter().collect()
}

/// Field exponents `l` for which `p^l - 1` can avoid primes outside `pi`.
///
/// A primitive prime divisor of `p^l - 1` has multiplicative order exactly
/// `l`, so apart from the Zsigmondy exceptions `l` is the order of `p`
/// modulo some prime of `pi`.
fn exponent_candidates(p: u64, pi: &[u64]) -> BTreeSet<u32> {
    let mut ls: BTreeSet<u32> = [1, 2].into_iter().collect();
    if p == 2 {
        ls.insert(6);
    }
    for &r in pi {
        if r != p {
            ls.insert(mult_order(r, p).expect("coprime primes") as u32);
        }
    }
    ls
}

/// Whether the order polynomial of the family at `(n, q)` has all primes in `pi`.
fn lie_candidate(family: LieFamily, n: u32, q: &BigUint, pi: &[u64]) -> bool {
    order_shape(family, n)
        .cyclotomic
        .keys()
        .all(|&d| is_smooth(&cyclotomic_value(d, q), pi))
}

fn family_characteristics(family: LieFamily, pi: &[u64]) -> Vec<u64> {
    match family.forced_characteristic() {
        Some(c) if pi.contains(&c) => vec![c],
        Some(_) => vec![],
        None => pi.to_vec(),
    }
}

fn exponent_allowed(family: LieFamily, l: u32) -> bool {
    family.forced_characteristic().is_none() || l % 2 == 1
}

/// Ranks beyond this would contradict the bound `n <= 2|pi| + 3`; the
/// search stops there regardless, and the audit reports such cases.
fn rank_guard(k: usize) -> u32 {
    4 * k as u32 + 16
}

/// Every non-abelian simple group `S` with `pi(S) ⊆ pi`, once each, under
/// canonical names, sorted by order.
pub fn enumerate_simple(pi: &[u64]) -> Vec<SimpleGroupId> {
    let pi = normalize(pi);
    let mut out: BTreeSet<SimpleGroupId> = BTreeSet::new();
    for e in sporadic_table() {
        if e.order.primes_u64().expect("small primes").iter().all(|p| pi.contains(p)) {
            out.insert(SimpleGroupId::Sporadic(e.name));
        }
    }
    for n in 2u32.. {
        if is_prime_u64(n as u64) && !pi.contains(&(n as u64)) {
            break;
        }
        if n >= 5 {
            out.insert(SimpleGroupId::Alt(n));
        }
    }
    for family in LieFamily::ALL {
        for p in family_characteristics(family, &pi) {
            for l in exponent_candidates(p, &pi) {
                if !exponent_allowed(family, l) {
                    continue;
                }
                let q = BigUint::from(p).pow(l);
                if !is_smooth(&(&q - 1u32), &pi) {
                    continue;
                }
                let ranks = if family.is_classical() {
                    family.min_rank()..=rank_guard(pi.len())
                } else {
                    family.min_rank()..=family.min_rank()
                };
                for n in ranks {
                    // The order polynomial at rank n divides the one at n + 1,
                    // so the first failure ends the rank loop.
                    if !lie_candidate(family, n, &q, &pi) {
                        break;
                    }
                    let id = SimpleGroupId::Lie { family, n, p, l };
                    if id.validate().is_ok() && id.is_canonical() {
                        out.insert(id);
                    }
                }
            }
        }
    }
    let mut out: Vec<(BigUint, SimpleGroupId)> =
        out.into_iter().map(|id| (order_value(&id).expect("valid id"), id)).collect();
    out.sort();
    out.into_iter().map(|(_, id)| id).collect()
}

/// Result of probing just beyond the search frontier.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrontierAudit {
    pub probes: usize,
    pub violations: Vec<String>,
}

impl FrontierAudit {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks, by direct smoothness of the full order, that no group one rank
/// or one field step outside the explored region has primes inside `pi`,
/// and that every group skipped by exponent pruning fails too.
pub fn audit_frontier(pi: &[u64]) -> FrontierAudit {
    let pi = normalize(pi);
    let found: BTreeSet<SimpleGroupId> = enumerate_simple(&pi).into_iter().collect();
    let mut audit = FrontierAudit::default();
    let qualifies = |id: &SimpleGroupId| -> bool {
        match id {
            SimpleGroupId::Lie { family, n, p, l } => {
                // The q-power part is a power of p, which lies in pi.
                let q = BigUint::from(*p).pow(*l);
                let shape = order_shape(*family, *n);
                let mut body = BigUint::one();
                for (&d, &m) in &shape.cyclotomic {
                    body *= cyclotomic_value(d, &q).pow(m);
                }
                pi.contains(p) && is_smooth(&(body / center_order(*family, *n, &q)), &pi)
            }
            other => order_value(other).map(|v| is_smooth(&v, &pi)).unwrap_or(false),
        }
    };
    let probe = |id: SimpleGroupId, audit: &mut FrontierAudit| {
        if id.validate().is_err() {
            return;
        }
        audit.probes += 1;
        if qualifies(&id) && !found.contains(&id.canonical()) {
            audit.violations.push(format!("{id} has primes inside the set but was not emitted"));
        }
    };
    let alt_stop = (5u32..).find(|&n| !found.contains(&SimpleGroupId::Alt(n))).expect("finite");
    probe(SimpleGroupId::Alt(alt_stop), &mut audit);
    probe(SimpleGroupId::Alt(alt_stop + 1), &mut audit);
    for family in LieFamily::ALL {
        for p in family_characteristics(family, &pi) {
            let candidates = exponent_candidates(p, &pi);
            let top = *candidates.iter().max().expect("nonempty");
            for l in 1..=top + 2 {
                if !exponent_allowed(family, l) {
                    continue;
                }
                let q = BigUint::from(p).pow(l);
                let mut n = family.min_rank();
                if family.is_classical() {
                    while n <= rank_guard(pi.len()) && lie_candidate(family, n, &q, &pi) {
                        n += 1;
                    }
                    if n > rank_guard(pi.len()) {
                        audit.violations.push(format!("{}(p={p}, l={l}) reached the rank guard", family.prefix()));
                        continue;
                    }
                    // One rank beyond the frontier, and the frontier itself.
                    probe(SimpleGroupId::Lie { family, n, p, l }, &mut audit);
                    probe(SimpleGroupId::Lie { family, n: n + 1, p, l }, &mut audit);
                } else {
                    probe(SimpleGroupId::Lie { family, n, p, l }, &mut audit);
                }
            }
        }
    }
    for id in &found {
        match pi_of(id) {
            Ok(primes) if primes.iter().all(|p| pi.contains(p)) => {}
            _ => audit.violations.push(format!("{id} was emitted but its primes leave the set")),
        }
    }
    audit
}
