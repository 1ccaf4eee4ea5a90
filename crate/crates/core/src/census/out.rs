//! Outer automorphism groups, their subgroup counts and the resulting bounds.

use std::collections::HashSet;
use std::fmt;

use fixedbitset::FixedBitSet;
use num_bigint::BigUint;

use super::{center_order, enumerate_simple, sporadic, CensusError, LieFamily, SimpleGroupId};

/// The graph-automorphism factor `G2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum G2Kind {
    Trivial,
    C2,
    S3,
}

/// `Out(S) = C : (G1 x G2)` with `C` the diagonal automorphisms, `G1` the
/// cyclic field automorphisms and `G2` the graph automorphisms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OutStructure {
    /// Invariants of the abelian group `C`: empty, `[d]` or `[2, 2]`.
    pub diagonal: Vec<u64>,
    /// `|G1|`.
    pub field: u64,
    pub graph: G2Kind,
    /// `G1 x G2` is replaced by a cyclic group of order `2 |G1|` whose square
    /// generates the field automorphisms (B2 and F4 in characteristic 2,
    /// G2 in characteristic 3).
    pub fused_graph: bool,
    /// Multiplier by which the field generator acts on a cyclic `C`.
    field_action: u64,
    /// Whether graph automorphisms invert a cyclic `C`.
    graph_inverts: bool,
}

impl OutStructure {
    pub fn order(&self) -> u64 {
        let c: u64 = self.diagonal.iter().product();
        let g2 = match self.graph {
            G2Kind::Trivial => 1,
            G2Kind::C2 => 2,
            G2Kind::S3 => 6,
        };
        let h = if self.fused_graph { 2 * self.field } else { self.field * g2 };
        c * h
    }

    fn cyclic(order: u64) -> Self {
        OutStructure {
            diagonal: vec![],
            field: order,
            graph: G2Kind::Trivial,
            fused_graph: false,
            field_action: 1,
            graph_inverts: false,
        }
    }
}

impl fmt::Display for OutStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = if self.diagonal.is_empty() {
            "1".to_string()
        } else {
            self.diagonal.iter().map(u64::to_string).collect::<Vec<_>>().join("x")
        };
        let g2 = match (self.fused_graph, self.graph) {
            (true, _) => "fused".to_string(),
            (false, G2Kind::Trivial) => "1".into(),
            (false, G2Kind::C2) => "2".into(),
            (false, G2Kind::S3) => "S3".into(),
        };
        write!(f, "C={c} G1={} G2={g2} |Out|={}", self.field, self.order())
    }
}

/// The decomposition of `Out(S)`.
pub fn out_structure(id: &SimpleGroupId) -> Result<OutStructure, CensusError> {
    id.validate()?;
    let (family, n, p, l) = match *id {
        SimpleGroupId::Alt(6) => {
            return Ok(OutStructure {
                diagonal: vec![2, 2],
                field: 1,
                graph: G2Kind::Trivial,
                fused_graph: false,
                field_action: 1,
                graph_inverts: false,
            })
        }
        SimpleGroupId::Alt(_) => return Ok(OutStructure::cyclic(2)),
        SimpleGroupId::Sporadic(name) => {
            return Ok(OutStructure::cyclic(sporadic::entry(name).expect("validated").out_order))
        }
        SimpleGroupId::Lie { family, n, p, l } => (family, n, p, l),
    };
    let q = BigUint::from(p).pow(l);
    let l = l as u64;
    let d = center_order(family, n, &q);
    let cyclic_c = |d: u64| if d > 1 { vec![d] } else { vec![] };
    let mut s = OutStructure {
        diagonal: cyclic_c(d),
        field: l,
        graph: G2Kind::Trivial,
        fused_graph: false,
        field_action: p % d.max(1),
        graph_inverts: true,
    };
    match family {
        LieFamily::A => {
            if n >= 2 {
                s.graph = G2Kind::C2;
            }
        }
        LieFamily::B if n == 2 && p == 2 => s.fused_graph = true,
        LieFamily::F4 if p == 2 => s.fused_graph = true,
        LieFamily::G2 if p == 3 => s.fused_graph = true,
        LieFamily::D => {
            s.graph = if n == 4 { G2Kind::S3 } else { G2Kind::C2 };
            if d == 4 && n % 2 == 0 {
                s.diagonal = vec![2, 2];
            }
        }
        LieFamily::E6 => s.graph = G2Kind::C2,
        LieFamily::TwistedA | LieFamily::TwistedD | LieFamily::TwistedE6 => s.field = 2 * l,
        LieFamily::Triality => s.field = 3 * l,
        _ => {}
    }
    Ok(s)
}

/// A finite group given by its multiplication table; element 0 is the identity.
#[derive(Clone, Debug)]
pub struct SmallGroup {
    n: usize,
    table: Vec<u32>,
}

impl SmallGroup {
    pub fn from_table(n: usize, table: Vec<u32>) -> Self {
        assert_eq!(table.len(), n * n);
        SmallGroup { n, table }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b] as usize
    }

    /// Checks identity, closure, inverses and associativity.
    pub fn is_group(&self) -> bool {
        let n = self.n;
        let ident = (0..n).all(|a| self.mul(0, a) == a && self.mul(a, 0) == a);
        let inverses = (0..n).all(|a| (0..n).any(|b| self.mul(a, b) == 0));
        let assoc = (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))))
        });
        ident && inverses && assoc
    }

    fn closure(&self, gens: &[usize]) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.n);
        set.insert(0);
        let mut list = vec![0];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &g in gens {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    list.push(y);
                }
            }
        }
        set
    }

    /// All subgroups, found as iterated joins of cyclic subgroups.
    pub fn subgroups(&self) -> Vec<FixedBitSet> {
        let mut cyclic: Vec<(usize, FixedBitSet)> = Vec::new();
        let mut seen_cyclic: HashSet<FixedBitSet> = HashSet::new();
        for x in 0..self.n {
            let c = self.closure(&[x]);
            if seen_cyclic.insert(c.clone()) {
                cyclic.push((x, c));
            }
        }
        let trivial = self.closure(&[]);
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        seen.insert(trivial.clone());
        let mut queue: Vec<(Vec<usize>, FixedBitSet)> = vec![(vec![], trivial)];
        let mut head = 0;
        while head < queue.len() {
            let (gens, set) = queue[head].clone();
            head += 1;
            for (x, c) in &cyclic {
                if c.is_subset(&set) {
                    continue;
                }
                let mut g = gens.clone();
                g.push(*x);
                let join = self.closure(&g);
                if seen.insert(join.clone()) {
                    queue.push((g, join));
                }
            }
        }
        queue.into_iter().map(|(_, s)| s).collect()
    }

    pub fn count_subgroups(&self) -> u64 {
        self.subgroups().len() as u64
    }
}

/// Builds `A : H` with `A = Z_a1 x Z_a2` and `H = Z_m x K`; `phi` and the
/// entries of `k_action` are permutations of `A` describing the actions.
fn semidirect(
    a: (usize, usize),
    m: usize,
    k_mul: &[Vec<usize>],
    phi: &[usize],
    k_action: &[Vec<usize>],
) -> SmallGroup {
    let size_a = a.0 * a.1;
    let add = |x: usize, y: usize| {
        let (x0, x1) = (x % a.0, x / a.0);
        let (y0, y1) = (y % a.0, y / a.0);
        (x0 + y0) % a.0 + a.0 * ((x1 + y1) % a.1)
    };
    let k = k_mul.len();
    let size_h = m * k;
    // rho(i, j) = phi^i o k_action[j]
    let mut rho: Vec<Vec<usize>> = Vec::with_capacity(size_h);
    for i in 0..m {
        for j in 0..k {
            let map: Vec<usize> = (0..size_a)
                .map(|x| {
                    let mut y = k_action[j][x];
                    for _ in 0..i {
                        y = phi[y];
                    }
                    y
                })
                .collect();
            rho.push(map);
        }
    }
    let hmul = |h: usize, h2: usize| {
        let (i, j) = (h / k, h % k);
        let (i2, j2) = (h2 / k, h2 % k);
        ((i + i2) % m) * k + k_mul[j][j2]
    };
    let n = size_a * size_h;
    let mut table = vec![0u32; n * n];
    for x in 0..n {
        let (ax, hx) = (x % size_a, x / size_a);
        for y in 0..n {
            let (ay, hy) = (y % size_a, y / size_a);
            let a = add(ax, rho[hx][ay]);
            let h = hmul(hx, hy);
            table[x * n + y] = (a + size_a * h) as u32;
        }
    }
    SmallGroup::from_table(n, table)
}

/// Composition table of `S3` on three points, identity first.
fn s3() -> (Vec<[usize; 3]>, Vec<Vec<usize>>) {
    let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 1, 0], [1, 2, 0], [2, 0, 1]];
    let idx = |p: [usize; 3]| perms.iter().position(|&q| q == p).expect("permutation of three points");
    let mul = perms
        .iter()
        .map(|s| perms.iter().map(|t| idx([s[t[0]], s[t[1]], s[t[2]]])).collect())
        .collect();
    (perms, mul)
}

/// `Out(S)` as an explicit group.
pub fn out_group(id: &SimpleGroupId) -> Result<SmallGroup, CensusError> {
    let s = out_structure(id)?;
    let m = if s.fused_graph { 2 * s.field } else { s.field } as usize;
    let identity_a = |n: usize| (0..n).collect::<Vec<_>>();
    let g = match (s.diagonal.as_slice(), s.graph, s.fused_graph) {
        (diag, graph, _) if diag.len() <= 1 => {
            let d = diag.first().copied().unwrap_or(1) as usize;
            let phi: Vec<usize> = (0..d).map(|x| x * s.field_action as usize % d).collect();
            let invert: Vec<usize> = (0..d).map(|x| (d - x) % d).collect();
            let gamma = if s.graph_inverts { invert } else { identity_a(d) };
            match graph {
                G2Kind::Trivial => semidirect((d, 1), m, &[vec![0]], &phi, &[identity_a(d)]),
                G2Kind::C2 => semidirect((d, 1), m, &[vec![0, 1], vec![1, 0]], &phi, &[identity_a(d), gamma]),
                G2Kind::S3 => {
                    // Only in characteristic 2 with trivial diagonal part.
                    let (_, mul) = s3();
                    let acts = vec![identity_a(d); 6];
                    semidirect((d, 1), m, &mul, &phi, &acts)
                }
            }
        }
        ([2, 2], graph, _) => {
            // Elements x + 2y of Z2 x Z2; nonzero vectors 1, 2, 3 are
            // permuted by graph automorphisms and fixed by field ones.
            let phi = identity_a(4);
            match graph {
                G2Kind::Trivial => semidirect((2, 2), m, &[vec![0]], &phi, &[identity_a(4)]),
                G2Kind::C2 => {
                    let swap = vec![0, 2, 1, 3];
                    semidirect((2, 2), m, &[vec![0, 1], vec![1, 0]], &phi, &[identity_a(4), swap])
                }
                G2Kind::S3 => {
                    let (perms, mul) = s3();
                    let acts: Vec<Vec<usize>> = perms
                        .iter()
                        .map(|p| {
                            let mut map = vec![0; 4];
                            for v in 0..3 {
                                map[v + 1] = p[v] + 1;
                            }
                            map
                        })
                        .collect();
                    semidirect((2, 2), m, &mul, &phi, &acts)
                }
            }
        }
        _ => unreachable!("diagonal part is cyclic or Z2 x Z2"),
    };
    debug_assert_eq!(g.order() as u64, s.order());
    Ok(g)
}

/// Number of subgroups of `Out(S)`, i.e. of almost simple groups with socle `S`
/// counted as subgroups of `Aut(S)` containing `S`.
pub fn count_out_subgroups(id: &SimpleGroupId) -> Result<u64, CensusError> {
    Ok(out_group(id)?.count_subgroups())
}

/// Almost simple groups with socle prime set inside `pi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostSimpleCount {
    pub total: u64,
    pub per_socle: Vec<(SimpleGroupId, u64)>,
}

/// Sum over simple `S` with `pi(S) ⊆ pi` of the number of subgroups of `Out(S)`.
///
/// This counts subgroups, not conjugacy classes, so it bounds the number of
/// isomorphism types from above.
pub fn count_almost_simple(pi: &[u64]) -> AlmostSimpleCount {
    let per_socle: Vec<(SimpleGroupId, u64)> = enumerate_simple(pi)
        .into_iter()
        .map(|s| {
            let c = count_out_subgroups(&s).expect("enumerated ids are valid");
            (s, c)
        })
        .collect();
    AlmostSimpleCount {
        total: per_socle.iter().map(|(_, c)| c).sum(),
        per_socle,
    }
}

/// Upper bound on the number of simple groups with `pi(S)` inside a set of `k` primes.
pub fn num_simple_bound(k: u64) -> BigUint {
    let k = BigUint::from(k);
    let k1 = &k + 1u32;
    BigUint::from(27u32)
        + BigUint::from(2u32) * &k1 * &k1
        + BigUint::from(6u32) * &k * &k1 * (BigUint::from(2u32) * &k + 3u32)
        + BigUint::from(7u32) * &k * &k1
        + BigUint::from(3u32) * &k1
}

/// Upper bound on the number of subgroups of `Out(S)` for such `S`.
///
/// Subgroups `H` are grouped by `T = HC/C <= G1 x G2`. There are at most
/// `3 d(|G1|) <= 6(k+1)` such `T` (Goursat with `G2` of order at most 2 and
/// `d(|G1|) <= 2 d(l) <= 2(k+1)`), and `H` supplements `C` in `TC`, which
/// gives at most `|C|^3 <= (2k+4)^3` choices since `T` is 2-generated and
/// `|C| <= n + 1 <= 2k + 4`. For `D4` there are at most `12 (k+1)` choices
/// of `T <= G1 x S3` and at most `5 * 4^3` supplements of `C <= 2^2`.
/// Alternating and sporadic groups contribute at most 5.
pub fn out_bound(k: u64) -> BigUint {
    let k1 = BigUint::from(k + 1);
    let general = BigUint::from(6u32) * &k1 * BigUint::from(2 * k + 4).pow(3);
    let d4 = BigUint::from(3840u32) * &k1;
    general.max(d4).max(BigUint::from(5u32))
}

/// `F(k) = num_simple_bound(k) * out_bound(k)`, a polynomial of degree 7.
pub fn f_bound(k: u64) -> BigUint {
    num_simple_bound(k) * out_bound(k)
}
