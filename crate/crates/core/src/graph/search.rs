//! Exact searches on adjacency bitmasks (at most 64 vertices).

/// A maximum coclique, optionally forced to contain `required`.
pub(super) fn maximum_coclique(adj: &[u64], required: Option<usize>) -> Vec<usize> {
    let n = adj.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let (mut taken, candidates) = match required {
        Some(r) => (1u64 << r, all & !(adj[r] | 1 << r)),
        None => (0, all),
    };
    let mut best = taken;
    branch(adj, candidates, &mut taken, &mut best);
    (0..n).filter(|&i| best >> i & 1 == 1).collect()
}

fn branch(adj: &[u64], candidates: u64, taken: &mut u64, best: &mut u64) {
    if candidates == 0 {
        if taken.count_ones() > best.count_ones() {
            *best = *taken;
        }
        return;
    }
    if taken.count_ones() + candidates.count_ones() <= best.count_ones() {
        return;
    }
    // A vertex of degree at most one among the candidates is always safe to take.
    let mut v = candidates.trailing_zeros() as usize;
    let mut max_deg = 0;
    let mut rest = candidates;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        let d = (adj[i] & candidates).count_ones();
        if d <= 1 {
            *taken |= 1 << i;
            branch(adj, candidates & !(adj[i] | 1 << i), taken, best);
            *taken &= !(1 << i);
            return;
        }
        if d > max_deg {
            max_deg = d;
            v = i;
        }
    }
    *taken |= 1 << v;
    branch(adj, candidates & !(adj[v] | 1 << v), taken, best);
    *taken &= !(1 << v);
    branch(adj, candidates & !(1 << v), taken, best);
}

/// Vertex invariant used to prune candidate images: degree and sorted neighbor degrees.
fn signature(adj: &[u64], i: usize) -> (u32, Vec<u32>) {
    let mut nd: Vec<u32> = (0..adj.len())
        .filter(|&j| adj[i] >> j & 1 == 1)
        .map(|j| adj[j].count_ones())
        .collect();
    nd.sort_unstable();
    (adj[i].count_ones(), nd)
}

/// An adjacency-preserving bijection `a -> b`, as `map[i] = image of i`.
pub(super) fn isomorphism(a: &[u64], b: &[u64]) -> Option<Vec<usize>> {
    let n = a.len();
    if n != b.len() {
        return None;
    }
    let sa: Vec<_> = (0..n).map(|i| signature(a, i)).collect();
    let sb: Vec<_> = (0..n).map(|i| signature(b, i)).collect();
    let mut sorted_a = sa.clone();
    let mut sorted_b = sb.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b {
        return None;
    }
    // Map high-degree vertices first so adjacency checks prune early.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(sa[i].0));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u64;
    if extend(a, b, &sa, &sb, &order, 0, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &[u64],
    b: &[u64],
    sa: &[(u32, Vec<u32>)],
    sb: &[(u32, Vec<u32>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut u64,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..b.len() {
        if *used >> w & 1 == 1 || sa[v] != sb[w] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| (a[v] >> u & 1) == (b[w] >> map[u] & 1));
        if !consistent {
            continue;
        }
        map[v] = w;
        *used |= 1 << w;
        if extend(a, b, sa, sb, order, depth + 1, map, used) {
            return true;
        }
        *used &= !(1 << w);
        map[v] = usize::MAX;
    }
    false
}
