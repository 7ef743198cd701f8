use crate::error::{Error, Result};

use super::Graph;

pub const ISOMORPHISM_LIMIT: usize = 12;

/// An edge-preserving bijection `a -> b` as `map[u_a] = u_b`, if one exists.
pub fn isomorphism(a: &Graph, b: &Graph) -> Result<Option<Vec<usize>>> {
    for g in [a, b] {
        if g.n() > ISOMORPHISM_LIMIT {
            return Err(Error::TooLarge {
                operation: "graph_isomorphic",
                size: g.n(),
                limit: ISOMORPHISM_LIMIT,
            });
        }
    }
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    if a.degree_sequence() != b.degree_sequence() {
        return Ok(None);
    }
    let n = a.n();
    // Signature: own degree plus sorted neighbor degrees.
    let signature = |g: &Graph, v: usize| {
        let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let sig_a: Vec<_> = (0..n).map(|v| signature(a, v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| signature(b, v)).collect();

    // Map high-degree vertices first, then keep the order connected so that
    // adjacency constraints bite early.
    let mut order: Vec<usize> = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| a.has_edge(u, v)).count();
                (links, a.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(a, b, &order, &sig_a, &sig_b, 0, &mut map, &mut used) {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend<S: PartialEq>(
    a: &Graph,
    b: &Graph,
    order: &[usize],
    sig_a: &[S],
    sig_b: &[S],
    idx: usize,
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    for w in 0..b.n() {
        if used[w] || sig_a[v] != sig_b[w] {
            continue;
        }
        let consistent = order[..idx]
            .iter()
            .all(|&u| a.has_edge(u, v) == b.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(a, b, order, sig_a, sig_b, idx + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}

pub fn graph_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(isomorphism(a, b)?.is_some())
}
