use crate::error::{Error, Result};

use super::Graph;

pub const CONNECTIVITY_LIMIT: usize = 14;

fn neighbor_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

fn is_connected_mask(nbr: &[u32], alive: u32) -> bool {
    if alive == 0 {
        return true;
    }
    let start = alive.trailing_zeros();
    let mut reached = 1u32 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = nbr[v] & alive & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == alive
}

/// Smallest `k` such that deleting some `k` vertices leaves a disconnected
/// graph or at most one vertex. Exhaustive over vertex subsets.
pub fn vertex_connectivity_bruteforce(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CONNECTIVITY_LIMIT {
        return Err(Error::TooLarge {
            operation: "vertex_connectivity_bruteforce",
            size: n,
            limit: CONNECTIVITY_LIMIT,
        });
    }
    if n <= 1 {
        return Ok(0);
    }
    let nbr = neighbor_masks(g);
    let full: u32 = (1u32 << n) - 1;
    for k in 0..n {
        // Gosper's hack over k-subsets.
        let mut s: u32 = if k == 0 { 0 } else { (1u32 << k) - 1 };
        loop {
            let alive = full & !s;
            if alive.count_ones() <= 1 || !is_connected_mask(&nbr, alive) {
                return Ok(k);
            }
            if k == 0 {
                break;
            }
            let c = s & s.wrapping_neg();
            let r = s + c;
            s = (((r ^ s) >> 2) / c) | r;
            if s > full {
                break;
            }
        }
    }
    Ok(n - 1)
}
