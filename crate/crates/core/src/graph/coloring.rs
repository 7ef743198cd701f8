use crate::error::{Error, Result};

use super::Graph;

pub const CHROMATIC_SEARCH_LIMIT: usize = 14;

/// Chromatic number by backtracking over `k = 1, 2, ...` colors.
pub fn chromatic_number_search(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > CHROMATIC_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            operation: "chromatic_number_search",
            size: n,
            limit: CHROMATIC_SEARCH_LIMIT,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut colors = vec![usize::MAX; n];
    for k in 1..=n {
        if color_with(g, &order, 0, k, 0, &mut colors) {
            return Ok(k);
        }
    }
    unreachable!("n colors always suffice")
}

fn color_with(
    g: &Graph,
    order: &[usize],
    idx: usize,
    k: usize,
    used: usize,
    colors: &mut [usize],
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    // A fresh color is interchangeable with any other fresh color.
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if g.neighbors(v).iter().any(|u| colors[u] == c) {
            continue;
        }
        colors[v] = c;
        if color_with(g, order, idx + 1, k, used.max(c + 1), colors) {
            return true;
        }
    }
    colors[v] = usize::MAX;
    false
}

/// A vertex whose deletion leaves a complete graph, if any.
fn clique_apex(g: &Graph) -> Option<usize> {
    let n = g.n();
    (0..n).find(|&v| {
        (0..n)
            .filter(|&u| u != v)
            .all(|u| g.degree(u) - usize::from(g.has_edge(u, v)) + 2 == n)
    })
}

/// Exact chromatic number. Complete graphs and cliques plus one vertex are
/// answered directly at any size; everything else goes through
/// [`chromatic_number_search`].
pub fn chromatic_number_exact(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n == 0 {
        return Ok(0);
    }
    if g.is_complete() {
        return Ok(n);
    }
    if clique_apex(g).is_some() {
        // The extra vertex misses some clique vertex and can share its color.
        return Ok(n - 1);
    }
    chromatic_number_search(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{
        clique_plus_vertex, complete_graph, cycle_graph, star_graph, strong_power_graph,
    };
    use crate::group::make_cyclic;

    #[test]
    fn known_values() {
        assert_eq!(chromatic_number_exact(&complete_graph(4)).unwrap(), 4);
        assert_eq!(chromatic_number_exact(&Graph::empty(5)).unwrap(), 1);
        assert_eq!(chromatic_number_search(&Graph::empty(5)).unwrap(), 1);
        assert_eq!(chromatic_number_search(&cycle_graph(5)).unwrap(), 3);
        assert_eq!(chromatic_number_search(&cycle_graph(6)).unwrap(), 2);
        assert_eq!(chromatic_number_search(&star_graph(6)).unwrap(), 2);
    }

    #[test]
    fn z6_needs_five_colors() {
        let g = strong_power_graph(&make_cyclic(6).unwrap());
        assert_eq!(chromatic_number_exact(&g).unwrap(), 5);
        assert_eq!(chromatic_number_search(&g).unwrap(), 5);
    }

    #[test]
    fn closed_form_path_matches_search() {
        for m in 0..5 {
            for n in 0..5 {
                let g = clique_plus_vertex(m, n);
                assert_eq!(
                    chromatic_number_exact(&g).unwrap(),
                    chromatic_number_search(&g).unwrap(),
                    "m={m} n={n}"
                );
            }
        }
    }

    #[test]
    fn large_clique_shapes_bypass_guard() {
        assert_eq!(chromatic_number_exact(&complete_graph(40)).unwrap(), 40);
        let g = strong_power_graph(&make_cyclic(30).unwrap());
        assert_eq!(chromatic_number_exact(&g).unwrap(), 29);
        assert!(chromatic_number_search(&g).is_err());
        assert!(chromatic_number_exact(&cycle_graph(20)).is_err());
    }
}
