use crate::bitset::BitSet;
use crate::group::FiniteGroup;

use super::Graph;

/// `{x^m : 1 <= m <= n - 1}`. This is the cyclic subgroup generated by `x`,
/// minus the identity when `x` has order `n`.
pub fn power_closure(g: &FiniteGroup, x: usize) -> BitSet {
    let n = g.order();
    let mut set = BitSet::new(n);
    let mut y = x;
    for _ in 1..n {
        if set.contains(y) {
            break;
        }
        set.insert(y);
        y = g.op(y, x);
    }
    set
}

/// Strong power graph: distinct `a`, `b` are adjacent iff `a^i = b^j` for
/// some `1 <= i, j < n`, i.e. iff their power closures meet.
pub fn strong_power_graph(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let closures: Vec<BitSet> = (0..n).map(|x| power_closure(g, x)).collect();
    let mut graph = Graph::empty(n);
    for a in 0..n {
        for b in (a + 1)..n {
            if closures[a].intersects(&closures[b]) {
                graph.add_edge(a, b);
            }
        }
    }
    graph
}

/// Literal reading of the adjacency rule: for every pair, search all
/// exponent pairs `(i, j)` in `[1, n)^2`. Quartic; meant as an oracle for
/// small groups only.
pub fn strong_power_graph_by_definition(g: &FiniteGroup) -> Graph {
    let n = g.order();
    let powers: Vec<Vec<usize>> = (0..n)
        .map(|x| (1..n).map(|m| g.pow(x, m)).collect())
        .collect();
    let mut graph = Graph::empty(n);
    for a in 0..n {
        for b in (a + 1)..n {
            let hit = powers[a]
                .iter()
                .any(|pa| powers[b].iter().any(|pb| pa == pb));
            if hit {
                graph.add_edge(a, b);
            }
        }
    }
    graph
}
