//! Line-graph and Cayley-graph structure of strong power graphs, plus the
//! closed forms for vertex connectivity and chromatic number.

mod cayley;
mod line_graph;

pub use cayley::{cayley_classification, cayley_graph, ConnectionSet};
pub use line_graph::{
    beineke_patterns, contains_induced, cyclic_line_graph_classification, is_line_graph,
    line_graph_construct, root_graph_search, ForbiddenPatternSet, LINE_GRAPH_LIMIT, PATTERN_LIMIT,
    ROOT_SEARCH_LIMIT, ROOT_VERTEX_LIMIT,
};

use crate::group::euler_phi;

/// Vertex connectivity of the strong power graph of a group of order `n`:
/// `n - phi(n) - 1` when cyclic, `n - 1` otherwise.
pub fn kappa_formula(n: usize, cyclic: bool) -> usize {
    if n <= 1 {
        return 0;
    }
    if cyclic {
        n - euler_phi(n as u64) as usize - 1
    } else {
        n - 1
    }
}

/// Chromatic number of the strong power graph: `n - 1` when cyclic, `n`
/// otherwise.
pub fn chi_formula(n: usize, cyclic: bool) -> usize {
    if n <= 1 {
        return 1;
    }
    if cyclic {
        n - 1
    } else {
        n
    }
}
