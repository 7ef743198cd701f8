use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{graph_isomorphic, Graph};
use crate::group::is_prime;

pub const LINE_GRAPH_LIMIT: usize = 40;
pub const PATTERN_LIMIT: usize = 6;
pub const ROOT_SEARCH_LIMIT: usize = 10;
pub const ROOT_VERTEX_LIMIT: usize = 12;

/// Edge lists of the nine minimal graphs that are not line graphs, in the
/// usual order: the claw first, then the two five-vertex graphs, then the
/// six on six vertices.
const BEINEKE: [(usize, &[(usize, usize)]); 9] = [
    (4, &[(0, 3), (1, 3), (2, 3)]),
    (5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 4)]),
    (
        5,
        &[
            (0, 1),
            (0, 3),
            (0, 4),
            (1, 2),
            (1, 3),
            (1, 4),
            (2, 3),
            (2, 4),
            (3, 4),
        ],
    ),
    (6, &[(0, 1), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5), (4, 5)]),
    (
        6,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
        ],
    ),
    (
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 3),
            (1, 2),
            (1, 3),
            (1, 5),
            (2, 3),
            (2, 5),
            (4, 5),
        ],
    ),
    (
        6,
        &[
            (0, 2),
            (0, 3),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 3),
            (2, 3),
            (3, 4),
            (4, 5),
        ],
    ),
    (
        6,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 5),
            (2, 3),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
    (
        6,
        &[
            (0, 1),
            (0, 2),
            (0, 5),
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 5),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    ),
];

/// The nine forbidden induced subgraphs of line graphs.
#[derive(Debug, Clone)]
pub struct ForbiddenPatternSet {
    patterns: Vec<Graph>,
}

impl ForbiddenPatternSet {
    pub fn patterns(&self) -> &[Graph] {
        &self.patterns
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }
}

pub fn beineke_patterns() -> ForbiddenPatternSet {
    let patterns = BEINEKE
        .iter()
        .map(|&(n, edges)| Graph::from_edges(n, edges.iter().copied()).expect("pattern edge list"))
        .collect();
    ForbiddenPatternSet { patterns }
}

/// Whether some vertex subset of `host` induces a copy of `pattern`.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> Result<bool> {
    let k = pattern.n();
    if k > PATTERN_LIMIT {
        return Err(Error::TooLarge {
            operation: "contains_induced",
            size: k,
            limit: PATTERN_LIMIT,
        });
    }
    if k > host.n() {
        return Ok(false);
    }
    if k == 0 {
        return Ok(true);
    }
    let order = connected_first_order(pattern);
    let mut map = vec![usize::MAX; k];
    Ok(embed(
        host,
        pattern,
        &order,
        0,
        &mut map,
        &BitSet::full(host.n()),
    ))
}

/// Pattern vertices in an order where each one (after the first of its
/// component) is adjacent to an earlier one, highest degree first.
fn connected_first_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let links = order.iter().filter(|&&u| g.has_edge(u, v)).count();
                (links, g.degree(v), std::cmp::Reverse(v))
            })
            .unwrap();
        placed[next] = true;
        order.push(next);
    }
    order
}

fn embed(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    idx: usize,
    map: &mut [usize],
    free: &BitSet,
) -> bool {
    if idx == order.len() {
        return true;
    }
    let v = order[idx];
    let mut candidates = free.clone();
    for &u in &order[..idx] {
        let image = host.neighbors(map[u]);
        if pattern.has_edge(u, v) {
            candidates.intersect_with(image);
        } else {
            candidates.difference_with(image);
        }
    }
    let need = pattern.degree(v);
    for w in candidates.iter() {
        if host.degree(w) < need {
            continue;
        }
        map[v] = w;
        let mut rest = free.clone();
        rest.remove(w);
        if embed(host, pattern, order, idx + 1, map, &rest) {
            return true;
        }
    }
    map[v] = usize::MAX;
    false
}

/// Line-graph test by excluding the nine forbidden induced subgraphs.
pub fn is_line_graph(g: &Graph) -> Result<bool> {
    if g.n() > LINE_GRAPH_LIMIT {
        return Err(Error::TooLarge {
            operation: "is_line_graph",
            size: g.n(),
            limit: LINE_GRAPH_LIMIT,
        });
    }
    for p in beineke_patterns().patterns() {
        if contains_induced(g, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Vertices are the edges of `g` in `g.edges()` order; two are adjacent when
/// the edges share an endpoint.
pub fn line_graph_construct(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut l = Graph::empty(edges.len());
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    l
}

/// Exhaustive search for a root graph `H` on at most `max_root_vertices`
/// vertices with `L(H)` isomorphic to `g`.
///
/// Each vertex of `g` is assigned a distinct root edge so that adjacency in
/// `g` matches endpoint sharing. Root vertices are numbered in order of first
/// use, which removes relabelings of the same root. Any candidate is
/// confirmed by building its line graph and testing isomorphism.
pub fn root_graph_search(g: &Graph, max_root_vertices: usize) -> Result<Option<Graph>> {
    if g.n() > ROOT_SEARCH_LIMIT {
        return Err(Error::TooLarge {
            operation: "root_graph_search",
            size: g.n(),
            limit: ROOT_SEARCH_LIMIT,
        });
    }
    if max_root_vertices > ROOT_VERTEX_LIMIT {
        return Err(Error::TooLarge {
            operation: "root_graph_search (root vertices)",
            size: max_root_vertices,
            limit: ROOT_VERTEX_LIMIT,
        });
    }
    let order = connected_first_order(g);
    let mut state = RootSearch {
        g,
        order: &order,
        max: max_root_vertices,
        edges: vec![(0, 0); g.n()],
    };
    let Some(used) = state.assign(0, 0) else {
        return Ok(None);
    };
    let root = Graph::from_edges(used, order.iter().map(|&v| state.edges[v]))?;
    if graph_isomorphic(&line_graph_construct(&root), g)? {
        Ok(Some(root))
    } else {
        Ok(None)
    }
}

struct RootSearch<'a> {
    g: &'a Graph,
    order: &'a [usize],
    max: usize,
    edges: Vec<(usize, usize)>,
}

impl RootSearch<'_> {
    /// Returns the number of root vertices used on success.
    fn assign(&mut self, idx: usize, used: usize) -> Option<usize> {
        if idx == self.order.len() {
            return Some(used);
        }
        let v = self.order[idx];
        // Endpoints range over existing vertices plus up to two new ones.
        let top = (used + 2).min(self.max);
        for a in 0..top {
            if a > used {
                break;
            }
            for b in (a + 1)..top {
                if b > used + usize::from(a == used) {
                    break;
                }
                if !self.fits(idx, v, (a, b)) {
                    continue;
                }
                self.edges[v] = (a, b);
                let next_used = used.max(b + 1);
                if let Some(total) = self.assign(idx + 1, next_used) {
                    return Some(total);
                }
            }
        }
        None
    }

    fn fits(&self, idx: usize, v: usize, (a, b): (usize, usize)) -> bool {
        self.order[..idx].iter().all(|&u| {
            let (c, d) = self.edges[u];
            if (c, d) == (a, b) {
                return false;
            }
            let shares = a == c || a == d || b == c || b == d;
            shares == self.g.has_edge(u, v)
        })
    }
}

/// Cyclic orders whose strong power graph is a line graph: 4, 9 and primes.
pub fn cyclic_line_graph_classification(n: usize) -> bool {
    n == 4 || n == 9 || is_prime(n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, path_graph, star_graph, strong_power_graph};
    use crate::group::make_cyclic;

    fn cyclic(n: usize) -> Graph {
        strong_power_graph(&make_cyclic(n).unwrap())
    }

    #[test]
    fn pattern_shapes() {
        let set = beineke_patterns();
        assert_eq!(set.len(), 9);
        let sizes: Vec<usize> = set.patterns().iter().map(Graph::n).collect();
        assert_eq!(sizes, [4, 5, 5, 6, 6, 6, 6, 6, 6]);
        assert!(graph_isomorphic(&set.patterns()[0], &star_graph(3)).unwrap());
    }

    #[test]
    fn patterns_are_minimal() {
        for p in beineke_patterns().patterns() {
            assert!(root_graph_search(p, ROOT_VERTEX_LIMIT).unwrap().is_none());
            for v in 0..p.n() {
                let sub = p.remove_vertex(v).unwrap();
                assert!(root_graph_search(&sub, ROOT_VERTEX_LIMIT)
                    .unwrap()
                    .is_some());
            }
        }
    }

    #[test]
    fn induced_containment() {
        assert!(contains_induced(&complete_graph(5), &complete_graph(3)).unwrap());
        assert!(!contains_induced(&star_graph(3), &complete_graph(3)).unwrap());
        // K_5 minus one edge.
        let patterns = beineke_patterns();
        assert!(contains_induced(&cyclic(12), &patterns.patterns()[2]).unwrap());
        // K_4 contains K_3 but not an induced path on three vertices.
        assert!(!contains_induced(&complete_graph(4), &path_graph(3)).unwrap());
        assert!(contains_induced(&complete_graph(4), &Graph::empty(1)).unwrap());
        assert!(!contains_induced(&complete_graph(2), &complete_graph(3)).unwrap());
        assert!(contains_induced(&complete_graph(8), &complete_graph(7)).is_err());
    }

    #[test]
    fn recognizer_examples() {
        assert!(is_line_graph(&cyclic(9)).unwrap());
        assert!(!is_line_graph(&cyclic(6)).unwrap());
        for n in 1..=8 {
            assert!(is_line_graph(&complete_graph(n)).unwrap());
        }
        assert!(is_line_graph(&complete_graph(41)).is_err());
    }

    #[test]
    fn construction() {
        assert!(
            graph_isomorphic(&line_graph_construct(&star_graph(4)), &complete_graph(4)).unwrap()
        );
        let l = line_graph_construct(&path_graph(3));
        assert_eq!((l.n(), l.edges()), (2, vec![(0, 1)]));
        assert_eq!(line_graph_construct(&Graph::empty(3)).n(), 0);
    }

    #[test]
    fn root_search() {
        let k3 = root_graph_search(&complete_graph(3), 8).unwrap().unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert!(root_graph_search(&star_graph(3), 8).unwrap().is_none());
        let z4 = cyclic(4);
        let root = root_graph_search(&z4, 8).unwrap().unwrap();
        assert_eq!((root.n(), root.edge_count()), (5, 4));
        assert!(graph_isomorphic(&line_graph_construct(&root), &z4).unwrap());
        // Too few root vertices.
        assert!(root_graph_search(&complete_graph(4), 4).unwrap().is_none());
        assert!(root_graph_search(&complete_graph(4), 5).unwrap().is_some());
        assert!(root_graph_search(&complete_graph(11), 12).is_err());
        assert!(root_graph_search(&complete_graph(3), 13).is_err());
    }

    #[test]
    fn classification() {
        assert!(cyclic_line_graph_classification(9));
        assert!(!cyclic_line_graph_classification(12));
        assert!(cyclic_line_graph_classification(7));
        assert!(cyclic_line_graph_classification(4));
        assert!(!cyclic_line_graph_classification(8));
    }
}
