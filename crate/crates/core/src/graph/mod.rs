//! Simple undirected graphs with bitset adjacency, plus the combinatorial
//! oracles (connectivity, coloring, isomorphism) used to cross-check the
//! closed forms elsewhere in the crate.

mod coloring;
mod connectivity;
mod isomorphism;
mod power;

use std::collections::VecDeque;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

pub use coloring::{chromatic_number_exact, chromatic_number_search, CHROMATIC_SEARCH_LIMIT};
pub use connectivity::{vertex_connectivity_bruteforce, CONNECTIVITY_LIMIT};
pub use isomorphism::{graph_isomorphic, isomorphism, ISOMORPHISM_LIMIT};
pub use power::{power_closure, strong_power_graph, strong_power_graph_by_definition};

/// Canonical edge list: pairs `(u, v)` with `u < v`, sorted.
pub type EdgeList = Vec<(usize, usize)>;

/// A simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u != v {
                g.add_edge(u, v);
            }
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    pub fn edges(&self) -> EdgeList {
        (0..self.n)
            .flat_map(|u| {
                self.adj[u]
                    .iter()
                    .filter(move |&v| v > u)
                    .map(move |v| (u, v))
            })
            .collect()
    }

    /// Degrees in vertex order.
    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Degrees sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self) -> bool {
        let d = self.degrees();
        d.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    /// Components by breadth-first search; each component sorted, components
    /// ordered by their smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for v in self.adj[u].iter() {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Subgraph induced on `subset`, relabeled `0..subset.len()` in the order
    /// given.
    pub fn induced_subgraph(&self, subset: &[usize]) -> Result<Graph> {
        for &v in subset {
            if v >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        let mut g = Graph::empty(subset.len());
        for (i, &u) in subset.iter().enumerate() {
            for (j, &v) in subset.iter().enumerate().skip(i + 1) {
                if u != v && self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// The graph with vertex `v` deleted (remaining vertices keep their order).
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            let mut row = self.adj[u].complement();
            row.remove(u);
            g.adj[u] = row;
        }
        g
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            n: self.n,
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        };
        serde_json::to_string(&doc).expect("graph serialization cannot fail")
    }

    /// Parses `{"n": .., "edges": [[u, v], ..]}`; edges must be in range and
    /// free of self-loops.
    pub fn from_json(text: &str) -> Result<Graph> {
        let doc: GraphJson = serde_json::from_str(text).map_err(|e| Error::io("graph json", e))?;
        if let Some([u, _]) = doc.edges.iter().find(|[u, v]| u == v) {
            return Err(Error::io("graph json", format!("self-loop at vertex {u}")));
        }
        Graph::from_edges(doc.n, doc.edges.into_iter().map(|[u, v]| (u, v)))
    }

    /// Undirected DOT; vertices are labeled by index.
    pub fn to_dot(&self, name: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph {name} {{");
        for v in 0..self.n {
            let _ = writeln!(s, "  {v} [label=\"{v}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

pub fn complete_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        let mut row = BitSet::full(n);
        row.remove(u);
        g.adj[u] = row;
    }
    g
}

/// `K_{1,n}` with vertex 0 as the center.
pub fn star_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n + 1);
    for leaf in 1..=n {
        g.add_edge(0, leaf);
    }
    g
}

pub fn path_graph(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for v in 1..n {
        g.add_edge(v - 1, v);
    }
    g
}

pub fn cycle_graph(n: usize) -> Graph {
    let mut g = path_graph(n);
    if n >= 3 {
        g.add_edge(0, n - 1);
    }
    g
}

/// Vertices of `b` are shifted by `a.n()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let mut g = Graph::empty(a.n + b.n);
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(u + a.n, v + a.n);
    }
    g
}

/// `m + n` clique vertices plus one extra vertex (the last) adjacent to the
/// final `n` clique vertices only.
pub fn clique_plus_vertex(m: usize, n: usize) -> Graph {
    let k = m + n;
    let mut g = complete_graph(k + 1);
    for v in 0..k {
        if v < m {
            g.adj[v].remove(k);
            g.adj[k].remove(v);
        }
    }
    g
}
