use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::group::FiniteGroup;

/// An identity-free, inverse-closed subset of a group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionSet {
    elements: BitSet,
}

impl ConnectionSet {
    pub fn new(g: &FiniteGroup, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let n = g.order();
        let mut set = BitSet::new(n);
        for x in elements {
            if x >= n {
                return Err(Error::ElementOutOfRange { index: x, order: n });
            }
            set.insert(x);
        }
        if set.contains(g.identity()) {
            return Err(Error::IdentityInConnectionSet);
        }
        if let Some(x) = set.iter().find(|&x| !set.contains(g.inverse(x))) {
            return Err(Error::NotInverseClosed(x));
        }
        Ok(ConnectionSet { elements: set })
    }

    /// `G \ {e}`.
    pub fn all_but_identity(g: &FiniteGroup) -> Self {
        let mut set = BitSet::full(g.order());
        set.remove(g.identity());
        ConnectionSet { elements: set }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.count()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> Vec<usize> {
        self.elements.iter().collect()
    }
}

/// `g ~ h` iff `g h^{-1}` lies in `s`.
pub fn cayley_graph(g: &FiniteGroup, s: &ConnectionSet) -> Result<Graph> {
    let n = g.order();
    if s.elements.capacity() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            actual: s.elements.capacity(),
        });
    }
    let mut out = Graph::empty(n);
    for a in 0..n {
        for b in (a + 1)..n {
            if s.contains(g.op(a, g.inverse(b))) {
                out.add_edge(a, b);
            }
        }
    }
    Ok(out)
}

/// Whether the strong power graph of `g` is a Cayley graph: exactly when
/// `g` is noncyclic.
pub fn cayley_classification(g: &FiniteGroup) -> bool {
    !g.is_cyclic()
}
