//! Node, clique and node-set value types.
//!
//! Cliques are kept in canonical form (strictly ascending node ids) so that
//! set equality and sequence equality coincide. Dimension follows the
//! convention `dim = |nodes| - 1`: a node is dim 0, an edge dim 1, a triangle
//! dim 2, a tetrahedron dim 3, a pentahedron dim 4, a hexahedron dim 5.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Graph node identifier. Ids need not be contiguous; the integer order is
/// the canonical order used everywhere (lexicographic edge order, clique
/// canonical form).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub u32);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u32> for NodeId {
    fn from(id: u32) -> Self {
        NodeId(id)
    }
}

/// A complete subgraph, stored as a strictly ascending node sequence.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    nodes: Vec<NodeId>,
}

impl Clique {
    /// Canonicalize an arbitrary node sequence. Rejects duplicates.
    pub fn canonicalize(mut nodes: Vec<NodeId>) -> Result<Self> {
        assert!(!nodes.is_empty(), "a clique has at least one node");
        nodes.sort_unstable();
        for pair in nodes.windows(2) {
            if pair[0] == pair[1] {
                return Err(Error::DegenerateClique(pair[0]));
            }
        }
        Ok(Clique { nodes })
    }

    /// Wrap a sequence that is already strictly ascending.
    pub fn from_ascending(nodes: Vec<NodeId>) -> Self {
        debug_assert!(nodes.windows(2).all(|p| p[0] < p[1]));
        debug_assert!(!nodes.is_empty());
        Clique { nodes }
    }

    pub fn edge(u: NodeId, v: NodeId) -> Self {
        debug_assert!(u < v);
        Clique { nodes: vec![u, v] }
    }

    pub fn nodes(&self) -> &[NodeId] {
        &self.nodes
    }

    pub fn dim(&self) -> usize {
        self.nodes.len() - 1
    }

    /// Codimension-1 faces: drop one node each. A single node has none.
    pub fn boundary_faces(&self) -> Vec<Clique> {
        if self.nodes.len() < 2 {
            return Vec::new();
        }
        (0..self.nodes.len())
            .map(|skip| {
                let mut face = Vec::with_capacity(self.nodes.len() - 1);
                face.extend(self.nodes.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, n)| *n));
                Clique { nodes: face }
            })
            .collect()
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, n) in self.nodes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{n}")?;
        }
        write!(f, "}}")
    }
}

/// Sorted duplicate-free node set. Intersection iterates the smallest set and
/// probes the others; that operation dominates every enumerator's runtime.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NodeSet {
    items: Vec<NodeId>,
}

impl NodeSet {
    pub fn new() -> Self {
        NodeSet::default()
    }

    /// Insert, returning whether the node was new.
    pub fn insert(&mut self, n: NodeId) -> bool {
        match self.items.binary_search(&n) {
            Ok(_) => false,
            Err(pos) => {
                self.items.insert(pos, n);
                true
            }
        }
    }

    pub fn contains(&self, n: NodeId) -> bool {
        self.items.binary_search(&n).is_ok()
    }

    /// Remove, returning whether the node was present.
    pub fn remove(&mut self, n: NodeId) -> bool {
        match self.items.binary_search(&n) {
            Ok(pos) => {
                self.items.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    /// Ascending iteration; this fixes discovery order everywhere.
    pub fn iter(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.items.iter().copied()
    }

    pub fn as_slice(&self) -> &[NodeId] {
        &self.items
    }

    /// Intersection of all given sets, ascending. Walks the smallest set and
    /// probes the rest by binary search.
    pub fn intersect_many(sets: &[&NodeSet], out: &mut Vec<NodeId>) {
        out.clear();
        let Some((smallest_idx, smallest)) = sets
            .iter()
            .enumerate()
            .min_by_key(|(_, s)| s.len())
            .map(|(i, s)| (i, *s))
        else {
            return;
        };
        'cand: for n in smallest.iter() {
            for (i, s) in sets.iter().enumerate() {
                if i != smallest_idx && !s.contains(n) {
                    continue 'cand;
                }
            }
            out.push(n);
        }
    }
}

impl FromIterator<NodeId> for NodeSet {
    fn from_iter<T: IntoIterator<Item = NodeId>>(iter: T) -> Self {
        let mut s = NodeSet::new();
        for n in iter {
            s.insert(n);
        }
        s
    }
}
