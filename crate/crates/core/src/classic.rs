//! Classic triangle-listing baselines: edge-iterator, K3 and the forward
//! method. All three work on a static adjacency built from the final graph,
//! in contrast to the evolving-state families.

use std::collections::HashMap;

use crate::clique::{Clique, NodeId, NodeSet};
use crate::error::{Error, Result};
use crate::filtration::EdgeStream;
use crate::sink::{CliqueSink, Emitter, RunSummary};

/// Full-graph adjacency, symmetric and self-loop free.
#[derive(Debug, Default)]
pub struct StaticAdjacency {
    adj: HashMap<NodeId, NodeSet>,
    edge_count: usize,
}

impl StaticAdjacency {
    pub fn from_stream(stream: &EdgeStream) -> Self {
        let mut adj: HashMap<NodeId, NodeSet> = HashMap::new();
        let mut edge_count = 0;
        for e in stream.edges() {
            let a = adj.entry(e.u).or_default().insert(e.v);
            let b = adj.entry(e.v).or_default().insert(e.u);
            if a && b {
                edge_count += 1;
            }
        }
        StaticAdjacency { adj, edge_count }
    }

    pub fn neighbors(&self, n: NodeId) -> Option<&NodeSet> {
        self.adj.get(&n)
    }

    pub fn degree(&self, n: NodeId) -> usize {
        self.adj.get(&n).map_or(0, NodeSet::len)
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Nodes sorted by degree descending, ties by id ascending — the order
    /// K3 and the forward method require.
    pub fn nodes_by_degree_desc(&self) -> Vec<NodeId> {
        let mut nodes: Vec<NodeId> = self.adj.keys().copied().collect();
        nodes.sort_by_key(|&n| (std::cmp::Reverse(self.degree(n)), n));
        nodes
    }

    fn check_matches(&self, stream: &EdgeStream) -> Result<()> {
        if stream.len() != self.edge_count {
            return Err(Error::InconsistentInput(format!(
                "stream has {} edges, adjacency has {}",
                stream.len(),
                self.edge_count
            )));
        }
        for e in stream.edges() {
            if !self.adj.get(&e.u).is_some_and(|s| s.contains(e.v)) {
                return Err(Error::InconsistentInput(format!("edge ({}, {}) missing", e.u, e.v)));
            }
        }
        Ok(())
    }

    fn check_order(&self, nodes: &[NodeId]) -> Result<()> {
        if nodes.len() != self.adj.len() {
            return Err(Error::InvalidOrder(format!(
                "{} nodes given, adjacency has {}",
                nodes.len(),
                self.adj.len()
            )));
        }
        for &n in nodes {
            if !self.adj.contains_key(&n) {
                return Err(Error::InvalidOrder(format!("unknown node {n}")));
            }
        }
        for pair in nodes.windows(2) {
            let (a, b) = (pair[0], pair[1]);
            let (da, db) = (self.degree(a), self.degree(b));
            if da < db || (da == db && a >= b) {
                return Err(Error::InvalidOrder(format!(
                    "{a} (degree {da}) precedes {b} (degree {db})"
                )));
            }
        }
        Ok(())
    }
}

/// Edge-iterator baseline (Alg. 10), kept verbatim: each triangle is emitted
/// once per edge, i.e. three times. The summary's per-dim census holds the
/// deduplicated count; `raw_emissions` keeps the honest cost figure.
pub fn triangles_edge_iterator<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    adj: &StaticAdjacency,
    sink: &mut S,
) -> Result<RunSummary> {
    adj.check_matches(stream)?;
    let mut em = Emitter::default();
    let mut z_buf = Vec::new();
    for e in stream.edges() {
        let (su, sv) = (adj.neighbors(e.u).unwrap(), adj.neighbors(e.v).unwrap());
        NodeSet::intersect_many(&[su, sv], &mut z_buf);
        for &z in &z_buf {
            let tri = Clique::canonicalize(vec![e.u, e.v, z])?;
            em.emit_raw(sink, &tri, e.weight);
        }
    }
    let raw = em.raw;
    debug_assert_eq!(raw % 3, 0);
    let mut per_dim = std::collections::BTreeMap::new();
    if raw > 0 {
        per_dim.insert(2, raw / 3);
    }
    Ok(RunSummary {
        per_dim,
        raw_emissions: raw,
        state_entries_peak: 0,
        boundary_faces: 0,
    })
}

/// K3 baseline (Alg. 11): process nodes in descending-degree order, marking
/// each node's neighbourhood and unmarking scanned nodes, then delete the
/// node. Emits each triangle exactly once.
pub fn triangles_k3<S: CliqueSink + ?Sized>(
    nodes: &[NodeId],
    adj: &StaticAdjacency,
    sink: &mut S,
) -> Result<RunSummary> {
    adj.check_order(nodes)?;
    let mut em = Emitter::default();
    let mut removed: NodeSet = NodeSet::new();
    for &v in nodes {
        let Some(nbrs) = adj.neighbors(v) else { continue };
        let mut marked: NodeSet = nbrs.iter().filter(|n| !removed.contains(*n)).collect();
        let scan: Vec<NodeId> = marked.iter().collect();
        for u in scan {
            for w in adj.neighbors(u).into_iter().flat_map(NodeSet::iter) {
                if w != u && !removed.contains(w) && marked.contains(w) {
                    let tri = Clique::canonicalize(vec![v, u, w])?;
                    em.emit(sink, &tri, 0.0);
                }
            }
            // Unmark after scanning so {v,u,w} is not re-found from w's side.
            marked.remove(u);
        }
        removed.insert(v);
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: 0,
        boundary_faces: 0,
    })
}

/// Forward method (Alg. 12): A-sets accumulate lower-ranked predecessors;
/// each triangle is found at its highest-ranked pair exactly once.
pub fn triangles_forward<S: CliqueSink + ?Sized>(
    nodes: &[NodeId],
    adj: &StaticAdjacency,
    sink: &mut S,
) -> Result<RunSummary> {
    adj.check_order(nodes)?;
    let rank: HashMap<NodeId, usize> = nodes.iter().enumerate().map(|(i, &n)| (n, i)).collect();
    let mut a_sets: HashMap<NodeId, NodeSet> = HashMap::new();
    let mut em = Emitter::default();
    let mut x_buf = Vec::new();
    for &y in nodes {
        let Some(nbrs) = adj.neighbors(y) else { continue };
        for z in nbrs.iter() {
            if rank[&y] < rank[&z] {
                if let (Some(ay), Some(az)) = (a_sets.get(&y), a_sets.get(&z)) {
                    NodeSet::intersect_many(&[ay, az], &mut x_buf);
                    for &x in &x_buf {
                        let tri = Clique::canonicalize(vec![x, y, z])?;
                        em.emit(sink, &tri, 0.0);
                    }
                }
                a_sets.entry(z).or_default().insert(y);
            }
        }
    }
    let a_total: u64 = a_sets.values().map(|s| s.len() as u64).sum();
    debug_assert!(a_total <= adj.edge_count() as u64);
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: a_total,
        boundary_faces: 0,
    })
}
