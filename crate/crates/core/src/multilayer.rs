//! Evolving multi-layer node-neighbourhood enumerators.
//!
//! Instead of keying state by clique boundaries, this family splits node
//! neighbourhoods into one layer per clique size: layer 2 is plain adjacency,
//! and when a clique sigma is discovered by extending its parent with a node
//! `last`, every parent node gains `last` in layer |sigma|. The intersection
//! of layer-|sigma| sets over all of sigma's nodes yields its extensions.
//! Because the extension node itself never accumulates layer entries from its
//! own discovery, each clique is found exactly once under the lexicographic
//! edge order the family expects.

use crate::clique::{Clique, NodeId, NodeSet};
use crate::error::{Error, Result};
use crate::filtration::EdgeStream;
use crate::neighborhood::LayeredNeighborhood;
use crate::sink::{CliqueSink, Emitter, RunSummary};

fn extend_sorted(nodes: &[NodeId], z: NodeId) -> Vec<NodeId> {
    let pos = nodes.partition_point(|&n| n < z);
    let mut out = Vec::with_capacity(nodes.len() + 1);
    out.extend_from_slice(&nodes[..pos]);
    out.push(z);
    out.extend_from_slice(&nodes[pos..]);
    out
}

/// Intersect layer `d` over all of `nodes`; empty if any node has no entries.
fn intersect_layer(state: &LayeredNeighborhood, d: usize, nodes: &[NodeId], out: &mut Vec<NodeId>) {
    out.clear();
    let mut sets: Vec<&NodeSet> = Vec::with_capacity(nodes.len());
    for &n in nodes {
        match state.get(d, n) {
            Some(s) if !s.is_empty() => sets.push(s),
            _ => return,
        }
    }
    NodeSet::intersect_many(&sets, out);
}

/// Unrolled multilayer enumerators (Algs. 6-8): d_max 3 finds up to
/// tetrahedra, 4 up to pentahedra, 5 up to hexahedra.
pub fn enumerate_multilayer_fixed<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    d_max: usize,
    sink: &mut S,
) -> Result<RunSummary> {
    if !(3..=5).contains(&d_max) {
        return Err(Error::FixedDepthUnsupported(d_max));
    }
    let mut state = LayeredNeighborhood::new(d_max);
    let mut em = Emitter::default();
    let (mut zs, mut ws, mut qs, mut rs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());

    for e in stream.edges() {
        if state.get(2, e.u).is_some_and(|s| s.contains(e.v)) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        let weight = e.weight;
        state.insert(2, e.u, e.v);
        state.insert(2, e.v, e.u);
        em.emit(sink, &Clique::edge(e.u, e.v), weight);
        intersect_layer(&state, 2, &[e.u, e.v], &mut zs);
        for idx_z in 0..zs.len() {
            let z = zs[idx_z];
            let tri = extend_sorted(&[e.u, e.v], z);
            em.emit(sink, &Clique::from_ascending(tri.clone()), weight);
            for n in [e.u, e.v] {
                state.insert(3, n, z);
            }
            intersect_layer(&state, 3, &tri, &mut ws);
            for idx_w in 0..ws.len() {
                let w = ws[idx_w];
                let tetra = extend_sorted(&tri, w);
                em.emit(sink, &Clique::from_ascending(tetra.clone()), weight);
                if d_max < 4 {
                    continue;
                }
                for &n in &tri {
                    state.insert(4, n, w);
                }
                intersect_layer(&state, 4, &tetra, &mut qs);
                for idx_q in 0..qs.len() {
                    let q = qs[idx_q];
                    let penta = extend_sorted(&tetra, q);
                    em.emit(sink, &Clique::from_ascending(penta.clone()), weight);
                    if d_max < 5 {
                        continue;
                    }
                    for &n in &tetra {
                        state.insert(5, n, q);
                    }
                    intersect_layer(&state, 5, &penta, &mut rs);
                    for idx_r in 0..rs.len() {
                        let hexa = extend_sorted(&penta, rs[idx_r]);
                        em.emit(sink, &Clique::from_ascending(hexa), weight);
                    }
                }
            }
        }
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: state.entry_count(),
        boundary_faces: 0,
    })
}

/// Generic multilayer enumerator (Alg. 9 semantics) for any d_max >= 2,
/// with an explicit work stack instead of call recursion.
pub fn enumerate_multilayer_recursive<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    d_max: usize,
    sink: &mut S,
) -> Result<RunSummary> {
    if d_max < 2 {
        return Err(Error::InvalidDmax(d_max));
    }
    let mut state = LayeredNeighborhood::new(d_max);
    let mut em = Emitter::default();
    // Frames carry the clique plus the node that extended its parent.
    let mut stack: Vec<(Vec<NodeId>, NodeId)> = Vec::new();
    let mut extensions = Vec::new();

    for e in stream.edges() {
        if state.get(2, e.u).is_some_and(|s| s.contains(e.v)) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        state.insert(2, e.u, e.v);
        state.insert(2, e.v, e.u);
        em.emit(sink, &Clique::edge(e.u, e.v), e.weight);
        intersect_layer(&state, 2, &[e.u, e.v], &mut extensions);
        for &z in extensions.iter().rev() {
            stack.push((extend_sorted(&[e.u, e.v], z), z));
        }
        while let Some((nodes, last)) = stack.pop() {
            let k = nodes.len();
            if k <= d_max {
                // Parent nodes gain the extension node in layer k; the
                // extension node itself gains nothing, which is what keeps
                // emission exactly-once.
                for &n in nodes.iter().filter(|&&n| n != last) {
                    state.insert(k, n, last);
                }
                intersect_layer(&state, k, &nodes, &mut extensions);
                for &z in extensions.iter().rev() {
                    stack.push((extend_sorted(&nodes, z), z));
                }
            }
            em.emit(sink, &Clique::from_ascending(nodes), e.weight);
        }
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: state.entry_count(),
        boundary_faces: 0,
    })
}
