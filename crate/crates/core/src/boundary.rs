//! Evolving boundary-neighbourhood enumerators.
//!
//! The family streams edges in filtration order and keeps, per clique size,
//! a map from each canonical boundary face to the nodes completing it. A
//! clique of size d is discovered exactly once: when its temporally last
//! face registers, the intersection over all boundary faces becomes
//! non-empty for the missing node.
//!
//! Fixed-depth variants unroll the loop for d_max in {3,4,5}; the recursive
//! variant handles any d_max >= 2 with an explicit work stack.

use crate::clique::{Clique, NodeId, NodeSet};
use crate::error::{Error, Result};
use crate::filtration::EdgeStream;
use crate::neighborhood::{BoundaryNeighborhood, LayeredNeighborhood};
use crate::sink::{CliqueSink, Emitter, RunSummary};

/// Merge `z` into an ascending sequence, preserving order.
fn extend_sorted(nodes: &[NodeId], z: NodeId) -> Vec<NodeId> {
    let pos = nodes.partition_point(|&n| n < z);
    let mut out = Vec::with_capacity(nodes.len() + 1);
    out.extend_from_slice(&nodes[..pos]);
    out.push(z);
    out.extend_from_slice(&nodes[pos..]);
    out
}

/// Register every codimension-1 face of `nodes` in the size-k map (k =
/// |nodes|), then intersect the face sets. Extension candidates land in
/// `out`, ascending.
fn register_and_intersect(
    state: &mut BoundaryNeighborhood,
    nodes: &[NodeId],
    face_scratch: &mut Vec<NodeId>,
    out: &mut Vec<NodeId>,
) {
    let k = nodes.len();
    for skip in 0..k {
        face_scratch.clear();
        face_scratch.extend(nodes.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, n)| *n));
        state.insert(k, face_scratch, nodes[skip]);
    }
    // Seed candidates from the first face, then filter through the rest.
    out.clear();
    for skip in 0..k {
        face_scratch.clear();
        face_scratch.extend(nodes.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, n)| *n));
        let set = state.get(k, face_scratch).expect("face registered above");
        if skip == 0 {
            out.extend(set.iter());
        } else {
            out.retain(|&n| set.contains(n));
        }
        if out.is_empty() {
            break;
        }
    }
}

/// Alg. 1 style triangle finder over an evolving node neighbourhood.
/// Emits edges (dim 1) and triangles (dim 2).
pub fn enumerate_triangles<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    sink: &mut S,
) -> Result<RunSummary> {
    let mut adj = LayeredNeighborhood::new(2);
    let mut em = Emitter::default();
    let mut z_buf = Vec::new();
    for e in stream.edges() {
        if adj.get(2, e.u).is_some_and(|s| s.contains(e.v)) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        adj.insert(2, e.u, e.v);
        adj.insert(2, e.v, e.u);
        em.emit(sink, &Clique::edge(e.u, e.v), e.weight);
        let (su, sv) = (adj.get(2, e.u).unwrap(), adj.get(2, e.v).unwrap());
        NodeSet::intersect_many(&[su, sv], &mut z_buf);
        for &z in &z_buf {
            let tri = Clique::canonicalize(vec![e.u, e.v, z])?;
            em.emit(sink, &tri, e.weight);
        }
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: adj.entry_count(),
        boundary_faces: 0,
    })
}

/// Unrolled boundary-family enumerators (Algs. 2-4): d_max 3 finds up to
/// tetrahedra, 4 up to pentahedra, 5 up to hexahedra.
pub fn enumerate_boundary_fixed<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    d_max: usize,
    sink: &mut S,
) -> Result<RunSummary> {
    if !(3..=5).contains(&d_max) {
        return Err(Error::FixedDepthUnsupported(d_max));
    }
    let mut state = BoundaryNeighborhood::new(d_max);
    let mut em = Emitter::default();
    let mut face = Vec::new();
    let (mut zs, mut ws, mut qs, mut rs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());

    for e in stream.edges() {
        if state.get(2, &[e.u]).is_some_and(|s| s.contains(e.v)) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        let w = e.weight;
        let edge_nodes = [e.u, e.v];
        em.emit(sink, &Clique::edge(e.u, e.v), w);
        register_and_intersect(&mut state, &edge_nodes, &mut face, &mut zs);
        for idx_z in 0..zs.len() {
            let tri = extend_sorted(&edge_nodes, zs[idx_z]);
            em.emit(sink, &Clique::from_ascending(tri.clone()), w);
            register_and_intersect(&mut state, &tri, &mut face, &mut ws);
            for idx_w in 0..ws.len() {
                let tetra = extend_sorted(&tri, ws[idx_w]);
                em.emit(sink, &Clique::from_ascending(tetra.clone()), w);
                if d_max < 4 {
                    continue;
                }
                register_and_intersect(&mut state, &tetra, &mut face, &mut qs);
                for idx_q in 0..qs.len() {
                    let penta = extend_sorted(&tetra, qs[idx_q]);
                    em.emit(sink, &Clique::from_ascending(penta.clone()), w);
                    if d_max < 5 {
                        continue;
                    }
                    register_and_intersect(&mut state, &penta, &mut face, &mut rs);
                    for idx_r in 0..rs.len() {
                        let hexa = extend_sorted(&penta, rs[idx_r]);
                        em.emit(sink, &Clique::from_ascending(hexa), w);
                    }
                }
            }
        }
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: state.entry_count(),
        boundary_faces: state.face_count() as u64,
    })
}

/// Generic boundary-family enumerator (Alg. 5 semantics) for any
/// d_max >= 2, with an explicit work stack instead of call recursion.
pub fn enumerate_boundary_recursive<S: CliqueSink + ?Sized>(
    stream: &EdgeStream,
    d_max: usize,
    sink: &mut S,
) -> Result<RunSummary> {
    if d_max < 2 {
        return Err(Error::InvalidDmax(d_max));
    }
    let mut state = BoundaryNeighborhood::new(d_max);
    let mut em = Emitter::default();
    let mut stack: Vec<Vec<NodeId>> = Vec::new();
    let mut face = Vec::new();
    let mut extensions = Vec::new();

    for e in stream.edges() {
        if state.get(2, &[e.u]).is_some_and(|s| s.contains(e.v)) {
            return Err(Error::DuplicateEdge(e.u, e.v));
        }
        stack.push(vec![e.u, e.v]);
        while let Some(nodes) = stack.pop() {
            let k = nodes.len();
            // Extensions are gated on dim < d_max, i.e. size <= d_max; the
            // size-(d_max+1) cliques are emitted but never registered.
            let extendable = k <= d_max;
            if extendable {
                register_and_intersect(&mut state, &nodes, &mut face, &mut extensions);
                for &z in extensions.iter().rev() {
                    stack.push(extend_sorted(&nodes, z));
                }
            }
            em.emit(sink, &Clique::from_ascending(nodes), e.weight);
        }
    }
    Ok(RunSummary {
        per_dim: em.per_dim,
        raw_emissions: em.raw,
        state_entries_peak: state.entry_count(),
        boundary_faces: state.face_count() as u64,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::{EdgeStream, FilteredEdge};
    use crate::sink::{CollectingSink, CountingSink};

    pub(crate) fn stream_of(pairs: &[(u32, u32)]) -> EdgeStream {
        let edges = pairs
            .iter()
            .map(|&(u, v)| FilteredEdge::new(NodeId(u), NodeId(v), 0.0).unwrap())
            .collect();
        EdgeStream::as_given(edges)
    }

    /// Fig. 2 worked-example graph in the Table 1 edge order.
    pub(crate) fn worked_example_stream() -> EdgeStream {
        stream_of(&[(1, 2), (2, 3), (1, 5), (2, 5), (3, 5), (1, 3), (3, 4), (4, 5)])
    }

    fn nodes_of(c: &Clique) -> Vec<u32> {
        c.nodes().iter().map(|n| n.0).collect()
    }

    #[test]
    fn triangles_on_worked_example() {
        let mut sink = CollectingSink::default();
        enumerate_triangles(&worked_example_stream(), &mut sink).unwrap();
        let tris: Vec<Vec<u32>> = sink
            .cliques
            .iter()
            .filter(|(c, _, _)| c.dim() == 2)
            .map(|(c, _, _)| nodes_of(c))
            .collect();
        // Discovery order of the five triangles.
        assert_eq!(
            tris,
            vec![
                vec![1, 2, 5],
                vec![2, 3, 5],
                vec![1, 2, 3],
                vec![1, 3, 5],
                vec![3, 4, 5]
            ]
        );
    }

    #[test]
    fn triangles_path_has_none() {
        let mut sink = CountingSink::default();
        let s = enumerate_triangles(&stream_of(&[(1, 2), (2, 3)]), &mut sink).unwrap();
        assert_eq!(s.count(2), 0);
        assert_eq!(s.count(1), 2);
    }

    #[test]
    fn triangles_k4_any_order() {
        let mut sink = CountingSink::default();
        let s = enumerate_triangles(&stream_of(&[(2, 3), (0, 1), (1, 3), (0, 2), (0, 3), (1, 2)]), &mut sink)
            .unwrap();
        assert_eq!(s.count(2), 4);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let s = stream_of(&[(1, 2), (2, 1)]);
        assert!(matches!(
            enumerate_triangles(&s, &mut CountingSink::default()),
            Err(Error::DuplicateEdge(_, _))
        ));
        assert!(matches!(
            enumerate_boundary_fixed(&s, 3, &mut CountingSink::default()),
            Err(Error::DuplicateEdge(_, _))
        ));
        assert!(matches!(
            enumerate_boundary_recursive(&s, 3, &mut CountingSink::default()),
            Err(Error::DuplicateEdge(_, _))
        ));
    }

    #[test]
    fn fixed_worked_example_counts() {
        let mut sink = CountingSink::default();
        let s = enumerate_boundary_fixed(&worked_example_stream(), 3, &mut sink).unwrap();
        assert_eq!(s.count(1), 8);
        assert_eq!(s.count(2), 5);
        assert_eq!(s.count(3), 1);
    }

    #[test]
    fn recursive_matches_table_discovery_order() {
        let mut sink = CollectingSink::default();
        enumerate_boundary_recursive(&worked_example_stream(), 3, &mut sink).unwrap();
        let got: Vec<Vec<u32>> = sink.cliques.iter().map(|(c, _, _)| nodes_of(c)).collect();
        let expect: Vec<Vec<u32>> = vec![
            vec![1, 2],
            vec![2, 3],
            vec![1, 5],
            vec![2, 5],
            vec![1, 2, 5],
            vec![3, 5],
            vec![2, 3, 5],
            vec![1, 3],
            vec![1, 2, 3],
            vec![1, 3, 5],
            vec![1, 2, 3, 5],
            vec![3, 4],
            vec![4, 5],
            vec![3, 4, 5],
        ];
        assert_eq!(got, expect);
    }

    #[test]
    fn k5_binomial_counts() {
        let mut pairs = Vec::new();
        for i in 0..5u32 {
            for j in i + 1..5 {
                pairs.push((i, j));
            }
        }
        for run in [
            enumerate_boundary_fixed(&stream_of(&pairs), 4, &mut CountingSink::default()).unwrap(),
            enumerate_boundary_recursive(&stream_of(&pairs), 4, &mut CountingSink::default()).unwrap(),
        ] {
            assert_eq!(run.count(1), 10);
            assert_eq!(run.count(2), 10);
            assert_eq!(run.count(3), 5);
            assert_eq!(run.count(4), 1);
        }
    }

    #[test]
    fn star_graph_has_no_triangles() {
        let s = stream_of(&[(0, 1), (0, 2), (0, 3), (0, 4)]);
        let run = enumerate_boundary_fixed(&s, 5, &mut CountingSink::default()).unwrap();
        assert_eq!(run.count(1), 4);
        assert_eq!(run.distinct_total(), 4);
    }

    #[test]
    fn large_dmax_is_harmless() {
        let run =
            enumerate_boundary_recursive(&worked_example_stream(), 10, &mut CountingSink::default()).unwrap();
        assert_eq!(run.count(1), 8);
        assert_eq!(run.count(2), 5);
        assert_eq!(run.count(3), 1);
        assert_eq!(run.distinct_total(), 14);
    }

    #[test]
    fn empty_stream_empty_output() {
        let run = enumerate_boundary_recursive(&stream_of(&[]), 4, &mut CountingSink::default()).unwrap();
        assert_eq!(run.distinct_total(), 0);
    }

    #[test]
    fn fixed_rejects_bad_depth() {
        let s = worked_example_stream();
        assert!(matches!(
            enumerate_boundary_fixed(&s, 2, &mut CountingSink::default()),
            Err(Error::FixedDepthUnsupported(2))
        ));
        assert!(matches!(
            enumerate_boundary_fixed(&s, 6, &mut CountingSink::default()),
            Err(Error::FixedDepthUnsupported(6))
        ));
        assert!(matches!(
            enumerate_boundary_recursive(&s, 1, &mut CountingSink::default()),
            Err(Error::InvalidDmax(1))
        ));
    }
}
