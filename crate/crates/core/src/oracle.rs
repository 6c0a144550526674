//! Brute-force ground truth: enumerate every complete subgraph of the final
//! graph by exhaustive extension. Deliberately independent of the streaming
//! enumerators — it never looks at edge order or any evolving state — so it
//! can arbitrate their outputs. Desk-scale only; the node cap keeps the
//! exponential enumeration honest.

use std::collections::BTreeMap;

use crate::clique::{Clique, NodeId, NodeSet};
use crate::error::{Error, Result};
use crate::filtration::EdgeStream;

pub const DEFAULT_NODE_CAP: usize = 40;

/// All cliques of 2..=d_max+1 nodes in the final graph of `stream`, in
/// canonical form, ascending lexicographic order.
pub fn brute_force_cliques(stream: &EdgeStream, d_max: usize) -> Result<Vec<Clique>> {
    brute_force_cliques_capped(stream, d_max, DEFAULT_NODE_CAP)
}

pub fn brute_force_cliques_capped(
    stream: &EdgeStream,
    d_max: usize,
    node_cap: usize,
) -> Result<Vec<Clique>> {
    let mut nodes: Vec<NodeId> = stream.edges().iter().flat_map(|e| [e.u, e.v]).collect();
    nodes.sort_unstable();
    nodes.dedup();
    if nodes.len() > node_cap {
        return Err(Error::OracleTooLarge {
            nodes: nodes.len(),
            cap: node_cap,
        });
    }
    let mut adj: BTreeMap<NodeId, NodeSet> = BTreeMap::new();
    for e in stream.edges() {
        adj.entry(e.u).or_default().insert(e.v);
        adj.entry(e.v).or_default().insert(e.u);
    }

    let max_size = d_max + 1;
    let run_start = |v: NodeId| -> Vec<Clique> {
        let mut found = Vec::new();
        // Candidates are common neighbours above the clique's maximum,
        // so every clique is generated from its smallest node exactly once.
        let start_candidates: Vec<NodeId> = adj[&v].iter().filter(|n| *n > v).collect();
        let mut stack: Vec<(Vec<NodeId>, Vec<NodeId>)> = vec![(vec![v], start_candidates)];
        while let Some((prefix, candidates)) = stack.pop() {
            for (i, &c) in candidates.iter().enumerate() {
                let mut clique = prefix.clone();
                clique.push(c);
                if clique.len() >= 2 {
                    found.push(Clique::from_ascending(clique.clone()));
                }
                if clique.len() < max_size {
                    let next: Vec<NodeId> = candidates[i + 1..]
                        .iter()
                        .copied()
                        .filter(|&n| adj[&c].contains(n))
                        .collect();
                    if !next.is_empty() {
                        stack.push((clique, next));
                    }
                }
            }
        }
        found
    };

    #[cfg(feature = "parallel")]
    let mut cliques: Vec<Clique> = {
        use rayon::prelude::*;
        nodes.par_iter().flat_map_iter(|&v| run_start(v)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let mut cliques: Vec<Clique> = nodes.iter().flat_map(|&v| run_start(v)).collect();

    cliques.sort();
    Ok(cliques)
}

/// Count cliques per dimension; the values sum to the input length.
pub fn per_dim_census(cliques: &[Clique]) -> BTreeMap<usize, u64> {
    let mut census = BTreeMap::new();
    for c in cliques {
        *census.entry(c.dim()).or_insert(0u64) += 1;
    }
    census
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::FilteredEdge;

    fn stream_of(pairs: &[(u32, u32)]) -> EdgeStream {
        let edges = pairs
            .iter()
            .map(|&(u, v)| FilteredEdge::new(NodeId(u), NodeId(v), 0.0).unwrap())
            .collect();
        EdgeStream::as_given(edges)
    }

    #[test]
    fn worked_example_census() {
        let s = stream_of(&[(1, 2), (2, 3), (1, 5), (2, 5), (3, 5), (1, 3), (3, 4), (4, 5)]);
        let cliques = brute_force_cliques(&s, 3).unwrap();
        assert_eq!(cliques.len(), 14);
        let census = per_dim_census(&cliques);
        assert_eq!(census.get(&1), Some(&8));
        assert_eq!(census.get(&2), Some(&5));
        assert_eq!(census.get(&3), Some(&1));
        // The one tetrahedron is {1,2,3,5}.
        let tetra: Vec<&Clique> = cliques.iter().filter(|c| c.dim() == 3).collect();
        let expect = Clique::canonicalize([1, 2, 3, 5].iter().map(|&n| NodeId(n)).collect()).unwrap();
        assert_eq!(tetra, vec![&expect]);
    }

    #[test]
    fn k5_binomials() {
        let mut pairs = Vec::new();
        for i in 0..5u32 {
            for j in i + 1..5 {
                pairs.push((i, j));
            }
        }
        let census = per_dim_census(&brute_force_cliques(&stream_of(&pairs), 4).unwrap());
        assert_eq!(census.get(&1), Some(&10));
        assert_eq!(census.get(&2), Some(&10));
        assert_eq!(census.get(&3), Some(&5));
        assert_eq!(census.get(&4), Some(&1));
    }

    #[test]
    fn edgeless_graph() {
        let cliques = brute_force_cliques(&stream_of(&[]), 5).unwrap();
        assert!(cliques.is_empty());
        assert!(per_dim_census(&cliques).is_empty());
    }

    #[test]
    fn k4_census() {
        let s = stream_of(&[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let census = per_dim_census(&brute_force_cliques(&s, 5).unwrap());
        assert_eq!(census.get(&1), Some(&6));
        assert_eq!(census.get(&2), Some(&4));
        assert_eq!(census.get(&3), Some(&1));
        assert_eq!(census.get(&4), None);
    }

    #[test]
    fn node_cap_enforced() {
        let pairs: Vec<(u32, u32)> = (0..45).map(|i| (i, i + 1)).collect();
        assert!(matches!(
            brute_force_cliques(&stream_of(&pairs), 2),
            Err(Error::OracleTooLarge { nodes: 46, cap: 40 })
        ));
    }

    #[test]
    fn downward_closure() {
        let s = stream_of(&[(1, 2), (2, 3), (1, 5), (2, 5), (3, 5), (1, 3), (3, 4), (4, 5)]);
        let cliques = brute_force_cliques(&s, 4).unwrap();
        for c in &cliques {
            for face in c.boundary_faces() {
                if face.dim() >= 1 {
                    assert!(cliques.contains(&face), "face {face} of {c} missing");
                }
            }
        }
    }
}
