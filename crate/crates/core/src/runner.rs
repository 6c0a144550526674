//! Name-addressable enumerator dispatch shared by the CLI and the bench
//! harness.

use std::str::FromStr;

use crate::classic::{triangles_edge_iterator, triangles_forward, triangles_k3, StaticAdjacency};
use crate::error::{Error, Result};
use crate::filtration::{EdgeStream, OrderPolicy};
use crate::sink::{CliqueSink, RunSummary};
use crate::{boundary, multilayer};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    Boundary,
    BoundaryFixed,
    Multilayer,
    MultilayerFixed,
    Triangles,
    EdgeIter,
    K3,
    Forward,
}

impl Algorithm {
    pub const ALL: [Algorithm; 8] = [
        Algorithm::Boundary,
        Algorithm::BoundaryFixed,
        Algorithm::Multilayer,
        Algorithm::MultilayerFixed,
        Algorithm::Triangles,
        Algorithm::EdgeIter,
        Algorithm::K3,
        Algorithm::Forward,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Algorithm::Boundary => "boundary",
            Algorithm::BoundaryFixed => "boundary-fixed",
            Algorithm::Multilayer => "multilayer",
            Algorithm::MultilayerFixed => "multilayer-fixed",
            Algorithm::Triangles => "triangles",
            Algorithm::EdgeIter => "edge-iter",
            Algorithm::K3 => "k3",
            Algorithm::Forward => "forward",
        }
    }

    /// The edge order each family expects by default: the multilayer family
    /// wants lexicographic input, everything else follows the filtration
    /// (weight) order.
    pub fn default_order(&self) -> OrderPolicy {
        match self {
            Algorithm::Multilayer | Algorithm::MultilayerFixed => OrderPolicy::Lexicographic,
            _ => OrderPolicy::ByWeightThenLex,
        }
    }

    /// Run over `stream` as ordered. The classic triangle baselines ignore
    /// `d_max` and build their static adjacency from the full stream.
    pub fn run<S: CliqueSink + ?Sized>(
        &self,
        stream: &EdgeStream,
        d_max: usize,
        sink: &mut S,
    ) -> Result<RunSummary> {
        match self {
            Algorithm::Boundary => boundary::enumerate_boundary_recursive(stream, d_max, sink),
            Algorithm::BoundaryFixed => boundary::enumerate_boundary_fixed(stream, d_max, sink),
            Algorithm::Multilayer => multilayer::enumerate_multilayer_recursive(stream, d_max, sink),
            Algorithm::MultilayerFixed => multilayer::enumerate_multilayer_fixed(stream, d_max, sink),
            Algorithm::Triangles => boundary::enumerate_triangles(stream, sink),
            Algorithm::EdgeIter => {
                let adj = StaticAdjacency::from_stream(stream);
                triangles_edge_iterator(stream, &adj, sink)
            }
            Algorithm::K3 => {
                let adj = StaticAdjacency::from_stream(stream);
                triangles_k3(&adj.nodes_by_degree_desc(), &adj, sink)
            }
            Algorithm::Forward => {
                let adj = StaticAdjacency::from_stream(stream);
                triangles_forward(&adj.nodes_by_degree_desc(), &adj, sink)
            }
        }
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .iter()
            .copied()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::malformed(None, format!("unknown algorithm {s:?}")))
    }
}

impl std::fmt::Display for Algorithm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}
