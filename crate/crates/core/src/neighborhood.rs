//! Mutable per-run neighbourhood state for the two enumerator families.
//!
//! Both containers are single-writer: one enumeration run owns its state
//! exclusively. `entry_count` tracks the total number of stored node-set
//! elements; the count only grows during a run, so the final value is also
//! the peak. The bench harness uses it as a deterministic memory proxy.

use std::collections::HashMap;

use crate::clique::{NodeId, NodeSet};

/// Per-dimension node -> node-set layers used by the multilayer family.
/// Layer `d` gates extensions of d-node cliques to (d+1)-node cliques;
/// layer 2 is plain (symmetric) graph adjacency.
#[derive(Debug)]
pub struct LayeredNeighborhood {
    layers: Vec<HashMap<NodeId, NodeSet>>,
    min_layer: usize,
    entries: u64,
}

impl LayeredNeighborhood {
    /// Layers `2..=max_layer`.
    pub fn new(max_layer: usize) -> Self {
        assert!(max_layer >= 2);
        LayeredNeighborhood {
            layers: vec![HashMap::new(); max_layer - 1],
            min_layer: 2,
            entries: 0,
        }
    }

    pub fn max_layer(&self) -> usize {
        self.min_layer + self.layers.len() - 1
    }

    /// Insert `value` into layer `d` of node `key`; true when new.
    pub fn insert(&mut self, d: usize, key: NodeId, value: NodeId) -> bool {
        let new = self.layers[d - self.min_layer]
            .entry(key)
            .or_default()
            .insert(value);
        if new {
            self.entries += 1;
        }
        new
    }

    pub fn get(&self, d: usize, key: NodeId) -> Option<&NodeSet> {
        self.layers[d - self.min_layer].get(&key)
    }

    pub fn entry_count(&self) -> u64 {
        self.entries
    }
}

/// Canonical face -> node-set map used by the boundary family, one map per
/// clique size. The map for size `d` is keyed by faces of `d - 1` nodes and
/// holds, for each face, the nodes completing it into a d-node clique.
#[derive(Debug)]
pub struct BoundaryNeighborhood {
    maps: Vec<HashMap<Box<[NodeId]>, NodeSet>>,
    min_size: usize,
    entries: u64,
}

impl BoundaryNeighborhood {
    /// Maps for clique sizes `2..=max_size`.
    pub fn new(max_size: usize) -> Self {
        assert!(max_size >= 2);
        BoundaryNeighborhood {
            maps: vec![HashMap::new(); max_size - 1],
            min_size: 2,
            entries: 0,
        }
    }

    /// Insert `value` under face `key` (ascending) in the size-`d` map.
    pub fn insert(&mut self, d: usize, key: &[NodeId], value: NodeId) -> bool {
        debug_assert!(key.windows(2).all(|p| p[0] < p[1]));
        let map = &mut self.maps[d - self.min_size];
        let new = match map.get_mut(key) {
            Some(set) => set.insert(value),
            None => {
                let mut set = NodeSet::new();
                set.insert(value);
                map.insert(key.into(), set);
                true
            }
        };
        if new {
            self.entries += 1;
        }
        new
    }

    pub fn get(&self, d: usize, key: &[NodeId]) -> Option<&NodeSet> {
        self.maps[d - self.min_size].get(key)
    }

    /// Total number of face keys across all sizes.
    pub fn face_count(&self) -> usize {
        self.maps.iter().map(|m| m.len()).sum()
    }

    pub fn entry_count(&self) -> u64 {
        self.entries
    }
}
