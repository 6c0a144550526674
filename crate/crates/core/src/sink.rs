//! Push-based clique consumers.
//!
//! Enumerators never materialize the clique list themselves; every discovery
//! is pushed to a [`CliqueSink`] together with its filtration weight and a
//! strictly increasing sequence number.

use std::collections::BTreeMap;
use std::io::Write;

use serde::Serialize;

use crate::clique::Clique;
use crate::error::Result;

/// Consumer contract. Called once per emitted clique; `seq` is strictly
/// increasing within a run. The edge-iterator baseline deliberately emits
/// each triangle three times, so only the other enumerators guarantee the
/// once-per-distinct-clique contract.
pub trait CliqueSink {
    fn accept(&mut self, clique: &Clique, weight: f64, seq: u64);
}

/// Counts per dimension without storing anything.
#[derive(Debug, Default)]
pub struct CountingSink {
    pub per_dim: BTreeMap<usize, u64>,
}

impl CliqueSink for CountingSink {
    fn accept(&mut self, clique: &Clique, _weight: f64, _seq: u64) {
        *self.per_dim.entry(clique.dim()).or_insert(0) += 1;
    }
}

/// Stores every emission, in discovery order.
#[derive(Debug, Default)]
pub struct CollectingSink {
    pub cliques: Vec<(Clique, f64, u64)>,
}

impl CollectingSink {
    pub fn cliques_only(&self) -> Vec<Clique> {
        self.cliques.iter().map(|(c, _, _)| c.clone()).collect()
    }
}

impl CliqueSink for CollectingSink {
    fn accept(&mut self, clique: &Clique, weight: f64, seq: u64) {
        self.cliques.push((clique.clone(), weight, seq));
    }
}

#[derive(Serialize)]
struct NdjsonClique<'a> {
    nodes: &'a [crate::clique::NodeId],
    dim: usize,
    weight: f64,
    seq: u64,
}

/// Streams cliques as NDJSON records: `{"nodes":[...],"dim":d,"weight":w,"seq":k}`.
pub struct NdjsonSink<W: Write> {
    out: W,
    error: Option<std::io::Error>,
}

impl<W: Write> NdjsonSink<W> {
    pub fn new(out: W) -> Self {
        NdjsonSink { out, error: None }
    }

    /// Flush and surface any write error swallowed during the run.
    pub fn finish(mut self) -> Result<()> {
        if let Some(e) = self.error {
            return Err(e.into());
        }
        self.out.flush()?;
        Ok(())
    }
}

impl<W: Write> CliqueSink for NdjsonSink<W> {
    fn accept(&mut self, clique: &Clique, weight: f64, seq: u64) {
        if self.error.is_some() {
            return;
        }
        let record = NdjsonClique {
            nodes: clique.nodes(),
            dim: clique.dim(),
            weight,
            seq,
        };
        let res = serde_json::to_writer(&mut self.out, &record)
            .map_err(std::io::Error::from)
            .and_then(|_| self.out.write_all(b"\n"));
        if let Err(e) = res {
            self.error = Some(e);
        }
    }
}

/// Per-run accounting returned by every enumerator.
#[derive(Debug, Clone, Default, Serialize)]
pub struct RunSummary {
    /// Distinct cliques per dimension (1 = edges, 2 = triangles, ...).
    pub per_dim: BTreeMap<usize, u64>,
    /// Total sink calls. Equals the distinct total except for the
    /// edge-iterator baseline, where each triangle is emitted three times.
    pub raw_emissions: u64,
    /// Total stored node-set entries at the end of the run (monotone, so
    /// also the peak). Deterministic memory proxy for benchmarks.
    pub state_entries_peak: u64,
    /// Face keys held by the boundary maps, when the algorithm uses them.
    pub boundary_faces: u64,
}

impl RunSummary {
    pub fn distinct_total(&self) -> u64 {
        self.per_dim.values().sum()
    }

    pub fn count(&self, dim: usize) -> u64 {
        self.per_dim.get(&dim).copied().unwrap_or(0)
    }

    /// Cumulative total for dimensions `from..=to`.
    pub fn cumulative(&self, from: usize, to: usize) -> u64 {
        self.per_dim
            .iter()
            .filter(|(d, _)| (from..=to).contains(d))
            .map(|(_, c)| c)
            .sum()
    }
}

/// Tracks emission bookkeeping shared by all enumerators.
#[derive(Debug, Default)]
pub(crate) struct Emitter {
    seq: u64,
    pub per_dim: BTreeMap<usize, u64>,
    pub raw: u64,
}

impl Emitter {
    pub fn emit<S: CliqueSink + ?Sized>(&mut self, sink: &mut S, clique: &Clique, weight: f64) {
        sink.accept(clique, weight, self.seq);
        self.seq += 1;
        self.raw += 1;
        *self.per_dim.entry(clique.dim()).or_insert(0) += 1;
    }

    /// Emit without counting toward the distinct per-dim census
    /// (edge-iterator repeats).
    pub fn emit_raw<S: CliqueSink + ?Sized>(&mut self, sink: &mut S, clique: &Clique, weight: f64) {
        sink.accept(clique, weight, self.seq);
        self.seq += 1;
        self.raw += 1;
    }
}
