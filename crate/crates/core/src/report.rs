//! Benchmark report rows, counting-convention resolution and report
//! serialization (CSV + NDJSON).

use std::collections::BTreeMap;
use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filtration::{EdgeStream, OrderPolicy};
use crate::multilayer::enumerate_multilayer_recursive;
use crate::sink::CountingSink;

/// Which dimensions a published cumulative "number of cliques" total
/// includes, up to d_max.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CountConvention {
    /// Nodes, edges and everything above.
    FromDim0,
    /// Edges and everything above.
    FromDim1,
    /// Triangles and everything above.
    FromDim2,
}

impl CountConvention {
    pub fn cumulative(&self, node_count: u64, per_dim: &BTreeMap<usize, u64>, d_max: usize) -> u64 {
        let from = match self {
            CountConvention::FromDim0 => 1,
            CountConvention::FromDim1 => 1,
            CountConvention::FromDim2 => 2,
        };
        let base = if matches!(self, CountConvention::FromDim0) {
            node_count
        } else {
            0
        };
        base + per_dim
            .iter()
            .filter(|(d, _)| (from..=d_max).contains(*d))
            .map(|(_, c)| *c)
            .sum::<u64>()
    }
}

/// Determine which convention reproduces a published total by enumerating
/// the graph once. Errors if none or several match.
pub fn resolve_count_convention(
    stream: &EdgeStream,
    published_total: u64,
    d_max: usize,
) -> Result<CountConvention> {
    let ordered = stream.clone().reorder(OrderPolicy::Lexicographic);
    let mut sink = CountingSink::default();
    let summary = enumerate_multilayer_recursive(&ordered, d_max, &mut sink)?;
    let nodes = ordered.node_count() as u64;
    let matches: Vec<CountConvention> = [
        CountConvention::FromDim0,
        CountConvention::FromDim1,
        CountConvention::FromDim2,
    ]
    .into_iter()
    .filter(|c| c.cumulative(nodes, &summary.per_dim, d_max) == published_total)
    .collect();
    match matches.as_slice() {
        [] => Err(Error::NoConventionMatches(published_total)),
        [one] => Ok(*one),
        _ => Err(Error::AmbiguousConvention(published_total)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RunStatus {
    Ok,
    NotComputed,
}

impl std::fmt::Display for RunStatus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            RunStatus::Ok => f.write_str("ok"),
            RunStatus::NotComputed => f.write_str("not_computed"),
        }
    }
}

/// One benchmark run's outcome.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchRow {
    pub algorithm: String,
    pub input: String,
    pub d_max: usize,
    pub order_policy: String,
    pub seed: u64,
    pub status: RunStatus,
    pub wall_time_s: Option<f64>,
    pub peak_rss_bytes: Option<u64>,
    pub state_entries_peak: Option<u64>,
    pub count_total: Option<u64>,
    #[serde(default)]
    pub per_dim: BTreeMap<usize, u64>,
}

/// CSV report: fixed column order, one `count_dim_k` column per dimension up
/// to the largest d_max in the plan. Failed rows leave count fields empty.
pub fn write_report_csv<W: Write>(rows: &[BenchRow], mut out: W) -> Result<()> {
    let max_dim = rows.iter().map(|r| r.d_max).max().unwrap_or(1).max(1);
    let mut header = vec![
        "algorithm".to_string(),
        "input".into(),
        "d_max".into(),
        "order_policy".into(),
        "seed".into(),
        "status".into(),
        "wall_time_s".into(),
        "peak_rss_bytes".into(),
        "state_entries_peak".into(),
        "count_total".into(),
    ];
    for d in 1..=max_dim {
        header.push(format!("count_dim_{d}"));
    }
    writeln!(out, "{}", header.join(","))?;
    for r in rows {
        let mut fields = vec![
            r.algorithm.clone(),
            r.input.clone(),
            r.d_max.to_string(),
            r.order_policy.clone(),
            r.seed.to_string(),
            r.status.to_string(),
            r.wall_time_s.map(|t| format!("{t:.6}")).unwrap_or_default(),
            r.peak_rss_bytes.map(|b| b.to_string()).unwrap_or_default(),
            r.state_entries_peak.map(|b| b.to_string()).unwrap_or_default(),
            r.count_total.map(|c| c.to_string()).unwrap_or_default(),
        ];
        for d in 1..=max_dim {
            let cell = match r.status {
                RunStatus::Ok => r.per_dim.get(&d).copied().unwrap_or(0).to_string(),
                RunStatus::NotComputed => String::new(),
            };
            fields.push(cell);
        }
        writeln!(out, "{}", fields.join(","))?;
    }
    Ok(())
}

pub fn write_report_ndjson<W: Write>(rows: &[BenchRow], mut out: W) -> Result<()> {
    for r in rows {
        serde_json::to_writer(&mut out, r).map_err(std::io::Error::from)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}

/// Max resident set size of the current process, from /proc on Linux.
pub fn peak_rss_bytes() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    for line in status.lines() {
        if let Some(rest) = line.strip_prefix("VmHWM:") {
            let kb: u64 = rest.trim().trim_end_matches("kB").trim().parse().ok()?;
            return Some(kb * 1024);
        }
    }
    None
}
