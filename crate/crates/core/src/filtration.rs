//! Input ingestion and edge-filtration construction.
//!
//! Everything downstream consumes an [`EdgeStream`]: an ordered, duplicate-free
//! list of canonical `(u, v, weight)` edges. Streams come from SNAP-style CSV
//! edge lists (unweighted), Vietoris-Rips construction over point clouds, or
//! seeded synthetic complete graphs.

use std::collections::HashSet;
use std::io::{BufRead, BufReader, Read, Write};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clique::NodeId;
use crate::error::{Error, Result};

/// Canonical weighted edge: `u < v`, weight is the filtration value
/// (0 for unweighted inputs).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FilteredEdge {
    pub u: NodeId,
    pub v: NodeId,
    pub weight: f64,
}

impl FilteredEdge {
    pub fn new(a: NodeId, b: NodeId, weight: f64) -> Result<Self> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        Ok(FilteredEdge { u, v, weight })
    }

    fn lex_key(&self) -> (NodeId, NodeId) {
        (self.u, self.v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderPolicy {
    /// Non-decreasing weight, ties broken by (u, v) lexicographic order.
    ByWeightThenLex,
    /// (u, v) ascending lexicographically, weights ignored.
    Lexicographic,
    /// Whatever order the source produced.
    AsGiven,
}

impl std::fmt::Display for OrderPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            OrderPolicy::ByWeightThenLex => "weight",
            OrderPolicy::Lexicographic => "lex",
            OrderPolicy::AsGiven => "asgiven",
        };
        f.write_str(s)
    }
}

/// Ordered sequence of canonical edges; unit of input for every enumerator.
#[derive(Debug, Clone)]
pub struct EdgeStream {
    edges: Vec<FilteredEdge>,
    policy: OrderPolicy,
}

impl EdgeStream {
    pub fn as_given(edges: Vec<FilteredEdge>) -> Self {
        EdgeStream {
            edges,
            policy: OrderPolicy::AsGiven,
        }
    }

    /// Same edge multiset, requested order. Sorting is stable, so ties keep
    /// their relative position.
    pub fn reorder(mut self, policy: OrderPolicy) -> Self {
        match policy {
            OrderPolicy::ByWeightThenLex => self
                .edges
                .sort_by(|a, b| a.weight.total_cmp(&b.weight).then(a.lex_key().cmp(&b.lex_key()))),
            OrderPolicy::Lexicographic => self.edges.sort_by_key(|e| e.lex_key()),
            OrderPolicy::AsGiven => {}
        }
        self.policy = policy;
        self
    }

    pub fn edges(&self) -> &[FilteredEdge] {
        &self.edges
    }

    pub fn policy(&self) -> OrderPolicy {
        self.policy
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Distinct nodes touched by any edge.
    pub fn node_count(&self) -> usize {
        let mut nodes: Vec<NodeId> = self.edges.iter().flat_map(|e| [e.u, e.v]).collect();
        nodes.sort_unstable();
        nodes.dedup();
        nodes.len()
    }

    /// Serialize as `u,v,weight` CSV with 17-significant-digit weights, so a
    /// round trip through [`parse_weighted_csv`] is bit-faithful for doubles.
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<()> {
        for e in &self.edges {
            writeln!(out, "{},{},{:.16e}", e.u, e.v, e.weight)?;
        }
        Ok(())
    }
}

/// Outcome of CSV ingestion; degenerate rows are dropped, not fatal.
#[derive(Debug)]
pub struct CsvIngest {
    pub stream: EdgeStream,
    pub self_loops_dropped: usize,
    pub duplicates_dropped: usize,
}

/// Parse a two-integer-column CSV edge list (optionally with a
/// `node_1,node_2` header). Weights are 0; order is as given.
pub fn parse_csv_edges<R: Read>(input: R, has_header: bool) -> Result<CsvIngest> {
    let reader = BufReader::new(input);
    let mut edges = Vec::new();
    let mut seen: HashSet<(NodeId, NodeId)> = HashSet::new();
    let mut self_loops = 0usize;
    let mut duplicates = 0usize;
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        if idx == 0 && has_header {
            continue;
        }
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let mut fields = trimmed.split(',');
        let u = parse_node(fields.next(), lineno)?;
        let v = parse_node(fields.next(), lineno)?;
        if u == v {
            self_loops += 1;
            continue;
        }
        let edge = FilteredEdge::new(u, v, 0.0)?;
        if seen.insert((edge.u, edge.v)) {
            edges.push(edge);
        } else {
            duplicates += 1;
        }
    }
    Ok(CsvIngest {
        stream: EdgeStream::as_given(edges),
        self_loops_dropped: self_loops,
        duplicates_dropped: duplicates,
    })
}

fn parse_node(field: Option<&str>, lineno: usize) -> Result<NodeId> {
    let field = field.ok_or_else(|| Error::malformed(lineno, "expected two columns"))?;
    field
        .trim()
        .parse::<u32>()
        .map(NodeId)
        .map_err(|_| Error::malformed(lineno, format!("non-integer node id {:?}", field.trim())))
}

/// Parse the `u,v,weight` CSV produced by [`EdgeStream::write_csv`].
pub fn parse_weighted_csv<R: Read>(input: R) -> Result<EdgeStream> {
    let reader = BufReader::new(input);
    let mut edges = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let parts: Vec<&str> = trimmed.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::malformed(lineno, "expected u,v,weight"));
        }
        let u = parse_node(Some(parts[0]), lineno)?;
        let v = parse_node(Some(parts[1]), lineno)?;
        let w: f64 = parts[2]
            .trim()
            .parse()
            .map_err(|_| Error::malformed(lineno, format!("bad weight {:?}", parts[2])))?;
        edges.push(FilteredEdge::new(u, v, w)?);
    }
    Ok(EdgeStream::as_given(edges))
}

/// A finite point set in R^m, all points sharing the same dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct PointCloud {
    points: Vec<Vec<f64>>,
}

impl PointCloud {
    pub fn new(points: Vec<Vec<f64>>) -> Result<Self> {
        if let Some(first) = points.first() {
            let m = first.len();
            if m == 0 {
                return Err(Error::malformed(None, "zero-dimensional points"));
            }
            for (i, p) in points.iter().enumerate() {
                if p.len() != m {
                    return Err(Error::malformed(
                        None,
                        format!("point {i} has dimension {} but expected {m}", p.len()),
                    ));
                }
                if p.iter().any(|c| !c.is_finite()) {
                    return Err(Error::malformed(None, format!("point {i} has a non-finite coordinate")));
                }
            }
        }
        Ok(PointCloud { points })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Vec<f64>] {
        &self.points
    }

    /// Minimal ASCII PCD writer (x y z rows), for round-trip tests and tooling.
    pub fn write_pcd_ascii<W: Write>(&self, mut out: W) -> Result<()> {
        let dim = self.points.first().map_or(3, |p| p.len());
        let names: Vec<String> = (0..dim)
            .map(|i| ["x", "y", "z"].get(i).map(|s| s.to_string()).unwrap_or(format!("f{i}")))
            .collect();
        writeln!(out, "# .PCD v0.7 - Point Cloud Data file format")?;
        writeln!(out, "VERSION 0.7")?;
        writeln!(out, "FIELDS {}", names.join(" "))?;
        writeln!(out, "POINTS {}", self.points.len())?;
        writeln!(out, "DATA ascii")?;
        for p in &self.points {
            let row: Vec<String> = p.iter().map(|c| format!("{:.16e}", c)).collect();
            writeln!(out, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Parse the ASCII subset of the PCD format. Honors `FIELDS`, `POINTS` and
/// `DATA ascii`; every other header line is ignored. Uses the x,y,z columns
/// when named, otherwise the first three columns.
pub fn parse_pcd_ascii<R: Read>(input: R) -> Result<PointCloud> {
    let reader = BufReader::new(input);
    let mut lines = reader.lines().enumerate();

    let mut fields: Option<Vec<String>> = None;
    let mut declared_points: Option<usize> = None;
    let mut data_seen = false;
    let mut data_start_line = 0usize;
    for (idx, line) in &mut lines {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        match parts.next().unwrap_or("") {
            "FIELDS" => fields = Some(parts.map(str::to_string).collect()),
            "POINTS" => {
                let n = parts
                    .next()
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| Error::malformed(lineno, "bad POINTS count"))?;
                declared_points = Some(n);
            }
            "DATA" => {
                match parts.next() {
                    Some("ascii") => {}
                    Some(other) => {
                        return Err(Error::UnsupportedFormat(format!("PCD DATA {other} (only ascii supported)")))
                    }
                    None => return Err(Error::malformed(lineno, "DATA line without a mode")),
                }
                data_seen = true;
                data_start_line = lineno;
                break;
            }
            _ => {} // VERSION, SIZE, TYPE, COUNT, WIDTH, HEIGHT, VIEWPOINT...
        }
    }
    if !data_seen {
        return Err(Error::malformed(None, "missing DATA section"));
    }
    let expected = declared_points.ok_or_else(|| Error::malformed(None, "missing POINTS header"))?;

    // Column selection: x,y,z when present, else the first three.
    let columns: Vec<usize> = match &fields {
        Some(names) => {
            let want = ["x", "y", "z"];
            let named: Vec<usize> = want
                .iter()
                .filter_map(|w| names.iter().position(|n| n == w))
                .collect();
            if named.len() == 3 {
                named
            } else {
                vec![0, 1, 2]
            }
        }
        None => vec![0, 1, 2],
    };

    let mut points = Vec::with_capacity(expected);
    for (idx, line) in &mut lines {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let values: Vec<&str> = trimmed.split_whitespace().collect();
        let mut coords = Vec::with_capacity(3);
        for &col in &columns {
            let raw = values
                .get(col)
                .ok_or_else(|| Error::malformed(lineno, format!("row has {} fields, need column {col}", values.len())))?;
            let value: f64 = raw
                .parse()
                .map_err(|_| Error::malformed(lineno, format!("non-numeric field {raw:?}")))?;
            coords.push(value);
        }
        points.push(coords);
        if points.len() > expected {
            return Err(Error::malformed(
                lineno,
                format!("more data rows than the declared POINTS {expected}"),
            ));
        }
    }
    if points.len() != expected {
        return Err(Error::malformed(
            data_start_line,
            format!("POINTS {expected} declared but {} data rows found", points.len()),
        ));
    }
    PointCloud::new(points)
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Vietoris-Rips edge filtration: edge (i, j) with weight = Euclidean distance
/// iff dist <= 2*epsilon, sorted by weight then lexicographic.
pub fn build_vr_edges(pc: &PointCloud, epsilon: f64) -> Result<EdgeStream> {
    if !(epsilon >= 0.0) {
        return Err(Error::malformed(None, format!("epsilon must be >= 0, got {epsilon}")));
    }
    let cutoff = 2.0 * epsilon;
    let edges = vr_pair_scan(pc.points(), cutoff);
    Ok(EdgeStream::as_given(edges).reorder(OrderPolicy::ByWeightThenLex))
}

#[cfg(feature = "parallel")]
fn vr_pair_scan(points: &[Vec<f64>], cutoff: f64) -> Vec<FilteredEdge> {
    use rayon::prelude::*;
    (0..points.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let pi = &points[i];
            points[i + 1..].iter().enumerate().filter_map(move |(off, pj)| {
                let d = euclidean(pi, pj);
                (d <= cutoff).then(|| FilteredEdge {
                    u: NodeId(i as u32),
                    v: NodeId((i + 1 + off) as u32),
                    weight: d,
                })
            })
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn vr_pair_scan(points: &[Vec<f64>], cutoff: f64) -> Vec<FilteredEdge> {
    let mut edges = Vec::new();
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = euclidean(&points[i], &points[j]);
            if d <= cutoff {
                edges.push(FilteredEdge {
                    u: NodeId(i as u32),
                    v: NodeId(j as u32),
                    weight: d,
                });
            }
        }
    }
    edges
}

/// Sequential pair scan, kept callable for benchmarking against the parallel
/// path.
pub fn build_vr_edges_sequential(pc: &PointCloud, epsilon: f64) -> Result<EdgeStream> {
    if !(epsilon >= 0.0) {
        return Err(Error::malformed(None, format!("epsilon must be >= 0, got {epsilon}")));
    }
    let cutoff = 2.0 * epsilon;
    let mut edges = Vec::new();
    for i in 0..pc.len() {
        for j in i + 1..pc.len() {
            let d = euclidean(&pc.points()[i], &pc.points()[j]);
            if d <= cutoff {
                edges.push(FilteredEdge {
                    u: NodeId(i as u32),
                    v: NodeId(j as u32),
                    weight: d,
                });
            }
        }
    }
    Ok(EdgeStream::as_given(edges).reorder(OrderPolicy::ByWeightThenLex))
}

/// All C(n,2) edges over nodes 0..n-1 with seeded uniform weights in (0,1],
/// sorted by weight. Emulates a full filtration that runs until the complete
/// graph is reached, while staying reproducible.
pub fn complete_graph(n: u32, seed: u64) -> EdgeStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::with_capacity((n as usize * (n as usize).saturating_sub(1)) / 2);
    for i in 0..n {
        for j in i + 1..n {
            let w = 1.0 - rng.random::<f64>();
            edges.push(FilteredEdge {
                u: NodeId(i),
                v: NodeId(j),
                weight: w,
            });
        }
    }
    EdgeStream::as_given(edges).reorder(OrderPolicy::ByWeightThenLex)
}
