//! Input resolution shared by the subcommands: CSV edge lists (weighted or
//! not, with or without a header), ASCII point clouds, and synthetic
//! complete graphs.

use std::fs::File;
use std::io::{BufReader, Read};
use std::path::Path;

use clique_forge::filtration::{build_vr_edges, parse_pcd_ascii};
use clique_forge::{complete_graph, parse_csv_edges, parse_weighted_csv, EdgeStream, Error};

/// Load a CSV edge list, sniffing the header and whether a third weight
/// column is present.
pub fn load_edge_csv(path: &Path) -> Result<EdgeStream, Error> {
    let mut text = String::new();
    BufReader::new(File::open(path)?).read_to_string(&mut text)?;

    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let first = lines
        .next()
        .ok_or_else(|| Error::malformed(None, "empty edge list"))?;
    let has_header = first
        .split(',')
        .any(|field| field.trim().parse::<f64>().is_err());
    let data_line = if has_header { lines.next().unwrap_or(first) } else { first };
    let columns = data_line.split(',').count();

    match columns {
        2 => {
            let ingest = parse_csv_edges(text.as_bytes(), has_header)?;
            Ok(ingest.stream)
        }
        3 => {
            // The weighted reader takes no header; strip one if present.
            let body = if has_header {
                match text.split_once('\n') {
                    Some((_, rest)) => rest,
                    None => "",
                }
            } else {
                text.as_str()
            };
            parse_weighted_csv(body.as_bytes())
        }
        n => Err(Error::malformed(None, format!("expected 2 or 3 columns, found {n}"))),
    }
}

pub fn load_pcd(path: &Path, epsilon: f64) -> Result<EdgeStream, Error> {
    let cloud = parse_pcd_ascii(BufReader::new(File::open(path)?))?;
    build_vr_edges(&cloud, epsilon)
}

pub fn synth_complete(n: u32, seed: u64) -> EdgeStream {
    complete_graph(n, seed)
}
