//! Benchmark harness: runs each plan entry in its own child process so wall
//! time and peak RSS are attributable per run, then writes CSV + NDJSON
//! reports. A crashed, missing-input or timed-out run becomes a
//! `not_computed` row instead of aborting the plan.

use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::PathBuf;
use std::process::{Child, Command, Stdio};
use std::time::{Duration, Instant};

use clap::Args;
use serde::{Deserialize, Serialize};

use clique_forge::{write_report_csv, write_report_ndjson, Algorithm, BenchRow, Error, RunStatus};

const DEFAULT_TIMEOUT_S: u64 = 1800;

/// What an `enumerate --summary-json` child prints on success.
#[derive(Debug, Serialize, Deserialize)]
pub struct ChildSummary {
    pub wall_time_s: f64,
    pub peak_rss_bytes: Option<u64>,
    pub state_entries_peak: u64,
    pub count_total: u64,
    pub per_dim: BTreeMap<usize, u64>,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Plan file: NDJSON, one run spec per line.
    #[arg(long)]
    pub plan: PathBuf,
    /// Directory for report.csv and report.ndjson.
    #[arg(long)]
    pub out_dir: PathBuf,
    /// Child processes to run at once. Keep at 1 for timing runs; higher
    /// values only make sense for count-only validation sweeps.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Deserialize)]
struct PlanSpec {
    algorithm: String,
    input: PlanInput,
    d_max: usize,
    #[serde(default)]
    order: Option<String>,
    #[serde(default)]
    seed: u64,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum PlanInput {
    Csv { csv: String },
    Complete { complete_n: u32 },
    Pcd { pcd: String, epsilon: f64 },
}

impl PlanInput {
    fn descriptor(&self, seed: u64) -> String {
        match self {
            PlanInput::Csv { csv } => csv.clone(),
            PlanInput::Complete { complete_n } => format!("complete:n={complete_n}:seed={seed}"),
            PlanInput::Pcd { pcd, epsilon } => format!("{pcd}:eps={epsilon}"),
        }
    }

    fn child_flags(&self) -> Vec<String> {
        match self {
            PlanInput::Csv { csv } => vec!["--input".into(), csv.clone()],
            PlanInput::Complete { complete_n } => {
                vec!["--complete-n".into(), complete_n.to_string()]
            }
            PlanInput::Pcd { pcd, epsilon } => {
                vec!["--pcd".into(), pcd.clone(), "--epsilon".into(), epsilon.to_string()]
            }
        }
    }
}

fn timeout() -> Duration {
    let secs = std::env::var("CLIQUE_FORGE_TIMEOUT_S")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_TIMEOUT_S);
    Duration::from_secs(secs)
}

fn read_plan(path: &PathBuf) -> Result<Vec<PlanSpec>, Error> {
    let reader = BufReader::new(File::open(path)?);
    let mut specs = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let spec: PlanSpec = serde_json::from_str(&line)
            .map_err(|e| Error::malformed(i + 1, format!("bad plan entry: {e}")))?;
        specs.push(spec);
    }
    Ok(specs)
}

fn row_skeleton(spec: &PlanSpec) -> Result<BenchRow, Error> {
    let algo: Algorithm = spec.algorithm.parse()?;
    let order = match spec.order.as_deref() {
        Some(o) => crate::parse_order(o).map_err(|e| Error::malformed(None, e))?,
        None => algo.default_order(),
    };
    Ok(BenchRow {
        algorithm: algo.name().to_string(),
        input: spec.input.descriptor(spec.seed),
        d_max: spec.d_max,
        order_policy: order.to_string(),
        seed: spec.seed,
        status: RunStatus::NotComputed,
        wall_time_s: None,
        peak_rss_bytes: None,
        state_entries_peak: None,
        count_total: None,
        per_dim: BTreeMap::new(),
    })
}

fn spawn_child(spec: &PlanSpec, row: &BenchRow) -> std::io::Result<Child> {
    let mut cmd = Command::new(std::env::current_exe()?);
    cmd.arg("enumerate")
        .args(spec.input.child_flags())
        .args(["--algo", &row.algorithm])
        .args(["--dmax", &spec.d_max.to_string()])
        .args(["--order", &row.order_policy])
        .args(["--seed", &spec.seed.to_string()])
        .arg("--summary-json")
        .stdout(Stdio::piped())
        .stderr(Stdio::null());
    cmd.spawn()
}

/// Wait for the child, killing it when the deadline passes. Returns the
/// parsed summary on clean exit.
fn harvest(mut child: Child, deadline: Instant) -> Option<ChildSummary> {
    loop {
        match child.try_wait() {
            Ok(Some(status)) if status.success() => break,
            Ok(Some(_)) => return None,
            Ok(None) => {
                if Instant::now() >= deadline {
                    let _ = child.kill();
                    let _ = child.wait();
                    return None;
                }
                std::thread::sleep(Duration::from_millis(25));
            }
            Err(_) => return None,
        }
    }
    let mut out = String::new();
    child.stdout.take()?.read_to_string(&mut out).ok()?;
    serde_json::from_str(out.lines().last()?).ok()
}

pub fn run(args: &BenchArgs) -> Result<i32, Error> {
    let specs = read_plan(&args.plan)?;
    std::fs::create_dir_all(&args.out_dir)?;
    let jobs = args.jobs.max(1);
    let per_run_timeout = timeout();

    let mut rows: Vec<BenchRow> = Vec::with_capacity(specs.len());
    for batch in specs.chunks(jobs) {
        let mut running = Vec::new();
        for spec in batch {
            let row = row_skeleton(spec)?;
            let child = spawn_child(spec, &row).ok();
            running.push((row, child, Instant::now()));
        }
        for (mut row, child, started) in running {
            if let Some(child) = child {
                if let Some(summary) = harvest(child, started + per_run_timeout) {
                    row.status = RunStatus::Ok;
                    row.wall_time_s = Some(summary.wall_time_s);
                    row.peak_rss_bytes = summary.peak_rss_bytes;
                    row.state_entries_peak = Some(summary.state_entries_peak);
                    row.count_total = Some(summary.count_total);
                    row.per_dim = summary.per_dim;
                }
            }
            match row.status {
                RunStatus::Ok => eprintln!(
                    "{} {} d_max={} total={} {:.3}s",
                    row.algorithm,
                    row.input,
                    row.d_max,
                    row.count_total.unwrap_or(0),
                    row.wall_time_s.unwrap_or(0.0),
                ),
                RunStatus::NotComputed => eprintln!(
                    "{} {} d_max={} not computed",
                    row.algorithm, row.input, row.d_max
                ),
            }
            rows.push(row);
        }
    }

    write_report_csv(&rows, File::create(args.out_dir.join("report.csv"))?)?;
    write_report_ndjson(&rows, File::create(args.out_dir.join("report.ndjson"))?)?;
    Ok(0)
}
