//! `clique-forge`: enumerate cliques of filtered graphs, verify enumerators
//! against the brute-force oracle, and run benchmark plans.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 bad flags, 3 malformed
//! or oversized input, 4 enumerator failure.

mod bench;
mod input;

use std::io::{BufWriter, Write};
use std::path::PathBuf;
use std::process::exit;
use std::time::Instant;

use clap::{ArgGroup, Args, Parser, Subcommand};

use clique_forge::sink::{CollectingSink, CountingSink, NdjsonSink};
use clique_forge::{
    brute_force_cliques, peak_rss_bytes, Algorithm, Clique, EdgeStream, Error, OrderPolicy,
};

#[derive(Parser)]
#[command(name = "clique-forge", version, about = "Clique enumeration over graph filtrations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Enumerate cliques of one input with one algorithm.
    Enumerate(EnumerateArgs),
    /// Run every enumerator plus the brute-force oracle and compare.
    Verify(VerifyArgs),
    /// Execute a benchmark plan, one child process per run.
    Bench(bench::BenchArgs),
}

#[derive(Args)]
#[command(group = ArgGroup::new("source").required(true))]
struct EnumerateArgs {
    /// CSV edge list (2 columns, or 3 with weights; header optional).
    #[arg(long, group = "source")]
    input: Option<PathBuf>,
    /// Synthetic complete graph on N nodes with seeded random weights.
    #[arg(long, group = "source")]
    complete_n: Option<u32>,
    /// ASCII PCD point cloud; edges connect points within 2*epsilon.
    #[arg(long, group = "source", requires = "epsilon")]
    pcd: Option<PathBuf>,
    /// Scale parameter for --pcd.
    #[arg(long)]
    epsilon: Option<f64>,
    /// boundary | boundary-fixed | multilayer | multilayer-fixed |
    /// triangles | edge-iter | k3 | forward
    #[arg(long, value_parser = parse_algo)]
    algo: Algorithm,
    /// Largest clique dimension to report (dim = nodes - 1).
    #[arg(long)]
    dmax: usize,
    /// weight | lex | asgiven; defaults to the algorithm's preferred order.
    #[arg(long, value_parser = crate::parse_order)]
    order: Option<OrderPolicy>,
    /// Write cliques as NDJSON here instead of stdout.
    #[arg(long, conflicts_with = "count_only")]
    out: Option<PathBuf>,
    /// Print per-dimension counts only.
    #[arg(long)]
    count_only: bool,
    /// Weight seed for --complete-n.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print a machine-readable run summary (used by `bench` children).
    #[arg(long, hide = true)]
    summary_json: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// CSV edge list, small enough for the brute-force oracle.
    #[arg(long)]
    input: PathBuf,
    #[arg(long)]
    dmax: usize,
}

fn parse_algo(s: &str) -> Result<Algorithm, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

pub(crate) fn parse_order(s: &str) -> Result<OrderPolicy, String> {
    match s {
        "weight" => Ok(OrderPolicy::ByWeightThenLex),
        "lex" => Ok(OrderPolicy::Lexicographic),
        "asgiven" => Ok(OrderPolicy::AsGiven),
        other => Err(format!("unknown order {other:?}; expected weight, lex or asgiven")),
    }
}

fn load_source(args: &EnumerateArgs) -> Result<EdgeStream, Error> {
    if let Some(path) = &args.input {
        input::load_edge_csv(path)
    } else if let Some(n) = args.complete_n {
        Ok(input::synth_complete(n, args.seed))
    } else {
        let path = args.pcd.as_ref().expect("clap guarantees one source");
        input::load_pcd(path, args.epsilon.expect("clap ties epsilon to --pcd"))
    }
}

fn run_enumerate(args: &EnumerateArgs) -> Result<i32, Error> {
    let stream = load_source(args)?;
    let policy = args.order.unwrap_or_else(|| args.algo.default_order());
    let ordered = stream.reorder(policy);

    if args.summary_json || args.count_only {
        let start = Instant::now();
        let mut sink = CountingSink::default();
        let summary = args.algo.run(&ordered, args.dmax, &mut sink)?;
        let wall = start.elapsed().as_secs_f64();
        let stdout = std::io::stdout();
        let mut out = stdout.lock();
        if args.summary_json {
            let child = bench::ChildSummary {
                wall_time_s: wall,
                peak_rss_bytes: peak_rss_bytes(),
                state_entries_peak: summary.state_entries_peak,
                count_total: summary.distinct_total(),
                per_dim: summary.per_dim.clone(),
            };
            serde_json::to_writer(&mut out, &child).map_err(std::io::Error::from)?;
            writeln!(out)?;
        } else {
            let cells: Vec<String> = (1..=args.dmax)
                .map(|d| format!("dim{d}={}", summary.count(d)))
                .collect();
            writeln!(out, "{}", cells.join(" "))?;
        }
        return Ok(0);
    }

    match &args.out {
        Some(path) => {
            let file = BufWriter::new(std::fs::File::create(path)?);
            let mut sink = NdjsonSink::new(file);
            args.algo.run(&ordered, args.dmax, &mut sink)?;
            sink.finish()?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut sink = NdjsonSink::new(BufWriter::new(stdout.lock()));
            args.algo.run(&ordered, args.dmax, &mut sink)?;
            sink.finish()?;
        }
    }
    Ok(0)
}

fn run_verify(args: &VerifyArgs) -> Result<i32, Error> {
    let stream = input::load_edge_csv(&args.input)?;
    let mut oracle = brute_force_cliques(&stream, args.dmax)?;
    oracle.sort();
    let triangles: Vec<Clique> = oracle.iter().filter(|c| c.dim() == 2).cloned().collect();

    let mut ok = true;
    for algo in Algorithm::ALL {
        let (d_max, expect): (usize, &[Clique]) = match algo {
            Algorithm::Boundary | Algorithm::Multilayer => (args.dmax, &oracle),
            // The unrolled variants only exist for depths 3-5.
            Algorithm::BoundaryFixed | Algorithm::MultilayerFixed => {
                if !(3..=5).contains(&args.dmax) {
                    continue;
                }
                (args.dmax, &oracle)
            }
            Algorithm::Triangles => {
                if args.dmax < 2 {
                    continue;
                }
                (2, &oracle)
            }
            Algorithm::EdgeIter | Algorithm::K3 | Algorithm::Forward => {
                if args.dmax < 2 {
                    continue;
                }
                (2, &triangles)
            }
        };
        let expect: Vec<Clique> = if d_max == 2 && !matches!(algo, Algorithm::Triangles) {
            expect.to_vec()
        } else {
            expect.iter().filter(|c| c.dim() <= d_max).cloned().collect()
        };

        let ordered = stream.clone().reorder(algo.default_order());
        let mut sink = CollectingSink::default();
        algo.run(&ordered, d_max, &mut sink)?;
        let mut got = sink.cliques_only();
        got.sort();
        if matches!(algo, Algorithm::EdgeIter) {
            got.dedup();
        }
        if got == expect {
            println!("{algo}: ok ({} cliques)", got.len());
        } else {
            ok = false;
            let missing = expect.iter().find(|c| !got.contains(c));
            let spurious = got.iter().find(|c| !expect.contains(c));
            println!("{algo}: MISMATCH ({} vs {} cliques)", got.len(), expect.len());
            if let Some(c) = missing {
                println!("  first missing clique: {c}");
            }
            if let Some(c) = spurious {
                println!("  first spurious clique: {c}");
            }
        }
    }
    Ok(if ok { 0 } else { 1 })
}

fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_)
        | Error::MalformedInput { .. }
        | Error::UnsupportedFormat(_)
        | Error::SelfLoop(_)
        | Error::DuplicateEdge(..)
        | Error::OracleTooLarge { .. } => 3,
        _ => 4,
    }
}

fn main() {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Enumerate(args) => run_enumerate(args),
        Command::Verify(args) => run_verify(args),
        Command::Bench(args) => bench::run(args),
    };
    match outcome {
        Ok(code) => exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            exit(error_exit_code(&e));
        }
    }
}
