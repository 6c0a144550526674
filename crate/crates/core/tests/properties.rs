//! Randomized invariants: every enumerator agrees with the brute-force
//! oracle, emissions are exactly-once, orderings preserve the edge multiset,
//! and the Vietoris–Rips scan respects its distance cutoff and nests in
//! epsilon.

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use clique_forge::filtration::{build_vr_edges, parse_weighted_csv, PointCloud};
use clique_forge::oracle::{brute_force_cliques_capped, per_dim_census};
use clique_forge::sink::CollectingSink;
use clique_forge::{Algorithm, Clique, EdgeStream, FilteredEdge, NodeId, OrderPolicy};

/// Erdős–Rényi graph with random weights; deterministic in `seed`.
fn er_stream(n: u32, p: f64, seed: u64) -> EdgeStream {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random::<f64>() < p {
                let w = rng.random::<f64>();
                edges.push(FilteredEdge::new(NodeId(u), NodeId(v), w).unwrap());
            }
        }
    }
    EdgeStream::as_given(edges)
}

fn run_collect(algo: Algorithm, stream: &EdgeStream, d_max: usize) -> Vec<Clique> {
    let ordered = stream.clone().reorder(algo.default_order());
    let mut sink = CollectingSink::default();
    algo.run(&ordered, d_max, &mut sink).unwrap();
    sink.cliques_only()
}

fn sorted(mut cliques: Vec<Clique>) -> Vec<Clique> {
    cliques.sort();
    cliques
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn family_enumerators_match_oracle(
        n in 4u32..=16,
        p in 0.1f64..0.9,
        d_max in 2usize..=5,
        seed in any::<u64>(),
    ) {
        let stream = er_stream(n, p, seed);
        let oracle = sorted(brute_force_cliques_capped(&stream, d_max, 64).unwrap());
        for algo in [
            Algorithm::Boundary,
            Algorithm::BoundaryFixed,
            Algorithm::Multilayer,
            Algorithm::MultilayerFixed,
        ] {
            if matches!(algo, Algorithm::BoundaryFixed | Algorithm::MultilayerFixed)
                && !(3..=5).contains(&d_max)
            {
                continue;
            }
            let got = run_collect(algo, &stream, d_max);
            // Exactly-once: sorting must not collapse anything.
            let s = sorted(got.clone());
            prop_assert_eq!(s.len(), got.len(), "{} duplicated a clique", algo);
            prop_assert_eq!(&s, &oracle, "{} disagrees with the oracle", algo);
        }
    }

    #[test]
    fn triangle_baselines_match_oracle(
        n in 4u32..=20,
        p in 0.1f64..0.9,
        seed in any::<u64>(),
    ) {
        let stream = er_stream(n, p, seed);
        let oracle = brute_force_cliques_capped(&stream, 2, 64).unwrap();
        let oracle_triangles: Vec<Clique> =
            oracle.iter().filter(|c| c.dim() == 2).cloned().collect();

        for algo in [Algorithm::K3, Algorithm::Forward] {
            let got: Vec<Clique> = sorted(run_collect(algo, &stream, 2));
            prop_assert_eq!(&got, &oracle_triangles, "{} triangle mismatch", algo);
        }
        // The streaming triangle enumerator also reports edges.
        let tri = sorted(run_collect(Algorithm::Triangles, &stream, 2));
        prop_assert_eq!(&tri, &oracle);

        // The edge iterator revisits each triangle from all three edges.
        let ordered = stream.clone().reorder(OrderPolicy::ByWeightThenLex);
        let mut sink = CollectingSink::default();
        let summary = Algorithm::EdgeIter.run(&ordered, 2, &mut sink).unwrap();
        prop_assert_eq!(summary.raw_emissions, 3 * oracle_triangles.len() as u64);
        prop_assert_eq!(summary.count(2), oracle_triangles.len() as u64);
    }

    #[test]
    fn boundary_counts_are_order_independent(
        n in 4u32..=14,
        p in 0.15f64..0.8,
        seed in any::<u64>(),
    ) {
        let stream = er_stream(n, p, seed);
        let mut censuses = Vec::new();
        for policy in [OrderPolicy::ByWeightThenLex, OrderPolicy::Lexicographic, OrderPolicy::AsGiven] {
            let ordered = stream.clone().reorder(policy);
            let mut sink = CollectingSink::default();
            Algorithm::Boundary.run(&ordered, 4, &mut sink).unwrap();
            let cliques = sink.cliques_only();
            let s = sorted(cliques.clone());
            prop_assert_eq!(s.len(), cliques.len());
            censuses.push(s);
        }
        prop_assert_eq!(&censuses[0], &censuses[1]);
        prop_assert_eq!(&censuses[1], &censuses[2]);
    }

    #[test]
    fn reorder_preserves_edge_multiset(
        n in 2u32..=20,
        p in 0.1f64..0.9,
        seed in any::<u64>(),
    ) {
        let stream = er_stream(n, p, seed);
        let key = |e: &FilteredEdge| (e.u, e.v, e.weight.to_bits());
        let mut original: Vec<_> = stream.edges().iter().map(key).collect();
        original.sort();
        for policy in [OrderPolicy::ByWeightThenLex, OrderPolicy::Lexicographic] {
            let reordered = stream.clone().reorder(policy);
            let mut got: Vec<_> = reordered.edges().iter().map(key).collect();
            got.sort();
            prop_assert_eq!(&got, &original);
        }
        // Weight order really is non-decreasing.
        let by_weight = stream.clone().reorder(OrderPolicy::ByWeightThenLex);
        for pair in by_weight.edges().windows(2) {
            prop_assert!(pair[0].weight <= pair[1].weight);
        }
    }

    #[test]
    fn vr_scan_cutoff_and_nesting(
        n in 2usize..=30,
        dim in 2usize..=3,
        eps_small in 0.01f64..0.3,
        eps_extra in 0.0f64..0.5,
        seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let points: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..dim).map(|_| rng.random::<f64>()).collect())
            .collect();
        let cloud = PointCloud::new(points.clone()).unwrap();
        let dist = |i: usize, j: usize| -> f64 {
            points[i]
                .iter()
                .zip(&points[j])
                .map(|(a, b)| (a - b) * (a - b))
                .sum::<f64>()
                .sqrt()
        };

        let small = build_vr_edges(&cloud, eps_small).unwrap();
        let large = build_vr_edges(&cloud, eps_small + eps_extra).unwrap();

        // Every reported edge satisfies the cutoff and carries the distance
        // as its weight; every pair within the cutoff is reported.
        let mut reported = 0usize;
        for e in small.edges() {
            let d = dist(e.u.0 as usize, e.v.0 as usize);
            prop_assert!(d <= 2.0 * eps_small);
            prop_assert!((e.weight - d).abs() <= 1e-12);
            reported += 1;
        }
        let mut expected = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if dist(i, j) <= 2.0 * eps_small {
                    expected += 1;
                }
            }
        }
        prop_assert_eq!(reported, expected);

        // Growing epsilon only adds edges.
        let small_pairs: Vec<(NodeId, NodeId)> = small.edges().iter().map(|e| (e.u, e.v)).collect();
        let large_pairs: Vec<(NodeId, NodeId)> = large.edges().iter().map(|e| (e.u, e.v)).collect();
        for p in &small_pairs {
            prop_assert!(large_pairs.contains(p));
        }
    }

    #[test]
    fn clique_canonical_form(mut raw in proptest::collection::vec(0u32..1000, 1..12)) {
        raw.sort_unstable();
        raw.dedup();
        let mut shuffled = raw.clone();
        shuffled.reverse();
        let c = Clique::canonicalize(shuffled.into_iter().map(NodeId).collect()).unwrap();
        let expect: Vec<NodeId> = raw.iter().copied().map(NodeId).collect();
        prop_assert_eq!(c.nodes(), expect.as_slice());
        prop_assert_eq!(c.dim() + 1, raw.len());
    }

    #[test]
    fn weighted_csv_round_trip(n in 2u32..=15, p in 0.2f64..0.9, seed in any::<u64>()) {
        let stream = er_stream(n, p, seed).reorder(OrderPolicy::ByWeightThenLex);
        let mut buf = Vec::new();
        stream.write_csv(&mut buf).unwrap();
        let back = parse_weighted_csv(&buf[..]).unwrap();
        prop_assert_eq!(back.len(), stream.len());
        for (a, b) in back.edges().iter().zip(stream.edges()) {
            prop_assert_eq!(a.u, b.u);
            prop_assert_eq!(a.v, b.v);
            prop_assert_eq!(a.weight.to_bits(), b.weight.to_bits());
        }
    }
}

/// The multilayer family requires lexicographic edge order; its exactly-once
/// argument leans on the extension node never accumulating its own layer
/// entries. This documents that the requirement is real: on filtration
/// (weight) order the enumerator goes wrong on some graphs — both missed
/// cliques and duplicates occur — while the same graphs are exact under
/// lexicographic order. Seed 6 below is a concrete witness.
#[test]
fn multilayer_requires_lexicographic_order() {
    let mut weight_order_failures = 0usize;
    for seed in 0..60u64 {
        let n = 5 + (seed % 12) as u32;
        let p = 0.3 + 0.05 * (seed % 9) as f64;
        let stream = er_stream(n, p, seed ^ 0x5eed);
        let oracle = sorted(brute_force_cliques_capped(&stream, 4, 64).unwrap());

        let lex = stream.clone().reorder(OrderPolicy::Lexicographic);
        let mut sink = CollectingSink::default();
        Algorithm::Multilayer.run(&lex, 4, &mut sink).unwrap();
        assert_eq!(sorted(sink.cliques_only()), oracle, "lex order wrong at seed {seed}");

        let by_weight = stream.reorder(OrderPolicy::ByWeightThenLex);
        let mut sink = CollectingSink::default();
        Algorithm::Multilayer.run(&by_weight, 4, &mut sink).unwrap();
        if sorted(sink.cliques_only()) != oracle {
            weight_order_failures += 1;
        }
    }
    assert!(
        weight_order_failures > 0,
        "expected weight-ordered multilayer runs to diverge from the oracle somewhere"
    );
}

/// Per-dimension counts of the census helper sum to the clique list length.
#[test]
fn census_totals() {
    let stream = er_stream(12, 0.5, 99);
    let cliques = brute_force_cliques_capped(&stream, 3, 64).unwrap();
    let census: BTreeMap<usize, u64> = per_dim_census(&cliques);
    assert_eq!(census.values().sum::<u64>(), cliques.len() as u64);
}
