//! Randomized cross-module properties. Each greedy stage is replayed against
//! a direct reference implementation, and end-to-end runs must survive the
//! structural verifier and the document round trip.

use proptest::prelude::*;

use exemplar_clustering::{
    build_neighborhoods, greedy_budgeted_max_coverage, greedy_set_cover, parse_solution, partition,
    render_solution, run_scce, run_sccrb, summarize, verify_solution, Dataset, DistanceMatrix,
    Epsilon, MetricKind, SetSystem, SolutionDocument,
};

fn dataset_strategy(max_n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    (1usize..=3).prop_flat_map(move |dim| {
        proptest::collection::vec(proptest::collection::vec(-50.0f64..50.0, dim), 1..=max_n)
    })
}

fn euclidean(rows: &[Vec<f64>]) -> DistanceMatrix {
    let ds = Dataset::from_vectors(rows).unwrap();
    DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap()
}

/// Straightforward greedy over a set family: repeatedly take the set with
/// the largest number of uncovered elements, lowest index on ties, stopping
/// at the budget or when no set adds anything.
fn greedy_reference(sets: &[Vec<usize>], universe: usize, budget: Option<usize>) -> Vec<usize> {
    let mut covered = vec![false; universe];
    let mut chosen: Vec<usize> = Vec::new();
    let limit = budget.unwrap_or(usize::MAX);
    while chosen.len() < limit {
        let mut best: Option<(usize, usize)> = None;
        for (s, set) in sets.iter().enumerate() {
            if chosen.contains(&s) {
                continue;
            }
            let gain = set.iter().filter(|&&e| !covered[e]).count();
            if best.is_none_or(|(bg, _)| gain > bg) {
                best = Some((gain, s));
            }
        }
        match best {
            Some((gain, s)) if gain > 0 => {
                chosen.push(s);
                for &e in &sets[s] {
                    covered[e] = true;
                }
            }
            _ => break,
        }
    }
    chosen
}

proptest! {
    #[test]
    fn neighborhoods_are_reflexive_symmetric_and_sorted(
        rows in dataset_strategy(24),
        radius in 0.1f64..60.0,
    ) {
        let dm = euclidean(&rows);
        let neigh = build_neighborhoods(&dm, Epsilon::new(radius).unwrap());
        for i in 0..dm.n() {
            prop_assert!(neigh.set(i).contains(&i));
            prop_assert!(neigh.set(i).windows(2).all(|w| w[0] < w[1]));
            for &j in neigh.set(i) {
                prop_assert!(neigh.set(j).contains(&i));
            }
        }
    }

    #[test]
    fn smaller_radius_gives_nested_neighborhoods(
        rows in dataset_strategy(24),
        radius in 0.1f64..40.0,
        growth in 1.0f64..4.0,
    ) {
        let dm = euclidean(&rows);
        let tight = build_neighborhoods(&dm, Epsilon::new(radius).unwrap());
        let loose = build_neighborhoods(&dm, Epsilon::new(radius * growth).unwrap());
        for i in 0..dm.n() {
            for &j in tight.set(i) {
                prop_assert!(loose.set(i).contains(&j));
            }
        }
    }

    #[test]
    fn farthest_point_partition_replays_exactly(
        rows in dataset_strategy(20),
        k_raw in 0usize..100,
        seed_raw in 0usize..100,
    ) {
        let dm = euclidean(&rows);
        let n = dm.n();
        let k = 1 + k_raw % n;
        let seed_index = seed_raw % n;
        let blocks = partition(&dm, k, seed_index).unwrap();

        prop_assert_eq!(blocks.heads.len(), k);
        prop_assert_eq!(blocks.assignment.len(), n);
        prop_assert_eq!(blocks.heads[0], seed_index);

        // Head replay: each next head is the instance farthest from the
        // heads chosen so far, lowest id on ties, never an existing head.
        let mut is_head = vec![false; n];
        is_head[seed_index] = true;
        let mut nearest: Vec<f64> = (0..n).map(|i| dm.get(i, seed_index)).collect();
        for t in 1..k {
            let mut farthest: Option<usize> = None;
            for i in 0..n {
                if is_head[i] {
                    continue;
                }
                if farthest.is_none_or(|f| nearest[i] > nearest[f]) {
                    farthest = Some(i);
                }
            }
            let expected = farthest.unwrap();
            prop_assert_eq!(blocks.heads[t], expected);
            is_head[expected] = true;
            for (i, slot) in nearest.iter_mut().enumerate() {
                let d = dm.get(i, expected);
                if d < *slot {
                    *slot = d;
                }
            }
        }

        // Assignment replay: own block for heads, otherwise the earliest
        // selected head at minimum distance.
        for i in 0..n {
            let expected = match blocks.heads.iter().position(|&h| h == i) {
                Some(own) => own,
                None => {
                    let mut best = 0usize;
                    for (t, &h) in blocks.heads.iter().enumerate().skip(1) {
                        if dm.get(i, h) < dm.get(i, blocks.heads[best]) {
                            best = t;
                        }
                    }
                    best
                }
            };
            prop_assert_eq!(blocks.assignment[i], expected);
        }

        // Every block owns at least its head.
        let mut seen = vec![false; k];
        for &b in &blocks.assignment {
            seen[b] = true;
        }
        prop_assert!(seen.into_iter().all(|s| s));

        let again = partition(&dm, k, seed_index).unwrap();
        prop_assert_eq!(blocks, again);
    }

    #[test]
    fn set_cover_matches_the_reference_greedy(
        rows in dataset_strategy(20),
        radius in 0.1f64..40.0,
    ) {
        let dm = euclidean(&rows);
        let neigh = build_neighborhoods(&dm, Epsilon::new(radius).unwrap());
        let system = SetSystem::from_neighborhoods(&neigh);
        let result = greedy_set_cover(&system).unwrap();

        let expected = greedy_reference(system.sets(), system.universe_size(), None);
        prop_assert_eq!(&result.chosen, &expected);
        prop_assert!(result.uncovered.is_empty());
        prop_assert_eq!(result.covered.len(), dm.n());
    }

    #[test]
    fn budgeted_coverage_matches_the_reference_greedy(
        universe in 1usize..24,
        raw_sets in proptest::collection::vec(
            proptest::collection::vec(0usize..24, 0..10),
            1..12,
        ),
        budget_raw in 0usize..100,
    ) {
        let sets: Vec<Vec<usize>> = raw_sets
            .into_iter()
            .map(|set| set.into_iter().filter(|&e| e < universe).collect())
            .collect();
        let budget = 1 + budget_raw % sets.len();
        let system = SetSystem::new(universe, sets).unwrap();
        let result = greedy_budgeted_max_coverage(&system, budget).unwrap();

        let expected = greedy_reference(system.sets(), universe, Some(budget));
        prop_assert_eq!(&result.chosen, &expected);
        prop_assert!(result.chosen.len() <= budget);

        let mut covered = vec![false; universe];
        for &s in &result.chosen {
            for &e in &system.sets()[s] {
                covered[e] = true;
            }
        }
        let expected_covered: Vec<usize> =
            (0..universe).filter(|&e| covered[e]).collect();
        prop_assert_eq!(&result.covered, &expected_covered);
        let expected_uncovered: Vec<usize> =
            (0..universe).filter(|&e| !covered[e]).collect();
        prop_assert_eq!(&result.uncovered, &expected_uncovered);
    }

    #[test]
    fn full_runs_pass_structural_verification(
        rows in dataset_strategy(24),
        radius in 0.1f64..60.0,
        k_raw in 0usize..100,
        seed_raw in 0usize..100,
    ) {
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let n = dm.n();
        let k = 1 + k_raw % n;
        let epsilon = Epsilon::new(radius).unwrap();
        let (sol, _) = run_scce(&ds, &dm, k, epsilon, seed_raw % n).unwrap();

        let report = verify_solution(&dm, &sol);
        prop_assert!(report.all_passed(), "violations: {:?}", report.checks);
        prop_assert!(sol.uncovered.is_empty());
        prop_assert_eq!(sol.covered_count(), n);

        // Deterministic end to end.
        let (again, _) = run_scce(&ds, &dm, k, epsilon, seed_raw % n).unwrap();
        prop_assert_eq!(sol, again);
    }

    #[test]
    fn unbudgeted_and_full_budget_runs_agree(
        rows in dataset_strategy(20),
        radius in 0.1f64..60.0,
        k_raw in 0usize..100,
    ) {
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let n = dm.n();
        let k = 1 + k_raw % n;
        let epsilon = Epsilon::new(radius).unwrap();

        let (unbudgeted, _) = run_scce(&ds, &dm, k, epsilon, 0).unwrap();
        let (full_budget, _) = run_sccrb(&ds, &dm, k, epsilon, n, 0).unwrap();

        prop_assert_eq!(&unbudgeted.exemplars, &full_budget.exemplars);
        prop_assert_eq!(&unbudgeted.clusters, &full_budget.clusters);
        prop_assert_eq!(&unbudgeted.covered_by, &full_budget.covered_by);
        prop_assert!(full_budget.uncovered.is_empty());
    }

    #[test]
    fn budgeted_runs_respect_the_budget_and_verify(
        rows in dataset_strategy(20),
        radius in 0.1f64..30.0,
        k_raw in 0usize..100,
        budget_raw in 0usize..100,
    ) {
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let n = dm.n();
        let k = 1 + k_raw % n;
        let budget = 1 + budget_raw % n;
        let epsilon = Epsilon::new(radius).unwrap();
        let (sol, _) = run_sccrb(&ds, &dm, k, epsilon, budget, 0).unwrap();

        prop_assert!(sol.total_exemplars() <= budget);
        let report = verify_solution(&dm, &sol);
        prop_assert!(report.all_passed(), "violations: {:?}", report.checks);
    }

    #[test]
    fn summaries_are_consistent_with_the_solution(
        rows in dataset_strategy(20),
        radius in 0.1f64..30.0,
        budget_raw in 0usize..100,
    ) {
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let n = dm.n();
        let budget = 1 + budget_raw % n;
        let epsilon = Epsilon::new(radius).unwrap();
        let (sol, timings) = run_sccrb(&ds, &dm, 1 + n / 3, epsilon, budget, 0).unwrap();
        let report = summarize(&dm, &sol, None, Some(timings)).unwrap();

        let sizes: usize = report.per_cluster.iter().map(|c| c.size).sum();
        prop_assert_eq!(sizes, sol.covered_count());
        let per_cluster_max = report
            .per_cluster
            .iter()
            .fold(0.0f64, |acc, c| acc.max(c.diameter));
        prop_assert_eq!(report.global.max_diameter, per_cluster_max);
        prop_assert_eq!(report.global.total_exemplars, sol.total_exemplars());
        prop_assert_eq!(report.global.uncovered_count, sol.uncovered.len());
        prop_assert!((report.global.covered_fraction
            - sol.covered_count() as f64 / n as f64)
            .abs()
            == 0.0);
    }

    #[test]
    fn documents_round_trip_on_random_instances(
        rows in dataset_strategy(16),
        radius in 0.1f64..30.0,
        budgeted in proptest::bool::ANY,
    ) {
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let n = dm.n();
        let epsilon = Epsilon::new(radius).unwrap();
        let (sol, timings) = if budgeted {
            run_sccrb(&ds, &dm, 1, epsilon, n.div_ceil(2), 0).unwrap()
        } else {
            run_scce(&ds, &dm, 1, epsilon, 0).unwrap()
        };
        let report = summarize(&dm, &sol, None, Some(timings)).unwrap();
        let doc = SolutionDocument::new(&sol, report);

        let text = render_solution(&doc).unwrap();
        let reread = parse_solution(&text).unwrap();
        prop_assert_eq!(&reread, &doc);
        prop_assert_eq!(reread.to_solution().unwrap(), sol);
    }
}
