//! End-to-end clustering: farthest-point blocks, exemplar selection by
//! (budgeted) greedy set cover over epsilon-neighborhoods, then cluster
//! assembly around the exemplars.
//!
//! Cluster j inherits block j's id. Exemplars never leave their block's
//! cluster; each covered non-exemplar joins the cluster of its nearest
//! covering exemplar (lowest exemplar id on distance ties). A budgeted run
//! may leave instances uncovered; they are reported, not assigned.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::coverage::{greedy_budgeted_max_coverage, greedy_set_cover, SetSystem};
use crate::dataset::Dataset;
use crate::distance::{DistanceMatrix, MetricKind};
use crate::error::{Error, Result};
use crate::gonzalez::{partition, BlockPartition};
use crate::neighborhood::{build_neighborhoods, Epsilon};

/// Parameters a solution was produced with, serialized alongside it.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolutionParams {
    pub k: usize,
    pub epsilon: Epsilon,
    /// Exemplar budget; `None` for an uncapped run.
    pub beta: Option<usize>,
    pub metric: MetricKind,
    pub seed_index: usize,
}

/// Clusters plus the exemplar structure that produced them.
#[derive(Debug, Clone, PartialEq)]
pub struct ClusteringSolution {
    pub params: SolutionParams,
    pub blocks: BlockPartition,
    /// Ascending member ids per cluster; index j pairs with block j. A block
    /// that received no exemplar keeps its id as an empty cluster.
    pub clusters: Vec<Vec<usize>>,
    /// Ascending exemplar ids per cluster, pairwise disjoint.
    pub exemplars: Vec<Vec<usize>>,
    /// `covered_by[i] = Some(e)`: exemplar `e` covers instance `i` within
    /// epsilon (`e == i` for exemplars). `None` exactly for uncovered ids.
    pub covered_by: Vec<Option<usize>>,
    /// Instances no chosen neighborhood reaches, ascending. Empty for
    /// uncapped runs.
    pub uncovered: Vec<usize>,
}

impl ClusteringSolution {
    pub fn n(&self) -> usize {
        self.covered_by.len()
    }

    pub fn total_exemplars(&self) -> usize {
        self.exemplars.iter().map(Vec::len).sum()
    }

    pub fn covered_count(&self) -> usize {
        self.n() - self.uncovered.len()
    }
}

/// Wall-clock milliseconds per stage. Reported beside the solution so the
/// solution itself stays bit-identical across runs.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StepTimings {
    pub block_partition_ms: f64,
    pub neighborhoods_ms: f64,
    pub exemplar_selection_ms: f64,
    pub assignment_ms: f64,
    pub total_ms: f64,
}

/// Clusters every instance: exemplars are chosen until the whole dataset is
/// covered, so `uncovered` comes back empty.
pub fn run_scce(
    dataset: &Dataset,
    dm: &DistanceMatrix,
    k: usize,
    epsilon: Epsilon,
    seed_index: usize,
) -> Result<(ClusteringSolution, StepTimings)> {
    run(dataset, dm, k, epsilon, None, seed_index)
}

/// Same pipeline with at most `beta` exemplars; instances outside every
/// chosen neighborhood are reported uncovered.
pub fn run_sccrb(
    dataset: &Dataset,
    dm: &DistanceMatrix,
    k: usize,
    epsilon: Epsilon,
    beta: usize,
    seed_index: usize,
) -> Result<(ClusteringSolution, StepTimings)> {
    run(dataset, dm, k, epsilon, Some(beta), seed_index)
}

fn run(
    dataset: &Dataset,
    dm: &DistanceMatrix,
    k: usize,
    epsilon: Epsilon,
    beta: Option<usize>,
    seed_index: usize,
) -> Result<(ClusteringSolution, StepTimings)> {
    if dataset.len() != dm.n() {
        return Err(Error::SizeMismatch {
            dataset: dataset.len(),
            matrix: dm.n(),
        });
    }
    let n = dm.n();
    let started = Instant::now();

    let blocks = partition(dm, k, seed_index)?;
    let block_partition_ms = ms(started);

    let after_blocks = Instant::now();
    let neighborhoods = build_neighborhoods(dm, epsilon);
    let neighborhoods_ms = ms(after_blocks);

    let after_neigh = Instant::now();
    let system = SetSystem::from_neighborhoods(&neighborhoods);
    let cover = match beta {
        None => greedy_set_cover(&system)?,
        Some(beta) => greedy_budgeted_max_coverage(&system, beta)?,
    };
    let exemplar_selection_ms = ms(after_neigh);

    let after_cover = Instant::now();
    let mut is_exemplar = vec![false; n];
    for &e in &cover.chosen {
        is_exemplar[e] = true;
    }

    let mut exemplars = vec![Vec::new(); k];
    for &e in &cover.chosen {
        exemplars[blocks.assignment[e]].push(e);
    }
    for list in &mut exemplars {
        list.sort_unstable();
    }

    let mut covered_by: Vec<Option<usize>> = vec![None; n];
    for i in 0..n {
        if is_exemplar[i] {
            covered_by[i] = Some(i);
            continue;
        }
        // Neighborhood membership is symmetric, so the exemplars covering i
        // are exactly the exemplars inside S_i. Ascending scan plus strict
        // improvement keeps the lowest id among equally near exemplars.
        let mut best: Option<(f64, usize)> = None;
        for &e in neighborhoods.set(i) {
            if is_exemplar[e] {
                let d = dm.get(i, e);
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, e));
                }
            }
        }
        covered_by[i] = best.map(|(_, e)| e);
    }

    let mut clusters = vec![Vec::new(); k];
    for (i, entry) in covered_by.iter().enumerate() {
        if let Some(e) = *entry {
            clusters[blocks.assignment[e]].push(i);
        }
    }
    let uncovered: Vec<usize> = (0..n).filter(|&i| covered_by[i].is_none()).collect();
    debug_assert_eq!(uncovered, cover.uncovered);
    let assignment_ms = ms(after_cover);

    let solution = ClusteringSolution {
        params: SolutionParams {
            k,
            epsilon,
            beta,
            metric: dm.metric(),
            seed_index,
        },
        blocks,
        clusters,
        exemplars,
        covered_by,
        uncovered,
    };
    let timings = StepTimings {
        block_partition_ms,
        neighborhoods_ms,
        exemplar_selection_ms,
        assignment_ms,
        total_ms: ms(started),
    };
    Ok((solution, timings))
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

/// One named structural check and any violations found.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub violations: Vec<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Per-invariant pass/fail breakdown from [`verify_solution`].
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub checks: Vec<CheckOutcome>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn violation_count(&self) -> usize {
        self.checks.iter().map(|c| c.violations.len()).sum()
    }
}

/// Re-checks a finished solution from scratch against its distance matrix:
/// covered instances partition into the clusters, exemplar sets are disjoint
/// and stay in their block's cluster, every covered instance has a
/// same-cluster exemplar within epsilon, and the budget is respected.
pub fn verify_solution(dm: &DistanceMatrix, sol: &ClusteringSolution) -> VerificationReport {
    let n = dm.n();
    let k = sol.params.k;

    let mut shape = Vec::new();
    if sol.covered_by.len() != n {
        shape.push(format!(
            "covered_by has {} entries for {} instances",
            sol.covered_by.len(),
            n
        ));
    }
    if sol.blocks.assignment.len() != n {
        shape.push(format!(
            "block assignment has {} entries for {} instances",
            sol.blocks.assignment.len(),
            n
        ));
    }
    if sol.blocks.k != k || sol.blocks.heads.len() != k {
        shape.push(format!(
            "block partition has k = {} with {} heads, params say {}",
            sol.blocks.k,
            sol.blocks.heads.len(),
            k
        ));
    }
    if sol.clusters.len() != k {
        shape.push(format!("{} clusters for k = {}", sol.clusters.len(), k));
    }
    if sol.exemplars.len() != k {
        shape.push(format!(
            "{} exemplar lists for k = {}",
            sol.exemplars.len(),
            k
        ));
    }
    let in_range = |lists: &[Vec<usize>]| lists.iter().flatten().all(|&i| i < n);
    if !in_range(&sol.clusters)
        || !in_range(&sol.exemplars)
        || !sol.uncovered.iter().all(|&i| i < n)
        || !sol.covered_by.iter().flatten().all(|&e| e < n)
        || !sol.blocks.heads.iter().all(|&h| h < n)
        || !sol.blocks.assignment.iter().all(|&b| b < k)
    {
        shape.push("an id is out of range".to_string());
    }
    if !shape.is_empty() {
        // The remaining checks index by id and block, so they cannot run.
        return VerificationReport {
            checks: vec![CheckOutcome {
                name: "shape",
                violations: shape,
            }],
        };
    }
    let mut checks = vec![CheckOutcome {
        name: "shape",
        violations: shape,
    }];

    let mut partition_violations = Vec::new();
    let mut membership: Vec<Option<usize>> = vec![None; n];
    for (c, members) in sol.clusters.iter().enumerate() {
        if !members.windows(2).all(|w| w[0] < w[1]) {
            partition_violations.push(format!("cluster {c} members are not strictly ascending"));
        }
        for &i in members {
            if let Some(previous) = membership[i] {
                partition_violations.push(format!(
                    "instance {i} is in cluster {previous} and cluster {c}"
                ));
            } else {
                membership[i] = Some(c);
            }
        }
    }
    for (i, (&cov, &member)) in sol.covered_by.iter().zip(&membership).enumerate() {
        match (cov, member) {
            (Some(_), None) => {
                partition_violations.push(format!("covered instance {i} is in no cluster"));
            }
            (None, Some(c)) => {
                partition_violations.push(format!("uncovered instance {i} is in cluster {c}"));
            }
            _ => {}
        }
    }
    if !sol.uncovered.windows(2).all(|w| w[0] < w[1]) {
        partition_violations.push("uncovered list is not strictly ascending".to_string());
    }
    let expected_uncovered: Vec<usize> = (0..n).filter(|&i| sol.covered_by[i].is_none()).collect();
    if sol.uncovered != expected_uncovered {
        partition_violations.push("uncovered list disagrees with covered_by".to_string());
    }
    checks.push(CheckOutcome {
        name: "partition",
        violations: partition_violations,
    });

    let mut disjoint_violations = Vec::new();
    let mut exemplar_home: Vec<Option<usize>> = vec![None; n];
    for (c, list) in sol.exemplars.iter().enumerate() {
        if !list.windows(2).all(|w| w[0] < w[1]) {
            disjoint_violations.push(format!("cluster {c} exemplars are not strictly ascending"));
        }
        for &e in list {
            if let Some(previous) = exemplar_home[e] {
                disjoint_violations.push(format!(
                    "exemplar {e} is listed for cluster {previous} and cluster {c}"
                ));
            } else {
                exemplar_home[e] = Some(c);
            }
            if membership[e] != Some(c) {
                disjoint_violations
                    .push(format!("exemplar {e} is not a member of its cluster {c}"));
            }
            if sol.covered_by[e] != Some(e) {
                disjoint_violations.push(format!("exemplar {e} does not cover itself"));
            }
        }
    }
    checks.push(CheckOutcome {
        name: "exemplar-disjointness",
        violations: disjoint_violations,
    });

    let epsilon = sol.params.epsilon.value();
    let mut coverage_violations = Vec::new();
    for i in 0..n {
        let Some(e) = sol.covered_by[i] else {
            continue;
        };
        if exemplar_home[e].is_none() {
            coverage_violations.push(format!("instance {i} is covered by non-exemplar {e}"));
            continue;
        }
        if membership[e] != membership[i] {
            coverage_violations.push(format!(
                "instance {i} and its exemplar {e} are in different clusters"
            ));
        }
        let d = dm.get(i, e);
        if d > epsilon {
            coverage_violations.push(format!(
                "instance {i} is {d} from exemplar {e}, beyond epsilon {epsilon}"
            ));
        }
    }
    checks.push(CheckOutcome {
        name: "same-cluster-coverage",
        violations: coverage_violations,
    });

    let mut residency_violations = Vec::new();
    for (c, list) in sol.exemplars.iter().enumerate() {
        for &e in list {
            let block = sol.blocks.assignment[e];
            if block != c {
                residency_violations.push(format!(
                    "exemplar {e} originated in block {block} but sits in cluster {c}"
                ));
            }
        }
    }
    checks.push(CheckOutcome {
        name: "exemplar-block-residency",
        violations: residency_violations,
    });

    let mut budget_violations = Vec::new();
    if let Some(beta) = sol.params.beta {
        let total = sol.total_exemplars();
        if total > beta {
            budget_violations.push(format!("{total} exemplars exceed the budget {beta}"));
        }
    }
    checks.push(CheckOutcome {
        name: "budget",
        violations: budget_violations,
    });

    VerificationReport { checks }
}
