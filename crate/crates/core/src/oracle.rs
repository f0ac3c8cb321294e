//! Exhaustive reference solvers for small instances.
//!
//! These pin down ground truth where the greedy stages only promise factors:
//! the optimal partition diameter, the minimum covering family size, and the
//! best coverage under a budget. Everything enumerates, so hard size guards
//! reject inputs that would not finish quickly. Each reported value is
//! re-evaluated from its witness rather than trusted from the search.

use itertools::Itertools;

use crate::coverage::SetSystem;
use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::gonzalez::max_diameter;

pub const MAX_DIAMETER_INSTANCES: usize = 14;
pub const MAX_DIAMETER_K: usize = 3;
pub const MAX_COVER_UNIVERSE: usize = 20;
pub const MAX_COVER_SETS: usize = 20;
pub const MAX_COVER_BUDGET: usize = 5;

/// Minimal achievable maximum block diameter over all k-way partitions.
#[derive(Debug, Clone, PartialEq)]
pub struct DiameterOptimum {
    pub d_star: f64,
    /// A partition achieving `d_star`: `k` blocks in first-member order,
    /// trailing blocks possibly empty.
    pub witness: Vec<Vec<usize>>,
}

/// Minimum number of sets covering the whole universe.
#[derive(Debug, Clone, PartialEq)]
pub struct ExemplarOptimum {
    pub n_star: usize,
    /// Lexicographically first minimum cover, ascending set indices.
    pub witness: Vec<usize>,
}

/// Maximum coverage achievable with a fixed number of sets.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverageOptimum {
    pub q_star: usize,
    /// Lexicographically first family attaining `q_star`, ascending indices.
    pub witness: Vec<usize>,
}

/// Whichever exact optima were computed for one instance.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct OracleResult {
    pub diameter: Option<DiameterOptimum>,
    pub exemplars: Option<ExemplarOptimum>,
    pub coverage: Option<CoverageOptimum>,
}

/// Exact minimum over all partitions of the instances into at most `k`
/// blocks of the largest within-block distance.
///
/// Branch and bound over canonical labelings: instance 0 stays in block 0
/// and block b opens only after blocks 0..b, so no relabeling is visited
/// twice. Ties resolve to the first optimum in that order, which makes the
/// witness deterministic.
pub fn exact_min_diameter(dm: &DistanceMatrix, k: usize) -> Result<DiameterOptimum> {
    let n = dm.n();
    if n > MAX_DIAMETER_INSTANCES {
        return Err(Error::ExactSearchLimit {
            what: "instances",
            got: n,
            limit: MAX_DIAMETER_INSTANCES,
        });
    }
    if k > MAX_DIAMETER_K {
        return Err(Error::ExactSearchLimit {
            what: "k",
            got: k,
            limit: MAX_DIAMETER_K,
        });
    }
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }

    let mut assignment = vec![0usize; n];
    let mut best = f64::INFINITY;
    let mut best_assignment = vec![0usize; n];
    dfs(
        dm,
        k,
        1,
        1,
        0.0,
        &mut assignment,
        &mut best,
        &mut best_assignment,
    );

    let mut witness = vec![Vec::new(); k];
    for (instance, &block) in best_assignment.iter().enumerate() {
        witness[block].push(instance);
    }
    // Re-evaluate the witness instead of trusting the search accumulator.
    let d_star = max_diameter(dm, &witness)?;
    Ok(DiameterOptimum { d_star, witness })
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    dm: &DistanceMatrix,
    k: usize,
    i: usize,
    used: usize,
    current: f64,
    assignment: &mut Vec<usize>,
    best: &mut f64,
    best_assignment: &mut Vec<usize>,
) {
    let n = dm.n();
    if i == n {
        // Every path is pruned against `best`, so reaching a leaf means a
        // strict improvement.
        *best = current;
        best_assignment.copy_from_slice(assignment);
        return;
    }
    let open = used.min(k - 1);
    for b in 0..=open {
        let mut extended = current;
        for (j, &a) in assignment.iter().enumerate().take(i) {
            if a == b {
                extended = extended.max(dm.get(i, j));
                if extended >= *best {
                    break;
                }
            }
        }
        if extended >= *best {
            continue;
        }
        assignment[i] = b;
        dfs(
            dm,
            k,
            i + 1,
            used.max(b + 1),
            extended,
            assignment,
            best,
            best_assignment,
        );
    }
}

/// Exact minimum number of sets that cover the universe, by enumerating
/// families in increasing size and lexicographic order.
pub fn exact_min_exemplars(system: &SetSystem) -> Result<ExemplarOptimum> {
    let (masks, full) = cover_masks(system)?;
    if full == 0 {
        return Ok(ExemplarOptimum {
            n_star: 0,
            witness: Vec::new(),
        });
    }
    let union_all = masks.iter().fold(0u64, |acc, &m| acc | m);
    if union_all != full {
        let element = (0..system.universe_size())
            .find(|&e| union_all & (1 << e) == 0)
            .unwrap();
        return Err(Error::Uncoverable { element });
    }
    let m = system.set_count();
    for size in 1..=m {
        for combo in (0..m).combinations(size) {
            let union = combo.iter().fold(0u64, |acc, &s| acc | masks[s]);
            if union == full {
                return Ok(ExemplarOptimum {
                    n_star: combo.len(),
                    witness: combo,
                });
            }
        }
    }
    unreachable!("the full family covers, so some size must succeed");
}

/// Exact maximum number of elements coverable by `beta` sets, enumerating all
/// families of that size.
pub fn exact_max_coverage(system: &SetSystem, beta: usize) -> Result<CoverageOptimum> {
    let (masks, _) = cover_masks(system)?;
    let m = system.set_count();
    if beta < 1 || beta > m {
        return Err(Error::InvalidBeta { beta, max: m });
    }
    if beta > MAX_COVER_BUDGET {
        return Err(Error::ExactSearchLimit {
            what: "beta",
            got: beta,
            limit: MAX_COVER_BUDGET,
        });
    }
    let mut best: Option<(usize, Vec<usize>)> = None;
    for combo in (0..m).combinations(beta) {
        let union = combo.iter().fold(0u64, |acc, &s| acc | masks[s]);
        let count = union.count_ones() as usize;
        if best.as_ref().is_none_or(|(c, _)| count > *c) {
            best = Some((count, combo));
        }
    }
    let (q_star, witness) = best.expect("beta >= 1 and beta <= set count");
    Ok(CoverageOptimum { q_star, witness })
}

fn cover_masks(system: &SetSystem) -> Result<(Vec<u64>, u64)> {
    let n = system.universe_size();
    let m = system.set_count();
    if n > MAX_COVER_UNIVERSE {
        return Err(Error::ExactSearchLimit {
            what: "universe",
            got: n,
            limit: MAX_COVER_UNIVERSE,
        });
    }
    if m > MAX_COVER_SETS {
        return Err(Error::ExactSearchLimit {
            what: "sets",
            got: m,
            limit: MAX_COVER_SETS,
        });
    }
    let masks = system
        .sets()
        .iter()
        .map(|set| set.iter().fold(0u64, |acc, &e| acc | (1 << e)))
        .collect();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    Ok((masks, full))
}
