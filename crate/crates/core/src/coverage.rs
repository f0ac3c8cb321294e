//! Greedy set cover and budgeted maximum coverage over explicit set systems.
//!
//! Both entry points run the same gain-ordered greedy loop: repeatedly take
//! the set covering the most still-uncovered elements, lowest set index on
//! ties, and stop when the universe is covered, the budget is spent, or no
//! set adds anything. Full cover stays within a harmonic factor of the
//! optimal set count; budgeted runs cover at least (1 - 1/e) of what the best
//! budget-sized family could.

use crate::error::{Error, Result};
use crate::neighborhood::NeighborhoodSets;

/// A family of subsets over the universe `0..universe_size`.
#[derive(Debug, Clone, PartialEq)]
pub struct SetSystem {
    universe_size: usize,
    /// Each set ascending and deduplicated.
    sets: Vec<Vec<usize>>,
}

impl SetSystem {
    /// Sorts and deduplicates each set; members must lie inside the universe.
    pub fn new(universe_size: usize, sets: Vec<Vec<usize>>) -> Result<Self> {
        let mut sets = sets;
        for (index, set) in sets.iter_mut().enumerate() {
            set.sort_unstable();
            set.dedup();
            if let Some(&member) = set.last() {
                if member >= universe_size {
                    return Err(Error::SetMemberOutOfRange {
                        set: index,
                        member,
                        universe: universe_size,
                    });
                }
            }
        }
        Ok(Self {
            universe_size,
            sets,
        })
    }

    /// Neighborhood families are already ascending and in range.
    pub fn from_neighborhoods(neigh: &NeighborhoodSets) -> Self {
        Self {
            universe_size: neigh.len(),
            sets: neigh.sets().to_vec(),
        }
    }

    pub fn universe_size(&self) -> usize {
        self.universe_size
    }

    pub fn set_count(&self) -> usize {
        self.sets.len()
    }

    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }
}

/// Outcome of one greedy covering run.
#[derive(Debug, Clone, PartialEq)]
pub struct CoverResult {
    /// Chosen set indices in pick order.
    pub chosen: Vec<usize>,
    /// Covered elements, ascending.
    pub covered: Vec<usize>,
    /// Uncovered elements, ascending. Empty after a full set cover.
    pub uncovered: Vec<usize>,
}

/// Covers the whole universe greedily. Fails if some element appears in no
/// set; otherwise the result leaves nothing uncovered.
pub fn greedy_set_cover(system: &SetSystem) -> Result<CoverResult> {
    let mut seen = vec![false; system.universe_size];
    for set in &system.sets {
        for &element in set {
            seen[element] = true;
        }
    }
    if let Some(element) = seen.iter().position(|&covered| !covered) {
        return Err(Error::Uncoverable { element });
    }
    let result = greedy(system, None);
    debug_assert!(result.uncovered.is_empty());
    Ok(result)
}

/// Picks at most `beta` sets greedily, maximizing the number of covered
/// elements. Stops early once no set adds coverage.
pub fn greedy_budgeted_max_coverage(system: &SetSystem, beta: usize) -> Result<CoverResult> {
    if beta < 1 || beta > system.set_count() {
        return Err(Error::InvalidBeta {
            beta,
            max: system.set_count(),
        });
    }
    Ok(greedy(system, Some(beta)))
}

/// Shared greedy loop. `budget: None` runs until gains are exhausted.
///
/// Gains live in a bucket queue indexed by gain value. A pick decrements the
/// gain counters of every overlapping set; bucket entries migrate down lazily
/// when their bucket is scanned, so each entry moves at most once per gain
/// value and total bookkeeping stays linear in the sum of set sizes.
fn greedy(system: &SetSystem, budget: Option<usize>) -> CoverResult {
    let n = system.universe_size;
    let sets = &system.sets;
    let m = sets.len();

    let mut containing: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (s, set) in sets.iter().enumerate() {
        for &element in set {
            containing[element].push(s);
        }
    }

    let mut gain: Vec<usize> = sets.iter().map(Vec::len).collect();
    let top = gain.iter().copied().max().unwrap_or(0);
    let mut buckets: Vec<Vec<usize>> = vec![Vec::new(); top + 1];
    for (s, &g) in gain.iter().enumerate() {
        if g > 0 {
            buckets[g].push(s);
        }
    }

    let mut covered = vec![false; n];
    let mut chosen = Vec::new();
    let mut is_chosen = vec![false; m];
    let limit = budget.unwrap_or(m);
    let mut level = top;

    while chosen.len() < limit && level > 0 {
        // Scan the current bucket: drop chosen or emptied sets, migrate stale
        // entries down to their true gain, and find the lowest-index set whose
        // gain still equals this level. Gains only decrease, so every set with
        // the current maximum gain is guaranteed to sit in this bucket.
        let entries = std::mem::take(&mut buckets[level]);
        let mut still_here = Vec::with_capacity(entries.len());
        let mut best: Option<usize> = None;
        for s in entries {
            if is_chosen[s] {
                continue;
            }
            let g = gain[s];
            if g == level {
                if best.is_none_or(|b| s < b) {
                    best = Some(s);
                }
                still_here.push(s);
            } else if g > 0 {
                buckets[g].push(s);
            }
        }
        buckets[level] = still_here;

        let Some(pick) = best else {
            level -= 1;
            continue;
        };
        is_chosen[pick] = true;
        chosen.push(pick);
        for &element in &sets[pick] {
            if !covered[element] {
                covered[element] = true;
                for &s in &containing[element] {
                    gain[s] -= 1;
                }
            }
        }
    }

    let covered_ids = (0..n).filter(|&e| covered[e]).collect();
    let uncovered = (0..n).filter(|&e| !covered[e]).collect();
    CoverResult {
        chosen,
        covered: covered_ids,
        uncovered,
    }
}

/// Sum of 1/i for i in 1..=n, the factor by which greedy set cover can exceed
/// the optimal set count.
pub fn harmonic_number(n: usize) -> f64 {
    (1..=n).map(|i| 1.0 / i as f64).sum()
}
