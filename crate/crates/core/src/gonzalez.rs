//! Farthest-point-first block partitioning.
//!
//! The first head is the seed instance; every later head is the instance
//! farthest from all earlier heads. Each instance joins the block of its
//! nearest head. The maximum block diameter is at most twice the best
//! achievable by any partition into the same number of blocks.

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

/// Disjoint blocks covering all instances, one per head.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockPartition {
    pub k: usize,
    /// Instance id of each block's head; `heads[0]` is the seed. All distinct.
    pub heads: Vec<usize>,
    /// Block index of every instance; `assignment[heads[b]] == b`.
    pub assignment: Vec<usize>,
}

impl BlockPartition {
    /// Materializes the blocks as ascending member lists, indexed by block.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.k];
        for (instance, &block) in self.assignment.iter().enumerate() {
            blocks[block].push(instance);
        }
        blocks
    }
}

/// Partitions all instances into `k` blocks by farthest-point traversal from
/// `seed_index`.
///
/// Deterministic tie handling: the farthest candidate with the lowest id
/// becomes the next head, and an instance equidistant to several heads joins
/// the earliest-selected one.
pub fn partition(dm: &DistanceMatrix, k: usize, seed_index: usize) -> Result<BlockPartition> {
    let n = dm.n();
    if k < 1 || k > n {
        return Err(Error::InvalidK { k, n });
    }
    if seed_index >= n {
        return Err(Error::InvalidSeedIndex { seed_index, n });
    }

    let mut heads = Vec::with_capacity(k);
    let mut assignment = vec![0usize; n];
    let mut nearest = vec![f64::INFINITY; n];
    let mut is_head = vec![false; n];

    let mut next = seed_index;
    for b in 0..k {
        let head = next;
        heads.push(head);
        is_head[head] = true;
        // A head claims itself before the sweep; with duplicate points its
        // distance to an earlier head can be zero, and the tie must not leave
        // the new block empty.
        nearest[head] = 0.0;
        assignment[head] = b;
        for j in 0..n {
            let d = dm.get(head, j);
            if d < nearest[j] {
                nearest[j] = d;
                assignment[j] = b;
            }
        }
        if b + 1 == k {
            break;
        }
        let mut far = usize::MAX;
        let mut far_dist = -1.0;
        for (j, &d) in nearest.iter().enumerate() {
            if !is_head[j] && d > far_dist {
                far_dist = d;
                far = j;
            }
        }
        next = far;
    }

    Ok(BlockPartition {
        k,
        heads,
        assignment,
    })
}

/// Largest pairwise distance within any single group. Empty and singleton
/// groups contribute zero.
pub fn max_diameter(dm: &DistanceMatrix, groups: &[Vec<usize>]) -> Result<f64> {
    let n = dm.n();
    let mut max = 0.0f64;
    for group in groups {
        for (pos, &a) in group.iter().enumerate() {
            if a >= n {
                return Err(Error::MemberOutOfRange { member: a, n });
            }
            for &b in &group[pos + 1..] {
                if b >= n {
                    return Err(Error::MemberOutOfRange { member: b, n });
                }
                max = max.max(dm.get(a, b));
            }
        }
    }
    Ok(max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dataset::Dataset;
    use crate::distance::MetricKind;

    fn line_matrix(points: &[f64]) -> DistanceMatrix {
        let rows: Vec<Vec<f64>> = points.iter().map(|&x| vec![x]).collect();
        let ds = Dataset::from_vectors(&rows).unwrap();
        DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap()
    }

    #[test]
    fn two_gaps_split_into_two_blocks() {
        let dm = line_matrix(&[0.0, 1.0, 10.0, 11.0]);
        let p = partition(&dm, 2, 0).unwrap();
        assert_eq!(p.heads, vec![0, 3]);
        assert_eq!(p.blocks(), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(max_diameter(&dm, &p.blocks()).unwrap(), 1.0);
    }

    #[test]
    fn one_block_holds_everything() {
        let dm = line_matrix(&[0.0, 1.0, 10.0, 11.0]);
        let p = partition(&dm, 1, 0).unwrap();
        assert_eq!(p.heads, vec![0]);
        assert_eq!(p.blocks(), vec![vec![0, 1, 2, 3]]);
        assert_eq!(max_diameter(&dm, &p.blocks()).unwrap(), 11.0);
    }

    #[test]
    fn k_equal_to_n_gives_singletons() {
        let dm = line_matrix(&[0.0, 1.0, 10.0]);
        let p = partition(&dm, 3, 0).unwrap();
        assert_eq!(p.blocks().iter().map(Vec::len).max(), Some(1));
        assert_eq!(max_diameter(&dm, &p.blocks()).unwrap(), 0.0);
        let mut heads = p.heads.clone();
        heads.sort_unstable();
        heads.dedup();
        assert_eq!(heads.len(), 3);
    }

    #[test]
    fn seed_changes_traversal_but_not_partition_validity() {
        let dm = line_matrix(&[0.0, 1.0, 10.0, 11.0]);
        let p = partition(&dm, 2, 2).unwrap();
        assert_eq!(p.heads[0], 2);
        let blocks = p.blocks();
        let total: usize = blocks.iter().map(Vec::len).sum();
        assert_eq!(total, 4);
    }

    #[test]
    fn duplicate_points_never_leave_a_block_empty() {
        let dm = line_matrix(&[0.0, 0.0, 0.0]);
        let p = partition(&dm, 3, 0).unwrap();
        for block in p.blocks() {
            assert!(!block.is_empty());
        }
        let mut heads = p.heads.clone();
        heads.sort_unstable();
        assert_eq!(heads, vec![0, 1, 2]);
    }

    #[test]
    fn assignment_tie_goes_to_the_earliest_head() {
        // Point 1 sits exactly between the two heads 0 and 2.
        let dm = line_matrix(&[0.0, 1.0, 2.0]);
        let p = partition(&dm, 2, 0).unwrap();
        assert_eq!(p.heads, vec![0, 2]);
        assert_eq!(p.assignment[1], 0);
    }

    #[test]
    fn invalid_k_and_seed_are_rejected() {
        let dm = line_matrix(&[0.0, 1.0]);
        assert!(matches!(
            partition(&dm, 0, 0),
            Err(Error::InvalidK { k: 0, n: 2 })
        ));
        assert!(matches!(
            partition(&dm, 3, 0),
            Err(Error::InvalidK { k: 3, n: 2 })
        ));
        assert!(matches!(
            partition(&dm, 2, 2),
            Err(Error::InvalidSeedIndex {
                seed_index: 2,
                n: 2
            })
        ));
    }

    #[test]
    fn max_diameter_rejects_out_of_range_members() {
        let dm = line_matrix(&[0.0, 1.0]);
        let err = max_diameter(&dm, &[vec![0, 5]]).unwrap_err();
        assert!(matches!(err, Error::MemberOutOfRange { member: 5, n: 2 }));
    }

    #[test]
    fn max_diameter_of_singletons_is_zero() {
        let dm = line_matrix(&[0.0, 1.0]);
        assert_eq!(max_diameter(&dm, &[vec![0], vec![1]]).unwrap(), 0.0);
        assert_eq!(max_diameter(&dm, &[vec![], vec![0, 1]]).unwrap(), 1.0);
    }
}
