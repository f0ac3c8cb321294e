//! Pairwise distances: computed from coordinates or supplied as a validated
//! precomputed matrix.
//!
//! The full n x n matrix is materialized so every later stage gets O(1)
//! lookups; memory is O(n^2) by design. Entries are exactly symmetric and the
//! diagonal is exactly zero.

use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dataset::Dataset;
use crate::error::{Error, Result};

/// How pairwise distances are obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MetricKind {
    /// Straight-line distance between coordinate vectors.
    Euclidean,
    /// Angle between vectors: arccos of the clipped cosine similarity, in [0, pi].
    /// Unlike raw cosine dissimilarity this satisfies the triangle inequality.
    CosineAngular,
    /// The caller supplies the full matrix; it is validated, never computed.
    Precomputed,
}

impl fmt::Display for MetricKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MetricKind::Euclidean => "euclidean",
            MetricKind::CosineAngular => "cosine-angular",
            MetricKind::Precomputed => "precomputed",
        };
        f.write_str(name)
    }
}

/// A sampled triangle-inequality failure found by [`DistanceMatrix::triangle_spot_check`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangleCheckViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// d(i, k)
    pub direct: f64,
    /// d(i, j) + d(j, k)
    pub via: f64,
    pub tolerance: f64,
}

impl TriangleCheckViolation {
    pub fn into_error(self) -> Error {
        Error::TriangleViolation {
            i: self.i,
            j: self.j,
            k: self.k,
            direct: self.direct,
            via: self.via,
            tolerance: self.tolerance,
        }
    }
}

/// Dense symmetric pairwise distance matrix with a zero diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    /// Row-major, `n * n` entries.
    entries: Vec<f64>,
    metric: MetricKind,
}

impl DistanceMatrix {
    /// Computes all pairwise distances for a vector dataset.
    ///
    /// Rows are filled in parallel; the result is identical for any thread
    /// count because each entry depends only on its own pair of vectors.
    pub fn compute(dataset: &Dataset, metric: MetricKind) -> Result<Self> {
        let n = dataset.len();
        if dataset.dim().is_none() {
            return Err(match metric {
                MetricKind::Precomputed => Error::PrecomputedNeedsMatrix,
                _ => Error::NoCoordinates,
            });
        }
        let entries = match metric {
            MetricKind::Euclidean => fill(n, |i, j| {
                euclidean(dataset.vector(i).unwrap(), dataset.vector(j).unwrap())
            }),
            MetricKind::CosineAngular => {
                let norms: Vec<f64> = (0..n)
                    .map(|i| euclidean_norm(dataset.vector(i).unwrap()))
                    .collect();
                if let Some(index) = norms.iter().position(|&v| v == 0.0) {
                    return Err(Error::ZeroNorm { index });
                }
                fill(n, |i, j| {
                    angular(
                        dataset.vector(i).unwrap(),
                        dataset.vector(j).unwrap(),
                        norms[i],
                        norms[j],
                    )
                })
            }
            MetricKind::Precomputed => return Err(Error::PrecomputedNeedsMatrix),
        };
        Ok(Self { n, entries, metric })
    }

    /// Wraps a caller-supplied matrix after checking the hard metric axioms:
    /// finite non-negative entries, zero diagonal, exact symmetry.
    ///
    /// The triangle inequality is not enforced here; use
    /// [`triangle_spot_check`](Self::triangle_spot_check) for a sampled audit.
    pub fn from_precomputed(n: usize, entries: Vec<f64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        if entries.len() != n * n {
            return Err(Error::MatrixShape {
                entries: entries.len(),
                expected: n * n,
                n,
            });
        }
        for (pos, &value) in entries.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidDistance {
                    row: pos / n,
                    col: pos % n,
                    value,
                });
            }
        }
        for i in 0..n {
            let value = entries[i * n + i];
            if value != 0.0 {
                return Err(Error::NonZeroDiagonal { index: i, value });
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let forward = entries[i * n + j];
                let backward = entries[j * n + i];
                if forward != backward {
                    return Err(Error::AsymmetricDistance {
                        row: j,
                        col: i,
                        actual: backward,
                        expected: forward,
                    });
                }
            }
        }
        Ok(Self {
            n,
            entries,
            metric: MetricKind::Precomputed,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn metric(&self) -> MetricKind {
        self.metric
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        debug_assert!(i < self.n && j < self.n);
        self.entries[i * self.n + j]
    }

    pub fn max_entry(&self) -> f64 {
        self.entries.iter().copied().fold(0.0, f64::max)
    }

    /// Audits the triangle inequality on at most `max_samples` triples: every
    /// triple when n^3 fits the budget, otherwise a fixed-seed random sample.
    /// The tolerance is 1e-9 times the largest entry.
    pub fn triangle_spot_check(&self, max_samples: usize) -> Vec<TriangleCheckViolation> {
        let n = self.n;
        let tolerance = 1e-9 * self.max_entry();
        let mut violations = Vec::new();
        let check = |i: usize, j: usize, k: usize, out: &mut Vec<TriangleCheckViolation>| {
            let direct = self.get(i, k);
            let via = self.get(i, j) + self.get(j, k);
            if direct > via + tolerance {
                out.push(TriangleCheckViolation {
                    i,
                    j,
                    k,
                    direct,
                    via,
                    tolerance,
                });
            }
        };
        if (n as u128).pow(3) <= max_samples as u128 {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        check(i, j, k, &mut violations);
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7472_6970);
            for _ in 0..max_samples {
                let i = rng.random_range(0..n);
                let j = rng.random_range(0..n);
                let k = rng.random_range(0..n);
                check(i, j, k, &mut violations);
            }
        }
        violations
    }
}

fn fill(n: usize, dist: impl Fn(usize, usize) -> f64 + Sync) -> Vec<f64> {
    let mut entries = vec![0.0; n * n];
    entries.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        for (j, slot) in row.iter_mut().enumerate() {
            // The explicit zero keeps the diagonal exact even for metrics
            // whose self-distance would round away from zero.
            *slot = if i == j { 0.0 } else { dist(i, j) };
        }
    });
    entries
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            let d = x - y;
            d * d
        })
        .sum::<f64>()
        .sqrt()
}

fn euclidean_norm(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn angular(a: &[f64], b: &[f64], norm_a: f64, norm_b: f64) -> f64 {
    let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
    (dot / (norm_a * norm_b)).clamp(-1.0, 1.0).acos()
}
