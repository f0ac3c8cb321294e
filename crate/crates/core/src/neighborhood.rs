//! Epsilon-neighborhoods: for each instance, everything within a fixed radius.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};

/// Validated neighborhood radius: finite and strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Epsilon(f64);

impl Epsilon {
    pub fn new(value: f64) -> Result<Self> {
        if !value.is_finite() || value <= 0.0 {
            return Err(Error::InvalidEpsilon(value));
        }
        Ok(Self(value))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Epsilon {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Epsilon::new(value)
    }
}

impl From<Epsilon> for f64 {
    fn from(epsilon: Epsilon) -> f64 {
        epsilon.0
    }
}

/// For each instance `i`, the ascending ids within `epsilon` of `i`.
/// Membership is `d(i, j) <= epsilon`, so a set always contains its center.
#[derive(Debug, Clone, PartialEq)]
pub struct NeighborhoodSets {
    sets: Vec<Vec<usize>>,
}

impl NeighborhoodSets {
    /// One set per instance, indexed by center.
    pub fn sets(&self) -> &[Vec<usize>] {
        &self.sets
    }

    pub fn set(&self, center: usize) -> &[usize] {
        &self.sets[center]
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

/// Builds every epsilon-neighborhood by scanning the distance matrix.
pub fn build_neighborhoods(dm: &DistanceMatrix, epsilon: Epsilon) -> NeighborhoodSets {
    let n = dm.n();
    let radius = epsilon.value();
    let sets = (0..n)
        .into_par_iter()
        .map(|i| (0..n).filter(|&j| dm.get(i, j) <= radius).collect())
        .collect();
    NeighborhoodSets { sets }
}
