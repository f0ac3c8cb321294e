//! Instance collections: dense real vectors, or opaque ids whose pairwise
//! distances are supplied externally.

use crate::error::{Error, Result};

/// The instances to cluster. Instance ids are their 0-based positions and are
/// preserved through every later stage.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    payload: Payload,
    labels: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
enum Payload {
    /// Row-major coordinates, `n * dim` values.
    Vectors {
        data: Vec<f64>,
        n: usize,
        dim: usize,
    },
    /// No coordinates; distances must come from a precomputed matrix.
    Opaque { n: usize },
}

impl Dataset {
    /// Builds a vector dataset. Rows must share one non-zero dimension and
    /// every coordinate must be finite.
    pub fn from_vectors(rows: &[Vec<f64>]) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::EmptyDataset);
        }
        let dim = rows[0].len();
        if dim == 0 {
            return Err(Error::EmptyVector { index: 0 });
        }
        let mut data = Vec::with_capacity(rows.len() * dim);
        for (index, row) in rows.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    index,
                    expected: dim,
                    actual: row.len(),
                });
            }
            for (component, &value) in row.iter().enumerate() {
                if !value.is_finite() {
                    return Err(Error::NonFiniteCoordinate { index, component });
                }
                data.push(value);
            }
        }
        Ok(Self {
            payload: Payload::Vectors {
                data,
                n: rows.len(),
                dim,
            },
            labels: None,
        })
    }

    /// A dataset of `n` bare ids, for use with a precomputed distance matrix.
    pub fn opaque(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyDataset);
        }
        Ok(Self {
            payload: Payload::Opaque { n },
            labels: None,
        })
    }

    /// Attaches one label per instance.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.len() {
            return Err(Error::LabelCountMismatch {
                labels: labels.len(),
                n: self.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        match &self.payload {
            Payload::Vectors { n, .. } | Payload::Opaque { n } => *n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Vector dimension, or `None` for an opaque dataset.
    pub fn dim(&self) -> Option<usize> {
        match &self.payload {
            Payload::Vectors { dim, .. } => Some(*dim),
            Payload::Opaque { .. } => None,
        }
    }

    /// Coordinates of instance `index`, or `None` if out of range or opaque.
    pub fn vector(&self, index: usize) -> Option<&[f64]> {
        match &self.payload {
            Payload::Vectors { data, n, dim } if index < *n => {
                Some(&data[index * dim..(index + 1) * dim])
            }
            _ => None,
        }
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }
}
