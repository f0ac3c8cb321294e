//! Post-run summaries: per-cluster and global statistics, optional quality
//! ratios against exact optima, and optional stage timings.

use serde::{Deserialize, Serialize};

use crate::distance::DistanceMatrix;
use crate::error::{Error, Result};
use crate::gonzalez::max_diameter;
use crate::oracle::OracleResult;
use crate::pipeline::{ClusteringSolution, StepTimings};

/// Statistics for one cluster. An empty cluster (a block that received no
/// exemplar) reports zero size and zero distances with `empty` set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ClusterSummary {
    pub size: usize,
    pub exemplar_count: usize,
    pub diameter: f64,
    pub mean_distance_to_exemplar: f64,
    pub empty: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlobalSummary {
    pub max_diameter: f64,
    pub total_exemplars: usize,
    pub covered_fraction: f64,
    pub uncovered_count: usize,
}

/// Achieved quality over exact optima, when the exact values were computed.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RatioSummary {
    /// Largest cluster diameter over its guarantee `2 * (d_star + epsilon)`;
    /// at most 1 whenever the guarantee holds.
    pub diameter_vs_bound: Option<f64>,
    /// Exemplar total over the exact minimum cover size.
    pub exemplars_vs_optimum: Option<f64>,
    /// Covered instances over the exact budgeted coverage optimum.
    pub coverage_vs_optimum: Option<f64>,
}

/// Full summary attached to a serialized solution.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub per_cluster: Vec<ClusterSummary>,
    pub global: GlobalSummary,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ratios: Option<RatioSummary>,
    /// Kept last so everything serialized before it is deterministic and two
    /// documents can be compared byte for byte up to this key.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<StepTimings>,
}

/// Builds the report for a finished solution. Ratios appear only for optima
/// present in `oracle`; timings are copied through unchanged.
pub fn summarize(
    dm: &DistanceMatrix,
    sol: &ClusteringSolution,
    oracle: Option<&OracleResult>,
    timings: Option<StepTimings>,
) -> Result<SolutionReport> {
    if sol.n() != dm.n() {
        return Err(Error::SizeMismatch {
            dataset: sol.n(),
            matrix: dm.n(),
        });
    }

    let mut per_cluster = Vec::with_capacity(sol.clusters.len());
    let mut worst_diameter = 0.0f64;
    for (c, members) in sol.clusters.iter().enumerate() {
        let diameter = max_diameter(dm, std::slice::from_ref(members))?;
        worst_diameter = worst_diameter.max(diameter);
        let mut distance_sum = 0.0;
        for &i in members {
            let e = sol.covered_by[i].ok_or_else(|| {
                Error::Document(format!("cluster {c} member {i} has no covering exemplar"))
            })?;
            if e >= dm.n() {
                return Err(Error::MemberOutOfRange {
                    member: e,
                    n: dm.n(),
                });
            }
            distance_sum += dm.get(i, e);
        }
        let size = members.len();
        per_cluster.push(ClusterSummary {
            size,
            exemplar_count: sol.exemplars.get(c).map_or(0, Vec::len),
            diameter,
            mean_distance_to_exemplar: if size == 0 {
                0.0
            } else {
                distance_sum / size as f64
            },
            empty: size == 0,
        });
    }

    let covered = sol.covered_count();
    let global = GlobalSummary {
        max_diameter: worst_diameter,
        total_exemplars: sol.total_exemplars(),
        covered_fraction: covered as f64 / sol.n() as f64,
        uncovered_count: sol.uncovered.len(),
    };

    let ratios = oracle.and_then(|o| {
        let epsilon = sol.params.epsilon.value();
        let diameter_vs_bound = o
            .diameter
            .as_ref()
            .map(|d| worst_diameter / (2.0 * (d.d_star + epsilon)));
        let exemplars_vs_optimum = o
            .exemplars
            .as_ref()
            .filter(|e| e.n_star > 0)
            .map(|e| global.total_exemplars as f64 / e.n_star as f64);
        let coverage_vs_optimum = o
            .coverage
            .as_ref()
            .filter(|q| q.q_star > 0)
            .map(|q| covered as f64 / q.q_star as f64);
        if diameter_vs_bound.is_none()
            && exemplars_vs_optimum.is_none()
            && coverage_vs_optimum.is_none()
        {
            None
        } else {
            Some(RatioSummary {
                diameter_vs_bound,
                exemplars_vs_optimum,
                coverage_vs_optimum,
            })
        }
    });

    Ok(SolutionReport {
        per_cluster,
        global,
        ratios,
        timing: timings,
    })
}
