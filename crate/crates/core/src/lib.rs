//! Diameter-bounded clustering with jointly selected exemplars.
//!
//! The pipeline clusters `n` instances under any metric in four steps:
//!
//! 1. Partition into `k` blocks by farthest-point traversal. The largest
//!    block diameter is at most twice the best achievable with `k` blocks.
//! 2. Build the epsilon-neighborhood of every instance.
//! 3. Choose exemplars by greedy set cover over the neighborhoods: either
//!    until every instance is covered, or maximizing coverage under a fixed
//!    exemplar budget.
//! 4. Attach each covered instance to its nearest covering exemplar, so a
//!    cluster is a block's exemplars plus everything they attracted.
//!
//! A finished solution carries per-instance coverage, pairwise-disjoint
//! exemplar sets, and a report with diameters, coverage statistics, and
//! optional ratios against the exact optima from [`oracle`]. Every covered
//! instance sits within epsilon of an exemplar in its own cluster, and the
//! largest cluster diameter is bounded by `2 * (d_star + epsilon)`.
//!
//! Runs are deterministic: the same input and parameters produce the same
//! solution bit for bit, regardless of thread count. Ties anywhere resolve
//! to the lowest id involved.

pub mod coverage;
pub mod dataset;
pub mod distance;
pub mod error;
pub mod gonzalez;
pub mod io;
pub mod neighborhood;
pub mod oracle;
pub mod pipeline;
pub mod report;

pub use coverage::{
    greedy_budgeted_max_coverage, greedy_set_cover, harmonic_number, CoverResult, SetSystem,
};
pub use dataset::Dataset;
pub use distance::{DistanceMatrix, MetricKind};
pub use error::{Error, Result};
pub use gonzalez::{max_diameter, partition, BlockPartition};
pub use io::{
    load_dataset, parse_solution, read_solution, render_solution, write_solution, InputFormat,
    InputSpec, LabelColumn, SolutionDocument, SCHEMA_VERSION,
};
pub use neighborhood::{build_neighborhoods, Epsilon, NeighborhoodSets};
pub use oracle::{exact_max_coverage, exact_min_diameter, exact_min_exemplars, OracleResult};
pub use pipeline::{
    run_scce, run_sccrb, verify_solution, ClusteringSolution, SolutionParams, StepTimings,
    VerificationReport,
};
pub use report::{summarize, SolutionReport};
