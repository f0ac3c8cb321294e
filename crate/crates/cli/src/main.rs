//! Command-line front end: run the clustering pipelines, compute exact
//! optima for small instances, and re-verify saved solution documents.
//!
//! Exit codes: 0 on success, 2 for usage and input validation problems, 3
//! when a finished solution violates a guarantee or a structural check.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use exemplar_clustering::oracle::{
    MAX_COVER_BUDGET, MAX_COVER_UNIVERSE, MAX_DIAMETER_INSTANCES, MAX_DIAMETER_K,
};
use exemplar_clustering::{
    build_neighborhoods, exact_max_coverage, exact_min_diameter, exact_min_exemplars,
    harmonic_number, load_dataset, read_solution, run_scce, run_sccrb, summarize, verify_solution,
    write_solution, ClusteringSolution, Dataset, DistanceMatrix, Epsilon, Error, InputFormat,
    InputSpec, LabelColumn, MetricKind, OracleResult, SetSystem, SolutionDocument, SolutionReport,
    StepTimings,
};

/// Triples audited per supplied matrix before clustering starts.
const TRIANGLE_SAMPLES: usize = 100_000;

const VALIDATION: u8 = 2;
const BOUND_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "exemplar-clustering",
    version,
    about = "Diameter-bounded clustering with jointly selected exemplars"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cluster with full coverage: exemplars are added until every instance
    /// has one within epsilon.
    Scce(RunArgs),
    /// Cluster under an exemplar budget, maximizing how many instances are
    /// covered; the rest are reported uncovered.
    Sccrb(SccrbArgs),
    /// Exact optima for small instances by exhaustive search.
    Oracle(OracleArgs),
    /// Re-check a saved solution document against its input.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct InputArgs {
    /// Input CSV file.
    #[arg(long, value_name = "FILE")]
    input: PathBuf,

    /// Input layout.
    #[arg(long, value_enum, default_value_t = FormatArg::VectorsCsv)]
    format: FormatArg,

    /// Treat the first non-blank line as a header.
    #[arg(long)]
    has_header: bool,

    /// Column holding instance labels: a 0-based index or a header name.
    #[arg(long, value_name = "COLUMN")]
    label_column: Option<String>,

    /// Fail instead of warning when a supplied matrix breaks the triangle
    /// inequality on sampled triples.
    #[arg(long)]
    strict_metric: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    /// One instance per row, cells are coordinates.
    VectorsCsv,
    /// Full square distance matrix.
    MatrixCsv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Euclidean,
    CosineAngular,
    Precomputed,
}

impl MetricArg {
    fn kind(self) -> MetricKind {
        match self {
            MetricArg::Euclidean => MetricKind::Euclidean,
            MetricArg::CosineAngular => MetricKind::CosineAngular,
            MetricArg::Precomputed => MetricKind::Precomputed,
        }
    }
}

#[derive(Args)]
struct RunArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Number of blocks.
    #[arg(long)]
    k: usize,

    /// Neighborhood radius.
    #[arg(long)]
    epsilon: f64,

    /// Distance metric. Defaults to euclidean for vector input; matrix
    /// input always uses precomputed.
    #[arg(long, value_enum)]
    metric: Option<MetricArg>,

    /// Instance the block search starts from.
    #[arg(long, default_value_t = 0)]
    seed_index: usize,

    /// Write the solution document here.
    #[arg(long, value_name = "FILE")]
    output: Option<PathBuf>,

    /// Compare the run against exhaustively computed optima (small
    /// instances only) and fail if any guarantee is violated.
    #[arg(long)]
    verify_exact: bool,
}

#[derive(Args)]
struct SccrbArgs {
    #[command(flatten)]
    run: RunArgs,

    /// Exemplar budget.
    #[arg(long)]
    beta: usize,
}

#[derive(Args)]
struct OracleArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Distance metric. Defaults to euclidean for vector input; matrix
    /// input always uses precomputed.
    #[arg(long, value_enum)]
    metric: Option<MetricArg>,

    /// Report the exact minimum achievable block diameter for this k.
    #[arg(long)]
    k: Option<usize>,

    /// Report the exact minimum exemplar count for this radius.
    #[arg(long)]
    epsilon: Option<f64>,

    /// Report the exact coverage optimum for this budget (needs --epsilon).
    #[arg(long)]
    beta: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,

    /// Solution document produced by `scce` or `sccrb`.
    #[arg(long, value_name = "FILE")]
    solution: PathBuf,
}

struct Failure {
    message: String,
    code: u8,
}

impl Failure {
    fn validation(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: VALIDATION,
        }
    }

    fn bound(message: impl Into<String>) -> Self {
        Failure {
            message: message.into(),
            code: BOUND_VIOLATION,
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::validation(error.to_string())
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn dispatch(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Scce(args) => run_command(args, None),
        Command::Sccrb(args) => run_command(args.run, Some(args.beta)),
        Command::Oracle(args) => oracle_command(args),
        Command::Verify(args) => verify_command(args),
    }
}

fn resolve_metric(format: FormatArg, metric: Option<MetricKind>) -> Result<MetricKind, Failure> {
    match (format, metric) {
        (FormatArg::MatrixCsv, None | Some(MetricKind::Precomputed)) => Ok(MetricKind::Precomputed),
        (FormatArg::MatrixCsv, Some(other)) => Err(Failure::validation(format!(
            "matrix input always uses the precomputed metric, not {other}"
        ))),
        (FormatArg::VectorsCsv, Some(MetricKind::Precomputed)) => Err(Failure::validation(
            "the precomputed metric needs --format matrix-csv",
        )),
        (FormatArg::VectorsCsv, other) => Ok(other.unwrap_or(MetricKind::Euclidean)),
    }
}

fn load_input(
    args: &InputArgs,
    metric: Option<MetricKind>,
) -> Result<(Dataset, DistanceMatrix), Failure> {
    let resolved = resolve_metric(args.format, metric)?;
    let label_column = args
        .label_column
        .as_deref()
        .map(|raw| match raw.parse::<usize>() {
            Ok(index) => LabelColumn::Index(index),
            Err(_) => LabelColumn::Name(raw.to_string()),
        });
    let spec = InputSpec {
        path: args.input.clone(),
        format: match args.format {
            FormatArg::VectorsCsv => InputFormat::VectorsCsv,
            FormatArg::MatrixCsv => InputFormat::MatrixCsv,
        },
        has_header: args.has_header,
        label_column,
    };
    let (dataset, matrix) = load_dataset(&spec)?;
    let dm = match matrix {
        Some(dm) => {
            let violations = dm.triangle_spot_check(TRIANGLE_SAMPLES);
            if let Some(first) = violations.first() {
                let message = format!(
                    "{}: {} sampled triangle-inequality violation(s); first: {}",
                    args.input.display(),
                    violations.len(),
                    (*first).into_error()
                );
                if args.strict_metric {
                    return Err(Failure::validation(message));
                }
                eprintln!("warning: {message}");
            }
            dm
        }
        None => DistanceMatrix::compute(&dataset, resolved)?,
    };
    Ok((dataset, dm))
}

fn run_command(args: RunArgs, beta: Option<usize>) -> Result<(), Failure> {
    let (dataset, dm) = load_input(&args.input, args.metric.map(MetricArg::kind))?;
    let epsilon = Epsilon::new(args.epsilon)?;

    let (solution, timings) = match beta {
        None => run_scce(&dataset, &dm, args.k, epsilon, args.seed_index)?,
        Some(beta) => run_sccrb(&dataset, &dm, args.k, epsilon, beta, args.seed_index)?,
    };

    let oracle = if args.verify_exact {
        Some(compute_oracle(&dm, &solution, epsilon)?)
    } else {
        None
    };
    let report = summarize(&dm, &solution, oracle.as_ref(), Some(timings))?;

    if let Some(path) = &args.output {
        let doc = SolutionDocument::new(&solution, report.clone());
        write_solution(path, &doc)?;
    }
    print_run_summary(&solution, &report, args.output.as_deref());

    let mut failures: Vec<String> = Vec::new();
    if let Some(oracle) = &oracle {
        failures.extend(bound_failures(&solution, &report, oracle, epsilon));
    }
    let structural = verify_solution(&dm, &solution);
    for check in &structural.checks {
        for violation in &check.violations {
            failures.push(format!("{}: {violation}", check.name));
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        for failure in &failures {
            eprintln!("guarantee violated: {failure}");
        }
        Err(Failure::bound(format!(
            "{} guarantee violation(s)",
            failures.len()
        )))
    }
}

/// Exhaustive optima for whatever the size guards allow; skipped searches
/// are announced on stderr rather than failing the run.
fn compute_oracle(
    dm: &DistanceMatrix,
    solution: &ClusteringSolution,
    epsilon: Epsilon,
) -> Result<OracleResult, Failure> {
    let n = dm.n();
    let k = solution.params.k;
    let mut oracle = OracleResult::default();

    if n <= MAX_DIAMETER_INSTANCES && k <= MAX_DIAMETER_K {
        oracle.diameter = Some(exact_min_diameter(dm, k)?);
    } else {
        eprintln!(
            "note: diameter optimum skipped, needs n <= {MAX_DIAMETER_INSTANCES} \
             and k <= {MAX_DIAMETER_K} (instance has n = {n}, k = {k})"
        );
    }

    let coverable = n <= MAX_COVER_UNIVERSE;
    match solution.params.beta {
        None if coverable => {
            let system = SetSystem::from_neighborhoods(&build_neighborhoods(dm, epsilon));
            oracle.exemplars = Some(exact_min_exemplars(&system)?);
        }
        None => {
            eprintln!(
                "note: exemplar optimum skipped, needs n <= {MAX_COVER_UNIVERSE} \
                 (instance has n = {n})"
            );
        }
        Some(beta) if coverable && beta <= MAX_COVER_BUDGET => {
            let system = SetSystem::from_neighborhoods(&build_neighborhoods(dm, epsilon));
            oracle.coverage = Some(exact_max_coverage(&system, beta)?);
        }
        Some(beta) => {
            eprintln!(
                "note: coverage optimum skipped, needs n <= {MAX_COVER_UNIVERSE} and \
                 beta <= {MAX_COVER_BUDGET} (instance has n = {n}, beta = {beta})"
            );
        }
    }
    Ok(oracle)
}

/// Checks the run against its three guarantees wherever the corresponding
/// exact optimum is available. Comparisons are exact, no tolerance.
fn bound_failures(
    solution: &ClusteringSolution,
    report: &SolutionReport,
    oracle: &OracleResult,
    epsilon: Epsilon,
) -> Vec<String> {
    let mut failures = Vec::new();
    if let Some(diameter) = &oracle.diameter {
        let bound = 2.0 * (diameter.d_star + epsilon.value());
        let achieved = report.global.max_diameter;
        if achieved > bound {
            failures.push(format!(
                "max cluster diameter {achieved} exceeds 2 * (d_star + epsilon) = {bound}"
            ));
        }
    }
    if let Some(exemplars) = &oracle.exemplars {
        let cap = harmonic_number(solution.n()) * exemplars.n_star as f64;
        let total = solution.total_exemplars();
        if total as f64 > cap {
            failures.push(format!(
                "{total} exemplars exceed H_n * n_star = {cap} (n_star = {})",
                exemplars.n_star
            ));
        }
    }
    if let Some(coverage) = &oracle.coverage {
        let floor = (1.0 - (-1.0f64).exp()) * coverage.q_star as f64;
        let covered = solution.covered_count();
        if (covered as f64) < floor {
            failures.push(format!(
                "{covered} covered instances fall below (1 - 1/e) * q_star = {floor} \
                 (q_star = {})",
                coverage.q_star
            ));
        }
    }
    failures
}

fn print_run_summary(
    solution: &ClusteringSolution,
    report: &SolutionReport,
    output: Option<&Path>,
) {
    let n = solution.n();
    let algorithm = if solution.params.beta.is_some() {
        "sccrb"
    } else {
        "scce"
    };
    println!("algorithm          {algorithm}");
    println!("instances          {n}");
    println!("metric             {}", solution.params.metric);
    println!("k                  {}", solution.params.k);
    println!("epsilon            {}", solution.params.epsilon.value());
    if let Some(beta) = solution.params.beta {
        println!("beta               {beta}");
    }
    println!("seed index         {}", solution.params.seed_index);
    println!("max diameter       {}", report.global.max_diameter);
    println!("total exemplars    {}", report.global.total_exemplars);
    println!(
        "covered            {}/{} ({:.1}%)",
        solution.covered_count(),
        n,
        report.global.covered_fraction * 100.0
    );
    if let Some(ratios) = &report.ratios {
        if let Some(ratio) = ratios.diameter_vs_bound {
            println!("diameter/bound     {ratio:.4}");
        }
        if let Some(ratio) = ratios.exemplars_vs_optimum {
            println!("exemplars/optimum  {ratio:.4}");
        }
        if let Some(ratio) = ratios.coverage_vs_optimum {
            println!("coverage/optimum   {ratio:.4}");
        }
    }
    if let Some(timing) = &report.timing {
        print_timings(timing);
    }
    if let Some(path) = output {
        println!("solution written to {}", path.display());
    }
}

fn print_timings(timing: &StepTimings) {
    println!(
        "time               {:.1} ms (blocks {:.1}, neighborhoods {:.1}, selection {:.1}, \
         assignment {:.1})",
        timing.total_ms,
        timing.block_partition_ms,
        timing.neighborhoods_ms,
        timing.exemplar_selection_ms,
        timing.assignment_ms
    );
}

fn oracle_command(args: OracleArgs) -> Result<(), Failure> {
    if args.beta.is_some() && args.epsilon.is_none() {
        return Err(Failure::validation("--beta needs --epsilon"));
    }
    if args.k.is_none() && args.epsilon.is_none() {
        return Err(Failure::validation(
            "nothing to compute: pass --k for the diameter optimum and/or --epsilon \
             (optionally with --beta) for covering optima",
        ));
    }
    let (_dataset, dm) = load_input(&args.input, args.metric.map(MetricArg::kind))?;
    println!("instances          {}", dm.n());

    if let Some(k) = args.k {
        let optimum = exact_min_diameter(&dm, k)?;
        println!("d_star             {} (k = {k})", optimum.d_star);
        println!("  witness blocks   {:?}", optimum.witness);
    }
    if let Some(radius) = args.epsilon {
        let epsilon = Epsilon::new(radius)?;
        let system = SetSystem::from_neighborhoods(&build_neighborhoods(&dm, epsilon));
        let optimum = exact_min_exemplars(&system)?;
        println!("n_star             {} (epsilon = {radius})", optimum.n_star);
        println!("  witness          {:?}", optimum.witness);
        if let Some(beta) = args.beta {
            let optimum = exact_max_coverage(&system, beta)?;
            println!(
                "q_star             {} (epsilon = {radius}, beta = {beta})",
                optimum.q_star
            );
            println!("  witness          {:?}", optimum.witness);
        }
    }
    Ok(())
}

fn verify_command(args: VerifyArgs) -> Result<(), Failure> {
    let doc = read_solution(&args.solution)?;
    let solution = doc.to_solution()?;
    let (_dataset, dm) = load_input(&args.input, Some(solution.params.metric))?;
    if dm.n() != solution.n() {
        return Err(Failure::validation(format!(
            "solution covers {} instances but the input has {}",
            solution.n(),
            dm.n()
        )));
    }

    let report = verify_solution(&dm, &solution);
    for check in &report.checks {
        if check.passed() {
            println!("check {:<24} ok", check.name);
        } else {
            println!(
                "check {:<24} FAILED ({} violation(s))",
                check.name,
                check.violations.len()
            );
            for violation in &check.violations {
                println!("  {violation}");
            }
        }
    }
    if report.all_passed() {
        println!("all checks passed");
        Ok(())
    } else {
        Err(Failure::bound(format!(
            "{} violation(s)",
            report.violation_count()
        )))
    }
}
