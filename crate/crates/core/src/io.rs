//! Dataset loading from CSV files and the serialized solution document.
//!
//! Two input layouts are supported: one row of coordinates per instance
//! (`VectorsCsv`, optionally with a header and a label column) and a full
//! square distance matrix (`MatrixCsv`). All column indices are 0-based,
//! in file order, matching instance ids elsewhere in the library.
//!
//! Solutions serialize to a single JSON document. Reals are written with 17
//! significant digits, enough for every finite double to round-trip exactly,
//! so re-reading a document reproduces the solution bit for bit.

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::ser::{Formatter, PrettyFormatter, Serializer};

use crate::dataset::Dataset;
use crate::distance::{DistanceMatrix, MetricKind};
use crate::error::{Error, Result};
use crate::gonzalez::BlockPartition;
use crate::neighborhood::Epsilon;
use crate::pipeline::{ClusteringSolution, SolutionParams};
use crate::report::SolutionReport;

/// Document layout understood by [`parse_solution`].
pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InputFormat {
    /// One instance per row, each cell a coordinate.
    VectorsCsv,
    /// A full square distance matrix, entry (i, j) in row i column j.
    MatrixCsv,
}

/// Which column of a vectors file holds instance labels instead of a
/// coordinate. `Name` requires a header row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelColumn {
    Index(usize),
    Name(String),
}

#[derive(Debug, Clone)]
pub struct InputSpec {
    pub path: PathBuf,
    pub format: InputFormat,
    pub has_header: bool,
    pub label_column: Option<LabelColumn>,
}

/// Loads a dataset from disk. Matrix input also yields the distance matrix,
/// already validated; vector input leaves metric choice to the caller.
pub fn load_dataset(spec: &InputSpec) -> Result<(Dataset, Option<DistanceMatrix>)> {
    let path = spec.path.display().to_string();
    let text = fs::read_to_string(&spec.path).map_err(|source| Error::FileIo {
        path: path.clone(),
        source,
    })?;
    match spec.format {
        InputFormat::VectorsCsv => Ok((load_vectors(spec, &path, &text)?, None)),
        InputFormat::MatrixCsv => {
            let (dataset, dm) = load_matrix(spec, &path, &text)?;
            Ok((dataset, Some(dm)))
        }
    }
}

fn parse_err(path: &str, line: usize, message: String) -> Error {
    Error::Parse {
        path: path.to_string(),
        line,
        message,
    }
}

/// Trimmed cells of every non-blank line, with 1-based file line numbers.
fn csv_rows(text: &str) -> Vec<(usize, Vec<&str>)> {
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(idx, line)| (idx + 1, line.split(',').map(str::trim).collect()))
        .collect()
}

fn parse_cell(path: &str, line: usize, column: usize, cell: &str) -> Result<f64> {
    let value: f64 = cell.parse().map_err(|_| {
        parse_err(
            path,
            line,
            format!("column {column}: cannot parse {cell:?} as a number"),
        )
    })?;
    if !value.is_finite() {
        return Err(parse_err(
            path,
            line,
            format!("column {column}: non-finite value {cell:?}"),
        ));
    }
    Ok(value)
}

fn load_vectors(spec: &InputSpec, path: &str, text: &str) -> Result<Dataset> {
    let mut rows = csv_rows(text).into_iter();
    let header = if spec.has_header { rows.next() } else { None };

    let label_index = match &spec.label_column {
        None => None,
        Some(LabelColumn::Index(index)) => Some(*index),
        Some(LabelColumn::Name(name)) => {
            let Some((header_line, cells)) = &header else {
                return Err(parse_err(
                    path,
                    1,
                    format!("label column {name:?} needs a header row"),
                ));
            };
            let found = cells.iter().position(|cell| cell == name).ok_or_else(|| {
                parse_err(
                    path,
                    *header_line,
                    format!("header has no column named {name:?}"),
                )
            })?;
            Some(found)
        }
    };

    let mut vectors: Vec<Vec<f64>> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let mut expected_width: Option<usize> = None;
    for (line, cells) in rows {
        match expected_width {
            Some(width) if cells.len() != width => {
                return Err(parse_err(
                    path,
                    line,
                    format!("expected {width} columns, found {}", cells.len()),
                ));
            }
            Some(_) => {}
            None => expected_width = Some(cells.len()),
        }
        if label_index.is_some_and(|label| label >= cells.len()) {
            return Err(parse_err(
                path,
                line,
                format!(
                    "label column {} is out of range for {} columns",
                    label_index.unwrap(),
                    cells.len()
                ),
            ));
        }
        let mut row = Vec::with_capacity(cells.len());
        for (column, cell) in cells.iter().enumerate() {
            if Some(column) == label_index {
                labels.push((*cell).to_string());
            } else {
                row.push(parse_cell(path, line, column, cell)?);
            }
        }
        vectors.push(row);
    }

    let dataset = Dataset::from_vectors(&vectors)?;
    if label_index.is_some() {
        dataset.with_labels(labels)
    } else {
        Ok(dataset)
    }
}

fn load_matrix(spec: &InputSpec, path: &str, text: &str) -> Result<(Dataset, DistanceMatrix)> {
    if spec.label_column.is_some() {
        return Err(parse_err(
            path,
            1,
            "matrix input does not take a label column".to_string(),
        ));
    }
    let mut rows = csv_rows(text).into_iter();
    if spec.has_header {
        rows.next();
    }
    let rows: Vec<(usize, Vec<&str>)> = rows.collect();
    let n = rows.len();
    if n == 0 {
        return Err(Error::EmptyDataset);
    }
    let mut entries = Vec::with_capacity(n * n);
    for (line, cells) in &rows {
        if cells.len() != n {
            return Err(parse_err(
                path,
                *line,
                format!(
                    "matrix with {n} rows needs {n} columns per row, found {}",
                    cells.len()
                ),
            ));
        }
        for (column, cell) in cells.iter().enumerate() {
            entries.push(parse_cell(path, *line, column, cell)?);
        }
    }
    let dm = DistanceMatrix::from_precomputed(n, entries)?;
    Ok((Dataset::opaque(n)?, dm))
}

/// `params` section of the document. `algorithm` is redundant with `beta`
/// being present and is cross-checked on read.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParamsDoc {
    pub algorithm: String,
    pub k: usize,
    pub epsilon: Epsilon,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<usize>,
    pub metric: MetricKind,
    pub seed_index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlocksDoc {
    pub heads: Vec<usize>,
    pub assignment: Vec<usize>,
}

/// The on-disk solution: everything needed to reconstruct and re-verify a
/// run. `covered_by` maps covered instance id to its exemplar id; uncovered
/// instances are listed separately and never appear as keys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SolutionDocument {
    pub schema_version: String,
    pub params: ParamsDoc,
    pub blocks: BlocksDoc,
    pub clusters: Vec<Vec<usize>>,
    pub exemplars: Vec<Vec<usize>>,
    pub covered_by: BTreeMap<usize, usize>,
    pub uncovered: Vec<usize>,
    pub report: SolutionReport,
}

impl SolutionDocument {
    pub fn new(solution: &ClusteringSolution, report: SolutionReport) -> Self {
        let params = &solution.params;
        let algorithm = if params.beta.is_some() {
            "sccrb"
        } else {
            "scce"
        };
        let covered_by = solution
            .covered_by
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.map(|e| (i, e)))
            .collect();
        SolutionDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            params: ParamsDoc {
                algorithm: algorithm.to_string(),
                k: params.k,
                epsilon: params.epsilon,
                beta: params.beta,
                metric: params.metric,
                seed_index: params.seed_index,
            },
            blocks: BlocksDoc {
                heads: solution.blocks.heads.clone(),
                assignment: solution.blocks.assignment.clone(),
            },
            clusters: solution.clusters.clone(),
            exemplars: solution.exemplars.clone(),
            covered_by,
            uncovered: solution.uncovered.clone(),
            report,
        }
    }

    /// Rebuilds the in-memory solution. Checks shapes and id ranges so the
    /// result is safe to index; semantic invariants are left to
    /// [`crate::pipeline::verify_solution`].
    pub fn to_solution(&self) -> Result<ClusteringSolution> {
        let fail = |message: String| Error::Document(message);
        match (self.params.algorithm.as_str(), self.params.beta) {
            ("scce", None) | ("sccrb", Some(_)) => {}
            (algorithm, beta) => {
                return Err(fail(format!(
                    "algorithm {algorithm:?} is inconsistent with beta {beta:?}"
                )));
            }
        }
        let k = self.params.k;
        let n = self.blocks.assignment.len();
        if self.blocks.heads.len() != k {
            return Err(fail(format!(
                "{} block heads for k = {k}",
                self.blocks.heads.len()
            )));
        }
        if self.clusters.len() != k {
            return Err(fail(format!(
                "{} clusters for k = {k}",
                self.clusters.len()
            )));
        }
        if self.exemplars.len() != k {
            return Err(fail(format!(
                "{} exemplar lists for k = {k}",
                self.exemplars.len()
            )));
        }
        if let Some(&head) = self.blocks.heads.iter().find(|&&h| h >= n) {
            return Err(fail(format!(
                "block head {head} is out of range for n = {n}"
            )));
        }
        if let Some(&block) = self.blocks.assignment.iter().find(|&&b| b >= k) {
            return Err(fail(format!(
                "block id {block} is out of range for k = {k}"
            )));
        }
        let lists = [("clusters", &self.clusters), ("exemplars", &self.exemplars)];
        for (section, lists) in lists {
            if let Some(&id) = lists.iter().flatten().find(|&&i| i >= n) {
                return Err(fail(format!(
                    "{section} entry {id} is out of range for n = {n}"
                )));
            }
        }
        if let Some(&id) = self.uncovered.iter().find(|&&i| i >= n) {
            return Err(fail(format!(
                "uncovered entry {id} is out of range for n = {n}"
            )));
        }
        let mut covered_by = vec![None; n];
        for (&i, &e) in &self.covered_by {
            if i >= n || e >= n {
                return Err(fail(format!(
                    "covered_by entry {i} -> {e} is out of range for n = {n}"
                )));
            }
            covered_by[i] = Some(e);
        }
        Ok(ClusteringSolution {
            params: SolutionParams {
                k,
                epsilon: self.params.epsilon,
                beta: self.params.beta,
                metric: self.params.metric,
                seed_index: self.params.seed_index,
            },
            blocks: BlockPartition {
                k,
                heads: self.blocks.heads.clone(),
                assignment: self.blocks.assignment.clone(),
            },
            clusters: self.clusters.clone(),
            exemplars: self.exemplars.clone(),
            covered_by,
            uncovered: self.uncovered.clone(),
        })
    }
}

/// Pretty printer that writes reals with 17 significant digits. JSON keeps
/// no binary floats, so this is what makes documents round-trip exactly.
struct FullPrecisionPretty {
    inner: PrettyFormatter<'static>,
}

impl FullPrecisionPretty {
    fn new() -> Self {
        FullPrecisionPretty {
            inner: PrettyFormatter::with_indent(b"  "),
        }
    }
}

impl Formatter for FullPrecisionPretty {
    fn write_f64<W>(&mut self, writer: &mut W, value: f64) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        write!(writer, "{value:.16e}")
    }

    fn begin_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_array(writer)
    }

    fn end_array<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_array(writer)
    }

    fn begin_array_value<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_array_value(writer, first)
    }

    fn end_array_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_array_value(writer)
    }

    fn begin_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object(writer)
    }

    fn end_object<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_object(writer)
    }

    fn begin_object_key<W>(&mut self, writer: &mut W, first: bool) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object_key(writer, first)
    }

    fn begin_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.begin_object_value(writer)
    }

    fn end_object_value<W>(&mut self, writer: &mut W) -> io::Result<()>
    where
        W: ?Sized + io::Write,
    {
        self.inner.end_object_value(writer)
    }
}

/// Serializes a document to its canonical text form: 2-space indented JSON,
/// reals at full precision, trailing newline. Everything except the timing
/// section is a pure function of the inputs.
pub fn render_solution(doc: &SolutionDocument) -> Result<String> {
    let mut buffer = Vec::new();
    let mut serializer = Serializer::with_formatter(&mut buffer, FullPrecisionPretty::new());
    doc.serialize(&mut serializer)?;
    buffer.push(b'\n');
    Ok(String::from_utf8(buffer).expect("serialized JSON is UTF-8"))
}

pub fn write_solution(path: &Path, doc: &SolutionDocument) -> Result<()> {
    let text = render_solution(doc)?;
    fs::write(path, text).map_err(|source| Error::FileIo {
        path: path.display().to_string(),
        source,
    })
}

/// Parses a document and checks its schema version. Deeper validation
/// happens in [`SolutionDocument::to_solution`].
pub fn parse_solution(text: &str) -> Result<SolutionDocument> {
    let doc: SolutionDocument = serde_json::from_str(text)?;
    if doc.schema_version != SCHEMA_VERSION {
        return Err(Error::SchemaVersion(doc.schema_version));
    }
    Ok(doc)
}

pub fn read_solution(path: &Path) -> Result<SolutionDocument> {
    let text = fs::read_to_string(path).map_err(|source| Error::FileIo {
        path: path.display().to_string(),
        source,
    })?;
    parse_solution(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pipeline::{run_scce, run_sccrb, verify_solution};
    use crate::report::summarize;
    use std::io::Write as _;

    fn temp_csv(contents: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::NamedTempFile::new().unwrap();
        file.write_all(contents.as_bytes()).unwrap();
        file.flush().unwrap();
        file
    }

    fn spec(file: &tempfile::NamedTempFile, format: InputFormat) -> InputSpec {
        InputSpec {
            path: file.path().to_path_buf(),
            format,
            has_header: false,
            label_column: None,
        }
    }

    #[test]
    fn loads_plain_vectors() {
        let file = temp_csv("0.0,0.0\n1.0,0.0\n0.0,2.5\n");
        let (ds, dm) = load_dataset(&spec(&file, InputFormat::VectorsCsv)).unwrap();
        assert!(dm.is_none());
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.dim(), Some(2));
        assert_eq!(ds.vector(2).unwrap(), &[0.0, 2.5]);
        assert!(ds.labels().is_none());
    }

    #[test]
    fn loads_labeled_vectors_by_header_name() {
        let file = temp_csv("x,name,y\n0.5,first,1.5\n2.5, second ,3.5\n");
        let mut spec = spec(&file, InputFormat::VectorsCsv);
        spec.has_header = true;
        spec.label_column = Some(LabelColumn::Name("name".to_string()));
        let (ds, _) = load_dataset(&spec).unwrap();
        assert_eq!(ds.len(), 2);
        assert_eq!(ds.dim(), Some(2));
        assert_eq!(ds.vector(1).unwrap(), &[2.5, 3.5]);
        assert_eq!(ds.labels().unwrap(), &["first", "second"]);
    }

    #[test]
    fn loads_labeled_vectors_by_index() {
        let file = temp_csv("a,1.0\nb,2.0\n");
        let mut spec = spec(&file, InputFormat::VectorsCsv);
        spec.label_column = Some(LabelColumn::Index(0));
        let (ds, _) = load_dataset(&spec).unwrap();
        assert_eq!(ds.labels().unwrap(), &["a", "b"]);
        assert_eq!(ds.vector(0).unwrap(), &[1.0]);
    }

    #[test]
    fn label_by_name_requires_a_header() {
        let file = temp_csv("a,1.0\n");
        let mut spec = spec(&file, InputFormat::VectorsCsv);
        spec.label_column = Some(LabelColumn::Name("name".to_string()));
        let err = load_dataset(&spec).unwrap_err();
        assert!(err.to_string().contains("needs a header row"));
    }

    #[test]
    fn bad_cell_is_reported_with_line_and_column() {
        let file = temp_csv("1.5\n\n2.5\noops\n");
        let err = load_dataset(&spec(&file, InputFormat::VectorsCsv)).unwrap_err();
        let Error::Parse { line, message, .. } = &err else {
            panic!("expected a parse error, got {err:?}");
        };
        // The blank line is skipped but still counted.
        assert_eq!(*line, 4);
        assert!(message.contains("column 0"));
        assert!(message.contains("oops"));
    }

    #[test]
    fn ragged_vector_rows_are_rejected() {
        let file = temp_csv("1.0,2.0\n3.0\n");
        let err = load_dataset(&spec(&file, InputFormat::VectorsCsv)).unwrap_err();
        let Error::Parse { line, message, .. } = &err else {
            panic!("expected a parse error, got {err:?}");
        };
        assert_eq!(*line, 2);
        assert!(message.contains("expected 2 columns, found 1"));
    }

    #[test]
    fn infinite_values_are_rejected() {
        let file = temp_csv("1.0\ninf\n");
        let err = load_dataset(&spec(&file, InputFormat::VectorsCsv)).unwrap_err();
        assert!(err.to_string().contains("non-finite"));
    }

    #[test]
    fn loads_a_square_matrix() {
        let file = temp_csv("0,1,4\n1,0,3\n4,3,0\n");
        let (ds, dm) = load_dataset(&spec(&file, InputFormat::MatrixCsv)).unwrap();
        let dm = dm.unwrap();
        assert_eq!(ds.len(), 3);
        assert_eq!(ds.dim(), None);
        assert_eq!(dm.metric(), MetricKind::Precomputed);
        assert_eq!(dm.get(0, 2), 4.0);
    }

    #[test]
    fn non_square_matrix_is_rejected() {
        let file = temp_csv("0,1,4\n1,0\n4,3,0\n");
        let err = load_dataset(&spec(&file, InputFormat::MatrixCsv)).unwrap_err();
        let Error::Parse { line, message, .. } = &err else {
            panic!("expected a parse error, got {err:?}");
        };
        assert_eq!(*line, 2);
        assert!(message.contains("3 columns"));
    }

    #[test]
    fn asymmetric_matrix_is_rejected() {
        let file = temp_csv("0,5\n4,0\n");
        let err = load_dataset(&spec(&file, InputFormat::MatrixCsv)).unwrap_err();
        assert!(matches!(
            err,
            Error::AsymmetricDistance { row: 1, col: 0, .. }
        ));
    }

    #[test]
    fn matrix_input_rejects_label_columns() {
        let file = temp_csv("0,1\n1,0\n");
        let mut spec = spec(&file, InputFormat::MatrixCsv);
        spec.label_column = Some(LabelColumn::Index(0));
        let err = load_dataset(&spec).unwrap_err();
        assert!(err.to_string().contains("label column"));
    }

    #[test]
    fn missing_file_reports_the_path() {
        let spec = InputSpec {
            path: PathBuf::from("/nonexistent/data.csv"),
            format: InputFormat::VectorsCsv,
            has_header: false,
            label_column: None,
        };
        let err = load_dataset(&spec).unwrap_err();
        assert!(matches!(err, Error::FileIo { .. }));
        assert!(err.to_string().contains("/nonexistent/data.csv"));
    }

    fn line_solution() -> (DistanceMatrix, ClusteringSolution, SolutionDocument) {
        let rows: Vec<Vec<f64>> = [0.0, 1.0, 10.0, 11.0].iter().map(|&x| vec![x]).collect();
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let epsilon = Epsilon::new(1.0).unwrap();
        let (sol, timings) = run_scce(&ds, &dm, 2, epsilon, 0).unwrap();
        let report = summarize(&dm, &sol, None, Some(timings)).unwrap();
        let doc = SolutionDocument::new(&sol, report);
        (dm, sol, doc)
    }

    #[test]
    fn documents_round_trip_exactly() {
        let (dm, sol, doc) = line_solution();
        let file = tempfile::NamedTempFile::new().unwrap();
        write_solution(file.path(), &doc).unwrap();
        let reread = read_solution(file.path()).unwrap();
        assert_eq!(reread, doc);

        let rebuilt = reread.to_solution().unwrap();
        assert_eq!(rebuilt, sol);
        assert!(verify_solution(&dm, &rebuilt).all_passed());
    }

    #[test]
    fn rendering_is_reproducible_and_ordered() {
        let (_, _, doc) = line_solution();
        let first = render_solution(&doc).unwrap();
        let second = render_solution(&doc).unwrap();
        assert_eq!(first, second);
        assert!(first.ends_with('\n'));

        let keys = [
            "\"schema_version\"",
            "\"params\"",
            "\"blocks\"",
            "\"clusters\"",
            "\"exemplars\"",
            "\"covered_by\"",
            "\"uncovered\"",
            "\"report\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| first.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn full_precision_reals_survive_the_round_trip() {
        let awkward = 0.1f64 + 0.2f64;
        let (_, _, mut doc) = line_solution();
        doc.params.epsilon = Epsilon::new(awkward).unwrap();
        let text = render_solution(&doc).unwrap();
        let reread = parse_solution(&text).unwrap();
        assert_eq!(reread.params.epsilon.value().to_bits(), awkward.to_bits());
    }

    #[test]
    fn unsupported_schema_versions_are_refused() {
        let (_, _, doc) = line_solution();
        let text = render_solution(&doc)
            .unwrap()
            .replace("\"schema_version\": \"1\"", "\"schema_version\": \"9\"");
        assert!(matches!(
            parse_solution(&text),
            Err(Error::SchemaVersion(v)) if v == "9"
        ));
    }

    #[test]
    fn malformed_json_is_a_json_error() {
        assert!(matches!(parse_solution("{ not json"), Err(Error::Json(_))));
    }

    #[test]
    fn algorithm_and_beta_must_agree() {
        let (_, _, mut doc) = line_solution();
        doc.params.algorithm = "sccrb".to_string();
        let err = doc.to_solution().unwrap_err();
        assert!(matches!(err, Error::Document(_)));
        assert!(err.to_string().contains("inconsistent with beta"));
    }

    #[test]
    fn out_of_range_ids_are_refused() {
        let (_, _, mut doc) = line_solution();
        doc.clusters[0].push(99);
        let err = doc.to_solution().unwrap_err();
        assert!(err.to_string().contains("out of range"));
    }

    #[test]
    fn budgeted_documents_round_trip() {
        let rows: Vec<Vec<f64>> = [0.0, 0.5, 10.0, 10.5, 100.0]
            .iter()
            .map(|&x| vec![x])
            .collect();
        let ds = Dataset::from_vectors(&rows).unwrap();
        let dm = DistanceMatrix::compute(&ds, MetricKind::Euclidean).unwrap();
        let epsilon = Epsilon::new(1.0).unwrap();
        let (sol, _) = run_sccrb(&ds, &dm, 2, epsilon, 2, 0).unwrap();
        let report = summarize(&dm, &sol, None, None).unwrap();
        let doc = SolutionDocument::new(&sol, report);
        assert_eq!(doc.params.algorithm, "sccrb");
        assert_eq!(doc.params.beta, Some(2));
        assert!(!doc.covered_by.contains_key(&4));
        assert_eq!(doc.uncovered, vec![4]);

        let text = render_solution(&doc).unwrap();
        let rebuilt = parse_solution(&text).unwrap().to_solution().unwrap();
        assert_eq!(rebuilt, sol);
    }
}
