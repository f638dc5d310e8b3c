//! File formats: adjacency matrices, cycles, colorings and verification reports.
//!
//! Adjacency files hold the vertex count on the first line followed by one
//! line of `0`/`1` characters per vertex. Cycles are written as one line of
//! 1-based vertex indices. Colorings are written as `vertex,color` lines with
//! both numbers 1-based.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    BottleneckReport, CliqueBound, ColoringReport, EulerianReport, FullGraphStats, HamiltonianResult, SolubilityGraph,
};
use crate::oracle::{AppendixComparison, CountsReport, InvolutionIdentity};
use crate::scan::ScanReport;
use crate::solubilizer::AxiomReport;

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("line 1: expected a vertex count, found {0:?}")]
    Header(String),
    #[error("line {line}: expected {expected} characters, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("line {line}, column {column}: expected '0' or '1'")]
    BadCharacter { line: usize, column: usize },
    #[error("expected {expected} matrix rows, found {found}")]
    RowCount { expected: usize, found: usize },
    #[error("matrix is not symmetric at ({0}, {1})")]
    Asymmetric(usize, usize),
    #[error("nonzero diagonal entry at vertex {0}")]
    NonzeroDiagonal(usize),
}

pub fn write_adjacency<W: Write>(graph: &SolubilityGraph, mut w: W) -> io::Result<()> {
    let n = graph.vertex_count();
    writeln!(w, "{n}")?;
    let mut line = Vec::with_capacity(n + 1);
    for i in 0..n {
        line.clear();
        line.extend((0..n).map(|j| if graph.has_edge(i, j) { b'1' } else { b'0' }));
        line.push(b'\n');
        w.write_all(&line)?;
    }
    w.flush()
}

pub fn export_adjacency(graph: &SolubilityGraph, path: &Path) -> io::Result<()> {
    write_adjacency(graph, BufWriter::new(fs::File::create(path)?))
}

/// Parses the adjacency format. Vertex indices in diagnostics are 1-based,
/// matching the cycle and coloring files.
pub fn parse_adjacency(text: &str) -> Result<SolubilityGraph, ImportError> {
    let mut lines = text.lines();
    let header = lines.next().unwrap_or("");
    let n: usize = header.trim().parse().map_err(|_| ImportError::Header(header.to_string()))?;
    let mut graph = SolubilityGraph::empty(n);
    let mut rows = 0;
    for (k, line) in lines.enumerate() {
        if k >= n {
            if line.is_empty() {
                continue;
            }
            return Err(ImportError::RowCount { expected: n, found: k + 1 });
        }
        let lineno = k + 2;
        if line.len() != n {
            return Err(ImportError::RowLength { line: lineno, expected: n, found: line.chars().count() });
        }
        for (j, c) in line.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => graph.set_entry(k, j),
                _ => return Err(ImportError::BadCharacter { line: lineno, column: j + 1 }),
            }
        }
        rows += 1;
    }
    if rows != n {
        return Err(ImportError::RowCount { expected: n, found: rows });
    }
    for i in 0..n {
        if graph.has_edge(i, i) {
            return Err(ImportError::NonzeroDiagonal(i + 1));
        }
    }
    if let Some((i, j)) = graph.symmetry_violation() {
        return Err(ImportError::Asymmetric(i + 1, j + 1));
    }
    Ok(graph)
}

pub fn import_adjacency(path: &Path) -> Result<SolubilityGraph, ImportError> {
    parse_adjacency(&fs::read_to_string(path)?)
}

pub fn write_cycle<W: Write>(cycle: &[usize], mut w: W) -> io::Result<()> {
    let line: Vec<String> = cycle.iter().map(|v| (v + 1).to_string()).collect();
    writeln!(w, "{}", line.join(" "))?;
    w.flush()
}

pub fn write_coloring<W: Write>(colors: &[u32], mut w: W) -> io::Result<()> {
    for (v, c) in colors.iter().enumerate() {
        writeln!(w, "{},{}", v + 1, c + 1)?;
    }
    w.flush()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClosedFormState {
    Match,
    /// Subgroup counts differ in a small-parameter group; sizes agree.
    Warning,
    Mismatch,
    NotCovered,
    NotComputed,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClosedFormStatus {
    pub status: ClosedFormState,
    pub predicted_size: Option<u64>,
    pub formula: Option<String>,
    pub counts: Option<CountsReport>,
    pub note: Option<String>,
}

impl ClosedFormStatus {
    pub fn not_computed() -> Self {
        ClosedFormStatus {
            status: ClosedFormState::NotComputed,
            predicted_size: None,
            formula: None,
            counts: None,
            note: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassRow {
    pub index: usize,
    pub representative: u32,
    pub element_order: u32,
    pub class_size: usize,
    pub normalizer_order: u64,
    pub sol_size: Option<usize>,
    /// Exact fraction in lowest terms.
    pub probability: Option<String>,
    pub is_subgroup: Option<bool>,
    pub is_soluble: Option<bool>,
    pub closed_form: ClosedFormStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct ColoringSummary {
    pub lower_bound: usize,
    pub lower_bound_source: String,
    pub clique_verified: bool,
    pub color_count: usize,
    pub best_order: String,
    pub attempts: Vec<(String, usize)>,
    pub max_degree: usize,
    pub brooks_bound: usize,
    pub exact: bool,
    pub proper: bool,
}

impl ColoringSummary {
    pub fn new(c: &ColoringReport, clique: &CliqueBound, clique_verified: bool, max_degree: usize, proper: bool) -> Self {
        let name = |o: &crate::graph::VertexOrder| format!("{o:?}");
        ColoringSummary {
            lower_bound: clique.size,
            lower_bound_source: clique.source.clone(),
            clique_verified,
            color_count: c.best.color_count,
            best_order: name(&c.best.order),
            attempts: c.attempts.iter().map(|(o, n)| (name(o), *n)).collect(),
            max_degree,
            brooks_bound: c.brooks_bound,
            exact: c.exact,
            proper,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HamiltonianSummary {
    pub found: bool,
    pub validated: bool,
    pub seed: u64,
    pub restarts: usize,
    pub attempts: usize,
    pub cycle_length: usize,
}

impl HamiltonianSummary {
    pub fn new(h: &HamiltonianResult, restarts: usize, validated: bool) -> Self {
        HamiltonianSummary {
            found: h.found,
            validated,
            seed: h.seed,
            restarts,
            attempts: h.attempts,
            cycle_length: h.cycle.len(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BottleneckOutcome {
    pub applicable: bool,
    pub report: Option<BottleneckReport>,
    pub reason: Option<String>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct GraphSection {
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub symmetric: bool,
    /// Every degree equals |Sol| - |R| - 1 for its element.
    pub degrees_match: bool,
    pub eulerian: Option<EulerianReport>,
    pub eulerian_degrees_agree: Option<bool>,
    pub coloring: Option<ColoringSummary>,
    pub hamiltonian: Option<HamiltonianSummary>,
    pub bottleneck: Option<BottleneckOutcome>,
    pub full_graph: Option<FullGraphStats>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ModeComparison {
    pub classes_compared: usize,
    /// Class indices whose member sets differ between the two modes.
    pub disagreements: Vec<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub tool_version: String,
    pub timestamp: Option<String>,
    pub group: String,
    pub group_name: String,
    pub group_order: usize,
    pub mode: String,
    pub classes: Vec<ClassRow>,
    pub axioms: Option<AxiomReport>,
    pub involution_identity: Option<InvolutionIdentity>,
    pub graph: Option<GraphSection>,
    pub conjectures: Option<ScanReport>,
    pub appendix: Option<Vec<AppendixComparison>>,
    pub mode_comparison: Option<ModeComparison>,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

/// Pretty-printed JSON with fields in declaration order.
pub fn report_json(report: &VerificationReport) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("report serializes");
    s.push('\n');
    s
}

/// Two tables separated by a blank line: the class table, then one row per
/// scalar check.
pub fn report_csv(report: &VerificationReport) -> Result<String, csv::Error> {
    let opt = |o: Option<String>| o.unwrap_or_default();
    let classes = report.classes.iter().map(|r| {
        let status = serde_json::to_value(r.closed_form.status).expect("status serializes");
        vec![
            r.index.to_string(),
            r.representative.to_string(),
            r.element_order.to_string(),
            r.class_size.to_string(),
            r.normalizer_order.to_string(),
            opt(r.sol_size.map(|x| x.to_string())),
            opt(r.probability.clone()),
            opt(r.is_subgroup.map(|x| x.to_string())),
            opt(r.is_soluble.map(|x| x.to_string())),
            status.as_str().unwrap_or_default().to_string(),
            opt(r.closed_form.predicted_size.map(|x| x.to_string())),
            opt(r.closed_form.formula.clone()),
        ]
    });
    let header = [
        "class",
        "representative",
        "element_order",
        "class_size",
        "normalizer_order",
        "sol_size",
        "probability",
        "is_subgroup",
        "is_soluble",
        "closed_form",
        "predicted_size",
        "formula",
    ];
    let mut out = csv_table(&header, classes)?;
    out.push('\n');
    let checks = check_rows(report).into_iter().map(|(a, b, c)| vec![a, b, c]);
    out.push_str(&csv_table(&["check", "status", "detail"], checks)?);
    Ok(out)
}

fn csv_table(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> Result<String, csv::Error> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| e.into_error())?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn check_rows(report: &VerificationReport) -> Vec<(String, String, String)> {
    let mut rows = Vec::new();
    let pass = |b: bool| if b { "pass" } else { "fail" }.to_string();
    if let Some(a) = &report.axioms {
        for c in &a.checks {
            rows.push((format!("axiom: {}", c.name), pass(c.passed), c.witness.clone().unwrap_or_default()));
        }
    }
    if let Some(i) = &report.involution_identity {
        rows.push(("involution identity".into(), pass(i.holds), format!("{} = {}", i.lhs, i.rhs)));
    }
    if let Some(g) = &report.graph {
        rows.push(("graph connected".into(), pass(g.connected), format!("{} vertices, {} edges", g.vertices, g.edges)));
        if let Some(e) = &g.eulerian {
            let w = e.witness.map(|(c, o, s)| format!("class {c} order {o} |Sol| {s}")).unwrap_or_default();
            rows.push(("eulerian".into(), e.eulerian.to_string(), w));
        }
        if let Some(c) = &g.coloring {
            rows.push((
                "chromatic bracket".into(),
                pass(c.proper && c.clique_verified),
                format!("{} <= chi <= {}", c.lower_bound, c.color_count),
            ));
        }
        if let Some(h) = &g.hamiltonian {
            rows.push(("hamiltonian".into(), h.found.to_string(), format!("seed {} attempts {}", h.seed, h.attempts)));
        }
        if let Some(b) = g.bottleneck.as_ref().and_then(|b| b.report.as_ref()) {
            rows.push((
                "dihedral bottleneck".into(),
                b.obstruction.to_string(),
                format!("{} involutions, {} petals", b.involutions, b.petals),
            ));
        }
    }
    if let Some(s) = &report.conjectures {
        for c in &s.checks {
            let status = serde_json::to_value(c.status).expect("status serializes");
            rows.push((c.name.clone(), status.as_str().unwrap_or_default().to_string(), c.witnesses.join("; ")));
        }
    }
    if let Some(app) = &report.appendix {
        for c in app {
            rows.push((
                format!("appendix: class {}", c.class_index),
                pass(c.matches),
                format!("order {} normalizer {}", c.element_order, c.normalizer_order),
            ));
        }
    }
    if let Some(m) = &report.mode_comparison {
        rows.push((
            "mode agreement".into(),
            pass(m.disagreements.is_empty()),
            format!("{} classes compared", m.classes_compared),
        ));
    }
    rows
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("I/O error: {0}")]
    Io(#[from] io::Error),
    #[error("CSV error: {0}")]
    Csv(#[from] csv::Error),
}

pub fn emit_report(report: &VerificationReport, path: &Path, format: ReportFormat) -> Result<(), ReportError> {
    let text = match format {
        ReportFormat::Json => report_json(report),
        ReportFormat::Csv => report_csv(report)?,
    };
    fs::write(path, text)?;
    Ok(())
}
