//! Batch runs: build a group, compute what the requested commands need and
//! write the report and artifacts.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    build_graph, clique_lower_bound, color_with_bound, dihedral_bottleneck_check, eulerian_check, full_graph_stats,
    hamiltonian_search, is_proper_coloring, validate_cycle, ColoringReport, LARGE_VERTEX_LIMIT, GraphError, HamiltonianResult,
    SolubilityGraph,
};
use crate::group::{Family, Group, GroupError, GroupSpec};
use crate::oracle::{
    classify_case, closed_form_profile, compare_appendix_case, involution_identity_check, verify_maximal_counts,
    Verdict,
};
use crate::report::{
    emit_report, export_adjacency, report_json, write_coloring, write_cycle, BottleneckOutcome, ClassRow,
    ClosedFormState, ClosedFormStatus, ColoringSummary, GraphSection, HamiltonianSummary, ModeComparison,
    ReportError, ReportFormat, VerificationReport,
};
use crate::scan::{scan_chromatic, scan_eulerian, scan_solubilizers, ScanStatus};
use crate::solubilizer::{all_solubilizers, verify_solubilizer_axioms, SolubilizerRecord};
use crate::subgroup::{MaximalSubgroups, SolubilityMode, SubgroupError};

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_RESTARTS: usize = 1000;
/// Seeded random vertex orders tried by the coloring command.
pub const RANDOM_COLORINGS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Classes,
    Sol,
    VerifyTables,
    Graph,
    Color,
    Hamiltonian,
    Eulerian,
    Conjectures,
    Appendix,
    ExportAdj,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::Classes,
        Command::Sol,
        Command::VerifyTables,
        Command::Graph,
        Command::Color,
        Command::Hamiltonian,
        Command::Eulerian,
        Command::Conjectures,
        Command::Appendix,
        Command::ExportAdj,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Command::Classes => "classes",
            Command::Sol => "sol",
            Command::VerifyTables => "verify-tables",
            Command::Graph => "graph",
            Command::Color => "color",
            Command::Hamiltonian => "hamiltonian",
            Command::Eulerian => "eulerian",
            Command::Conjectures => "conjectures",
            Command::Appendix => "appendix",
            Command::ExportAdj => "export-adj",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| RunError::Usage(format!("unknown command {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModeSelection {
    Shortcut,
    General,
    /// Compute with both modes and compare the results class by class.
    Both,
}

impl FromStr for ModeSelection {
    type Err = RunError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "shortcut" => Ok(ModeSelection::Shortcut),
            "general" => Ok(ModeSelection::General),
            "both" => Ok(ModeSelection::Both),
            _ => Err(RunError::Usage(format!("unknown mode {s:?}"))),
        }
    }
}

#[derive(Debug, Error)]
pub enum RunError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error("I/O error on {path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("thread pool: {0}")]
    Threads(String),
}

impl RunError {
    /// Every error is reported with status 2; status 1 is reserved for mismatches.
    pub fn exit_code(&self) -> i32 {
        2
    }
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub group: GroupSpec,
    pub commands: BTreeSet<Command>,
    pub seed: u64,
    pub restarts: usize,
    /// `None` uses all available cores.
    pub threads: Option<usize>,
    pub out_dir: PathBuf,
    pub allow_large: bool,
    /// `None` picks shortcut for minimal simple groups and general otherwise.
    pub mode: Option<ModeSelection>,
}

impl RunConfig {
    pub fn new(group: GroupSpec, commands: impl IntoIterator<Item = Command>) -> Self {
        RunConfig {
            group,
            commands: commands.into_iter().collect(),
            seed: DEFAULT_SEED,
            restarts: DEFAULT_RESTARTS,
            threads: None,
            out_dir: PathBuf::from("out"),
            allow_large: false,
            mode: None,
        }
    }

    /// Validates textual arguments before any computation.
    pub fn parse(group: &str, commands: &[String]) -> Result<Self, RunError> {
        let spec: GroupSpec = group.parse().map_err(|e: GroupError| RunError::Usage(e.to_string()))?;
        let commands = commands.iter().map(|c| c.parse()).collect::<Result<BTreeSet<Command>, _>>()?;
        if commands.is_empty() {
            return Err(RunError::Usage("no command given".into()));
        }
        Ok(RunConfig::new(spec, commands))
    }

    fn wants(&self, c: Command) -> bool {
        self.commands.contains(&c)
    }

    fn file_stem(&self) -> String {
        self.group.to_string().replace(':', "-")
    }
}

#[derive(Debug)]
pub struct RunOutcome {
    pub report: VerificationReport,
    pub artifacts: Vec<PathBuf>,
    pub summary: Vec<String>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.report.mismatches.is_empty()
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            1
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(std::io::Error) -> RunError + '_ {
    move |source| RunError::Io { path: path.to_path_buf(), source }
}

pub fn run(config: &RunConfig) -> Result<RunOutcome, RunError> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = config.threads {
        if n == 0 {
            return Err(RunError::Usage("thread count must be positive".into()));
        }
        builder = builder.num_threads(n);
    }
    let pool = builder.build().map_err(|e| RunError::Threads(e.to_string()))?;
    pool.install(|| Runner::new(config)?.execute())
}

struct Runner<'a> {
    config: &'a RunConfig,
    mode: ModeSelection,
    g: Group,
    report: VerificationReport,
    artifacts: Vec<PathBuf>,
    summary: Vec<String>,
}

impl<'a> Runner<'a> {
    fn new(config: &'a RunConfig) -> Result<Self, RunError> {
        let spec = config.group;
        let minimal = spec.is_minimal_simple();
        let mode = config.mode.unwrap_or(if minimal { ModeSelection::Shortcut } else { ModeSelection::General });
        if mode != ModeSelection::General && !minimal {
            return Err(RunError::Usage(format!(
                "shortcut mode needs a minimal simple group; {} is not one",
                spec.display_name()
            )));
        }
        let wants_graph = [Command::Graph, Command::Color, Command::Hamiltonian, Command::ExportAdj]
            .iter()
            .any(|c| config.commands.contains(c));
        // simple groups have trivial radical, so the vertex count is known up front
        let vertices = spec.order() as usize - 1;
        if wants_graph && vertices > LARGE_VERTEX_LIMIT && !config.allow_large {
            return Err(RunError::Usage(format!("graph would have {vertices} vertices; rerun with --allow-large")));
        }
        let g = Group::build(spec)?;
        let report = VerificationReport {
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            timestamp: None,
            group: spec.to_string(),
            group_name: spec.display_name(),
            group_order: g.order(),
            mode: serde_json::to_value(mode).expect("mode serializes").as_str().unwrap_or_default().to_string(),
            classes: Vec::new(),
            axioms: None,
            involution_identity: None,
            graph: None,
            conjectures: None,
            appendix: None,
            mode_comparison: None,
            mismatches: Vec::new(),
        };
        Ok(Runner {
            config,
            mode,
            g,
            report,
            artifacts: Vec::new(),
            summary: Vec::new(),
        })
    }

    fn mismatch(&mut self, what: String) {
        self.summary.push(format!("MISMATCH {what}"));
        self.report.mismatches.push(what);
    }

    fn path(&self, suffix: &str) -> PathBuf {
        self.config.out_dir.join(format!("{}.{suffix}", self.config.file_stem()))
    }

    fn execute(mut self) -> Result<RunOutcome, RunError> {
        let cfg = self.config;
        fs::create_dir_all(&cfg.out_dir).map_err(io_err(&cfg.out_dir))?;
        self.summary.push(format!(
            "{}: order {}, {} classes",
            self.g.spec().display_name(),
            self.g.order(),
            self.g.classes().len()
        ));
        self.report.classes = self
            .g
            .classes()
            .iter()
            .enumerate()
            .map(|(i, c)| ClassRow {
                index: i,
                representative: c.representative,
                element_order: c.element_order,
                class_size: c.size(),
                normalizer_order: c.normalizer_order,
                sol_size: None,
                probability: None,
                is_subgroup: None,
                is_soluble: None,
                closed_form: ClosedFormStatus::not_computed(),
            })
            .collect();

        let needs_graph = [Command::Graph, Command::Color, Command::Hamiltonian, Command::ExportAdj]
            .iter()
            .any(|&c| cfg.wants(c));
        let needs_records = needs_graph || cfg.commands.iter().any(|&c| c != Command::Classes);
        let records = if needs_records { Some(self.records()?) } else { None };

        if let Some(records) = &records {
            for (row, r) in self.report.classes.iter_mut().zip(records) {
                row.sol_size = Some(r.size);
                row.probability = Some(r.probability.to_string());
                row.is_subgroup = Some(r.is_subgroup);
                row.is_soluble = Some(r.is_subgroup && r.is_soluble);
            }
        }
        if cfg.wants(Command::Sol) {
            self.sol(records.as_deref().expect("records computed"));
        }
        let maximals = if cfg.wants(Command::VerifyTables) || cfg.wants(Command::Appendix) {
            MaximalSubgroups::compute(&self.g).ok()
        } else {
            None
        };
        if cfg.wants(Command::VerifyTables) {
            self.verify_tables(records.as_deref().expect("records computed"), maximals.as_ref());
        }
        if cfg.wants(Command::Appendix) {
            self.appendix(maximals.as_ref());
        }

        let records_ref = records.as_deref();
        let graph = if needs_graph {
            Some(self.graph(records_ref.expect("records computed"))?)
        } else {
            None
        };
        if cfg.wants(Command::Eulerian) || graph.is_some() {
            self.eulerian(records_ref.expect("records computed"), graph.as_ref());
        }
        if let Some(graph) = &graph {
            let coloring = if cfg.wants(Command::Color) { Some(self.color(graph)?) } else { None };
            let cycle = if cfg.wants(Command::Hamiltonian) {
                Some(self.hamiltonian(records_ref.expect("records computed"), graph)?)
            } else {
                None
            };
            if cfg.wants(Command::ExportAdj) {
                let p = self.path("adjacency.txt");
                export_adjacency(graph, &p).map_err(io_err(&p))?;
                self.artifacts.push(p);
            }
            let stats = full_graph_stats(
                &self.g,
                records_ref.expect("records computed"),
                coloring.as_ref(),
                cycle.as_ref(),
            );
            self.report.graph.as_mut().expect("graph section").full_graph = Some(stats);
        }
        if cfg.wants(Command::Conjectures) {
            self.conjectures(records_ref.expect("records computed"));
        }
        self.finish()
    }

    fn records(&mut self) -> Result<Vec<SolubilizerRecord>, RunError> {
        let compute = |m| {
            all_solubilizers(&self.g, m).map_err(|e: SubgroupError| RunError::Usage(e.to_string()))
        };
        match self.mode {
            ModeSelection::Shortcut => compute(SolubilityMode::Shortcut),
            ModeSelection::General => compute(SolubilityMode::General),
            ModeSelection::Both => {
                let a = compute(SolubilityMode::Shortcut)?;
                let b = compute(SolubilityMode::General)?;
                let disagreements: Vec<usize> = a
                    .iter()
                    .zip(&b)
                    .filter(|(x, y)| x.members != y.members)
                    .map(|(x, _)| x.class_index)
                    .collect();
                self.summary.push(format!(
                    "modes: {} classes compared, {} disagreements",
                    a.len(),
                    disagreements.len()
                ));
                for &c in &disagreements {
                    self.mismatch(format!("modes disagree on class {c}"));
                }
                self.report.mode_comparison = Some(ModeComparison {
                    classes_compared: a.len(),
                    disagreements,
                });
                Ok(a)
            }
        }
    }

    fn sol(&mut self, records: &[SolubilizerRecord]) {
        for r in records {
            self.summary.push(format!(
                "class {:>2} order {:>3}: |Sol| = {} (P_S = {}, subgroup: {})",
                r.class_index, r.element_order, r.size, r.probability, r.is_subgroup
            ));
        }
        let axioms = verify_solubilizer_axioms(&self.g, records);
        for c in axioms.checks.clone() {
            if !c.passed {
                self.mismatch(format!("axiom {}: {}", c.name, c.witness.unwrap_or_default()));
            }
        }
        self.report.axioms = Some(axioms);
    }

    fn verify_tables(&mut self, records: &[SolubilizerRecord], maximals: Option<&MaximalSubgroups>) {
        let mut tally = [0usize; 4];
        for r in records {
            let status = match classify_case(&self.g, r.class_index).and_then(|k| closed_form_profile(&k)) {
                Err(e) => ClosedFormStatus {
                    status: ClosedFormState::NotCovered,
                    predicted_size: None,
                    formula: None,
                    counts: None,
                    note: Some(e.to_string()),
                },
                Ok(profile) => {
                    let overgroups = maximals.map(|m| m.containing(&self.g, r.representative)).unwrap_or_default();
                    let counts = verify_maximal_counts(&self.g, r, &profile, &overgroups);
                    let status = match counts.verdict {
                        Verdict::Pass => ClosedFormState::Match,
                        Verdict::Warning => ClosedFormState::Warning,
                        Verdict::Mismatch => ClosedFormState::Mismatch,
                    };
                    ClosedFormStatus {
                        status,
                        predicted_size: Some(profile.sol_size),
                        formula: Some(profile.sol_formula.clone()),
                        counts: Some(counts),
                        note: None,
                    }
                }
            };
            let k = match status.status {
                ClosedFormState::Match => 0,
                ClosedFormState::Warning => 1,
                ClosedFormState::Mismatch => 2,
                _ => 3,
            };
            tally[k] += 1;
            if status.status == ClosedFormState::Mismatch {
                self.mismatch(format!(
                    "closed form for class {} (order {}): predicted |Sol| {:?}, computed {}",
                    r.class_index, r.element_order, status.predicted_size, r.size
                ));
            }
            self.report.classes[r.class_index].closed_form = status;
        }
        self.summary.push(format!(
            "tables: {} match, {} warning, {} mismatch, {} not covered",
            tally[0], tally[1], tally[2], tally[3]
        ));
        match involution_identity_check(&self.g, records) {
            Ok(id) => {
                self.summary.push(format!("involution identity: {} = {}", id.lhs, id.rhs));
                if !id.holds {
                    self.mismatch(format!("involution identity: {} != {}", id.lhs, id.rhs));
                }
                self.report.involution_identity = Some(id);
            }
            Err(e) => self.summary.push(format!("involution identity: {e}")),
        }
    }

    fn appendix(&mut self, maximals: Option<&MaximalSubgroups>) {
        let spec = self.g.spec();
        let Some(maximals) = maximals.filter(|_| spec.family == Family::Psl3 && spec.q == 3) else {
            self.summary.push(format!("appendix: not covered for {}", spec.display_name()));
            self.report.appendix = Some(Vec::new());
            return;
        };
        let mut out = Vec::new();
        let classes: Vec<(usize, u32, u32)> = self
            .g
            .classes()
            .iter()
            .enumerate()
            .filter(|(_, c)| c.element_order > 1)
            .map(|(i, c)| (i, c.representative, c.element_order))
            .collect();
        for (i, rep, order) in classes {
            let overgroups = maximals.containing(&self.g, rep);
            match compare_appendix_case(&self.g, i, &overgroups) {
                Ok(cmp) => {
                    if !cmp.matches {
                        self.mismatch(format!("intersection tallies for class {i} (order {order})"));
                    }
                    out.push(cmp);
                }
                Err(e) => self.summary.push(format!("appendix: {e}")),
            }
        }
        let matched = out.iter().filter(|c| c.matches).count();
        self.summary.push(format!("appendix: {matched}/{} classes match", out.len()));
        self.report.appendix = Some(out);
    }

    fn graph(&mut self, records: &[SolubilizerRecord]) -> Result<SolubilityGraph, RunError> {
        let graph = build_graph(&self.g, records, self.config.allow_large).map_err(|e| match e {
            GraphError::TooLarge(n) => RunError::Usage(format!("graph has {n} vertices; rerun with --allow-large")),
            other => RunError::Usage(other.to_string()),
        })?;
        let radical = self.g.order() - graph.vertex_count();
        let elements = graph.elements().expect("built from a group");
        let degrees_match = elements
            .iter()
            .enumerate()
            .all(|(v, &e)| graph.degree(v) + radical + 1 == records[self.g.class_of(e)].size);
        let section = GraphSection {
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            connected: graph.is_connected(),
            symmetric: graph.symmetry_violation().is_none(),
            degrees_match,
            ..GraphSection::default()
        };
        self.summary.push(format!(
            "graph: {} vertices, {} edges, connected: {}",
            section.vertices, section.edges, section.connected
        ));
        if !section.connected {
            self.mismatch("graph is not connected".into());
        }
        if !degrees_match {
            self.mismatch("graph degrees differ from solubilizer sizes".into());
        }
        self.report.graph = Some(section);
        Ok(graph)
    }

    fn eulerian(&mut self, records: &[SolubilizerRecord], graph: Option<&SolubilityGraph>) {
        let e = eulerian_check(&self.g, records);
        let agree = graph.map(|gr| crate::graph::all_degrees_even(gr) == e.eulerian);
        self.summary.push(format!(
            "eulerian: {}{}",
            e.eulerian,
            e.witness
                .map(|(c, o, s)| format!(" (witness class {c}, order {o}, |Sol| = {s})"))
                .unwrap_or_default()
        ));
        if agree == Some(false) {
            self.mismatch("Eulerian verdict differs from degree parity".into());
        }
        let check = scan_eulerian(&self.g.spec(), &e);
        if check.status == ScanStatus::Fail {
            self.mismatch(format!("{}: {}", check.name, check.witnesses.join("; ")));
        }
        let section = self.report.graph.get_or_insert_with(GraphSection::default);
        section.eulerian = Some(e);
        section.eulerian_degrees_agree = agree;
    }

    fn color(&mut self, graph: &SolubilityGraph) -> Result<ColoringReport, RunError> {
        let clique = clique_lower_bound(&self.g, graph);
        let clique_ok = graph.is_clique(&clique.vertices);
        let c = color_with_bound(graph, clique.clone(), self.config.seed, RANDOM_COLORINGS);
        let proper = is_proper_coloring(graph, &c.best.colors);
        let max_degree = graph.max_degree();
        self.summary.push(format!(
            "coloring: {} <= chi <= {} (lower bound from {}; max degree {})",
            clique.size, c.best.color_count, clique.source, max_degree
        ));
        if !proper || !clique_ok {
            self.mismatch("coloring or clique certificate failed validation".into());
        }
        let check = scan_chromatic(&self.g.spec(), &c, max_degree);
        if check.status == ScanStatus::Fail {
            self.mismatch(format!("{}: {}", check.name, check.witnesses.join("; ")));
        }
        let p = self.path("coloring.csv");
        let f = fs::File::create(&p).map_err(io_err(&p))?;
        write_coloring(&c.best.colors, std::io::BufWriter::new(f)).map_err(io_err(&p))?;
        self.artifacts.push(p);
        self.report.graph.as_mut().expect("graph section").coloring =
            Some(ColoringSummary::new(&c, &clique, clique_ok, max_degree, proper));
        Ok(c)
    }

    fn hamiltonian(&mut self, records: &[SolubilizerRecord], graph: &SolubilityGraph) -> Result<HamiltonianResult, RunError> {
        let h = hamiltonian_search(graph, self.config.seed, self.config.restarts, &[]);
        let validated = h.found && validate_cycle(graph, &h.cycle).is_ok();
        let bottleneck = match dihedral_bottleneck_check(&self.g, records) {
            Ok(b) => BottleneckOutcome { applicable: true, report: Some(b), reason: None },
            Err(e) => BottleneckOutcome { applicable: false, report: None, reason: Some(e.to_string()) },
        };
        self.summary.push(format!(
            "hamiltonian: {} after {} attempts (seed {})",
            if h.found { "cycle found" } else { "no cycle found" },
            h.attempts,
            h.seed
        ));
        if let Some(b) = &bottleneck.report {
            self.summary.push(format!(
                "bottleneck: {} involutions, {} petals, obstruction: {}",
                b.involutions, b.petals, b.obstruction
            ));
            if b.obstruction && h.found {
                self.mismatch("Hamiltonian cycle found despite the involution bottleneck".into());
            }
        }
        if h.found && !validated {
            self.mismatch("returned cycle failed validation".into());
        }
        if validated {
            let p = self.path("cycle.txt");
            let f = fs::File::create(&p).map_err(io_err(&p))?;
            write_cycle(&h.cycle, std::io::BufWriter::new(f)).map_err(io_err(&p))?;
            self.artifacts.push(p);
        }
        let section = self.report.graph.as_mut().expect("graph section");
        section.hamiltonian = Some(HamiltonianSummary::new(&h, self.config.restarts, validated));
        section.bottleneck = Some(bottleneck);
        Ok(h)
    }

    fn conjectures(&mut self, records: &[SolubilizerRecord]) {
        let spec = self.g.spec();
        let mut scan = scan_solubilizers(&spec, records);
        scan.checks.push(scan_eulerian(&spec, &eulerian_check(&self.g, records)));
        let failed: Vec<String> = scan
            .checks
            .iter()
            .filter(|c| c.status == ScanStatus::Fail)
            .map(|c| format!("{}: {}", c.name, c.witnesses.join("; ")))
            .collect();
        let passed = scan.checks.iter().filter(|c| c.status == ScanStatus::Pass).count();
        self.summary.push(format!(
            "conjectures: {passed} pass, {} fail, {} not applicable",
            failed.len(),
            scan.checks.len() - passed - failed.len()
        ));
        for f in failed {
            self.mismatch(f);
        }
        self.report.conjectures = Some(scan);
    }

    fn finish(mut self) -> Result<RunOutcome, RunError> {
        let json = self.path("report.json");
        emit_report(&self.report, &json, ReportFormat::Json)?;
        let csv = self.path("report.csv");
        emit_report(&self.report, &csv, ReportFormat::Csv)?;
        self.artifacts.push(json);
        self.artifacts.push(csv);
        if !self.report.mismatches.is_empty() {
            let p = self.path("evidence.json");
            fs::write(&p, report_json(&self.report)).map_err(io_err(&p))?;
            self.artifacts.push(p);
        }
        Ok(RunOutcome {
            report: self.report,
            artifacts: self.artifacts,
            summary: self.summary,
        })
    }
}

/// Records for a group in its default mode: shortcut when available.
pub fn default_records(g: &Group) -> Result<Vec<SolubilizerRecord>, SubgroupError> {
    let mode = if g.spec().is_minimal_simple() { SolubilityMode::Shortcut } else { SolubilityMode::General };
    all_solubilizers(g, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_rejects_unknown_input() {
        assert!(matches!(RunConfig::parse("psl2:6", &["sol".into()]), Err(RunError::Usage(_))));
        assert!(matches!(RunConfig::parse("psl2:7", &["nope".into()]), Err(RunError::Usage(_))));
        assert!(matches!(RunConfig::parse("psl2:7", &[]), Err(RunError::Usage(_))));
        let c = RunConfig::parse("psl2:7", &["eulerian".into(), "sol".into()]).unwrap();
        assert_eq!(c.commands.iter().copied().collect::<Vec<_>>(), vec![Command::Sol, Command::Eulerian]);
    }

    #[test]
    fn command_names_roundtrip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
    }
}
