use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use solubilizer::pipeline::{run, Command, ModeSelection, RunConfig, RunError, DEFAULT_RESTARTS, DEFAULT_SEED};

/// Solubilizers and solubility graphs of small simple groups.
///
/// Exit status: 0 when every check passes, 1 on a verification mismatch
/// (an evidence file is written), 2 on a usage or I/O error.
#[derive(Debug, Parser)]
#[command(name = "solubilizer", version)]
struct Args {
    /// Group such as psl2:7, psl2:27, psl3:3, psl4:2 or sz:8.
    #[arg(long)]
    group: String,
    /// Seed for the Hamiltonian search and random coloring orders.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Restarts allowed to the Hamiltonian search.
    #[arg(long, default_value_t = DEFAULT_RESTARTS)]
    restarts: usize,
    /// Worker threads; defaults to all cores.
    #[arg(long)]
    threads: Option<usize>,
    /// Output directory for reports and artifacts.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Allow graphs with more than 16384 vertices.
    #[arg(long)]
    allow_large: bool,
    /// Pair solubility test: shortcut, general or both.
    #[arg(long)]
    mode: Option<String>,
    /// One or more of: classes, sol, verify-tables, graph, color,
    /// hamiltonian, eulerian, conjectures, appendix, export-adj.
    #[arg(required = true)]
    commands: Vec<String>,
}

fn config(args: Args) -> Result<RunConfig, RunError> {
    let mut cfg = RunConfig::parse(&args.group, &args.commands)?;
    cfg.seed = args.seed;
    cfg.restarts = args.restarts;
    cfg.threads = args.threads;
    cfg.out_dir = args.out;
    cfg.allow_large = args.allow_large;
    cfg.mode = args.mode.as_deref().map(str::parse::<ModeSelection>).transpose()?;
    Ok(cfg)
}

fn main() -> ExitCode {
    let args = Args::parse();
    let outcome = config(args).and_then(|cfg| run(&cfg));
    match outcome {
        Ok(o) => {
            for line in &o.summary {
                println!("{line}");
            }
            for p in &o.artifacts {
                println!("wrote {}", p.display());
            }
            println!("{}", if o.passed() { "PASS" } else { "FAIL" });
            ExitCode::from(o.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            if matches!(&e, RunError::Usage(m) if m.contains("command")) {
                eprintln!("commands: {}", Command::ALL.map(|c| c.name()).join(", "));
            }
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
