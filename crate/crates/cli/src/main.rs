use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;
mod report;

use commands::CliError;

#[derive(Parser, Debug)]
#[command(name = "grs-lab", version, about = "Traceable-graph constructions, finite dichotomy search and lattice fences")]
struct Cli {
    /// Worker threads for the parallel searches.
    #[arg(long, global = true, env = "GRS_LAB_JOBS")]
    jobs: Option<usize>,

    /// Write the run report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    run_report: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

/// Source of the injective input sequence.
#[derive(Args, Debug, Clone)]
pub struct FArgs {
    /// Comma list such as `5,0,7`, or `seed:N,len:T` for a seeded sequence.
    #[arg(long = "f", value_name = "SPEC")]
    pub f: String,

    /// Number of stages to run.
    #[arg(long)]
    pub stages: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the construction and write the final graph.
    Construct {
        #[command(flatten)]
        input: FArgs,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        dot: Option<PathBuf>,
        /// Print one JSON line per stage before the report.
        #[arg(long)]
        trace_stages: bool,
    },
    /// Check the per-stage lemmas (and optionally chordless 4-paths).
    Verify {
        #[command(flatten)]
        input: FArgs,
        #[arg(long)]
        exhaustive_chordless: bool,
    },
    /// Embed a pattern through stable coding vertices and decode queries.
    Decode {
        #[command(flatten)]
        input: FArgs,
        /// `A:k` or `Kkk:k`.
        #[arg(long)]
        pattern: String,
        /// Comma list of naturals.
        #[arg(long)]
        query: String,
    },
    /// Chordless n-path, K22 copy, or neither.
    Dichotomy {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Exhaustive search for traceable graphs with neither outcome.
    MnSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        max_size: usize,
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Increasing paths, 4-subset colouring, homogeneous set, extraction.
    Pipeline {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        n: usize,
    },
    /// Length-3 lattice tools.
    Lattice {
        #[command(subcommand)]
        command: LatticeCommand,
    },
}

#[derive(Subcommand, Debug)]
enum LatticeCommand {
    /// Lattice axioms, length 3 and the double-cover scan.
    Verify {
        #[arg(long)]
        lattice: PathBuf,
    },
    /// Fence extraction through the generation tree.
    Fences {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        target: usize,
        #[arg(long)]
        dot: Option<PathBuf>,
    },
}

fn dispatch(cli: Cli) -> Result<report::RunReport, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Input(format!("cannot start {jobs} workers: {e}")))?;
    }
    match cli.command {
        Command::Construct { input, out, dot, trace_stages } => commands::construct(&input, &out, dot.as_deref(), trace_stages),
        Command::Verify { input, exhaustive_chordless } => commands::verify(&input, exhaustive_chordless),
        Command::Decode { input, pattern, query } => commands::decode(&input, &pattern, &query),
        Command::Dichotomy { graph, n, witness } => commands::dichotomy(&graph, n, witness.as_deref()),
        Command::MnSearch { n, max_size, report } => commands::mn_search(n, max_size, report.as_deref()),
        Command::Pipeline { graph, n } => commands::pipeline(&graph, n),
        Command::Lattice { command } => match command {
            LatticeCommand::Verify { lattice } => commands::lattice_verify(&lattice),
            LatticeCommand::Fences { lattice, target, dot } => commands::lattice_fences(&lattice, target, dot.as_deref()),
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let sink = cli.run_report.clone();
    let report = match dispatch(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let text = report.to_json();
    let written = match &sink {
        Some(path) => commands::write_file(path, &text),
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io { path: "<stdout>".into(), source: e }),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if report.all_passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
