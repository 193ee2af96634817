//! `alpharep`: α-characteristics, orbit types, 2-transitive scans and
//! admissible quadratic maps from the command line.
//!
//! Exit status: 0 pass, 1 check failure, 2 usage or input error, 3 a
//! resource bound was exceeded.

mod commands;
mod input;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use alpharep::corpus::Corpus;
use alpharep::Error;
use commands::Report;
use input::Bounds;

#[derive(Parser)]
#[command(name = "alpharep", version, about = "Exact α-characteristics of finite group representations")]
struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Override the element, subgroup-lattice and Dixon bounds.
    #[arg(long, global = true, value_name = "N")]
    bound: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Group files.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Character tables.
    Chartab {
        #[command(subcommand)]
        command: ChartabCommand,
    },
    /// α of every irreducible, or of one.
    Alpha {
        group: String,
        /// 1-based irreducible index.
        #[arg(long = "char")]
        char: Option<usize>,
        /// Character table file to use instead of computing one.
        #[arg(long)]
        table: Option<String>,
    },
    /// Orbit-type lattice of an irreducible.
    OrbitTypes {
        group: String,
        #[arg(long = "char")]
        char: usize,
        #[arg(long)]
        table: Option<String>,
        /// Graphviz output.
        #[arg(long)]
        dot: bool,
    },
    /// Derived-series solvability against "all nontrivial α > 1".
    SolvableCheck {
        group: String,
        #[arg(long)]
        table: Option<String>,
    },
    /// Whether every irreducible has α = 1.
    ScanTrivial {
        group: String,
        #[arg(long)]
        table: Option<String>,
    },
    /// 2-transitive actions.
    Twotrans {
        #[command(subcommand)]
        command: TwotransCommand,
    },
    /// Reduced Groebner basis of a polynomial system.
    Groebner { file: String },
    /// Norton algebra checks and 2-nilpotents for S_n.
    Norton { n: usize },
    /// Quadratic maps through Sym2.
    Quadmap {
        #[command(subcommand)]
        command: QuadmapCommand,
    },
    /// Degree congruence deg ≡ k^dim (mod α).
    Congruence {
        #[arg(long)]
        alpha: u128,
        #[arg(long)]
        k: u64,
        #[arg(long)]
        dim: u32,
    },
    /// Runs every acceptance check on the corpus.
    VerifyPaper {
        #[arg(long)]
        include_stretch: bool,
        /// Directory of .grp files replacing the bundled corpus.
        #[arg(long)]
        corpus: Option<String>,
        /// Run only these criteria.
        #[arg(long, value_delimiter = ',')]
        only: Vec<u8>,
        /// Show wall-clock times.
        #[arg(long)]
        timings: bool,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, solvability and class count.
    Info { file: String },
}

#[derive(Subcommand)]
enum ChartabCommand {
    /// Computes the table from generators.
    Compute {
        group: String,
        #[arg(long, short)]
        out: Option<String>,
    },
    /// Parses and validates a table file, optionally against a group.
    Load {
        file: String,
        #[arg(long)]
        group: Option<String>,
    },
    /// Prints a table file in aligned columns.
    Show { file: String },
}

#[derive(Subcommand)]
enum TwotransCommand {
    /// 2-transitive coset actions with their augmentation α.
    Scan {
        group: String,
        #[arg(long)]
        table: Option<String>,
    },
    /// Checks the classification excerpt (the bundled one by default).
    VerifyTable { file: Option<String> },
}

#[derive(Subcommand)]
enum QuadmapCommand {
    /// Builds the map from a representation onto a target in its Sym2.
    Build {
        #[arg(long)]
        source: String,
        /// Irreducible index, or a sum such as 2+3.
        #[arg(long)]
        target: String,
    },
    /// Admissibility of one map, or of the bundled fixtures.
    Check {
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
}

fn run(cli: &Cli) -> alpharep::Result<Report> {
    let bounds = Bounds { override_bound: cli.bound };
    match &cli.command {
        Command::Group { command: GroupCommand::Info { file } } => commands::group_info(file, &bounds),
        Command::Chartab { command } => match command {
            ChartabCommand::Compute { group, out } => commands::chartab_compute(group, out.as_deref(), &bounds),
            ChartabCommand::Load { file, group } => commands::chartab_load(file, group.as_deref(), &bounds),
            ChartabCommand::Show { file } => commands::chartab_show(file),
        },
        Command::Alpha { group, char, table } => commands::alpha(group, *char, table.as_deref(), &bounds),
        Command::OrbitTypes { group, char, table, dot } => {
            commands::orbit_types(group, *char, table.as_deref(), *dot, &bounds)
        }
        Command::SolvableCheck { group, table } => commands::solvable_check(group, table.as_deref(), &bounds),
        Command::ScanTrivial { group, table } => commands::scan_trivial(group, table.as_deref(), &bounds),
        Command::Twotrans { command } => match command {
            TwotransCommand::Scan { group, table } => commands::twotrans_scan(group, table.as_deref(), &bounds),
            TwotransCommand::VerifyTable { file } => commands::twotrans_verify(file.as_deref()),
        },
        Command::Groebner { file } => commands::groebner(file),
        Command::Norton { n } => commands::norton(*n),
        Command::Quadmap { command } => match command {
            QuadmapCommand::Build { source, target } => commands::quadmap_build(source, target),
            QuadmapCommand::Check { source, target } => {
                commands::quadmap_check(source.as_deref(), target.as_deref(), &Corpus::bundled())
            }
        },
        Command::Congruence { alpha, k, dim } => commands::congruence(*alpha, *k, *dim),
        Command::VerifyPaper { include_stretch, corpus, only, timings } => {
            commands::verify(*include_stretch, corpus.as_deref(), only, *timings)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CheckFailed(_) => 1,
        Error::BoundExceeded { .. } => 3,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let out = if cli.json {
                serde_json::to_string_pretty(&report.json).expect("json") + "\n"
            } else {
                report.text
            };
            // a closed pipe (e.g. `| head`) is not an error
            let _ = std::io::stdout().lock().write_all(out.as_bytes());
            ExitCode::from(if report.ok { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("alpharep: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
