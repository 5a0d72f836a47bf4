mod commands;
mod error;
mod format;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use crate::error::CliError;

/// Compute with finite connectivity spaces.
#[derive(Debug, Parser)]
#[command(name = "connspace", version)]
struct Cli {
    /// Largest carrier enumerated subset by subset.
    #[arg(long, global = true, env = "CONNSPACE_MAX_CARRIER")]
    max_carrier: Option<usize>,
    /// Largest family a structure may grow to.
    #[arg(long, global = true, env = "CONNSPACE_MAX_FAMILY")]
    max_family: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Pair {
    a: PathBuf,
    b: PathBuf,
}

#[derive(Debug, Args)]
struct PointedPair {
    a: PathBuf,
    b: PathBuf,
    /// Base point label, once per input, in order.
    #[arg(long = "base", num_args = 1, required = true)]
    bases: Vec<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a space file.
    Validate { file: PathBuf },
    /// Print the canonical serialization.
    Canonical { file: PathBuf },
    /// Print the full structure, one set per line.
    Generate {
        file: PathBuf,
        /// Hide the empty set and singletons.
        #[arg(long)]
        nontrivial: bool,
    },
    /// Connectedness, components, irreducibility and index.
    Info { file: PathBuf },
    /// The irreducible connected sets.
    Irreducibles { file: PathBuf },
    /// The generic graph.
    Graph {
        file: PathBuf,
        /// Emit graphviz DOT.
        #[arg(long)]
        dot: bool,
    },
    Product(Pair),
    Coproduct(Pair),
    Tensor(Pair),
    Smash(PointedPair),
    Wedge(PointedPair),
    /// Collapse each merged group of points.
    Quotient {
        file: PathBuf,
        /// Comma-separated labels to identify.
        #[arg(long = "merge")]
        merges: Vec<String>,
    },
    /// Restrict to a subset of points.
    Subspace {
        file: PathBuf,
        /// Comma-separated labels to keep.
        #[arg(long)]
        keep: String,
    },
    /// Replace one sink (`--at`) or every sink (`--all`) of X by Y.
    Compose {
        x: PathBuf,
        y: PathBuf,
        #[arg(long, conflicts_with = "all", required_unless_present = "all")]
        at: Option<String>,
        #[arg(long)]
        all: bool,
    },
    /// Decide whether a map is a connectivity morphism.
    CheckMorphism {
        x: PathBuf,
        y: PathBuf,
        /// `a=p,b=q,...` over every point of X.
        #[arg(long)]
        map: String,
    },
    /// Find an isomorphism.
    Iso(Pair),
    /// Search for a homotopy between two morphisms over a finite time space.
    Homotopy {
        x: PathBuf,
        y: PathBuf,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long)]
        time: PathBuf,
        /// Start instant (default: first point of the time space).
        #[arg(long)]
        zero: Option<String>,
        /// End instant (default: last point of the time space).
        #[arg(long)]
        one: Option<String>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    let mut limits = connspace::Limits::current();
    if let Some(c) = cli.max_carrier {
        limits.max_carrier = c;
    }
    if let Some(f) = cli.max_family {
        limits.max_family = f;
    }
    limits.install();

    use commands as c;
    match cli.command {
        Command::Validate { file } => c::validate(&file),
        Command::Canonical { file } => c::canonical(&file),
        Command::Generate { file, nontrivial } => c::generate(&file, nontrivial),
        Command::Info { file } => c::info(&file),
        Command::Irreducibles { file } => c::irreducibles(&file),
        Command::Graph { file, dot } => c::graph(&file, dot),
        Command::Product(p) => c::binary(c::Binary::Product, &p.a, &p.b),
        Command::Coproduct(p) => c::binary(c::Binary::Coproduct, &p.a, &p.b),
        Command::Tensor(p) => c::binary(c::Binary::Tensor, &p.a, &p.b),
        Command::Smash(p) => c::pointed(c::PointedOp::Smash, &p.a, &p.b, &p.bases),
        Command::Wedge(p) => c::pointed(c::PointedOp::Wedge, &p.a, &p.b, &p.bases),
        Command::Quotient { file, merges } => c::quotient(&file, &merges),
        Command::Subspace { file, keep } => c::subspace(&file, &keep),
        Command::Compose { x, y, at, all: _ } => c::compose(&x, &y, at.as_deref()),
        Command::CheckMorphism { x, y, map } => c::check_morphism(&x, &y, &map),
        Command::Iso(p) => c::iso(&p.a, &p.b),
        Command::Homotopy {
            x,
            y,
            f,
            g,
            time,
            zero,
            one,
        } => c::homotopy(&x, &y, &f, &g, &time, zero.as_deref(), one.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
