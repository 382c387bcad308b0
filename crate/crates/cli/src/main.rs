mod commands;
mod output;
mod range;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use range::IntRange;

#[derive(Parser, Debug)]
#[command(
    name = "hidesign",
    version,
    about = "Harmonic index designs on spheres"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to this file instead of stdout. Relative paths are taken
    /// under $HIDESIGN_OUT_DIR when it is set.
    #[arg(long, short, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Table of the Fisher-type lower bound b_{n,t}.
    Table(TableArgs),
    /// Write a generated point set as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
    },
    /// Check a point set with the kernel criterion.
    Verify(VerifyArgs),
    /// Large-t limit of b_{n,t}.
    Asymptote {
        /// Dimension or range, e.g. `7` or `3..10`.
        #[arg(long)]
        n: IntRange,
    },
    /// Necessary conditions for a tight harmonic index 4-design.
    Tight {
        #[arg(long)]
        n: IntRange,
    },
    /// Rank test over a graph corpus; one NDJSON record per graph.
    Embed(EmbedArgs),
}

#[derive(Args, Debug)]
pub struct TableArgs {
    #[arg(long)]
    pub n: IntRange,
    #[arg(long)]
    pub t: IntRange,
    /// Keep only even t.
    #[arg(long)]
    pub even: bool,
    /// Cut b to this many decimals, marked `..`.
    #[arg(long)]
    pub truncate: Option<u32>,
}

#[derive(Subcommand, Debug)]
pub enum ConstructKind {
    RegularPolygon {
        #[arg(long)]
        m: usize,
    },
    TwoPointS1 {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        j: u32,
    },
    CrossPolytopeHalf {
        #[arg(long)]
        n: usize,
    },
    Simplex {
        #[arg(long)]
        n: usize,
    },
    IcosahedronHalf,
    E8Half,
    E8Roots,
    #[command(name = "cell600-half")]
    Cell600Half,
    #[command(name = "x0-plus")]
    X0Plus,
    #[command(name = "x0-minus")]
    X0Minus,
    /// Lift a spherical t-design on S^{n-2} at a root of Q_{n,t}.
    Lift {
        #[arg(long)]
        base: PathBuf,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        t: u32,
        /// 1-based, roots in decreasing order.
        #[arg(long)]
        root_index: usize,
    },
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long)]
    pub t: u32,
    /// Require every degree 1..=t (spherical design).
    #[arg(long)]
    pub spherical: bool,
    #[arg(long, value_parser = positive_f64)]
    pub tol: Option<f64>,
}

#[derive(Args, Debug)]
pub struct EmbedArgs {
    /// graph6 file (one graph per line), or a JSON adjacency file ending in
    /// `.json`; `-` reads graph6 from stdin.
    #[arg(long)]
    pub graphs: PathBuf,
    /// Squared distance ratio, rational or `a+b√d`.
    #[arg(long)]
    pub b2: String,
    #[arg(long)]
    pub n: usize,
    /// Emit only feasible graphs.
    #[arg(long)]
    pub feasible_only: bool,
}

fn positive_f64(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v > 0.0 && v.is_finite() => Ok(v),
        _ => Err(format!("{s:?} is not a positive number")),
    }
}

/// Exit codes: 0 success, 1 verification failed, 2 input error.
fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut sink = match output::Sink::open(cli.out.as_deref()) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let result = match cli.command {
        Command::Table(args) => commands::table(&args, cli.format, &mut sink),
        Command::Construct { kind } => commands::construct(kind, &mut sink),
        Command::Verify(args) => commands::verify(&args, cli.format, &mut sink),
        Command::Asymptote { n } => commands::asymptote(&n, cli.format, &mut sink),
        Command::Tight { n } => commands::tight(&n, cli.format, &mut sink),
        Command::Embed(args) => commands::embed(&args, &mut sink),
    };
    let flushed = sink.finish();
    match (result, flushed) {
        (Ok(status), Ok(())) => status,
        (Err(e), _) | (_, Err(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
