mod commands;
mod failure;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use failure::Failure;

#[derive(Parser, Debug)]
#[command(
    name = "cgrefine",
    version,
    about = "Exact knot and link identities on PL spatial graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write an embedding as JSON.
    Gen(GenArgs),
    /// Check every identity that applies to an embedding file.
    Verify(FileArgs),
    /// Classify the knots and links of a rectilinear K6 or K7.
    Census(FileArgs),
    /// Generate, verify and census a run of seeded embeddings.
    Batch(BatchArgs),
    /// Look for a rectilinear K7 whose 7-cycles have a2 summing to 1.
    Search(SearchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Graph {
    #[value(name = "K5")]
    K5,
    #[value(name = "K33")]
    K33,
    #[value(name = "K6")]
    K6,
    #[value(name = "K7")]
    K7,
    #[value(name = "D4")]
    D4,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Source {
    Moment,
    Random,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Seed for the projection direction.
    #[arg(long = "proj-seed", default_value_t = 0)]
    pub proj_seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub graph: Graph,
    #[arg(long, value_enum, default_value_t = Source::Random)]
    pub source: Source,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Coordinates are drawn from [-span, span].
    #[arg(long, default_value_t = cgrefine::geometry::DEFAULT_SPAN)]
    pub span: i64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct FileArgs {
    /// Embedding JSON file.
    pub file: PathBuf,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    #[arg(long, value_enum, ignore_case = true)]
    pub graph: Graph,
    #[arg(long, default_value_t = 100)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = cgrefine::geometry::DEFAULT_SPAN)]
    pub span: i64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 5000)]
    pub budget: u64,
    #[arg(long, default_value_t = cgrefine::theorems::SEARCH_SPAN)]
    pub span: i64,
    #[command(flatten)]
    pub common: Common,
}

fn init_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("CGREFINE_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("CGREFINE_THREADS={raw} is not a count")))?;
    if n > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| Failure::Io(format!("thread pool: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    init_threads()?;
    match cli.command {
        Command::Gen(a) => commands::gen(&a),
        Command::Verify(a) => commands::verify(&a),
        Command::Census(a) => commands::census(&a),
        Command::Batch(a) => commands::batch(&a),
        Command::Search(a) => commands::search(&a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("cgrefine: {f}");
            ExitCode::from(f.code())
        }
    }
}
