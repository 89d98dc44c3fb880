use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

mod commands;
mod input;
mod verify;

#[derive(Parser)]
#[command(name = "sumdist", version, about = "Neighbour sum distinguishing edge colourings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum average degree of each graph6 line
    Mad(Stream),
    /// Colour each graph with at most Δ+1 colours and verify the result
    Color(ColorArgs),
    /// Check a `u v c` colouring of one graph
    Check(CheckArgs),
    /// Run the generated corpus through every module
    VerifyTheorem(VerifyArgs),
    /// Exact neighbour sum distinguishing index
    ChiSum(ChiSumArgs),
    /// Reducible configurations present in each graph
    FindConfigs(FindArgs),
    /// Discharging ledger and verdict for each graph
    Discharge(DischargeArgs),
    /// Print the sparse corpus as graph6
    Generate(GenerateArgs),
}

#[derive(Args)]
pub struct Stream {
    /// graph6 file, one graph per line; standard input when absent or `-`
    pub input: Option<PathBuf>,
}

#[derive(Args)]
pub struct ColorArgs {
    #[command(flatten)]
    pub stream: Stream,
    /// Print each reduction step
    #[arg(long)]
    pub trace: bool,
    /// Skip the mad < 3 recheck after every reduction
    #[arg(long)]
    pub no_debug_assert: bool,
    /// Write each colouring to `<dir>/line-<n>.txt`
    #[arg(long)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Args)]
pub struct CheckArgs {
    /// The graph in graph6
    pub graph: String,
    /// `u v c` colouring file; `-` for standard input
    pub coloring: PathBuf,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 30)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Halve the R2 amount (mutation test)
    #[arg(long)]
    pub mutant_r2_half: bool,
    /// Node budget for the exact solver on graphs with at most 20 edges
    #[arg(long, default_value_t = 2_000_000)]
    pub chi_budget: u64,
}

#[derive(Args)]
pub struct ChiSumArgs {
    #[command(flatten)]
    pub stream: Stream,
    /// Search node budget per graph
    #[arg(long)]
    pub budget: u64,
    /// Largest palette tried (default Δ+3)
    #[arg(long)]
    pub max_palette: Option<u32>,
}

#[derive(Args)]
pub struct FindArgs {
    #[command(flatten)]
    pub stream: Stream,
    /// Palette parameter (default max(6, Δ))
    #[arg(long)]
    pub k: Option<usize>,
    /// Every match instead of the first by index
    #[arg(long)]
    pub all: bool,
}

#[derive(Args)]
pub struct DischargeArgs {
    #[command(flatten)]
    pub stream: Stream,
    #[arg(long)]
    pub k: Option<usize>,
    /// Print the charge table for every graph
    #[arg(long)]
    pub table: bool,
    #[arg(long)]
    pub mutant_r2_half: bool,
}

#[derive(Args)]
pub struct GenerateArgs {
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long, default_value_t = 30)]
    pub max_n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

/// Per-graph result, kept so output can be assembled in input order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Status {
    Ok,
    Skip,
    Fail,
    Malformed,
}

pub struct Record {
    pub status: Status,
    pub lines: Vec<String>,
}

impl Record {
    pub fn new(status: Status, line: String) -> Self {
        Record {
            status,
            lines: vec![line],
        }
    }
}

fn exit_code(records: &[Record]) -> u8 {
    if records.iter().any(|r| r.status == Status::Malformed) {
        2
    } else if records.iter().any(|r| r.status == Status::Fail) {
        1
    } else {
        0
    }
}

/// Writes lines to stdout, stopping quietly if the reader has gone away.
pub fn write_lines<'a>(lines: impl IntoIterator<Item = &'a str>) {
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return;
        }
    }
    let _ = out.flush();
}

fn emit(records: &[Record]) -> u8 {
    let count = |s| records.iter().filter(|r| r.status == s).count();
    let summary = format!(
        "SUMMARY records={} ok={} skipped={} failed={} malformed={}",
        records.len(),
        count(Status::Ok),
        count(Status::Skip),
        count(Status::Fail),
        count(Status::Malformed)
    );
    write_lines(
        records
            .iter()
            .flat_map(|r| r.lines.iter().map(String::as_str))
            .chain([summary.as_str()]),
    );
    exit_code(records)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    let records = match cli.command {
        Command::Mad(a) => commands::mad(&a)?,
        Command::Color(a) => commands::color(&a)?,
        Command::Check(a) => return commands::check(&a),
        Command::VerifyTheorem(a) => verify::run(&a)?,
        Command::ChiSum(a) => commands::chi_sum(&a)?,
        Command::FindConfigs(a) => commands::find_configs(&a)?,
        Command::Discharge(a) => commands::discharge(&a)?,
        Command::Generate(a) => return commands::generate(&a),
    };
    Ok(emit(&records))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let code = match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    eprintln!("wall time {:.3}s", start.elapsed().as_secs_f64());
    ExitCode::from(code)
}
