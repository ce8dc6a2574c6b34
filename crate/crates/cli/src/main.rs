//! `sumgraph` command-line front end.
//!
//! Exit codes: 0 when every requested check holds, 1 when at least one check
//! fails, 2 on usage or input errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "sumgraph", version, about = "Sumgraph growth of regular graphs: constructions, checks, search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a graph from a named family and write its edge list.
    Construct(ConstructArgs),
    /// Write the h-fold sumgraph and/or print the growth profile.
    Power(PowerArgs),
    /// Run graph checks and print a JSON array of verdicts.
    Check(CheckArgs),
    /// Sumset sizes against min{p, h|A| - (h - 1)} in Z_p.
    CheckCd(SetArgs),
    /// Edge growth of the Cayley graph of A on Z_p.
    CheckThm14(SetArgs),
    /// Neighbourhood decompositions and the geodesic cut.
    Diagnose(DiagnoseArgs),
    /// Rank connected regular graphs by slow sumgraph growth.
    Search(SearchArgs),
    /// Bracket the constant of the cube-growth bound.
    Epsilon(EpsilonArgs),
}

#[derive(Debug, Args)]
struct ConstructArgs {
    #[arg(long)]
    family: String,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Comma-separated generators; the symmetric closure is used.
    #[arg(long)]
    gens: Option<String>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PowerArgs {
    /// Edge-list file, or `-` for stdin.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    h: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print the growth profile for h = 1..=HMAX as JSON.
    #[arg(long, value_name = "HMAX")]
    profile: Option<usize>,
}

#[derive(Debug, Args)]
struct CheckArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// |3E| >= min{C(n,2), (1 + eps)|E|} for connected regular graphs.
    #[arg(long)]
    thm15: bool,
    /// Diameter at most (3n - (d + 3)) / (d + 1), d the minimum degree.
    #[arg(long)]
    prop16: bool,
    /// |2E \ E| per vertex, with the bound |2E \ E| >= n/2.
    #[arg(long)]
    conj18: bool,
    /// Test the cube-growth bound with this constant in place of eps*.
    #[arg(long)]
    eps: Option<f64>,
}

#[derive(Debug, Args)]
struct SetArgs {
    #[arg(long)]
    p: usize,
    /// Comma-separated residues.
    #[arg(long)]
    set: String,
    #[arg(long)]
    hmax: usize,
}

#[derive(Debug, Args)]
struct DiagnoseArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Decompose around this vertex only.
    #[arg(long)]
    vertex: Option<usize>,
    /// Include the geodesic cut.
    #[arg(long)]
    cut: bool,
    /// Threshold for the per-vertex case split; defaults to sqrt(eps*).
    #[arg(long)]
    eps1: Option<f64>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    #[value(name = "min-3ratio")]
    Min3Ratio,
    #[value(name = "min-2excess")]
    Min2Excess,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
struct SearchArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long, conflicts_with_all = ["random", "seed"], required_unless_present = "random")]
    exhaustive: bool,
    /// One representative per isomorphism class.
    #[arg(long, conflicts_with = "random")]
    dedup: bool,
    #[arg(long, value_name = "COUNT", requires = "seed")]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    objective: ObjectiveArg,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    jobs: u64,
    #[arg(long, default_value_t = 100)]
    top: usize,
    #[arg(long, value_enum, default_value_t = Format::Jsonl)]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EpsilonArgs {
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    use super::*;

    #[test]
    fn argument_definitions_are_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn search_sources_are_exclusive() {
        let parse = |args: &[&str]| Cli::try_parse_from([&["sumgraph", "search"], args].concat());
        assert!(parse(&["--n", "8", "--d", "3", "--exhaustive", "--objective", "min-3ratio"]).is_ok());
        assert!(parse(&["--n", "8", "--d", "3", "--random", "5", "--seed", "1", "--objective", "min-3ratio"]).is_ok());
        assert!(parse(&["--n", "8", "--d", "3", "--exhaustive", "--random", "5", "--seed", "1", "--objective", "min-3ratio"]).is_err());
        assert!(parse(&["--n", "8", "--d", "3", "--dedup", "--random", "5", "--seed", "1", "--objective", "min-3ratio"]).is_err());
        assert!(parse(&["--n", "8", "--d", "3", "--objective", "min-3ratio"]).is_err());
    }
}
