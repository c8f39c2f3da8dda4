use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cubenet::network::{NetworkSelector, DEFAULT_NODE_CAP};
use cubenet::report::{run, Command, Format, RunConfig};
use cubenet::Error;

const EXIT_USAGE: u8 = 1;
const EXIT_SIZE: u8 = 2;
const EXIT_VERIFY: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cubenet",
    version,
    about = "Cubic delivery networks: congestion and best responses"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export a complete network as JSON, CSV, DOT or OBJ.
    Build(Common),
    /// Classify every link pair and write the congestion map and summary.
    Congestion(Common),
    /// Best response, Kuhn-Tucker report and sampled allocation per player.
    Equilibrium(Common),
    /// Congestion growth over lattice sizes.
    Paradox(Common),
    /// Recompute the published counts and compare.
    VerifyPaper(Common),
}

#[derive(Args)]
struct Common {
    /// linear | plane | cube | two-cube:{plane,edge,node} | lattice:nx,ny,nz
    #[arg(long = "network", value_parser = parse_selector)]
    networks: Vec<NetworkSelector>,
    /// Output directory.
    #[arg(long, default_value = ".")]
    out: PathBuf,
    /// Comma-separated subset of json,csv,dot,obj.
    #[arg(long, value_delimiter = ',', default_value = "json", value_parser = parse_format)]
    format: Vec<Format>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = DEFAULT_NODE_CAP)]
    node_cap: usize,
    /// Problem-set JSON for the equilibrium command.
    #[arg(long)]
    problem: Option<PathBuf>,
}

fn parse_selector(s: &str) -> Result<NetworkSelector, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn config(cli: Cli) -> RunConfig {
    let (command, c) = match cli.command {
        Cmd::Build(c) => (Command::Build, c),
        Cmd::Congestion(c) => (Command::Congestion, c),
        Cmd::Equilibrium(c) => (Command::Equilibrium, c),
        Cmd::Paradox(c) => (Command::Paradox, c),
        Cmd::VerifyPaper(c) => (Command::VerifyPaper, c),
    };
    RunConfig {
        command,
        networks: c.networks,
        out: c.out,
        formats: c.format.into_iter().collect::<BTreeSet<_>>(),
        seed: c.seed,
        node_cap: c.node_cap,
        problem: c.problem,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(&config(cli)) {
        Ok(outcome) => {
            println!("{}", outcome.summary);
            for path in &outcome.written {
                println!("wrote {}", path.display());
            }
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFY)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_size_error() {
                EXIT_SIZE
            } else {
                EXIT_USAGE
            })
        }
    }
}
