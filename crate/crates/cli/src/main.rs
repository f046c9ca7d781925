use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use fmcalc_cli::commands::{
    cmd_pair, cmd_search_orthogonal, cmd_smith, cmd_transform, cmd_verlinde, load_surface, run_verify, CliResult,
};

#[derive(Parser)]
#[command(name = "fmcalc", version, about = "Exact Fourier-Mukai and Mukai-vector calculations on B×F")]
struct Cli {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// JSON model file: `{"base_genus": g, "descriptor": {...}}`.
    #[arg(long, global = true, value_name = "FILE")]
    model: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Transform a Mukai vector `r:(aσ+bf):χ` by a named kernel.
    Transform {
        #[arg(short = 'v', long = "vector")]
        vector: String,
        /// rs, rs-inverse, rsdagger, rsdagger-inverse, identity, u:a,b,r,d, udual:a,b,r,d
        #[arg(short, long, default_value = "rs")]
        kernel: String,
    },
    /// Invariants of a pair of vectors: χ(v·w), d_v, d_w, pullback match,
    /// Verlinde counts and the section decomposition.
    Pair {
        #[arg(short = 'v')]
        v: String,
        #[arg(short = 'w')]
        w: String,
    },
    /// Verlinde count for an orthogonal pair.
    Verlinde {
        #[arg(short = 'v')]
        v: String,
        #[arg(short = 'w')]
        w: String,
        #[arg(long, default_value = "plus")]
        side: String,
    },
    /// Run the identity catalog.
    #[command(alias = "verify-paper")]
    Verify {
        /// Glob over check ids, e.g. `fixed-det/*`.
        #[arg(long)]
        filter: Option<String>,
        /// Restrict to one identity family, e.g. `pb-match`.
        #[arg(long)]
        identity: Option<String>,
        /// List the families and exit.
        #[arg(long)]
        list: bool,
    },
    /// Enumerate orthogonal pairs of vectors (r, σ+mf, χ).
    SearchOrthogonal {
        #[arg(long, default_value_t = 3)]
        max_rank: i64,
        #[arg(long, default_value_t = 2)]
        max_chi: i64,
        #[arg(long, default_value_t = 5)]
        max_m: i64,
    },
    /// Smith normal form of an integer matrix read from a JSON or text file.
    Smith { file: PathBuf },
}

fn run(cli: Cli) -> CliResult<(String, u8)> {
    let surface = load_surface(cli.model.as_deref())?;
    let json = cli.json;
    let text = match cli.command {
        Command::Transform { vector, kernel } => cmd_transform(&surface, &vector, &kernel, json)?,
        Command::Pair { v, w } => cmd_pair(&surface, &v, &w, json)?,
        Command::Verlinde { v, w, side } => cmd_verlinde(&surface, &v, &w, &side, json)?,
        Command::Verify { list: true, .. } => fmcalc_cli::catalog::families().join("\n") + "\n",
        Command::Verify { filter, identity, .. } => {
            let report = run_verify(&surface, filter.as_deref(), identity.as_deref())?;
            let code = if report.ok() { 0 } else { 1 };
            let out = if json {
                serde_json::to_string_pretty(&report).expect("report serializes") + "\n"
            } else {
                report.to_text()
            };
            return Ok((out, code));
        }
        Command::SearchOrthogonal { max_rank, max_chi, max_m } => {
            cmd_search_orthogonal(max_rank, max_chi, max_m, json)?
        }
        Command::Smith { file } => cmd_smith(&file)?,
    };
    Ok((text, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
