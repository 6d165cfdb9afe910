//! `cayley`: distances between group tables and Cayley stability checks.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use cayley_core::search::DEFAULT_BRUTE_CAP;

#[derive(Parser)]
#[command(name = "cayley", version, about = "Hamming distances between Cayley tables and Cayley stability")]
struct Cli {
    /// Emit JSON; to stdout when bare, to PATH when given (`--json=PATH` or
    /// as the last argument).
    #[arg(long, global = true, num_args = 0..=1, value_name = "PATH", default_missing_value = "-")]
    json: Option<PathBuf>,

    /// Report runtime_ms as 0 so JSON is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a table file is a group.
    Validate { table: PathBuf },
    /// Hamming distance between two tables.
    Dist {
        a: PathBuf,
        b: PathBuf,
        /// Include per-row distances.
        #[arg(long)]
        profile: bool,
    },
    /// Closed-form stability value 6n-18 / 6n-20 / 6n-24.
    Delta0 { table: PathBuf },
    /// Number of pairs where a map fails to be a homomorphism.
    Mf {
        table: PathBuf,
        #[arg(long, conflicts_with = "cycles")]
        perm: Option<String>,
        #[arg(long)]
        cycles: Option<String>,
        /// Codomain table (defaults to TABLE).
        #[arg(long)]
        target: Option<PathBuf>,
    },
    /// Relabel a table along a permutation.
    Transport {
        table: PathBuf,
        #[arg(long, conflicts_with = "cycles")]
        perm: Option<String>,
        #[arg(long)]
        cycles: Option<String>,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Write a catalog group: cyclic:N, dihedral:K, e2:R, q8, A*B.
    Make {
        #[arg(long)]
        kind: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Smallest m_f over all transpositions.
    MinTransposition { table: PathBuf },
    /// Rebuild the isomorphism fixing the light rows.
    Reconstruct { a: PathBuf, b: PathBuf },
    /// Analytic lower bounds for Z_p with minimum row distance m.
    Bounds {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: usize,
    },
    /// Evaluate the structural lemmas on a pair of tables.
    CheckLemmas { a: PathBuf, b: PathBuf },
    /// Verify that the stability of Z_p is 6p-18.
    Verify {
        #[arg(long)]
        prime: usize,
        /// Search every row instead of the fixed row h = 1.
        #[arg(long)]
        all_rows: bool,
        /// Worker threads (output is identical for any value).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Brute-force delta, mu or nu at small order.
    Oracle {
        #[arg(long)]
        order: usize,
        #[arg(long, default_value = "all")]
        scope: String,
        #[arg(long)]
        allow_slow: bool,
    },
    /// Search for an isomorphism between two tables.
    Isomorphic { a: PathBuf, b: PathBuf },
}

fn max_order() -> Result<usize, String> {
    match std::env::var("CAYLEY_MAX_ORDER") {
        Ok(v) => v.trim().parse().map_err(|_| format!("CAYLEY_MAX_ORDER=`{v}` is not an integer")),
        Err(_) => Ok(DEFAULT_BRUTE_CAP),
    }
}

fn dispatch(command: &Command) -> commands::CmdResult {
    use commands as c;
    match command {
        Command::Validate { table } => c::validate(table),
        Command::Dist { a, b, profile } => c::distance(a, b, *profile),
        Command::Delta0 { table } => c::delta0_cmd(table),
        Command::Mf { table, perm, cycles, target } => {
            c::mf(table, perm.as_deref(), cycles.as_deref(), target.as_deref())
        }
        Command::Transport { table, perm, cycles, out } => {
            c::transport(table, perm.as_deref(), cycles.as_deref(), out.as_deref())
        }
        Command::Make { kind, out } => c::make(kind, out.as_deref()),
        Command::MinTransposition { table } => c::min_transposition(table),
        Command::Reconstruct { a, b } => c::reconstruct(a, b),
        Command::Bounds { p, m } => c::bounds(*p, *m),
        Command::CheckLemmas { a, b } => c::lemmas(a, b),
        Command::Verify { prime, all_rows, threads } => c::verify(*prime, *all_rows, *threads),
        Command::Oracle { order, scope, allow_slow } => c::oracle(*order, scope, *allow_slow, max_order()?),
        Command::Isomorphic { a, b } => c::isomorphic(a, b, max_order()?),
    }
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
    let start = Instant::now();
    let mut out = match dispatch(&cli.command) {
        Ok(out) => out,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    out.result.runtime_ms = if cli.no_timing { 0 } else { start.elapsed().as_millis() as u64 };

    match cli.json.as_deref() {
        Some(path) if path.as_os_str() == "-" => print!("{}", output::to_json(&out.result)),
        Some(path) => {
            if let Err(e) = std::fs::write(path, output::to_json(&out.result)) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
            print!("{}", out.text);
        }
        None => print!("{}", out.text),
    }
    ExitCode::from(out.status.exit_code())
}
