//! Command-line front end: compute generalized inverses, decide partial
//! orders, run the property suites, replay the embedded worked instances,
//! and enumerate small finite matrix rings. JSON in, JSON out.

mod commands;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "starring",
    about = "Exact generalized inverses and matrix partial orders in *-rings",
    version
)]
struct Cli {
    /// Suppress the timestamp field so identical invocations produce
    /// identical bytes.
    #[arg(long, global = true)]
    no_timestamp: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute a generalized inverse of the matrix in --a.
    Compute {
        /// inner | reflexive | group | one3 | one4 | mp | along | core | wcore
        #[arg(long)]
        kind: String,
        /// Matrix document (JSON file).
        #[arg(long)]
        a: String,
        /// Auxiliary element: d for `along`, w for `wcore`.
        #[arg(long)]
        w: Option<String>,
    },
    /// Decide whether a is below b under the chosen partial order.
    Order {
        /// minus | plus | sharp | star | leftstar | rightsharp | diamond | core | wcore
        #[arg(long)]
        kind: String,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        /// Required for kind = wcore.
        #[arg(long)]
        w: Option<String>,
        /// strict requires both elements w-core invertible; relaxed only the left.
        #[arg(long, default_value = "strict")]
        mode: String,
    },
    /// Run property suites over random or exhaustively enumerated instances.
    Verify {
        /// Run every property in the catalog.
        #[arg(long)]
        all: bool,
        /// Property id (repeatable); see `verify --list`.
        #[arg(long)]
        id: Vec<String>,
        /// List the catalog instead of running anything.
        #[arg(long)]
        list: bool,
        #[arg(long, default_value = "gaussian_rationals")]
        domain: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Walk the whole finite ring instead of sampling (mod_p domains only).
        #[arg(long)]
        exhaustive: bool,
    },
    /// Replay the embedded worked instances and check every pinned value.
    Examples,
    /// List all matrices of M_dim(Z_p) for a mod_p domain.
    Enumerate {
        #[arg(long)]
        domain: String,
        #[arg(long, default_value_t = 2)]
        dim: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { kind, a, w } => commands::compute(&kind, &a, w.as_deref()),
        Command::Order {
            kind,
            a,
            b,
            w,
            mode,
        } => commands::order(&kind, &a, &b, w.as_deref(), &mode),
        Command::Verify {
            all,
            id,
            list,
            domain,
            dim,
            trials,
            seed,
            exhaustive,
        } => commands::verify(all, &id, list, &domain, dim, trials, seed, exhaustive),
        Command::Examples => commands::examples(),
        Command::Enumerate { domain, dim } => commands::enumerate(&domain, dim),
    };
    let result = result.stamped(!cli.no_timestamp);
    let rendered = serde_json::to_string_pretty(&result).expect("result serializes");
    // tolerate a consumer that closes the pipe early
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{rendered}");
    let _ = stdout.flush();
    if result.is_ok() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
