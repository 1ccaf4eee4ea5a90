//! Command-line front end: argument parsing, group references, the spectrum
//! cache and the acceptance suite.

pub mod acceptance;
pub mod cache;
pub mod commands;
pub mod groupref;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::CliError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "primegraph", version, about = "Prime graphs of finite groups")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalArgs {
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = acceptance::DEFAULT_CAP)]
    pub cap: u64,
    /// Skip reading and writing the on-disk caches.
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Seed for the Sylow subgroup search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Kv,
    Dot,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Element orders of a group.
    Spectrum { group: String },
    /// Prime graph of a group.
    Gk { group: String },
    /// EPPO case of a group whose elements all have prime power order.
    Eppo { group: String },
    /// Power, enhanced power or commuting graph of a group.
    Elemgraph {
        /// power, enhanced_power or commuting
        kind: String,
        group: String,
        /// Print the adjacency lists.
        #[arg(long)]
        export: bool,
        /// Largest graph --export will print.
        #[arg(long, default_value_t = 2000)]
        max_vertices: usize,
        /// Also print the prime graph derived from maximal clique sizes.
        #[arg(long)]
        cliques: bool,
    },
    /// Simple groups whose order has all prime divisors in the given set.
    Census { primes: Vec<String> },
    /// Almost simple groups over the given primes and the bound f(|pi|).
    Almost { primes: Vec<String> },
    /// Prime graph of E8(q) for q a power of 2.
    E8 {
        q: u64,
        /// Decide adjacency of one pair instead of printing the graph.
        #[arg(long, num_args = 2, value_names = ["R", "S"])]
        pair: Option<Vec<u64>>,
    },
    /// Recognizability verdict for a labeled prime graph file.
    Analyze { file: PathBuf },
    /// Normal subgroup O_p(G).
    Core { group: String, p: u64 },
    /// Print an embedded data file.
    Table { name: String },
    /// Check the embedded tables and run the acceptance suite.
    Verify {
        /// Check only the embedded tables.
        #[arg(long)]
        tables_only: bool,
    },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match commands::execute(&cli, out) {
        Ok(true) => EXIT_OK,
        Ok(false) => EXIT_FAILED,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
