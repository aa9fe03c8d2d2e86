use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cubic_waring_cli::commands::{self, Outcome};

/// Real Waring rank of ternary cubics: orbit classification, covariants and
/// exact decompositions.
#[derive(Parser)]
#[command(name = "cubic-waring", version)]
struct Cli {
    /// Emit a JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Real orbit, ranks, bounds and a certificate.
    Classify {
        poly: String,
        /// Also run De Paolis on this line, given as a,b,c.
        #[arg(long, allow_hyphen_values = true)]
        line: Option<String>,
        /// Search for a five-term certificate by peeling one cube.
        #[arg(long)]
        peel: bool,
    },
    /// The Hessian determinant.
    Hessian { poly: String },
    /// Polar conic at a point a,b,c.
    Polar {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// De Paolis decomposition along a line a,b,c.
    Depaolis {
        poly: String,
        #[arg(long, allow_hyphen_values = true)]
        line: String,
    },
    /// Shortest decomposition found.
    Decompose { poly: String },
    /// Real rank and decomposition of a binary cubic in x, y.
    Binary { poly: String },
    /// Check every record of the catalog file.
    VerifyCatalog {
        /// Catalog file to read instead of the bundled one.
        #[arg(long)]
        catalog: Option<PathBuf>,
    },
    /// Classify random integer cubics.
    Sample {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        bound: i64,
    },
    /// Print the built-in catalog as TOML.
    ExportCatalog,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { commands::EXIT_USAGE as u8 } else { 0 });
        }
    };
    let outcome: Outcome = match &cli.command {
        Command::Classify { poly, line, peel } => commands::classify_cmd(poly, line.as_deref(), *peel),
        Command::Hessian { poly } => commands::hessian_cmd(poly),
        Command::Polar { poly, point } => commands::polar_cmd(poly, point),
        Command::Depaolis { poly, line } => commands::depaolis_cmd(poly, line),
        Command::Decompose { poly } => commands::decompose_cmd(poly),
        Command::Binary { poly } => commands::binary_cmd(poly),
        Command::VerifyCatalog { catalog } => commands::verify_catalog_cmd(catalog.as_deref()),
        Command::Sample { count, seed, bound } => commands::sample_cmd(*count, *seed, *bound),
        Command::ExportCatalog => {
            emit(&mut std::io::stdout(), &commands::export_catalog_cmd());
            return ExitCode::SUCCESS;
        }
    };
    if cli.json {
        emit(&mut std::io::stdout(), &(outcome.report.to_json() + "\n"));
    } else if outcome.exit == commands::EXIT_USAGE {
        emit(&mut std::io::stderr(), &outcome.text);
    } else {
        emit(&mut std::io::stdout(), &outcome.text);
    }
    ExitCode::from(outcome.exit as u8)
}

/// Writes everything, ignoring a closed pipe.
fn emit(out: &mut impl Write, text: &str) {
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}
