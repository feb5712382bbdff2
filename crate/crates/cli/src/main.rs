use std::path::{Path, PathBuf};
use std::process;

use clap::{Parser, Subcommand};
use leibniz_gsb_cli::commands::{self, Options, Outcome};
use leibniz_gsb_cli::CliError;

/// Groebner-Shirshov bases for Lie and Leibniz presentations.
#[derive(Parser)]
#[command(name = "leibniz-gsb", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Degree cap for bases, completion and operad arities.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: usize,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include reduction traces and full listings.
    #[arg(long, global = true)]
    verbose: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a table, subalgebra and (anti)derivation.
    Check { file: PathBuf },
    /// Build and verify the HNN-extension presentation.
    Hnn {
        file: PathBuf,
        /// Skip input validation and report what goes wrong.
        #[arg(long)]
        unchecked: bool,
        /// Also write the presentation as a plain file.
        #[arg(long)]
        presentation: Option<PathBuf>,
    },
    /// Check all compositions of a presentation (file or hnn report).
    Gsb {
        file: PathBuf,
        /// Run completion up to --max-degree.
        #[arg(long)]
        complete: bool,
    },
    /// List Irr(S) up to --max-degree.
    Basis { file: PathBuf },
    /// Normal form of an expression.
    Normalize {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Ideal membership of an expression.
    Member {
        file: PathBuf,
        #[arg(long)]
        expr: String,
    },
    /// Small-arity operad tables; with a Lie table file, also Hadamard products.
    OperadCheck { file: Option<PathBuf> },
    /// Left-normed basis of the free di-Lie algebra.
    DilieBasis {
        file: Option<PathBuf>,
        /// Alphabet such as `x > y` when no file is given.
        #[arg(long)]
        alphabet: Option<String>,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    std::fs::write(path, text).map_err(|source| CliError::Io { path: path.display().to_string(), source })
}

fn dispatch(cli: &Cli) -> Result<Outcome, CliError> {
    let opts = Options { max_degree: cli.max_degree, verbose: cli.verbose, seed: cli.seed };
    let named = |path: &Path, r: Result<Outcome, CliError>| r.map_err(|e| e.in_file(&path.display().to_string()));
    match &cli.command {
        Command::Check { file } => named(file, commands::check(&read(file)?, &opts)),
        Command::Hnn { file, unchecked, presentation } => {
            let out = commands::hnn(&read(file)?, *unchecked, &opts).map_err(|e| e.in_file(&file.display().to_string()))?;
            if let Some(p) = presentation {
                write(p, &out.presentation)?;
            }
            Ok(out.outcome)
        }
        Command::Gsb { file, complete } => named(file, commands::gsb(&read(file)?, *complete, &opts)),
        Command::Basis { file } => named(file, commands::basis(&read(file)?, &opts)),
        Command::Normalize { file, expr } => named(file, commands::normalize(&read(file)?, expr, &opts)),
        Command::Member { file, expr } => named(file, commands::member(&read(file)?, expr, &opts)),
        Command::OperadCheck { file } => {
            let text = file.as_deref().map(read).transpose()?;
            commands::operad_check(text.as_deref(), &opts)
        }
        Command::DilieBasis { file, alphabet } => {
            let text = file.as_deref().map(read).transpose()?;
            commands::dilie(text.as_deref(), alphabet.as_deref(), &opts)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    if let Some(n) = std::env::var("LEIBNIZ_GSB_THREADS").ok().and_then(|s| s.parse::<usize>().ok()) {
        if n > 0 {
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
    }
    match dispatch(&cli) {
        Ok(outcome) => {
            let emitted = match &cli.out {
                Some(path) => outcome.report.emit(path),
                None => {
                    print!("{}", outcome.report.to_json());
                    Ok(())
                }
            };
            if let Err(e) = emitted {
                eprintln!("error: {e}");
                process::exit(2);
            }
            process::exit(if outcome.ok { 0 } else { 1 });
        }
        Err(e) => {
            eprintln!("error: {e}");
            process::exit(2);
        }
    }
}
