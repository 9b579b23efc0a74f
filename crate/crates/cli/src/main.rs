use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use tdy_cli::corpus::{run_corpus, update_corpus};
use tdy_cli::{guarded, run_source, Basis, CliError, Format};

/// Localized equivariant Hirzebruch classes of torus-invariant germs.
#[derive(Parser)]
#[command(name = "tdy", version)]
struct Cli {
    /// Print coefficients in y or in d = -1 - y.
    #[arg(long, global = true, value_enum)]
    basis: Option<Basis>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Total degree for cohomology expansions.
    #[arg(long, global = true)]
    truncation: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// χ_y from smooth fixed points.
    Chi { job: Option<PathBuf> },
    /// Local class of an affine toric variety.
    Toric { job: Option<PathBuf> },
    /// Simple normal crossing pieces.
    Snc { job: Option<PathBuf> },
    /// Affine cones over projective hypersurfaces.
    Cone { job: Option<PathBuf> },
    /// Pushforward from resolution charts.
    Assemble { job: Option<PathBuf> },
    /// Solve for a singular contribution.
    Solve { job: Option<PathBuf> },
    /// Sign report in S-variables.
    Positivity { job: Option<PathBuf> },
    /// Residues in U = e^{-h} - 1.
    Residue { job: Option<PathBuf> },
    /// Run the golden-file corpus.
    Corpus {
        #[arg(long, default_value = "corpus")]
        corpus: PathBuf,
        /// Overwrite expected outputs with the current results.
        #[arg(long)]
        update: bool,
    },
}

fn read_job(path: &Option<PathBuf>) -> Result<String, CliError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| CliError::Schema(format!("{}: {e}", p.display())))
        }
        _ => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Schema(format!("stdin: {e}")))?;
            Ok(s)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, path) = match &cli.command {
        Command::Corpus { corpus, update } => {
            let rows = if *update {
                update_corpus(corpus)
            } else {
                run_corpus(corpus)
            };
            return match rows {
                Ok(rows) => {
                    for r in &rows {
                        println!("{}", r.render());
                    }
                    let failed = rows.iter().filter(|r| !r.passed()).count();
                    println!("{} passed, {failed} failed", rows.len() - failed);
                    if failed == 0 || *update {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(1)
                    }
                }
                Err(e) => {
                    eprintln!("tdy: {e}");
                    ExitCode::from(e.exit_code() as u8)
                }
            };
        }
        Command::Chi { job } => ("chi", job),
        Command::Toric { job } => ("toric", job),
        Command::Snc { job } => ("snc", job),
        Command::Cone { job } => ("cone", job),
        Command::Assemble { job } => ("assemble", job),
        Command::Solve { job } => ("solve", job),
        Command::Positivity { job } => ("positivity", job),
        Command::Residue { job } => ("residue", job),
    };
    std::panic::set_hook(Box::new(|_| {}));
    let result = guarded(|| {
        let src = read_job(path)?;
        let value: serde_json::Value = serde_json::from_str(&src).map_err(|e| CliError::Schema(e.to_string()))?;
        match value.get("command").and_then(|c| c.as_str()) {
            Some(c) if c == name => {}
            Some(c) => {
                return Err(CliError::Schema(format!(
                    "$.command: job is {c:?}, subcommand is {name:?}"
                )))
            }
            None => return Err(CliError::Schema("$.command: missing".into())),
        }
        run_source(&src, cli.basis, cli.format, cli.truncation)
    });
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("tdy: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
