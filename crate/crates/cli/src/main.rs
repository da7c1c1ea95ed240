use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rota_baxter_cli::commands::{self, Generator, Verb};
use rota_baxter_cli::{CliError, Result, StructureFile};

/// Exact checks and constructions for Rota-Baxter (co)algebras.
///
/// Exit status: 0 pass, 1 a check failed, 2 bad input or violated precondition.
#[derive(Debug, Parser)]
#[command(name = "rbc", version)]
struct Cli {
    /// Write the result here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Emit a generated structure file.
    Gen {
        #[command(subcommand)]
        generator: Gen,
    },
    /// Check every law that applies to a structure file.
    Check {
        file: PathBuf,
        /// Weight to use instead of the file's.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Operator to check (default P).
        #[arg(long)]
        op: Option<String>,
    },
    /// Apply a construction and emit the resulting structure file.
    Transform {
        file: PathBuf,
        /// dualize, double-coproduct, double-product, complement, rescale,
        /// counitize, quotient-image, split, projector, graded-dual
        verb: String,
        /// Target weight for rescale.
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[arg(long)]
        op: Option<String>,
    },
    /// Exhaustively verify the binomial lemma up to a bound.
    Lemma {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Debug, Subcommand)]
enum Gen {
    /// Binomial coalgebra c0..cN with the shift operator, weight -1.
    Binomial {
        #[arg(long)]
        n: usize,
    },
    /// Group algebra of the cyclic group of order n.
    Group {
        #[arg(long)]
        n: usize,
    },
    /// Sweedler's four-dimensional Hopf algebra.
    Sweedler,
    /// Smash coproduct on H⊗H with operator p1 or p2.
    Smash {
        /// z<n> or sweedler
        #[arg(long)]
        hopf: String,
        #[arg(long)]
        op: String,
    },
    /// t K[t] truncated at degree n with the q-weighted operator, weight 1.
    Qpoly {
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        #[arg(long)]
        n: usize,
    },
}

fn read(path: &PathBuf) -> Result<StructureFile> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    StructureFile::from_json(&text)
}

fn emit(output: &Option<PathBuf>, text: &str) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Gen { generator } => {
            let g = match generator {
                Gen::Binomial { n } => Generator::Binomial { n },
                Gen::Group { n } => Generator::Group { n },
                Gen::Sweedler => Generator::Sweedler,
                Gen::Smash { hopf, op } => Generator::Smash { hopf, op },
                Gen::Qpoly { q, n } => Generator::Qpoly { q, n },
            };
            emit(&cli.output, &commands::generate(&g)?.to_json())?;
            Ok(true)
        }
        Command::Check { file, weight, op } => {
            let f = read(&file)?;
            let out = commands::check(&f, op.as_deref(), weight.as_deref())?;
            emit(&cli.output, &out.json)?;
            Ok(out.pass)
        }
        Command::Transform { file, verb, mu, op } => {
            let v = Verb::parse(&verb)
                .ok_or_else(|| CliError::Usage(format!("unknown transform {verb:?}")))?;
            let f = read(&file)?;
            let out = commands::transform(&f, v, mu.as_deref(), op.as_deref())?;
            emit(&cli.output, &out.to_json())?;
            Ok(true)
        }
        Command::Lemma { max_n } => {
            let out = commands::lemma(max_n);
            emit(&cli.output, &out.json)?;
            Ok(out.pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("rbc: {e}");
            ExitCode::from(2)
        }
    }
}
