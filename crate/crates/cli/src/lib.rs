//! Command-line front end: read and write complex documents, print face
//! vector tables, and run verification suites.

pub mod commands;
pub mod family;
pub mod file;

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use cubical::GeneratorError;
use thiserror::Error;

pub use commands::{Invariant, Suite};
pub use file::{parse, parse_str, serialize, to_document, FileError};

/// Exit code for usage, parse, validation and kind errors.
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    File(#[from] FileError),

    #[error(transparent)]
    Generator(#[from] GeneratorError),

    #[error("kind mismatch: {0}")]
    KindMismatch(String),

    #[error("not computable: {0}")]
    Inapplicable(String),

    #[error("cannot write output: {0}")]
    Output(#[from] io::Error),
}

#[derive(Debug, Parser)]
#[command(
    name = "cubical",
    version,
    about = "Face numbers of cubical and simplicial complexes"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a complex from a named family.
    Gen {
        /// Family name, e.g. `torus` or `pile-boundary`.
        family: String,
        /// Integer parameters; `product` takes two specs separated by `x`.
        params: Vec<String>,
        /// Where to write the JSON document.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print an invariant of a complex document.
    Compute {
        #[arg(value_enum)]
        invariant: Invariant,
        /// Complex document to read.
        path: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        machine: bool,
    },
    /// Run a verification suite on a complex document.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Complex document to read.
        path: PathBuf,
        /// Emit JSON instead of text.
        #[arg(long)]
        machine: bool,
    },
}

/// Runs one command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut impl Write) -> Result<i32, CliError> {
    match &cli.command {
        Command::Gen {
            family,
            params,
            out: path,
        } => {
            let g = family::generate(family, params)?;
            serialize(&g, path)?;
            writeln!(
                out,
                "wrote {} ({}, dim {}) to {}",
                g.provenance,
                g.complex.kind(),
                g.complex.dim(),
                path.display()
            )?;
            Ok(0)
        }
        Command::Compute {
            invariant,
            path,
            machine,
        } => {
            let g = parse(path)?;
            let table = commands::compute(*invariant, &g)?;
            if *machine {
                let doc = serde_json::to_string_pretty(&table).expect("tables serialize");
                writeln!(out, "{doc}")?;
            } else {
                write!(out, "{}", table.render())?;
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            path,
            machine,
        } => {
            let g = parse(path)?;
            let reports = commands::verify(*suite, &g)?;
            write!(out, "{}", commands::render_reports(&g, &reports, *machine))?;
            Ok(commands::verify_exit_code(&reports))
        }
    }
}
