use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

/// Words, subspaces and the binary symplectic polar space.
#[derive(Debug, Parser)]
#[command(name = "polar-words", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format. Not every command supports every format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,

    /// Write the output here instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Worker threads (default: one per core). Output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// g(n) = (2^n+1)(2^(n-1)+1)/3.
    G { n: usize },
    /// Number of length-n words, by dynamic programming.
    CountWords { n: usize },
    /// Length-n words in lexicographic order.
    EnumerateWords {
        n: usize,
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=7))]
        case: Option<u8>,
    },
    /// Members of the family N^n with their cases.
    EnumerateSubspaces {
        n: usize,
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=7))]
        case: Option<u8>,
    },
    /// Universal embedding dimension of the rank-n polar space.
    Udim { n: usize },
    /// Distance layers around one point, with their checks.
    Strata {
        n: usize,
        /// Index of the base point.
        #[arg(long, default_value_t = 0)]
        base: usize,
    },
    /// Verifies the bijection for length n and prints its table.
    Bijection {
        n: usize,
        #[arg(long = "case", value_parser = clap::value_parser!(u8).range(1..=7))]
        case: Option<u8>,
    },
    /// The point-line incidence of the rank-n polar space.
    ExportIncidence { n: usize },
    /// Runs every acceptance check.
    VerifyAll,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let (document, failed) = match commands::run(&cli.command, cli.format) {
        Ok(doc) => (doc, false),
        Err(Failure::Verification(doc)) => (doc, true),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(3);
        }
        Err(Failure::Other(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
    };
    let document = commands::terminate(document);
    let written = match &cli.out {
        Some(path) => fs::write(path, &document),
        None => io::stdout().lock().write_all(document.as_bytes()),
    };
    if let Err(e) = written {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
