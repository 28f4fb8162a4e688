//! `gpw`: codimensions, cocharacters, identities and multiplicity
//! classification for graded algebras given as JSON documents.

mod cache;
mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use report::Format;

#[derive(Debug, Parser)]
#[command(name = "gpw", version, about = "Graded polynomial identities of finite-dimensional algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Result cache directory.
    #[arg(long, global = true, env = "GPW_CACHE")]
    pub cache: Option<PathBuf>,
    /// Print wall time to stderr.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FillingsArg {
    Standard,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum RankArg {
    Modular,
    Exact,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check a document against the schema and the algebra axioms.
    Validate { file: PathBuf },
    /// Codimensions of every slice of degree n.
    Codim {
        file: PathBuf,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = RankArg::Modular)]
        rank: RankArg,
    },
    /// Cocharacter support of degree n, or the multiplicity of one shape.
    Cochar {
        file: PathBuf,
        #[arg(long = "n", required_unless_present = "shape")]
        n: Option<usize>,
        /// Shape literal such as `((2,1)@1+,(1)@g-)`.
        #[arg(long)]
        shape: Option<String>,
        #[arg(long, value_enum, default_value_t = FillingsArg::Standard)]
        fillings: FillingsArg,
        #[arg(long, value_enum, default_value_t = RankArg::Modular)]
        rank: RankArg,
    },
    /// Decide whether a polynomial is an identity (exit 1 if not).
    Identity {
        file: PathBuf,
        #[arg(long)]
        poly: String,
    },
    /// Sandwich-identity classification of bounded multiplicities.
    ClassifyBounded {
        file: PathBuf,
        #[arg(long = "n-max", default_value_t = 5)]
        n_max: usize,
    },
    /// Multiplicity-one identity lists for algebras with involution.
    ClassifyMultone {
        file: PathBuf,
        #[arg(long = "n-max", default_value_t = 5)]
        n_max: usize,
    },
    /// Hypotheses and conclusions of the multiplicity-one lemmas.
    VerifyLemmas {
        file: PathBuf,
        #[arg(long = "n-max", default_value_t = 5)]
        n_max: usize,
    },
    /// Write a built-in algebra as a document.
    Builtin {
        /// ut2, k_g (k), grassmann2 (g2), field, m2t
        name: String,
        /// Group: c<N>, or a product such as c2xc2.
        #[arg(long)]
        group: Option<String>,
        #[arg(long)]
        g: Option<String>,
        #[arg(long)]
        h: Option<String>,
        /// Attach the trivial involution (field only).
        #[arg(long)]
        star: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(&cli);
    if cli.timing {
        eprintln!("timing\t{:.3} s", start.elapsed().as_secs_f64());
    }
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
