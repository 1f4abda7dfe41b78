use clap::{Parser, Subcommand, ValueEnum};
use crsym::cli::{self, CoeffMode, OutputFormat, ScanConfig};
use std::path::PathBuf;

/// Exact graded symmetry algebras of polynomial model hypersurfaces.
#[derive(Parser)]
#[command(name = "crsym", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a single model spec and emit its report.
    Analyze {
        /// Path to a model-spec JSON document.
        model: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Enumerate and analyze all monomial PQR models up to a degree bound.
    Scan {
        #[arg(long)]
        degree_bound: u32,
        /// Canonicalize under variable permutations and the P↔Q swap.
        #[arg(long)]
        dedupe: bool,
        /// Worker count (0 = all cores).
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write the atlas JSON here.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Replace unit coefficients by seeded random Gaussian rationals.
        #[arg(long)]
        random_coeffs: Option<u64>,
    },
    /// Check a vector field for weighted homogeneity and tangency.
    CheckField {
        model: PathBuf,
        field: PathBuf,
    },
    /// Print a built-in model spec (no name lists the available ones).
    Examples { name: Option<String> },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze { model, format } => cli::cmd_analyze(
            &model,
            match format {
                Format::Text => OutputFormat::Text,
                Format::Json => OutputFormat::Json,
            },
        ),
        Command::Scan {
            degree_bound,
            dedupe,
            jobs,
            output,
            random_coeffs,
        } => {
            let mut cfg = ScanConfig::new(degree_bound);
            cfg.dedupe = dedupe;
            cfg.jobs = jobs;
            cfg.output = output;
            cfg.coeffs = match random_coeffs {
                Some(seed) => CoeffMode::Random { seed },
                None => CoeffMode::Unit,
            };
            cli::cmd_scan(&cfg)
        }
        Command::CheckField { model, field } => cli::cmd_check_field(&model, &field),
        Command::Examples { name } => cli::cmd_examples(name.as_deref()),
    };
    std::process::exit(code);
}
