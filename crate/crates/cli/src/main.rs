//! `cherednik`: command-line front end for the exact checks in the
//! `cherednik` library.
//!
//! Exit codes: 0 when every checked identity holds, 1 on a violation (the
//! offending record is still printed), 2 on a usage error.

mod commands;
mod output;

use std::io;
use std::process::ExitCode;

use cherednik::partitions::Regularity;
use cherednik::rational::parse_rational;
use cherednik::{CSign, Error, Partition, Rational};
use clap::{Parser, Subcommand, ValueEnum};

use output::{render, Format, Report};

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Exact computations for rational Cherednik algebras of type A")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Convention {
    Conjugate,
    Direct,
}

impl From<Convention> for Regularity {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Conjugate => Regularity::Conjugate,
            Convention::Direct => Regularity::Direct,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Support level q of L(τ_λ) with its stratum and (μ, ν) label.
    Support {
        /// Partition as a comma list, e.g. 3,1.
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: u32,
        /// Sign of c: + or -.
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: CSign,
    },
    /// Splits λ = mμ + ν under either regularity convention.
    Decompose {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        m: u32,
        #[arg(long, value_enum, default_value_t = Convention::Conjugate)]
        convention: Convention,
    },
    /// Every λ ⊢ n grouped by support level, with the label bijection verified.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "+", allow_hyphen_values = true)]
        sign: CSign,
    },
    /// Four-way stratum count for every n ≤ n-max and every listed m.
    BoVerify {
        #[arg(long)]
        n_max: usize,
        /// Comma-separated moduli.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        m: Vec<u32>,
    },
    /// Lowest weights h(λ) for λ ⊢ n and their monotonicity in dominance order.
    Weights {
        #[arg(long)]
        n: usize,
        /// Parameter c as p/q.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
    },
    /// Littlewood-Richardson induction of τ_λ ⊗ τ_μ and its leading term.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        /// Positive parameter used for lowest weights.
        #[arg(long, value_parser = parse_rational, default_value = "1")]
        c: Rational,
    },
    /// Defining relations and Euler spectrum on the polynomial representation.
    DunklCheck {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, default_value_t = 3)]
        degree: u32,
    },
    /// Degree-d polynomials killed by every Dunkl operator.
    Singular {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Rational,
        #[arg(long, default_value_t = 1)]
        degree: u32,
    },
    /// Stability of the vanishing ideal of X_q under Dunkl operators.
    IdealCheck {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 3)]
        degree: u32,
        /// Overrides c = 1/m.
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        c: Option<Rational>,
    },
    /// Coefficients of the Fock-space trace series, cross-checked against the product formula.
    FockTrace {
        #[arg(long)]
        m: u32,
        /// Truncation degree in s.
        #[arg(long, default_value_t = 10)]
        max: usize,
    },
    /// Simple modules of the Hecke algebra at a primitive m-th root of unity.
    HeckeSimples {
        #[arg(long)]
        p: usize,
        #[arg(long)]
        m: u32,
        /// Seed for the sampled associativity check.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 20)]
        samples: usize,
    },
}

fn run(command: &Command) -> cherednik::Result<Report> {
    match command {
        Command::Support { lambda, m, sign } => commands::support(lambda, *m, *sign),
        Command::Decompose { lambda, m, convention } => commands::decompose(lambda, *m, (*convention).into()),
        Command::Census { n, m, sign } => commands::census(*n, *m, *sign),
        Command::BoVerify { n_max, m } => commands::bo_verify(*n_max, m),
        Command::Weights { n, c } => commands::weights(*n, c),
        Command::Lr { lambda, mu, c } => commands::lr(lambda, mu, c),
        Command::DunklCheck { n, c, degree } => commands::dunkl_check(*n, c, *degree),
        Command::Singular { n, c, degree } => commands::singular(*n, c, *degree),
        Command::IdealCheck { n, m, q, degree, c } => commands::ideal_check(*n, *m, *q, *degree, c.as_ref()),
        Command::FockTrace { m, max } => commands::fock_trace(*m, *max),
        Command::HeckeSimples { p, m, seed, samples } => commands::hecke_simples(*p, *m, *samples, *seed),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok(report) => {
            if let Err(e) = render(&report, cli.format, &mut io::stdout().lock()) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e @ Error::InvariantViolation(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
