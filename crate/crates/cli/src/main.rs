use std::process;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use rootbound::Int;
use rootbound_cli::commands::{self, CmdResult, Method, TripletSource};
use rootbound_cli::output::Format;

#[derive(Parser)]
#[command(
    name = "rootbound",
    version,
    about = "Exact rational approximation of square roots: side-and-diagonal numbers, \
             Heron's method, arithmetic-harmonic means, continued fractions, and Pell equations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct FormatArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Decimal places in the decimal column (display only; values stay exact)
    #[arg(long, default_value_t = 12)]
    digits: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Run one approximation method and print its iterates
    Approx {
        /// Radicand of the target root
        #[arg(long = "A")]
        a: Int,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = 10)]
        iterations: usize,
        /// Seed: side number (theon), starting iterate (heron), lower value (ahm)
        #[arg(long)]
        x0: Option<Int>,
        /// Seed: diagonal number (theon), upper value (ahm; defaults to A)
        #[arg(long)]
        y0: Option<Int>,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Split the side-and-diagonal iterates into bounds below and above the root
    Enclose {
        #[arg(long = "A")]
        a: Int,
        /// How many iterates feed the two chains
        #[arg(long, default_value_t = 10)]
        iterations: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Periodic continued fraction of the root, with optional convergents
    Cf {
        #[arg(long = "A")]
        a: Int,
        /// How many convergents to print
        #[arg(long, default_value_t = 0)]
        count: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Solutions of x^2 - A*y^2 = m for m in {1, -1, -2}
    Pell {
        #[arg(long = "A")]
        a: Int,
        #[arg(long, allow_hyphen_values = true)]
        m: Int,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Pythagorean triples from Pell pairs or the classical family
    Triplets {
        #[arg(long, value_enum)]
        source: TripletSource,
        #[arg(long, default_value_t = 5)]
        count: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Side-by-side table of all four methods with exact convergence proxies
    Compare {
        #[arg(long = "A")]
        a: Int,
        #[arg(long, default_value_t = 10)]
        iterations: usize,
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Check the classical bounds 265/153 < sqrt(3) < 1351/780 exactly
    VerifyArchimedes {
        #[command(flatten)]
        fmt: FormatArgs,
    },
    /// Evaluate a base-60 expansion exactly (integer digit first)
    Sexagesimal {
        /// Digits: integer part, then fraction digits (each 0..=59)
        #[arg(value_name = "DIGIT", required = true)]
        values: Vec<Int>,
        #[command(flatten)]
        fmt: FormatArgs,
    },
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Approx {
            a,
            method,
            iterations,
            x0,
            y0,
            fmt,
        } => {
            commands::check_digits(fmt.digits)?;
            commands::approx(
                &a,
                method,
                iterations,
                x0.as_ref(),
                y0.as_ref(),
                fmt.format,
                fmt.digits,
            )
        }
        Command::Enclose { a, iterations, fmt } => {
            commands::check_digits(fmt.digits)?;
            commands::enclose(&a, iterations, fmt.format, fmt.digits)
        }
        Command::Cf { a, count, fmt } => {
            commands::check_digits(fmt.digits)?;
            commands::cf(&a, count, fmt.format, fmt.digits)
        }
        Command::Pell { a, m, count, fmt } => commands::pell_cmd(&a, &m, count, fmt.format),
        Command::Triplets { source, count, fmt } => {
            commands::triplets(source, count, fmt.format)
        }
        Command::Compare { a, iterations, fmt } => {
            commands::check_digits(fmt.digits)?;
            commands::compare(&a, iterations, fmt.format, fmt.digits)
        }
        Command::VerifyArchimedes { fmt } => commands::verify_archimedes(fmt.format),
        Command::Sexagesimal { values, fmt } => {
            commands::check_digits(fmt.digits)?;
            commands::sexagesimal(&values, fmt.format, fmt.digits)
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 64,
            };
            let _ = err.print();
            process::exit(code);
        }
    };
    match run(cli) {
        Ok((payload, code)) => {
            print!("{payload}");
            process::exit(code);
        }
        Err(err) => {
            eprintln!("error: {err}");
            process::exit(err.exit_code());
        }
    }
}
