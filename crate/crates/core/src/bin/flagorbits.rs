use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use flagorbits::cli::{
    self, budget_from_env, render_table, to_line, CliError, OutputFormat, RunConfig, Suite, TypeArg,
};
use flagorbits::finite_field::DEFAULT_BUDGET;
use flagorbits::LieType;

#[derive(Parser)]
#[command(
    name = "flagorbits",
    version,
    about = "Finiteness of orbits on products of flag ind-varieties"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the product of the given flag ind-varieties has finitely many orbits.
    Classify {
        /// A, B, C, D, or O (orthogonal, parity inferred).
        #[arg(long = "type")]
        lie_type: String,
        /// Block signature such as `1,inf,1`, or `dense` for a non-semilarge flag.
        #[arg(long = "sig", required = true)]
        sigs: Vec<String>,
    },
    /// Truncate a signature to a finite total dimension.
    Truncate {
        /// Typed signature such as `C:1,inf,1`.
        #[arg(long)]
        sig: String,
        #[arg(long)]
        total: usize,
        #[arg(long, value_enum, default_value = "balanced")]
        policy: Policy,
        /// Dimensions of the infinite blocks, for `--policy explicit`.
        #[arg(long, value_delimiter = ',')]
        assign: Vec<usize>,
    },
    /// Count orbits on a pair of type-A flag varieties.
    CountDouble {
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<u32>,
        #[arg(long, value_delimiter = ',', required = true)]
        d: Vec<u32>,
    },
    /// Orbit counts of two truncated type-A signatures over a range of totals.
    Growth {
        #[arg(long)]
        sig1: String,
        #[arg(long)]
        sig2: String,
        #[arg(long, value_delimiter = ',', required = true)]
        totals: Vec<usize>,
    },
    /// Enumerate orbits on a product of flag varieties over GF(p).
    Enumerate {
        #[arg(long = "type")]
        lie_type: LieType,
        /// Block dimensions of one factor; repeat for each factor.
        #[arg(long = "dims", value_parser = parse_dims, required = true)]
        dims: Vec<Vec<usize>>,
        #[arg(long, default_value_t = 2)]
        p: u32,
        #[arg(long)]
        budget: Option<u64>,
        /// Include one representative per orbit.
        #[arg(long)]
        reps: bool,
    },
    /// Run bundled verification suites.
    Verify {
        #[arg(value_enum, required = true)]
        suites: Vec<Suite>,
        /// Primes for the finite-field suites.
        #[arg(long = "p", value_delimiter = ',', default_value = "2")]
        primes: Vec<u32>,
        #[arg(long)]
        budget: Option<u64>,
        /// Totals to sweep where a suite takes them.
        #[arg(long, value_delimiter = ',')]
        totals: Vec<usize>,
        #[arg(long, value_enum, default_value = "json")]
        output: OutputFormat,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Policy {
    Balanced,
    Explicit,
}

fn parse_dims(s: &str) -> Result<Vec<usize>, String> {
    s.split(',')
        .enumerate()
        .map(|(i, x)| {
            x.trim()
                .parse::<usize>()
                .map_err(|e| format!("entry {i} `{x}`: {e}"))
        })
        .collect()
}

fn budget(explicit: Option<u64>) -> Result<u64, CliError> {
    match explicit {
        Some(0) => Err(CliError::Invalid("budget must be positive".into())),
        Some(b) => Ok(b),
        None => budget_from_env(DEFAULT_BUDGET),
    }
}

fn run(command: Command) -> Result<(String, i32), CliError> {
    match command {
        Command::Classify { lie_type, sigs } => {
            let t: TypeArg = lie_type.parse()?;
            let v = cli::cmd_classify(t, &sigs)?;
            Ok((to_line(&v), v.exit_code()))
        }
        Command::Truncate {
            sig,
            total,
            policy,
            assign,
        } => {
            let explicit = match policy {
                Policy::Balanced => None,
                Policy::Explicit => Some(assign.as_slice()),
            };
            Ok((to_line(&cli::cmd_truncate(&sig, total, explicit)?), 0))
        }
        Command::CountDouble { c, d } => Ok((to_line(&cli::cmd_count_double(&c, &d)?), 0)),
        Command::Growth { sig1, sig2, totals } => {
            Ok((to_line(&cli::cmd_growth(&sig1, &sig2, &totals)?), 0))
        }
        Command::Enumerate {
            lie_type,
            dims,
            p,
            budget: b,
            reps,
        } => {
            let v = cli::cmd_enumerate(lie_type, &dims, p, budget(b)?, reps)?;
            Ok((to_line(&v), 0))
        }
        Command::Verify {
            suites,
            primes,
            budget: b,
            totals,
            output,
        } => {
            let config = RunConfig {
                budget: budget(b)?,
                primes,
                totals,
                output,
            };
            let (reports, code) = cli::cmd_verify(&suites, &config)?;
            let text = match config.output {
                OutputFormat::Json => reports.iter().map(to_line).collect(),
                OutputFormat::Table => render_table(&reports),
            };
            Ok((text, code))
        }
    }
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { cli::EXIT_INVALID } else { 0 };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match run(args.command) {
        Ok((text, code)) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(text.as_bytes());
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprint!("{}", to_line(&e.to_json()));
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
