use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use breakdiv::Budget;
use breakdiv_cli::commands::{self, Input, Outcome, SetKind};
use breakdiv_cli::output::{Format, Report};
use breakdiv_cli::verify::{verify, Status, VerifyConfig};
use breakdiv_cli::{CliError, Result};
use clap::{Args, Parser, Subcommand};

/// Break divisors, parking functions, symmetric-group characters and DT invariants of
/// loop quivers, in exact arithmetic.
#[derive(Parser, Debug)]
#[command(name = "breakdiv", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Args, Debug)]
struct Common {
    /// Edge multiplicity of K_n^m
    #[arg(long, global = true)]
    m: Option<u32>,
    /// Number of vertices of K_n^m
    #[arg(long, global = true)]
    n: Option<u32>,
    /// Largest n for the dt table
    #[arg(long = "n-max", global = true)]
    n_max: Option<u32>,
    /// Multigraph file (vertex count, then `i j multiplicity` lines)
    #[arg(long, global = true, value_name = "FILE")]
    graph: Option<PathBuf>,
    /// Set to list with `enumerate`
    #[arg(long, global = true, value_enum, default_value_t = SetKind::Break)]
    set: SetKind,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Maximum number of tuples any enumeration may visit
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_MAX_ITEMS as u64)]
    budget: u64,
    /// Maximum power-series truncation order
    #[arg(long = "max-order", global = true, default_value_t = Budget::DEFAULT_MAX_SERIES_ORDER)]
    max_order: usize,
    /// Worker threads for `verify`
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    /// Seed for the randomised checks of `verify`
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List Break, Park, residue tuples or shift classes
    Enumerate,
    /// Cardinalities and orbit counts, by formula and by enumeration
    Count,
    /// Characters and Frobenius characteristics of Break and Park
    Character,
    /// DT invariants by closed formula and by Euler-product factorisation
    Dt,
    /// Recheck every invariant along two independent routes
    Verify {
        /// Run only these checks (comma separated or repeated)
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
        /// Invert the first comparison of the named check
        #[arg(long, hide = true)]
        inject_fault: Option<String>,
    },
}

const EXIT_VERIFY_FAILED: u8 = 4;

fn run(cli: Cli) -> Result<(Report, u8)> {
    let c = &cli.common;
    let budget = Budget::new(u128::from(c.budget), c.max_order);
    let finish = |o: Outcome| (o.report, if o.failed { EXIT_VERIFY_FAILED } else { 0 });
    match cli.command {
        Command::Enumerate => {
            let input = Input::from_flags(c.m, c.n, c.graph.clone())?;
            commands::enumerate(&input, c.set, &budget).map(finish)
        }
        Command::Count => {
            let input = Input::from_flags(c.m, c.n, c.graph.clone())?;
            commands::count(&input, &budget).map(finish)
        }
        Command::Character => {
            let params = commands::knm_params(c.m, c.n)?;
            commands::character(&params, &budget).map(finish)
        }
        Command::Dt => {
            let m = c.m.ok_or_else(|| CliError::Usage("dt needs --m".into()))?;
            let n_max = c.n_max.ok_or_else(|| CliError::Usage("dt needs --n-max".into()))?;
            commands::dt(m, n_max, &budget).map(finish)
        }
        Command::Verify { only, inject_fault } => {
            let cfg = VerifyConfig {
                m: c.m,
                n: c.n,
                seed: c.seed,
                budget,
                threads: c.threads,
                only,
                inject_fault,
            };
            let out = verify(&cfg)?;
            let code = if out.any(Status::Fail) {
                EXIT_VERIFY_FAILED
            } else if out.any(Status::Budget) {
                CliError::Budget(String::new()).exit_code()
            } else {
                0
            };
            Ok((out.report, code))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.common.format;
    let result = run(cli).and_then(|(report, code)| Ok((report.render(format)?, code)));
    match result {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            if let Err(e) = stdout.write_all(text.as_bytes()).and_then(|_| stdout.flush()) {
                eprintln!("breakdiv: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("breakdiv: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
