use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode as ProcessExit;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use monideal::harness::{run_command, Command, ExitCode, Options, RunReport};
use monideal::{Budget, Error};

const BUDGET_ENV: &str = "MONIDEAL_BUDGET";

/// Monomial ideals: decompositions, associated primes of powers, and
/// bounded property checks.
#[derive(Parser, Debug)]
#[command(name = "monideal", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Associated primes of I^t
    Ass(Common),
    /// Minimal primes of I^t
    Min(Common),
    /// Embedded primes of I^t
    Embedded(Common),
    /// Irreducible and primary decomposition of I^t
    Decompose(Common),
    /// Height of I
    Height(Common),
    /// Whether every associated prime of I has the same height
    Unmixed(Common),
    /// Maximum number of pairwise coprime generators
    Beta1(Common),
    /// Whether the maximum number of disjoint generators equals the height
    Konig(Common),
    /// Symbolic power I^(k), k from --power (default 2)
    Symbolic(Common),
    /// Ass(I^k) within Ass(I) for k up to --max-power
    Ntf(Common),
    /// Ass(I^k) within Ass(I^(k+1)) for k up to --max-power
    Persistence(Common),
    /// (I^(k+1) : I) = I^k for k up to --max-power
    StrongPersistence(Common),
    /// (I^((k+1)) : I^((1))) = I^((k)) for k up to --max-power
    SymbolicSp(Common),
    /// Corner elements of I^t
    Corners(Common),
    /// Witness monomials of the associated primes of I^t
    Witness(Common),
    /// Whether every generator is t-spread, t from --spread (default 2)
    Tspread(Common),
    /// Check one executable claim on the input
    Verify {
        /// Claim id, e.g. thm-pp2-ntf or q413-counterexample
        id: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run the fixed reproduction suite against embedded golden values
    ReproducePaper(Common),
    /// Run seeded property sweeps
    RandomSweep(Common),
}

#[derive(Args, Debug)]
struct Common {
    /// Ideal document; `-` reads standard input
    file: Option<PathBuf>,
    /// Binding to use (default: the last ideal bound in the document)
    #[arg(long)]
    ideal: Option<String>,
    /// Second binding, for thm-disjoint-ass
    #[arg(long)]
    with: Option<String>,
    /// Power t
    #[arg(long)]
    power: Option<u32>,
    /// Largest power checked by bounded property checks (default 4)
    #[arg(long)]
    max_power: Option<u32>,
    /// Seed for random sweeps (default 0)
    #[arg(long)]
    seed: Option<u64>,
    /// Cell budget for box searches; overrides MONIDEAL_BUDGET
    #[arg(long)]
    budget: Option<u64>,
    /// Prime for `witness`, e.g. "(x1,x2)"
    #[arg(long)]
    prime: Option<String>,
    /// Monomial for thm-pp2-ntf, e.g. x1*x3*x6
    #[arg(long)]
    monomial: Option<String>,
    /// Comma-separated variables for thm-deletion-colon
    #[arg(long, value_delimiter = ',')]
    vars: Vec<String>,
    /// Spread t for `tspread`
    #[arg(long)]
    spread: Option<usize>,
    /// Instances per suite for `random-sweep` (default 100)
    #[arg(long)]
    count: Option<usize>,
    /// Suite for `random-sweep` (default all)
    #[arg(long)]
    suite: Option<String>,
    /// Print the JSON report
    #[arg(long, conflicts_with = "text")]
    json: bool,
    /// Print plain text (default)
    #[arg(long)]
    text: bool,
    /// Include wall-clock time in the report
    #[arg(long)]
    timing: bool,
}

fn split(cmd: Cmd) -> (Command, Common) {
    match cmd {
        Cmd::Ass(c) => (Command::Ass, c),
        Cmd::Min(c) => (Command::Min, c),
        Cmd::Embedded(c) => (Command::Embedded, c),
        Cmd::Decompose(c) => (Command::Decompose, c),
        Cmd::Height(c) => (Command::Height, c),
        Cmd::Unmixed(c) => (Command::Unmixed, c),
        Cmd::Beta1(c) => (Command::Beta1, c),
        Cmd::Konig(c) => (Command::Konig, c),
        Cmd::Symbolic(c) => (Command::Symbolic, c),
        Cmd::Ntf(c) => (Command::Ntf, c),
        Cmd::Persistence(c) => (Command::Persistence, c),
        Cmd::StrongPersistence(c) => (Command::StrongPersistence, c),
        Cmd::SymbolicSp(c) => (Command::SymbolicSp, c),
        Cmd::Corners(c) => (Command::Corners, c),
        Cmd::Witness(c) => (Command::Witness, c),
        Cmd::Tspread(c) => (Command::Tspread, c),
        Cmd::Verify { id, common } => (Command::Verify(id), common),
        Cmd::ReproducePaper(c) => (Command::ReproducePaper, c),
        Cmd::RandomSweep(c) => (Command::RandomSweep, c),
    }
}

fn budget(flag: Option<u64>) -> Result<Budget, Error> {
    let cells = match flag {
        Some(c) => Some(c),
        None => match std::env::var(BUDGET_ENV) {
            Ok(v) => Some(v.trim().parse::<u64>().map_err(|_| {
                Error::Domain(format!(
                    "{BUDGET_ENV} must be a non-negative integer, got `{v}`"
                ))
            })?),
            Err(_) => None,
        },
    };
    Ok(cells.map(Budget::with_cells).unwrap_or_default())
}

fn read_input(path: &PathBuf) -> Result<String, Error> {
    let mut text = String::new();
    let res = if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut text).map(|_| ())
    } else {
        std::fs::read(path).and_then(|bytes| {
            text = String::from_utf8(bytes)
                .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
            Ok(())
        })
    };
    res.map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    Ok(text)
}

fn emit(report: &RunReport, json: bool) -> ProcessExit {
    if json {
        print!("{}", report.to_json_string());
    } else {
        let text = report.to_text();
        if report.exit_code >= ExitCode::InputError {
            eprint!("{text}");
        } else {
            print!("{text}");
        }
    }
    ProcessExit::from(report.exit_code.code() as u8)
}

fn main() -> ProcessExit {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ProcessExit::SUCCESS,
                _ => ProcessExit::from(ExitCode::InputError.code() as u8),
            };
        }
    };
    let (command, c) = split(cli.command);
    let name = command.to_string();
    let budget = match budget(c.budget) {
        Ok(b) => b,
        Err(e) => return emit(&RunReport::error(name, &e), c.json),
    };
    let input = match (&c.file, command.needs_document()) {
        (Some(path), true) => match read_input(path) {
            Ok(t) => Some(t),
            Err(e) => return emit(&RunReport::error(name, &e), c.json),
        },
        _ => None,
    };
    let opts = Options {
        ideal: c.ideal,
        with: c.with,
        power: c.power,
        max_power: c.max_power,
        seed: c.seed,
        budget,
        prime: c.prime,
        monomial: c.monomial,
        vars: c.vars,
        spread: c.spread,
        count: c.count,
        suite: c.suite,
    };
    let start = Instant::now();
    let mut report = run_command(input.as_deref(), &command, &opts);
    if c.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    emit(&report, c.json)
}
