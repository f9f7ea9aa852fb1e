use std::ops::RangeInclusive;
use std::process::ExitCode;

use clap::{error::ErrorKind, Args, Parser, Subcommand};
use siegel_dim::contributions::fraction_string;
use siegel_dim::render::{parse_range, render, Format, TableRequest};
use siegel_dim::{golden, oracle, Error, Formula, Level, Weight};

const EXIT_MISMATCH: u8 = 1;
const EXIT_INVALID_LEVEL: u8 = 2;
const EXIT_USAGE: u8 = 64;

/// Dimensions of vector-valued Siegel cusp forms of degree two on Γ(D₁,D₂).
#[derive(Parser, Debug)]
#[command(name = "siegel-dim", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct LevelArgs {
    /// D₁, product of the primes where the lattice is of the first kind.
    #[arg(long)]
    d1: u64,
    /// D₂.
    #[arg(long)]
    d2: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a single dim S_{k,j}(Γ(D₁,D₂)).
    Compute {
        #[command(flatten)]
        level: LevelArgs,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        j: u32,
        /// Print the fifteen contributions as exact fractions.
        #[arg(long)]
        breakdown: bool,
    },
    /// Print a table with rows j and columns k.
    Table {
        #[command(flatten)]
        level: LevelArgs,
        /// `a..b` (inclusive) or a single value.
        #[arg(long, value_parser = parse_range, default_value = "0..15")]
        k: RangeInclusive<u32>,
        #[arg(long, value_parser = parse_range, default_value = "0..8")]
        j: RangeInclusive<u32>,
        #[arg(long, default_value = "plain")]
        format: Format,
        #[arg(long)]
        breakdown: bool,
    },
    /// Recompute the 960 published table cells.
    Verify,
    /// Compare with the closed form on Γ(1,2p), j = 0.
    Crosscheck {
        #[arg(long, default_value_t = 97)]
        pmax: u64,
        #[arg(long, default_value_t = 40)]
        kmax: u32,
    },
}

fn level(args: &LevelArgs) -> Result<Level, ExitCode> {
    Level::new(args.d1, args.d2).map_err(|e| {
        eprintln!("error: invalid level Γ({},{}): {e}", args.d1, args.d2);
        ExitCode::from(EXIT_INVALID_LEVEL)
    })
}

fn engine_failure(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(EXIT_MISMATCH)
}

fn compute(args: &LevelArgs, k: u32, j: u32, breakdown: bool) -> Result<(), ExitCode> {
    let level = level(args)?;
    let res = Formula::default()
        .dimension(Weight::new(k, j), &level)
        .map_err(|e| engine_failure(&e))?;
    println!("{res}");
    if breakdown {
        for (name, value) in res.breakdown.terms() {
            println!("{name:>5} = {}", fraction_string(value));
        }
        println!("total = {}", fraction_string(&res.breakdown.total));
    }
    Ok(())
}

fn table(req: TableRequest) -> Result<(), ExitCode> {
    let out = render(&Formula::default(), &req).map_err(|e| engine_failure(&e))?;
    print!("{out}");
    Ok(())
}

fn verify() -> Result<(), ExitCode> {
    let report = golden::verify(&Formula::default());
    for m in &report.mismatches {
        let c = &m.cell;
        let got = match &m.got {
            Ok(v) => v.to_string(),
            Err(e) => e.to_string(),
        };
        println!(
            "mismatch Γ({},{}) k={} j={}: expected {}, got {}",
            c.d1, c.d2, c.k, c.j, c.value, got
        );
        if let Some(b) = &m.breakdown {
            println!("  {b}");
        }
    }
    let ok = report.checked - report.mismatches.len();
    println!("{ok}/{} cells match", report.checked);
    if report.passed() {
        Ok(())
    } else {
        Err(ExitCode::from(EXIT_MISMATCH))
    }
}

fn crosscheck(pmax: u64, kmax: u32) -> Result<(), ExitCode> {
    if pmax < 3 {
        eprintln!("error: no odd primes <= {pmax}");
        return Err(ExitCode::from(EXIT_USAGE));
    }
    let report = oracle::crosscheck(&Formula::default(), pmax, kmax);
    for m in &report.mismatches {
        match &m.engine {
            Ok(res) => println!(
                "mismatch p={} k={}: closed form {}, theorem {}\n  {}",
                m.p, m.k, m.oracle, res.dimension, res.breakdown
            ),
            Err(e) => println!(
                "mismatch p={} k={}: closed form {}, theorem failed: {e}",
                m.p, m.k, m.oracle
            ),
        }
    }
    println!(
        "{}/{} values agree over {} prime(s)",
        report.compared - report.mismatches.len(),
        report.compared,
        report.primes.len()
    );
    if report.passed() {
        Ok(())
    } else {
        Err(ExitCode::from(EXIT_MISMATCH))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    let outcome = match cli.command {
        Command::Compute {
            level,
            k,
            j,
            breakdown,
        } => compute(&level, k, j, breakdown),
        Command::Table {
            level: args,
            k,
            j,
            format,
            breakdown,
        } => level(&args).and_then(|level| {
            table(TableRequest {
                level,
                k,
                j,
                format,
                breakdown,
            })
        }),
        Command::Verify => verify(),
        Command::Crosscheck { pmax, kmax } => crosscheck(pmax, kmax),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(code) => code,
    }
}
