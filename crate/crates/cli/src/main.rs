mod commands;
mod config;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};

use commands::{CliError, CmdResult};
use config::{FileConfig, Format, RunConfig};

#[derive(Parser)]
#[command(name = "jesman", version, about = "Checks for exceptional solutions of a^x + b^y = c^z over Pythagorean triples")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Working precision of interval arithmetic (at least 64). Defaults to
    /// $JESMAN_PRECISION, then 256.
    #[arg(long, global = true)]
    precision_bits: Option<u32>,

    /// Worker threads for scans (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Flat key = value file supplying defaults for the flags above and for
    /// cap, m_max and form.
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    /// Include wall time in the report.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Solutions, parity verdict, exclusion conditions and Y bound for one pair.
    Verify {
        #[arg(long, allow_hyphen_values = true)]
        m: String,
        #[arg(long, allow_hyphen_values = true)]
        n: String,
        /// Largest exponent tried (default 40).
        #[arg(long)]
        cap: Option<u32>,
    },
    /// Solve every primitive pair with m <= m_max.
    Scan {
        /// Default 60.
        #[arg(long)]
        m_max: Option<u64>,
        /// Largest exponent tried (default 40).
        #[arg(long)]
        cap: Option<u32>,
        /// Per-pair summary as CSV.
        #[arg(long)]
        csv: Option<PathBuf>,
        /// No progress lines on standard error.
        #[arg(long)]
        quiet: bool,
    },
    /// Certify that m^f exceeds the bound on m for all m past a threshold.
    Threshold {
        /// Exponent f: 3/5 or 2/3 (default 3/5).
        #[arg(long)]
        form: Option<String>,
        /// Threshold on m, e.g. 1e50000 or 10^22933 (default: the stated one).
        #[arg(long)]
        at: Option<String>,
    },
    /// Jacobi or quartic residue symbols.
    Symbols {
        /// Jacobi symbol (a / mod).
        #[arg(long, allow_hyphen_values = true, conflicts_with = "quartic", required_unless_present = "quartic")]
        jacobi: Option<String>,
        /// Quartic symbol (a / mod)_4 with Gaussian arguments written re,im.
        #[arg(long, allow_hyphen_values = true)]
        quartic: Option<String>,
        #[arg(long = "mod", allow_hyphen_values = true)]
        modulus: String,
    },
    /// Lower bound for a linear form in two logarithms.
    Laurent {
        #[arg(long)]
        a2: String,
        #[arg(long)]
        bprime: String,
    },
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let file = match &cli.config {
        Some(p) => FileConfig::load(p).map_err(|e| CliError::Invalid(format!("{e:#}")))?,
        None => FileConfig::default(),
    };
    let rc = RunConfig::resolve(cli.format, cli.precision_bits, cli.jobs, cli.output.clone(), cli.timing, file)
        .map_err(|e| CliError::Invalid(format!("{e:#}")))?;
    let start = Instant::now();
    let outcome: CmdResult = match &cli.command {
        Command::Verify { m, n, cap } => commands::verify(&rc, m, n, *cap),
        Command::Scan { m_max, cap, csv, quiet } => commands::scan(&rc, *m_max, *cap, csv.as_deref(), *quiet),
        Command::Threshold { form, at } => commands::threshold(&rc, form.as_deref(), at.as_deref()),
        Command::Symbols { jacobi, quartic, modulus } => {
            commands::symbols(jacobi.as_deref(), quartic.as_deref(), modulus)
        }
        Command::Laurent { a2, bprime } => commands::laurent(&rc, a2, bprime),
    };
    let mut outcome = outcome?;
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    if rc.timing {
        outcome.report.wall_time_ms = Some(elapsed);
    }
    let body = match rc.format {
        Format::Json => serde_json::to_string_pretty(&outcome.report).expect("report serializes") + "\n",
        Format::Text if rc.timing => format!("{}wall time: {elapsed:.1} ms\n", outcome.text),
        Format::Text => outcome.text,
    };
    match &rc.output {
        Some(path) => std::fs::write(path, body).map_err(|e| CliError::Other(e.into()))?,
        None => std::io::stdout().write_all(body.as_bytes()).map_err(|e| CliError::Other(e.into()))?,
    }
    Ok(outcome.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Other(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
