//! `spin-kostka`: spin Kostka tables, verification suites and symmetric
//! function expansions.
//!
//! Exit codes: 0 success, 1 failed verification or internal error, 2 usage error.

mod table;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};
use spin_kostka::hall_littlewood::{hl_h, hl_p};
use spin_kostka::macdonald::{qt_kostka_matrix, spin_qt_kostka_matrix, SpinQtRoute};
use spin_kostka::spin::{s_det, spin_hl_h, spin_kostka_matrix};
use spin_kostka::symfunc::{q_fun, schur_q, Basis};
use spin_kostka::verify::{run_suite, Report, Suite};
use spin_kostka::{Partition, StrictPartition};

use table::Table;

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] spin_kostka::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Parser)]
#[command(
    name = "spin-kostka",
    version,
    about = "Spin Kostka polynomials: tables, verification suites and expansions"
)]
struct Cli {
    /// Write output to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix of spin Kostka polynomials K-[xi,mu](t).
    Table(TableArgs),
    /// Run a verification suite and print a JSON report.
    Verify(VerifyArgs),
    /// Expand a symmetric function in a basis.
    Expand(ExpandArgs),
    /// Print the q,t-Kostka matrix (spin or classical).
    QtTable(QtTableArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum QtFormat {
    Json,
    Latex,
}

#[derive(Args)]
struct TableArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=8))]
    n: u32,
    /// Divide row xi by 2^l(xi).
    #[arg(long)]
    halved: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: TableFormat,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// A, 4.3, oracles, negative-4.4, classical, B1, qt or symmetry.
    #[arg(long)]
    suite: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    /// Schur Q-function Q_xi (strict xi).
    #[value(name = "Q")]
    SchurQ,
    /// Spin Hall-Littlewood function H-_mu(x;t).
    #[value(name = "Hminus")]
    HMinus,
    /// S_lambda = det(q_{lambda_i - i + j}).
    #[value(name = "S")]
    S,
    /// Hall-Littlewood P_mu(x;t).
    #[value(name = "P")]
    P,
    /// Hall-Littlewood H_mu(x;t).
    #[value(name = "H")]
    H,
    /// q_r; the argument is the integer r.
    #[value(name = "q")]
    QFun,
}

#[derive(Args)]
struct ExpandArgs {
    #[arg(long, value_enum)]
    what: Target,
    /// A partition such as `2,1`, or an integer for `q`.
    #[arg(long, allow_hyphen_values = true)]
    arg: String,
    /// s, m, p, e or h.
    #[arg(long, default_value = "s")]
    basis: Basis,
}

#[derive(Args)]
struct QtTableArgs {
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..=5))]
    n: u32,
    /// Spin q,t-Kostka polynomials K-[xi,mu](q,t).
    #[arg(long, conflicts_with = "classical", required_unless_present = "classical")]
    spin: bool,
    /// Classical q,t-Kostka polynomials K[lambda,mu](q,t).
    #[arg(long)]
    classical: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: QtFormat,
}

/// Report plus run metadata; the report itself carries no environment data.
#[derive(Serialize)]
struct Envelope<'a> {
    meta: Value,
    report: &'a Report,
}

fn partition_arg(s: &str) -> Result<Partition, CliError> {
    s.parse()
        .map_err(|e: spin_kostka::Error| CliError::Usage(format!("--arg: {e}")))
}

fn header(n: u32, extra: (&str, Value)) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("n".into(), json!(n));
    m.insert(extra.0.into(), extra.1);
    m
}

fn cmd_table(a: &TableArgs) -> Result<String, CliError> {
    let k = spin_kostka_matrix(a.n as usize);
    let entries = if a.halved { k.halved() } else { k.entries.clone() };
    let t = Table {
        row_symbol: "xi",
        rows: k.rows.iter().map(|x| x.as_partition().clone()).collect(),
        cols: k.cols.list.clone(),
        cells: entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_compact_string()).collect())
            .collect(),
    };
    Ok(match a.format {
        TableFormat::Json => {
            format!(
                "{}\n",
                serde_json::to_string_pretty(&t.to_json(header(a.n, ("halved", json!(a.halved)))))?
            )
        }
        TableFormat::Csv => t.to_csv()?,
        TableFormat::Latex => t.to_latex(),
    })
}

fn cmd_verify(a: &VerifyArgs) -> Result<(String, bool), CliError> {
    let suite: Suite = a.suite.parse().map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        CliError::Usage(format!(
            "unknown suite '{}'; expected one of {}",
            a.suite,
            names.join(", ")
        ))
    })?;
    if a.n == 0 || a.n > suite.max_degree() {
        return Err(CliError::Usage(format!(
            "suite {suite} accepts 1 <= n <= {}",
            suite.max_degree()
        )));
    }
    let report = run_suite(suite, a.n)?;
    let env = Envelope {
        meta: json!({
            "tool": env!("CARGO_BIN_NAME"),
            "version": env!("CARGO_PKG_VERSION"),
            "suite": suite.name(),
            "n": a.n,
        }),
        report: &report,
    };
    Ok((format!("{}\n", serde_json::to_string_pretty(&env)?), report.passed))
}

fn cmd_expand(a: &ExpandArgs) -> Result<String, CliError> {
    let b = a.basis;
    let rendered = match a.what {
        Target::SchurQ => {
            let xi = StrictPartition::try_from(partition_arg(&a.arg)?)
                .map_err(|e| CliError::Usage(format!("Q needs a strict partition: {e}")))?;
            schur_q(&xi).to_basis(b).render()
        }
        Target::HMinus => spin_hl_h(&partition_arg(&a.arg)?).to_basis(b).render(),
        Target::S => s_det(&partition_arg(&a.arg)?).to_basis(b).render(),
        Target::P => hl_p(&partition_arg(&a.arg)?).to_basis(b).render(),
        Target::H => hl_h(&partition_arg(&a.arg)?).to_basis(b).render(),
        Target::QFun => {
            let r: usize = a
                .arg
                .trim()
                .parse()
                .map_err(|e| CliError::Usage(format!("--arg for q: {e}")))?;
            q_fun(r).to_basis(b).render()
        }
    };
    Ok(format!("{rendered}\n"))
}

fn cmd_qt_table(a: &QtTableArgs) -> Result<String, CliError> {
    let n = a.n as usize;
    let (k, symbol) = if a.spin {
        (spin_qt_kostka_matrix(n, SpinQtRoute::ViaB)?, "xi")
    } else {
        ((*qt_kostka_matrix(n)?).clone(), "lambda")
    };
    let t = Table {
        row_symbol: symbol,
        rows: k.rows.clone(),
        cols: k.cols.list.clone(),
        cells: k
            .entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_compact_string()).collect())
            .collect(),
    };
    let kind = if a.spin { "spin" } else { "classical" };
    Ok(match a.format {
        QtFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&t.to_json(header(a.n, ("kind", json!(kind)))))?
        ),
        QtFormat::Latex => t.to_latex(),
    })
}

fn run(cli: &Cli) -> Result<bool, CliError> {
    let (text, ok) = match &cli.command {
        Command::Table(a) => (cmd_table(a)?, true),
        Command::Verify(a) => cmd_verify(a)?,
        Command::Expand(a) => (cmd_expand(a)?, true),
        Command::QtTable(a) => (cmd_qt_table(a)?, true),
    };
    match &cli.output {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(ok)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
