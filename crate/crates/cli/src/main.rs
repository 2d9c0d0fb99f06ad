//! `parity-board`: machine-checks the (a,b)-sequence and strict-partition
//! identities and emits the underlying tables.
//!
//! Exit codes: 0 when every check passes, 1 on any mismatch, 2 on usage or
//! parameter errors.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parity_board::abseq::enumerate_s;
use parity_board::bijections::iota;
use parity_board::partitions::{enumerate_partitions, enumerate_strict_partitions};
use parity_board::table::{self, Format};
use parity_board::verify;
use parity_board::{ABSequence, PartsFilter, VerificationReport};

#[derive(Parser, Debug)]
#[command(name = "parity-board", version, about = "Verify (a,b)-sequence and strict partition identities")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Tsv, global = true)]
    format: OutputFormat,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for the sweeps. Reports do not depend on it.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u16).range(1..), global = true)]
    jobs: u16,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Tsv,
    JsonLines,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Self {
        match f {
            OutputFormat::Tsv => Format::Tsv,
            OutputFormat::JsonLines => Format::JsonLines,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List partitions, strict partitions or (a,b)-sequences.
    Enumerate {
        #[arg(value_enum)]
        kind: EnumerateKind,
        /// Weight (half the weight for `abseq`).
        #[arg(long)]
        n: u64,
        #[arg(long)]
        max_part: Option<u64>,
        #[arg(long)]
        even_only: bool,
        /// Exact number of parts (strict partitions only).
        #[arg(long)]
        parts: Option<usize>,
        #[arg(long, default_value_t = 0)]
        a: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        b: u64,
    },
    /// Check phi on every (a,b)-sequence in range, or on one given sequence.
    VerifyPhi {
        #[arg(long, default_value_t = 3)]
        a_max: u64,
        #[arg(long, default_value_t = 4)]
        b_max: u64,
        #[arg(long, default_value_t = 12)]
        n_max: u64,
        /// Comma-separated entries of a single sequence to check instead.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        delta: Option<Vec<i64>>,
    },
    /// Compare the coefficients of S(x, y) with sequence counts.
    VerifyGf {
        #[arg(long, default_value_t = 4)]
        a_max: usize,
        #[arg(long, default_value_t = 8)]
        b_max: usize,
        #[arg(long, default_value_t = 15)]
        trunc: usize,
    },
    /// Check the injection from strict partitions to (t, sequence) pairs.
    VerifyIota {
        #[arg(long, default_value_t = 25)]
        n_max: u64,
    },
    /// Count strict partitions by number of parts and BG-rank both ways.
    VerifyThm34 {
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        k_max: i64,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
    /// Strict partitions against even-part partitions plus one triangular part.
    VerifyEuler {
        #[arg(long, default_value_t = 40)]
        n_max: u64,
    },
    /// Scan the mod-5 congruences for strict partitions of fixed BG-rank.
    VerifyCongruences {
        #[arg(long, default_value_t = 101)]
        n_max: u64,
    },
    /// Emit a table.
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Weight for `table1` and `counts`.
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 4)]
        a_max: usize,
        #[arg(long, default_value_t = 8)]
        b_max: usize,
        #[arg(long, default_value_t = 15)]
        trunc: usize,
        #[arg(long, default_value_t = -3, allow_hyphen_values = true)]
        k_min: i64,
        #[arg(long, default_value_t = 3, allow_hyphen_values = true)]
        k_max: i64,
        #[arg(long, default_value_t = 8)]
        m_max: usize,
        #[arg(long, default_value_t = 30)]
        n_max: u64,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EnumerateKind {
    Partitions,
    Strict,
    Abseq,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Table1,
    SCoeffs,
    Theorem34,
    Counts,
}

enum Outcome {
    Report(VerificationReport),
    Text(String),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = Format::from(cli.common.format);
    let jobs = cli.common.jobs as usize;

    let outcome = match run(cli.command, format, jobs) {
        Ok(o) => o,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let (text, code) = match outcome {
        Outcome::Report(report) => {
            eprintln!("{}: {} ({} checks, {:.2?})", report.subject, report.status(), report.checks_run, report.elapsed);
            let text = match format {
                Format::Tsv => report.to_tsv(),
                Format::JsonLines => report.to_json_lines(),
            };
            (text, if report.passed() { 0 } else { 1 })
        }
        Outcome::Text(text) => (text, 0),
    };
    if let Err(e) = write_output(cli.common.out.as_ref(), &text) {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code)
}

fn write_output(path: Option<&PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(command: Command, format: Format, jobs: usize) -> Result<Outcome, String> {
    let outcome = match command {
        Command::Enumerate { kind, n, max_part, even_only, parts, a, b } => {
            Outcome::Text(enumerate(kind, n, max_part, even_only, parts, a, b, format)?)
        }
        Command::VerifyPhi { a_max, b_max, n_max, delta } => match delta {
            Some(raw) => {
                let d = ABSequence::validate(&raw).map_err(|e| e.to_string())?;
                if d.is_epsilon() {
                    return Err("--delta must be nonempty".into());
                }
                Outcome::Report(verify::verify_phi_single(&d))
            }
            None => Outcome::Report(verify::verify_phi(a_max, b_max, n_max, jobs)),
        },
        Command::VerifyGf { a_max, b_max, trunc } => Outcome::Report(verify::verify_gf(a_max, b_max, trunc, jobs)),
        Command::VerifyIota { n_max } => Outcome::Report(verify::verify_iota(n_max, jobs)),
        Command::VerifyThm34 { k_min, k_max, m_max, n_max } => {
            if k_min > k_max {
                return Err(format!("--k-min {k_min} exceeds --k-max {k_max}"));
            }
            Outcome::Report(verify::verify_theorem34(k_min, k_max, m_max, n_max, jobs))
        }
        Command::VerifyEuler { n_max } => Outcome::Report(verify::verify_euler_vandervelde(n_max, jobs)),
        Command::VerifyCongruences { n_max } => Outcome::Report(verify::verify_congruences(n_max, jobs)),
        Command::Table { kind, n, a_max, b_max, trunc, k_min, k_max, m_max, n_max } => {
            let t = match kind {
                TableKind::Table1 => table::iota_table(n.unwrap_or(7)),
                TableKind::SCoeffs => table::s_coefficient_table(a_max, b_max, trunc),
                TableKind::Theorem34 => Ok(table::theorem34_table(k_min, k_max, m_max, n_max)),
                TableKind::Counts => table::counts_table(n.unwrap_or(20)),
            }
            .map_err(|e| e.to_string())?;
            Outcome::Text(t.render(format))
        }
    };
    Ok(outcome)
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    kind: EnumerateKind,
    n: u64,
    max_part: Option<u64>,
    even_only: bool,
    parts: Option<usize>,
    a: u64,
    b: u64,
    format: Format,
) -> Result<String, String> {
    let filter = if even_only { PartsFilter::EvenOnly } else { PartsFilter::Any };
    let (title, header, rows): (String, Vec<&'static str>, Vec<Vec<serde_json::Value>>) = match kind {
        EnumerateKind::Partitions => (
            format!("partitions n={n}"),
            vec!["partition", "weight", "bg_rank"],
            enumerate_partitions(n, max_part, filter)
                .into_iter()
                .map(|p| vec![p.to_string().into(), p.weight().into(), p.bg_rank().into()])
                .collect(),
        ),
        EnumerateKind::Strict => {
            let mut rows = Vec::new();
            for s in enumerate_strict_partitions(n, parts) {
                let img = iota(&s).map_err(|e| e.to_string())?;
                rows.push(vec![
                    s.to_sum_string().into(),
                    s.num_parts().into(),
                    s.bg_rank().into(),
                    img.t.into(),
                    img.delta.to_string().into(),
                ]);
            }
            (format!("strict n={n}"), vec!["partition", "parts", "bg_rank", "t", "delta"], rows)
        }
        EnumerateKind::Abseq => (
            format!("abseq a={a} b={b} weight={}", 2 * n),
            vec!["delta", "length", "weight"],
            enumerate_s(a, b, n)
                .into_iter()
                .map(|d| vec![d.to_string().into(), d.len().into(), d.weight().into()])
                .collect(),
        ),
    };
    Ok(table::Table { title, header, rows }.render(format))
}
