use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use braid_arf::braid::{parse_braid_file, parse_braid_word};
use braid_arf::verify::{self, render_csv, render_json, render_table, Tabular};

#[derive(Parser, Debug)]
#[command(name = "braid-arf", version, about = "Knot invariants of braid closures and the βⁿ checks")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,

    /// Print the frozen arrow-pattern and Burau conventions.
    #[arg(long, global = true)]
    print_convention: bool,

    /// Seed for randomized corpora.
    #[arg(long, default_value_t = verify::DEFAULT_SEED, global = true)]
    seed: u64,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Invariants of one braid closure, or of every word in a file.
    Invariants {
        #[arg(long, required_unless_present = "file", conflicts_with = "file")]
        braid: Option<String>,
        /// One braid word per line; `#` starts a comment.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        power: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        strands: Option<u32>,
    },
    /// Arf (both routes), c₂ and determinant of βⁿ against L₂ₙ − 2.
    Theorem {
        #[arg(long, default_value_t = verify::DEFAULT_THEOREM_MAX as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Parity recurrence along β^(3n+1) (case 1) or β^(3n+2) (case 2).
    Recurrence {
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        case: u8,
        #[arg(long, default_value_t = verify::DEFAULT_RECURRENCE_MAX as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Lucas congruences and squares for the 12n±2, 12n±4 families.
    Corollary {
        #[arg(long, default_value_t = verify::DEFAULT_COROLLARY_MAX as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
    },
    /// Arf = 0 ⇔ det ≡ ±1 mod 8 on βⁿ and seeded random B₃ knots.
    Murasugi {
        #[arg(long, default_value_t = verify::DEFAULT_MURASUGI_MAX as u64,
              value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, default_value_t = verify::DEFAULT_RANDOM_KNOTS)]
        random: usize,
    },
}

fn emit<T: Tabular + Serialize>(format: Format, rows: &[T], json: impl FnOnce() -> String) {
    match format {
        Format::Table => print!("{}", render_table(rows)),
        Format::Csv => print!("{}", render_csv(rows)),
        Format::Json => print!("{}", json()),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    if cli.print_convention {
        print!("{}", verify::convention_summary());
    }
    let Some(command) = cli.command else {
        if cli.print_convention {
            return Ok(true);
        }
        bail!("no subcommand given; see --help");
    };
    let format = cli.format;
    let ok = match command {
        Command::Invariants {
            braid,
            file,
            power,
            strands,
        } => {
            let strands = strands.map(|k| k as usize);
            let (words, single) = match (braid, file) {
                (Some(text), _) => (vec![parse_braid_word(&text, strands)?], true),
                (None, Some(path)) => {
                    let text = std::fs::read_to_string(&path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    (parse_braid_file(&text, strands)?, false)
                }
                (None, None) => unreachable!("clap requires --braid or --file"),
            };
            let records = words
                .iter()
                .map(|w| verify::invariants(&w.power(power)))
                .collect::<braid_arf::Result<Vec<_>>>()?;
            emit(format, &records, || {
                if single {
                    render_json(&records[0])
                } else {
                    render_json(&records)
                }
            });
            records.iter().all(Tabular::passes)
        }
        Command::Theorem { max } => {
            let rows = verify::theorem_table(max as usize)?;
            emit(format, &rows, || render_json(&rows));
            rows.iter().all(Tabular::passes)
        }
        Command::Recurrence { case, max } => {
            let report = verify::recurrence_check(case, max as usize)?;
            if format == Format::Table {
                println!(
                    "case {}: base beta^{} has A2 = {}",
                    report.case, report.base_exponent, report.base_arf
                );
            }
            emit(format, &report.rows, || render_json(&report));
            report.passes()
        }
        Command::Corollary { max } => {
            let rows = verify::corollary_table(max as usize)?;
            emit(format, &rows, || render_json(&rows));
            if format == Format::Table {
                let (total, plain, shifted) = verify::congruence_discrepancy(&rows);
                println!(
                    "12n±2 rows: {total}; L ≡ 3 mod 8 in {plain}; L - 2 ≡ 3 mod 8 in {shifted}"
                );
            }
            rows.iter().all(Tabular::passes)
        }
        Command::Murasugi { max, random } => {
            let rows = verify::murasugi_check(max as usize, cli.seed, random)?;
            emit(format, &rows, || render_json(&rows));
            rows.iter().all(Tabular::passes)
        }
    };
    Ok(ok)
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
