use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num::traits::Zero;

use descent_lab::class_algebra::{
    gram_matrix, is_semisimple, projection_kernel_dimension, radical_span_rank,
    solomon_gram_matrix, verify_commutative, well_defined_counterexample,
};
use descent_lab::characters::{verify_burnside_iso, verify_character_iso};
use descent_lab::solomon::{radical_spanning_set, Strategy, StructureTable};
use descent_lab::table::{
    character_table, class_table, marks_table, solomon_table, Algebra,
};
use descent_lab::weyl::{enumerate_partitions, enumerate_subsets};
use descent_lab::{Error, Rank, Rat};

const EXIT_VERIFICATION: u8 = 1;
const EXIT_CAPACITY: u8 = 3;
const EXIT_IO: u8 = 4;

#[derive(Parser)]
#[command(name = "descent-lab", version, about = "Descent algebras of Weyl groups of type A")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Brute,
    Matrix,
    Auto,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Strategy {
        match s {
            StrategyArg::Brute => Strategy::Brute,
            StrategyArg::Matrix => Strategy::Matrix,
            StrategyArg::Auto => Strategy::Auto,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    Welldef,
    Commute,
    Semisimple,
    Oracle,
    Characters,
    Burnside,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the full basis-product multiplication table.
    Table {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "class")]
        algebra: Algebra,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Compute with both strategies and compare before emitting.
        #[arg(long)]
        verify_cross: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run verification suites; exit 0 iff every check passes.
    Check {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
    },
    /// Emit the character table of the class characters.
    Chars {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Emit the parabolic table of marks.
    Marks {
        #[arg(long)]
        rank: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Capacity { .. } | Error::InvalidRank { .. } => EXIT_CAPACITY,
                _ => EXIT_VERIFICATION,
            };
            ExitCode::from(code)
        }
    }
}

fn run(cli: Cli) -> descent_lab::Result<ExitCode> {
    match cli.command {
        Command::Table {
            rank,
            algebra,
            format,
            strategy,
            verify_cross,
            output,
        } => {
            let rank = Rank::new(rank)?;
            let table = StructureTable::cached(rank, strategy.into())?;
            if verify_cross {
                let brute = StructureTable::cached(rank, Strategy::Brute)?;
                let matrix = StructureTable::cached(rank, Strategy::Matrix)?;
                for j in enumerate_subsets(rank) {
                    for k in enumerate_subsets(rank) {
                        if brute.row(j, k) != matrix.row(j, k) {
                            eprintln!("strategy cross-check failed at J={j}, K={k}");
                            return Ok(ExitCode::from(EXIT_VERIFICATION));
                        }
                    }
                }
            }
            let doc = match algebra {
                Algebra::Class => class_table(&table)?,
                Algebra::Solomon => solomon_table(&table)?,
            };
            let payload = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            emit(&payload, output.as_deref())
        }
        Command::Chars {
            rank,
            format,
            output,
        } => {
            let rank = Rank::new(rank)?;
            let doc = character_table(rank)?;
            let payload = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            emit(&payload, output.as_deref())
        }
        Command::Marks {
            rank,
            format,
            output,
        } => {
            let rank = Rank::new(rank)?;
            let doc = marks_table(rank)?;
            let payload = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            emit(&payload, output.as_deref())
        }
        Command::Check {
            rank,
            suite,
            strategy,
        } => {
            let rank = Rank::new(rank)?;
            let table = StructureTable::cached(rank, strategy.into())?;
            let mut all_passed = true;
            let checks: Vec<Suite> = match suite {
                Suite::All => vec![
                    Suite::Welldef,
                    Suite::Commute,
                    Suite::Semisimple,
                    Suite::Oracle,
                    Suite::Characters,
                    Suite::Burnside,
                ],
                single => vec![single],
            };
            for check in checks {
                let (name, passed, detail) = run_check(check, rank, &table)?;
                if !passed {
                    all_passed = false;
                }
                let outcome = if passed { "pass" } else { "fail" };
                let detail_json = detail
                    .map(|d| format!(",\"counterexample\":{}", serde_json::to_string(&d).unwrap()))
                    .unwrap_or_default();
                println!(
                    "{{\"check\":\"{name}\",\"rank\":{},\"outcome\":\"{outcome}\"{detail_json}}}",
                    rank.n()
                );
            }
            Ok(if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_VERIFICATION)
            })
        }
    }
}

fn run_check(
    check: Suite,
    rank: Rank,
    table: &StructureTable,
) -> descent_lab::Result<(&'static str, bool, Option<String>)> {
    match check {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::Welldef => {
            let counter = well_defined_counterexample(table)?;
            Ok((
                "welldef",
                counter.is_none(),
                counter.map(|(j, k)| format!("J={j}, K={k}")),
            ))
        }
        Suite::Commute => Ok(("commute", verify_commutative(table)?, None)),
        Suite::Semisimple => {
            let class_ok = is_semisimple(table)?;
            let kernel_ok = projection_kernel_dimension(rank)
                == (1usize << rank.n()) - enumerate_partitions(rank).len()
                && radical_span_rank(rank) == projection_kernel_dimension(rank);
            let solomon_ok = if rank.n() >= 2 {
                let gram = solomon_gram_matrix(table);
                gram.determinant().is_zero()
                    && radical_spanning_set(rank).iter().all(|e| {
                        let subsets = enumerate_subsets(rank);
                        let v: Vec<Rat> = subsets.iter().map(|&j| e.coeff(j)).collect();
                        gram.mul_vec(&v).iter().all(Rat::is_zero)
                    })
            } else {
                true
            };
            let _ = gram_matrix(table)?;
            let passed = class_ok && kernel_ok && solomon_ok;
            let detail = (!passed).then(|| {
                format!(
                    "class nondegenerate: {class_ok}, kernel dims: {kernel_ok}, solomon degeneracy: {solomon_ok}"
                )
            });
            Ok(("semisimple", passed, detail))
        }
        Suite::Oracle => {
            let brute = StructureTable::cached(rank, Strategy::Brute)?;
            let matrix = StructureTable::cached(rank, Strategy::Matrix)?;
            for j in enumerate_subsets(rank) {
                for k in enumerate_subsets(rank) {
                    if brute.row(j, k) != matrix.row(j, k) {
                        return Ok(("oracle", false, Some(format!("J={j}, K={k}"))));
                    }
                }
            }
            Ok(("oracle", true, None))
        }
        Suite::Characters => Ok(("characters", verify_character_iso(table)?, None)),
        Suite::Burnside => Ok(("burnside", verify_burnside_iso(table)?, None)),
    }
}

/// Writes atomically via a sibling temp file, or prints to stdout.
fn emit(payload: &str, output: Option<&Path>) -> descent_lab::Result<ExitCode> {
    let Some(path) = output else {
        print!("{payload}");
        return Ok(ExitCode::SUCCESS);
    };
    let write = || -> std::io::Result<()> {
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(payload.as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)
    };
    if let Err(e) = write() {
        eprintln!("error: cannot write {}: {e}", path.display());
        return Ok(ExitCode::from(EXIT_IO));
    }
    Ok(ExitCode::SUCCESS)
}
