//! Command-line front end. [`run`] takes the arguments and output streams
//! explicitly so it can be driven from tests.

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::characteristic::Characteristic;
use crate::count::with_counter;
use crate::error::Error;
use crate::generate::enumerate;
use crate::oracle::{oracle_count, OracleBudget};
use crate::refdata::verify;
use crate::sample::{Sampler, SamplerConfig};
use crate::term::{Family, Kind, SizeModel, TermClass};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_EMPTY_DOMAIN: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "swisscheese",
    version,
    about = "Count, enumerate and sample closed linear and affine lambda terms"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print counts as `n<TAB>value` lines.
    Count {
        #[command(flatten)]
        select: Select,
        #[arg(long)]
        n: usize,
        /// Print every size from 0 to N.
        #[arg(long)]
        upto: bool,
        #[arg(long, default_value = "")]
        characteristic: Characteristic,
    },
    /// Print every term of size N, one per line, in enumeration order.
    Enum {
        #[command(flatten)]
        select: Select,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        characteristic: Characteristic,
        #[arg(long, value_enum, default_value_t = Format::Debruijn)]
        format: Format,
    },
    /// Print uniformly drawn closed terms of size N.
    Sample {
        #[command(flatten)]
        select: Select,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Debruijn)]
        format: Format,
    },
    /// Compare computed sequences with the bundled reference tables.
    Verify {
        #[arg(long, default_value_t = 40)]
        max_n: usize,
    },
    /// Count closed terms of size N by brute force.
    Oracle {
        #[command(flatten)]
        select: Select,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Args)]
struct Select {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, value_enum)]
    size: SizeArg,
    #[arg(long, value_enum)]
    class: ClassArg,
}

impl Select {
    fn kind(&self) -> Kind {
        let family = match self.family {
            FamilyArg::Linear => Family::Linear,
            FamilyArg::Affine => Family::Affine,
        };
        let model = match self.size {
            SizeArg::Natural => SizeModel::Natural,
            SizeArg::Var0 => SizeModel::Var0,
            SizeArg::Var1 => SizeModel::Var1,
        };
        let class = match self.class {
            ClassArg::All => TermClass::All,
            ClassArg::Nf => TermClass::Normal,
        };
        Kind::new(family, model, class)
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Linear,
    Affine,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum SizeArg {
    Natural,
    Var0,
    Var1,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    #[value(alias = "normal")]
    Nf,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Debruijn,
    Named,
}

/// Runs the command line `args` (program name first) and returns the exit
/// status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return status;
        }
    };
    match execute(cli.command, out) {
        Ok(status) => status,
        Err(Failure::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Empty(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_EMPTY_DOMAIN
        }
    }
}

enum Failure {
    Io(std::io::Error),
    Usage(String),
    Empty(Error),
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Count {
            select,
            n,
            upto,
            characteristic,
        } => {
            let kind = select.kind();
            let sizes = if upto { 0..=n } else { n..=n };
            for size in sizes {
                let value = with_counter(|c| c.count_kind(kind, size, &characteristic));
                writeln!(out, "{size}\t{value}")?;
            }
        }
        Command::Enum {
            select,
            n,
            characteristic,
            format,
        } => {
            if format == Format::Named && !characteristic.is_empty() {
                return Err(Failure::Usage(
                    "--format named needs closed terms (empty characteristic)".into(),
                ));
            }
            for cheese in enumerate(select.kind(), n, &characteristic) {
                match format {
                    Format::Debruijn => writeln!(out, "{cheese}")?,
                    Format::Named => {
                        let term = cheese.to_term().expect("closed cheese has no holes");
                        let named = term.to_named().expect("enumerated terms are closed");
                        writeln!(out, "{named}")?
                    }
                }
            }
        }
        Command::Sample {
            select,
            n,
            count,
            seed,
            format,
        } => {
            let config = SamplerConfig {
                seed,
                kind: select.kind(),
                n,
            };
            let sampler = Sampler::new(config).map_err(Failure::Empty)?;
            for term in sampler.take(count) {
                match format {
                    Format::Debruijn => writeln!(out, "{term}")?,
                    Format::Named => {
                        writeln!(out, "{}", term.to_named().expect("sampled terms are closed"))?
                    }
                }
            }
        }
        Command::Verify { max_n } => {
            let report = verify(max_n);
            write!(out, "{report}")?;
            if !report.passed() {
                return Ok(EXIT_MISMATCH);
            }
        }
        Command::Oracle { select, n } => {
            let kind = select.kind();
            let cap = OracleBudget::default().cap(kind.model);
            if n > cap {
                return Err(Failure::Usage(format!(
                    "oracle is capped at size {cap} for {} size",
                    kind.model.name()
                )));
            }
            let count = oracle_count(kind, n).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out, "{n}\t{count}")?;
        }
    }
    Ok(EXIT_OK)
}
