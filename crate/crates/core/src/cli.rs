//! The `balanceclat` command line.
//!
//! Exit codes: 0 on success (an empty result is a success), 2 on usage or
//! input errors.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench;
use crate::datagen::{generate, GeneratorConfig};
use crate::error::{Error, Result};
use crate::ingest::{bucket, parse_events, parse_keyed_events, BucketConfig};
use crate::miner::{mine_balanced, MiningParams};
use crate::names::ItemNames;
use crate::report::RunReport;
use crate::stability::{mine_stable, StabilityParams};
use crate::transactions::{parse_database, TransactionDatabase};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "balanceclat", version, about = "Mine itemsets that recur at balanced intervals")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine balanced patterns.
    Mine(MineArgs),
    /// Mine stable patterns (triple-based baseline measure).
    Stable(StableArgs),
    /// Write a synthetic database with one planted periodic pattern.
    Generate(GenerateArgs),
    /// Bucket timestamped events into fixed-width windows.
    Bucket(BucketArgs),
    /// Time mining over a sweep of dataset sizes or minnumber values.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct MineArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub minnumber: usize,
    #[arg(long)]
    pub maxstdev: f64,
    #[arg(long)]
    pub minavg: f64,
    /// Largest all-pairs distance counted.
    #[arg(long = "max-distance", default_value_t = 10)]
    pub max_distance: usize,
    #[arg(long, default_value_t = 1)]
    pub mindistfreq: usize,
    #[arg(long = "max-pattern-size")]
    pub max_pattern_size: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Successive-distance bins below this count are omitted from the report.
    #[arg(long = "report-min-count", default_value_t = 20)]
    pub report_min_count: usize,
    /// `id label` dictionary used to print items.
    #[arg(long)]
    pub names: Option<PathBuf>,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StableArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub w: usize,
    #[arg(long)]
    pub minstable: usize,
    #[arg(long)]
    pub minsup: usize,
    #[arg(long = "max-pattern-size")]
    pub max_pattern_size: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub names: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DatasetArgs {
    #[arg(long, default_value_t = 2000)]
    pub transactions: usize,
    #[arg(long, default_value_t = 200)]
    pub items: u32,
    #[arg(long = "pattern-size", default_value_t = 5)]
    pub pattern_size: u32,
    #[arg(long, default_value_t = 4)]
    pub period: usize,
    /// Percent chance that a planted item misses a scheduled occurrence.
    #[arg(long, default_value_t = 0.0)]
    pub noise: f64,
    /// Per-transaction probability of each non-planted item.
    #[arg(long, default_value_t = 0.0)]
    pub background: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

impl DatasetArgs {
    fn config(&self) -> GeneratorConfig {
        GeneratorConfig {
            n_transactions: self.transactions,
            n_items: self.items,
            pattern_size: self.pattern_size,
            period: self.period,
            noise_percent: self.noise,
            background_density: self.background,
            seed: self.seed,
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub out: PathBuf,
    #[command(flatten)]
    pub dataset: DatasetArgs,
}

#[derive(Debug, Args)]
pub struct BucketArgs {
    /// Lines of `timestamp item_id` (or `timestamp key` with --keyed).
    #[arg(long)]
    pub events: PathBuf,
    #[arg(long = "window-seconds", default_value_t = 1800)]
    pub window_seconds: u64,
    /// First window boundary; defaults to the earliest event rounded down.
    #[arg(long)]
    pub start: Option<u64>,
    /// Treat the second column as a string key and number keys in sorted order.
    #[arg(long)]
    pub keyed: bool,
    #[arg(long)]
    pub out: PathBuf,
    /// Write the key dictionary (`id key` lines). Requires --keyed.
    #[arg(long = "names-out", requires = "keyed")]
    pub names_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMode {
    SizeSweep,
    MinnumberSweep,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, value_enum)]
    pub mode: BenchMode,
    /// Dataset sizes for size-sweep.
    #[arg(long, value_delimiter = ',', default_value = "100,250,500,1000,2000,4000")]
    pub sizes: Vec<usize>,
    /// minnumber values for minnumber-sweep.
    #[arg(long, value_delimiter = ',', default_value = "5,10,20,50,100,150,200")]
    pub minnumbers: Vec<usize>,
    /// Database for minnumber-sweep; generated from the dataset flags when absent.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, default_value_t = 1.0)]
    pub maxstdev: f64,
    #[arg(long, default_value_t = 2.0)]
    pub minavg: f64,
    #[arg(long = "max-distance", default_value_t = 10)]
    pub max_distance: usize,
    #[arg(long, default_value_t = 1)]
    pub mindistfreq: usize,
    /// Runs per point; the median time is reported.
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub dataset: DatasetArgs,
}

/// Parses `args` (including the program name) and runs the command.
/// Diagnostics go to stderr; the return value is the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli.command) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            eprintln!("balanceclat: {e}");
            EXIT_USAGE
        }
    }
}

pub fn execute(command: &Command) -> Result<()> {
    match command {
        Command::Mine(args) => cmd_mine(args),
        Command::Stable(args) => cmd_stable(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Bucket(args) => cmd_bucket(args),
        Command::Bench(args) => cmd_bench(args),
    }
}

fn open(path: &Path) -> Result<BufReader<File>> {
    File::open(path)
        .map(BufReader::new)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn create(path: &Path) -> Result<BufWriter<File>> {
    File::create(path)
        .map(BufWriter::new)
        .map_err(|e| Error::Io(io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(create(p)?),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_database(path: &Path) -> Result<TransactionDatabase> {
    parse_database(open(path)?).map_err(|e| with_path(e, path))
}

fn read_names(path: Option<&Path>) -> Result<Option<ItemNames>> {
    path.map(|p| ItemNames::read(open(p)?).map_err(|e| with_path(e, p)))
        .transpose()
}

fn with_path(err: Error, path: &Path) -> Error {
    match err {
        Error::Parse { line, message } => Error::Parse {
            line,
            message: format!("{message} (in {})", path.display()),
        },
        other => other,
    }
}

fn write_report(report: &RunReport, format: Format, out: Option<&Path>) -> Result<()> {
    let mut sink = output(out)?;
    match format {
        Format::Text => report.write_text(&mut sink)?,
        Format::Csv => report.write_csv(&mut sink)?,
    }
    sink.flush()?;
    Ok(())
}

pub fn cmd_mine(args: &MineArgs) -> Result<()> {
    let params = MiningParams {
        minnumber: args.minnumber,
        maxstdev: args.maxstdev,
        minavg: args.minavg,
        ell: args.max_distance,
        mindistfreq: args.mindistfreq,
        max_pattern_size: args.max_pattern_size,
        threads: args.threads,
    };
    params.validate()?;
    let db = read_database(&args.input)?;
    let names = read_names(args.names.as_deref())?;
    let start = Instant::now();
    let results = mine_balanced(&db, &params)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = RunReport::balanced(
        &params,
        db.len(),
        &results,
        args.report_min_count,
        names.as_ref(),
        wall_ms,
    );
    write_report(&report, args.format, args.out.as_deref())
}

pub fn cmd_stable(args: &StableArgs) -> Result<()> {
    let params = StabilityParams {
        w: args.w,
        minstable: args.minstable,
        minsup: args.minsup,
        max_pattern_size: args.max_pattern_size,
        threads: args.threads,
    };
    params.validate()?;
    let db = read_database(&args.input)?;
    let names = read_names(args.names.as_deref())?;
    let start = Instant::now();
    let results = mine_stable(&db, &params)?;
    let wall_ms = start.elapsed().as_secs_f64() * 1e3;
    let report = RunReport::stable(&params, db.len(), &results, names.as_ref(), wall_ms);
    write_report(&report, args.format, args.out.as_deref())
}

pub fn cmd_generate(args: &GenerateArgs) -> Result<()> {
    let db = generate(&args.dataset.config())?;
    let mut out = create(&args.out)?;
    db.write_to(&mut out)?;
    out.flush()?;
    Ok(())
}

pub fn cmd_bucket(args: &BucketArgs) -> Result<()> {
    let reader = open(&args.events)?;
    let (events, names) = if args.keyed {
        let (events, names) = parse_keyed_events(reader).map_err(|e| with_path(e, &args.events))?;
        (events, Some(names))
    } else {
        (parse_events(reader).map_err(|e| with_path(e, &args.events))?, None)
    };
    let config = BucketConfig {
        window_seconds: args.window_seconds,
        start: args.start,
    };
    let db = bucket(&events, &config)?;
    let mut out = create(&args.out)?;
    db.write_to(&mut out)?;
    out.flush()?;
    if let (Some(path), Some(names)) = (&args.names_out, names) {
        let mut out = create(path)?;
        names.write_to(&mut out)?;
        out.flush()?;
    }
    Ok(())
}

pub fn cmd_bench(args: &BenchArgs) -> Result<()> {
    let template = MiningParams {
        minnumber: 1,
        maxstdev: args.maxstdev,
        minavg: args.minavg,
        ell: args.max_distance,
        mindistfreq: args.mindistfreq,
        max_pattern_size: None,
        threads: args.threads,
    };
    template.validate()?;
    let base = args.dataset.config();
    base.validate()?;
    let rows = match args.mode {
        BenchMode::SizeSweep => bench::size_sweep(&base, &args.sizes, &template, args.repeat)?,
        BenchMode::MinnumberSweep => {
            if args.minnumbers.contains(&0) {
                return Err(Error::param("minnumber values must be at least 1"));
            }
            let db = match &args.input {
                Some(path) => read_database(path)?,
                None => generate(&base)?,
            };
            bench::minnumber_sweep(&db, &args.minnumbers, &template, args.repeat)?
        }
    };
    let mut sink = output(args.out.as_deref())?;
    bench::write_csv(&rows, &mut sink)?;
    sink.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_mine_flags() {
        let cli = Cli::try_parse_from([
            "balanceclat", "mine", "--input", "db.txt", "--minnumber", "150", "--maxstdev", "2.5",
            "--minavg", "2", "--format", "csv",
        ])
        .unwrap();
        let Command::Mine(args) = cli.command else { panic!("expected mine") };
        assert_eq!(args.minnumber, 150);
        assert_eq!(args.max_distance, 10);
        assert_eq!(args.mindistfreq, 1);
        assert_eq!(args.report_min_count, 20);
        assert_eq!(args.format, Format::Csv);
    }

    #[test]
    fn parses_bench_lists() {
        let cli = Cli::try_parse_from([
            "balanceclat", "bench", "--mode", "minnumber-sweep", "--minnumbers", "1,2,3", "--repeat", "3",
        ])
        .unwrap();
        let Command::Bench(args) = cli.command else { panic!("expected bench") };
        assert_eq!(args.mode, BenchMode::MinnumberSweep);
        assert_eq!(args.minnumbers, vec![1, 2, 3]);
        assert_eq!(args.dataset.transactions, 2000);
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(run(["balanceclat", "mine", "--input", "x"]), EXIT_USAGE);
        assert_eq!(run(["balanceclat", "frobnicate"]), EXIT_USAGE);
        assert_eq!(run(["balanceclat", "--help"]), EXIT_OK);
        assert_eq!(
            run(["balanceclat", "bucket", "--events", "e", "--out", "o", "--names-out", "n"]),
            EXIT_USAGE
        );
    }
}
