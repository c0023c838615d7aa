//! `scp`: decide simultaneous conjugacy of permutation tuples.
//!
//! Exit codes: 0 conjugate (or command succeeded), 1 not conjugate,
//! 2 usage, parse, or I/O error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use scp_cli::bench::{self, BenchConfig};
use scp_cli::gen::{generate, Family, GenParams};
use scp_cli::instance::{render, Instance};
use scp_cli::report::{label_instance, parse_mode, parse_threshold, solve_instance, LabelFormat};
use scp_cli::CliError;
use scp_core::StrategyConfig;

#[derive(Parser)]
#[command(name = "scp", version, about = "Simultaneous conjugacy of permutation tuples")]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(clap::Args)]
struct StrategyArgs {
    /// auto, label, or pairwise.
    #[arg(long, default_value = "auto")]
    strategy: String,
    /// Size from which a component counts as large: `n/log2n`, `n/K`, or `K`.
    #[arg(long, default_value = "n/log2n")]
    threshold: String,
    /// Label components on all cores. Output is identical either way.
    #[arg(long)]
    parallel: bool,
}

impl StrategyArgs {
    fn config(&self) -> Result<StrategyConfig, CliError> {
        Ok(StrategyConfig {
            mode: parse_mode(&self.strategy)?,
            threshold: parse_threshold(&self.threshold)?,
            parallel: self.parallel,
        })
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Brackets,
    Words,
}

#[derive(Subcommand)]
enum Command {
    /// Print YES and a conjugator, or NO.
    Solve {
        path: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
    /// Print the canonical label of each tuple in the file.
    Label {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "brackets")]
        format: FormatArg,
        #[arg(long)]
        parallel: bool,
    },
    /// Write a generated instance.
    Gen {
        /// random, conjugate-pair, equal-components, few-large, or mixed.
        family: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        d: usize,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Defaults to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Time `solve` over a size grid and fit the scaling exponent.
    Bench {
        /// Repeatable.
        #[arg(long = "family", default_value = "equal-components")]
        families: Vec<String>,
        /// Explicit sizes, comma-separated. Overrides --log2-min/--log2-max.
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        log2_min: u32,
        #[arg(long, default_value_t = 16)]
        log2_max: u32,
        #[arg(long, default_value_t = 3)]
        d: usize,
        /// Component size; 64 unless --k is given.
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 5)]
        reps: usize,
        #[arg(long, default_value_t = 20)]
        min_time_ms: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        strategy: StrategyArgs,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("scp: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode, CliError> {
    match cmd {
        Command::Solve { path, strategy } => {
            let cfg = strategy.config()?;
            let out = solve_instance(&Instance::read(&path)?, &cfg)?;
            print!("{}", out.text);
            Ok(if out.conjugate { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Label { path, format, parallel } => {
            let format = match format {
                FormatArg::Brackets => LabelFormat::Brackets,
                FormatArg::Words => LabelFormat::Words,
            };
            print!("{}", label_instance(&Instance::read(&path)?, format, parallel));
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen { family, n, d, s, k, seed, out } => {
            let family: Family = family.parse()?;
            let inst = generate(family, &GenParams { n, d, s, k }, seed)?;
            match out {
                Some(path) => inst.write(&path)?,
                None => print!("{}", render(&inst)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bench {
            families,
            sizes,
            log2_min,
            log2_max,
            d,
            s,
            k,
            reps,
            min_time_ms,
            seed,
            out,
            strategy,
        } => {
            let families = families.iter().map(|f| f.parse()).collect::<Result<Vec<Family>, _>>()?;
            let sizes = if sizes.is_empty() { bench::pow2_grid(log2_min, log2_max) } else { sizes };
            let cfg = BenchConfig {
                families,
                sizes,
                d,
                s: s.or(if k.is_none() { BenchConfig::default().s } else { None }),
                k,
                reps,
                min_time: Duration::from_millis(min_time_ms),
                strategy: strategy.config()?,
                seed,
            };
            let records = bench::run(&cfg)?;
            let file = std::fs::File::create(&out)
                .map_err(|source| CliError::Io { path: out.clone(), source })?;
            bench::write_csv(&records, file)?;
            for fit in bench::fit_exponents(&records) {
                match fit.exponent {
                    Some(e) => println!("{}: exponent {e:.3} over {} sizes", fit.family, fit.points),
                    None => println!("{}: exponent n/a ({} sizes)", fit.family, fit.points),
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
