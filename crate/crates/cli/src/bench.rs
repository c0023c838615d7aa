//! Scaling benchmarks: time `solve` over a size grid and fit `log t` against
//! `log n` per family.
//!
//! CSV columns: `family,n,d,k,s,strategy,seconds`. `k` is the number of
//! components of `a` and `s` the largest component size (for equal-size
//! families `n = k·s`). `strategy` is the configured mode, suffixed with the
//! strategy auto mode actually picked (`auto:label`, `auto:pairwise`,
//! `auto:mixed`). `seconds` is the median over repetitions of the mean time of
//! one `solve` call.

use std::hint::black_box;
use std::io::Write;
use std::time::{Duration, Instant};

use scp_core::{decompose, solve, ScpResult, Strategy, StrategyConfig, StrategyMode};

use crate::error::CliError;
use crate::gen::{generate, Family, GenParams};
use crate::report::mode_name;

pub const CSV_HEADER: [&str; 7] = ["family", "n", "d", "k", "s", "strategy", "seconds"];

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub families: Vec<Family>,
    pub sizes: Vec<usize>,
    pub d: usize,
    pub s: Option<usize>,
    pub k: Option<usize>,
    pub reps: usize,
    /// Each repetition calls `solve` until at least this much time has passed.
    pub min_time: Duration,
    pub strategy: StrategyConfig,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            families: vec![Family::EqualComponents],
            sizes: Vec::new(),
            d: 3,
            s: Some(64),
            k: None,
            reps: 5,
            min_time: Duration::from_millis(20),
            strategy: StrategyConfig::default(),
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub family: Family,
    pub n: usize,
    pub d: usize,
    pub k: usize,
    pub s: usize,
    pub strategy: String,
    pub seconds: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyFit {
    pub family: Family,
    pub points: usize,
    /// Least-squares slope of `ln seconds` against `ln n`; `None` with fewer
    /// than two distinct sizes.
    pub exponent: Option<f64>,
}

pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchRecord>, CliError> {
    if cfg.reps == 0 {
        return Err(CliError::usage("reps must be at least 1"));
    }
    let mut records = Vec::with_capacity(cfg.families.len() * cfg.sizes.len());
    for &family in &cfg.families {
        for &n in &cfg.sizes {
            let params = GenParams { n, d: cfg.d, s: cfg.s, k: cfg.k };
            let inst = generate(family, &params, cfg.seed.wrapping_add(n as u64))?;
            let b = inst.b.as_ref().expect("generators emit pairs");

            let dec = decompose(&inst.a);
            let k = dec.k();
            let s = (0..k).map(|c| dec.members(c).len()).max().unwrap_or(0);

            let first = solve(&inst.a, b, &cfg.strategy)?;
            let strategy = strategy_label(cfg.strategy.mode, &first);

            let mut samples: Vec<f64> = (0..cfg.reps)
                .map(|_| time_solve(&inst.a, b, &cfg.strategy, cfg.min_time))
                .collect::<Result<_, _>>()?;
            samples.sort_by(f64::total_cmp);
            let seconds = samples[samples.len() / 2];

            records.push(BenchRecord { family, n, d: cfg.d, k, s, strategy, seconds });
        }
    }
    Ok(records)
}

fn time_solve(
    a: &scp_core::PermTuple,
    b: &scp_core::PermTuple,
    cfg: &StrategyConfig,
    min_time: Duration,
) -> Result<f64, CliError> {
    let start = Instant::now();
    let mut calls = 0u32;
    loop {
        black_box(solve(black_box(a), black_box(b), cfg)?);
        calls += 1;
        let elapsed = start.elapsed();
        if elapsed >= min_time {
            return Ok(elapsed.as_secs_f64() / f64::from(calls));
        }
    }
}

fn strategy_label(mode: StrategyMode, r: &ScpResult) -> String {
    if mode != StrategyMode::Auto {
        return mode_name(mode).to_owned();
    }
    let uses = |s| r.classes.iter().any(|c| c.strategy == s);
    let picked = match (uses(Strategy::Label), uses(Strategy::Pairwise)) {
        (true, true) => "mixed",
        (false, true) => "pairwise",
        (true, false) => "label",
        (false, false) => "none",
    };
    format!("auto:{picked}")
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record([
            r.family.name().to_owned(),
            r.n.to_string(),
            r.d.to_string(),
            r.k.to_string(),
            r.s.to_string(),
            r.strategy.clone(),
            format!("{:.9e}", r.seconds),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Per family, in order of first appearance.
pub fn fit_exponents(records: &[BenchRecord]) -> Vec<FamilyFit> {
    let mut families: Vec<Family> = Vec::new();
    for r in records {
        if !families.contains(&r.family) {
            families.push(r.family);
        }
    }
    families
        .into_iter()
        .map(|family| {
            let pts: Vec<(f64, f64)> = records
                .iter()
                .filter(|r| r.family == family)
                .map(|r| ((r.n as f64).ln(), r.seconds.ln()))
                .collect();
            FamilyFit { family, points: pts.len(), exponent: least_squares_slope(&pts) }
        })
        .collect()
}

/// Slope of the least-squares line through `(x, y)` points.
pub fn least_squares_slope(pts: &[(f64, f64)]) -> Option<f64> {
    let m = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / m;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    (pts.len() >= 2 && sxx > 0.0).then(|| sxy / sxx)
}

/// `2^lo, 2^(lo+1), .., 2^hi`.
pub fn pow2_grid(lo: u32, hi: u32) -> Vec<usize> {
    (lo..=hi).map(|e| 1usize << e).collect()
}
