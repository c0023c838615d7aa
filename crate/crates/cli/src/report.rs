//! What `scp solve` and `scp label` print.

use std::fmt::Write as _;

use scp_core::canonical::canonical_label_graph_par;
use scp_core::{canonical_label_graph, solve, GraphLabel, PermTuple, StrategyConfig, StrategyMode, Threshold};

use crate::error::CliError;
use crate::instance::{render_perm, Instance};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveOutput {
    pub conjugate: bool,
    /// `YES\n<τ images>\n` or `NO\n`.
    pub text: String,
}

pub fn solve_instance(inst: &Instance, cfg: &StrategyConfig) -> Result<SolveOutput, CliError> {
    let b = inst.b.as_ref().ok_or_else(|| CliError::usage("solve needs a file with both tuples"))?;
    let r = solve(&inst.a, b, cfg)?;
    let text = match &r.witness {
        Some(tau) => format!("YES\n{}\n", render_perm(tau)),
        None => "NO\n".to_owned(),
    };
    Ok(SolveOutput { conjugate: r.conjugate, text })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LabelFormat {
    /// `[n_i:(c_1,..,c_{d n_i})]` per part.
    #[default]
    Brackets,
    /// Flat `n_i d c_1 .. c_{d n_i}` per part, space-separated.
    Words,
}

pub fn graph_label(a: &PermTuple, parallel: bool) -> GraphLabel {
    if parallel {
        canonical_label_graph_par(a)
    } else {
        canonical_label_graph(a)
    }
}

/// One line per tuple in the file (`a`, then `b` if present).
pub fn label_instance(inst: &Instance, format: LabelFormat, parallel: bool) -> String {
    let mut out = String::new();
    for t in std::iter::once(&inst.a).chain(&inst.b) {
        let label = graph_label(t, parallel);
        match format {
            LabelFormat::Brackets => writeln!(out, "{label}").unwrap(),
            LabelFormat::Words => {
                let words: Vec<String> = label.to_words().iter().map(usize::to_string).collect();
                writeln!(out, "{}", words.join(" ")).unwrap();
            }
        }
    }
    out
}

pub fn parse_mode(s: &str) -> Result<StrategyMode, CliError> {
    match s {
        "auto" => Ok(StrategyMode::Auto),
        "label" => Ok(StrategyMode::Label),
        "pairwise" => Ok(StrategyMode::Pairwise),
        _ => Err(CliError::usage(format!("unknown strategy `{s}` (auto, label, pairwise)"))),
    }
}

pub fn mode_name(m: StrategyMode) -> &'static str {
    match m {
        StrategyMode::Auto => "auto",
        StrategyMode::Label => "label",
        StrategyMode::Pairwise => "pairwise",
    }
}

/// `n/log2n` (default), `n/K`, or an absolute size `K`.
pub fn parse_threshold(expr: &str) -> Result<Threshold, CliError> {
    let e: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::usage(format!("bad threshold `{expr}` (n/log2n, n/K, or K)"));
    match e.as_str() {
        "n/log2n" | "n/log2(n)" => Ok(Threshold::NOverLog2),
        _ => match e.strip_prefix("n/") {
            Some(k) => k.parse().ok().filter(|&k| k > 0).map(Threshold::NOver).ok_or_else(bad),
            None => e.parse().map(Threshold::Absolute).map_err(|_| bad()),
        },
    }
}
