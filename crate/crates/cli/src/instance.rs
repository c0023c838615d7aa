//! Instance file format.
//!
//! ```text
//! n d
//! <d rows for a: row j lists the images of 1..n under a_j>
//! <d rows for b, same layout; omitted for label-only files>
//! ```
//!
//! Values are 1-based and whitespace-separated. Blank lines and lines starting
//! with `#` are ignored when reading and never written.

use std::fmt::Write as _;
use std::path::Path;

use scp_core::{PermTuple, Permutation};

use crate::error::{CliError, ParseError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub a: PermTuple,
    pub b: Option<PermTuple>,
}

impl Instance {
    pub fn n(&self) -> usize {
        self.a.n()
    }

    pub fn d(&self) -> usize {
        self.a.d()
    }

    pub fn read(path: &Path) -> Result<Instance, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.to_owned(), source })?;
        parse(&text).map_err(|err| CliError::Parse { path: path.to_owned(), err })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        std::fs::write(path, render(self))
            .map_err(|source| CliError::Io { path: path.to_owned(), source })
    }
}

pub fn parse(text: &str) -> Result<Instance, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(ParseError { line: 1, msg: "missing header `n d`".into() })?;
    let header = parse_numbers(line, header)?;
    let [n, d] = header[..] else {
        return Err(ParseError { line, msg: format!("header needs 2 values `n d`, found {}", header.len()) });
    };
    if n == 0 || d == 0 {
        return Err(ParseError { line, msg: "n and d must be at least 1".into() });
    }

    let mut rows = Vec::with_capacity(2 * d);
    let mut last_line = line;
    for (line, text) in lines {
        last_line = line;
        let values = parse_numbers(line, text)?;
        if values.len() != n {
            return Err(ParseError { line, msg: format!("expected {n} values, found {}", values.len()) });
        }
        if values.iter().any(|&x| x == 0 || x > n) {
            return Err(ParseError { line, msg: format!("values must lie in 1..={n}") });
        }
        let perm = Permutation::new(values.into_iter().map(|x| x - 1).collect())
            .map_err(|e| ParseError { line, msg: e.to_string() })?;
        rows.push(perm);
    }
    if rows.len() != d && rows.len() != 2 * d {
        return Err(ParseError {
            line: last_line,
            msg: format!("expected {d} or {} permutation rows, found {}", 2 * d, rows.len()),
        });
    }

    let b_rows = (rows.len() == 2 * d).then(|| rows.split_off(d));
    let tuple = |perms| PermTuple::new(perms).expect("rows share n and d >= 1");
    Ok(Instance { a: tuple(rows), b: b_rows.map(tuple) })
}

fn parse_numbers(line: usize, text: &str) -> Result<Vec<usize>, ParseError> {
    text.split_whitespace()
        .map(|tok| {
            tok.parse::<usize>()
                .map_err(|_| ParseError { line, msg: format!("not a non-negative integer: `{tok}`") })
        })
        .collect()
}

pub fn render(inst: &Instance) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", inst.n(), inst.d()).unwrap();
    for t in std::iter::once(&inst.a).chain(&inst.b) {
        for p in t.perms() {
            out.push_str(&render_perm(p));
            out.push('\n');
        }
    }
    out
}

/// Space-separated 1-based images.
pub fn render_perm(p: &Permutation) -> String {
    let mut out = String::with_capacity(p.len() * 4);
    for (i, x) in p.images().iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{}", x + 1).unwrap();
    }
    out
}
