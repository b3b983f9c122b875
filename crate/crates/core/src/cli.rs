//! Command-line front end: `gen`, `verify`, `oracle` and `pell`.
//!
//! Exit status is 0 when every check passes, 1 when a counterexample or
//! mismatch is found, and 2 for usage and domain errors. Integers are always
//! written in full decimal, in every output format.

use std::ffi::OsString;
use std::io::{self, Write};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{Map, Number, Value};

use crate::error::Error;
use crate::identities::{self, TheoremId, VerifyReport};
use crate::oracle::{self, OracleHit};
use crate::sequences::{self, SeqFamily};
use crate::{pell, Int, Rational};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "neobalco",
    version,
    about = "Generate and verify neo balcobalancing numbers exactly"
)]
struct Cli {
    /// Output encoding.
    #[arg(long, value_enum, default_value_t = OutputFormat::Table, global = true)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the first terms of a sequence, from its smallest index.
    Gen {
        /// One of P, Q, B, b, C, c, T, S, s, t, Bneobc, Cneobc, Rneobc, CRneobc.
        family: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
    /// Check an identity (or `all`) at every index of a range.
    Verify {
        theorem: String,
        #[arg(long, default_value_t = 1)]
        from: i64,
        #[arg(long)]
        to: i64,
    },
    /// Brute-force scan of the defining sums up to a bound.
    Oracle {
        #[arg(long)]
        max: String,
    },
    /// Solutions of x² − 2y² = −9 along the automorphism orbit.
    Pell {
        #[arg(long, default_value_t = 10)]
        count: usize,
    },
}

#[derive(Debug, Clone)]
enum Cell {
    Int(Int),
    Text(String),
    Bool(bool),
    Empty,
}

impl Cell {
    fn ratio(r: &Rational) -> Cell {
        if r.is_integer() {
            Cell::Int(r.to_integer())
        } else {
            Cell::Text(r.to_string())
        }
    }

    fn plain(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Bool(b) => b.to_string(),
            Cell::Empty => String::new(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(i) => {
                Value::Number(Number::from_str(&i.to_string()).expect("decimal integer"))
            }
            Cell::Text(s) => Value::String(s.clone()),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Empty => Value::Null,
        }
    }

    fn numeric(&self) -> bool {
        matches!(self, Cell::Int(_))
    }
}

impl From<Int> for Cell {
    fn from(v: Int) -> Self {
        Cell::Int(v)
    }
}

impl From<i64> for Cell {
    fn from(v: i64) -> Self {
        Cell::Int(v.into())
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v.into())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

/// A rendered command result: a few labelled scalars plus one table.
struct Document {
    command: &'static str,
    meta: Vec<(&'static str, Cell)>,
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Document {
    fn render(&self, format: OutputFormat, out: &mut dyn Write) -> io::Result<()> {
        match format {
            OutputFormat::Table => self.render_table(out),
            OutputFormat::Json => self.render_json(out),
            OutputFormat::Csv => self.render_csv(out),
        }
    }

    fn render_table(&self, out: &mut dyn Write) -> io::Result<()> {
        let text: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Cell::plain).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, c)| {
                text.iter()
                    .map(|r| r[i].chars().count())
                    .chain([c.len()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let header: Vec<String> = self
            .columns
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect();
        writeln!(out, "{}", header.join("  ").trim_end())?;
        for (row, cells) in text.iter().zip(&self.rows) {
            let line: Vec<String> = row
                .iter()
                .zip(cells)
                .zip(&widths)
                .map(|((s, cell), w)| {
                    if cell.numeric() {
                        format!("{s:>w$}")
                    } else {
                        format!("{s:<w$}")
                    }
                })
                .collect();
            writeln!(out, "{}", line.join("  ").trim_end())?;
        }
        for (k, v) in &self.meta {
            writeln!(out, "{k}: {}", v.plain())?;
        }
        Ok(())
    }

    fn render_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut doc = Map::new();
        doc.insert("command".into(), Value::String(self.command.into()));
        for (k, v) in &self.meta {
            doc.insert((*k).into(), v.json());
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(r)
                    .map(|(c, v)| ((*c).to_string(), v.json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        doc.insert("rows".into(), Value::Array(rows));
        serde_json::to_writer_pretty(&mut *out, &Value::Object(doc))?;
        writeln!(out)
    }

    fn render_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.columns)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::plain))?;
        }
        w.flush()
    }
}

fn usage_error(err: &mut dyn Write, e: impl std::fmt::Display) -> i32 {
    let _ = writeln!(err, "error: {e}");
    EXIT_USAGE
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, A>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = A>,
    A: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{rendered}")
            } else {
                write!(out, "{rendered}")
            };
            return code;
        }
    };
    let outcome = match cli.command {
        Command::Gen { family, count } => cmd_gen(&family, count),
        Command::Verify { theorem, from, to } => cmd_verify(&theorem, from, to),
        Command::Oracle { max } => cmd_oracle(&max),
        Command::Pell { count } => cmd_pell(count),
    };
    match outcome {
        Ok((doc, code)) => match doc.render(cli.format, out) {
            Ok(()) => code,
            Err(e) => usage_error(err, e),
        },
        Err(e) => usage_error(err, e),
    }
}

fn cmd_gen(family: &str, count: usize) -> Result<(Document, i32), Error> {
    let family = SeqFamily::from_str(family)?;
    if count < 1 {
        return Err(Error::domain("gen", "--count must be at least 1"));
    }
    let w = sequences::window::<Int>(family, family.min_index(), count)?;
    let rows = w
        .indexed()
        .map(|(n, v)| vec![n.into(), v.clone().into()])
        .collect();
    Ok((
        Document {
            command: "gen",
            meta: vec![("family", family.tag().into())],
            columns: vec!["n", "value"],
            rows,
        },
        EXIT_OK,
    ))
}

fn report_rows(r: &VerifyReport, rows: &mut Vec<Vec<Cell>>) {
    rows.push(vec![
        r.theorem.tag().into(),
        r.from.into(),
        r.to.into(),
        r.passed.into(),
        r.failed.len().into(),
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
        Cell::Empty,
    ]);
    for f in &r.failed {
        rows.push(vec![
            r.theorem.tag().into(),
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            Cell::Empty,
            f.index.into(),
            f.label.as_str().into(),
            Cell::ratio(&f.lhs),
            Cell::ratio(&f.rhs),
        ]);
    }
}

fn cmd_verify(theorem: &str, from: i64, to: i64) -> Result<(Document, i32), Error> {
    let reports = if theorem == "all" {
        if from > to {
            return Err(Error::domain("verify", format!("empty range {from}..{to}")));
        }
        identities::run_all(from, to)?
    } else {
        vec![identities::run_suite(
            TheoremId::from_str(theorem)?,
            from,
            to,
        )?]
    };
    let ok = reports.iter().all(VerifyReport::ok);
    let mut rows = Vec::new();
    for r in &reports {
        report_rows(r, &mut rows);
    }
    Ok((
        Document {
            command: "verify",
            meta: vec![("status", if ok { "pass" } else { "fail" }.into())],
            columns: vec![
                "theorem", "from", "to", "passed", "failed", "index", "label", "lhs", "rhs",
            ],
            rows,
        },
        if ok { EXIT_OK } else { EXIT_FAILED },
    ))
}

fn oracle_hits(max: &Int) -> Result<Vec<OracleHit<Int>>, Error> {
    // both sides stay below 2n², so i64 is exact up to 2^31
    match i64::try_from(max) {
        Ok(m) if m < 1 << 31 => Ok(oracle::scan(&m)?
            .into_iter()
            .map(|h| OracleHit {
                n: h.n.into(),
                r: h.r.into(),
            })
            .collect()),
        _ => oracle::scan(max),
    }
}

fn cmd_oracle(max: &str) -> Result<(Document, i32), Error> {
    let max = Int::from_str(max.trim())
        .map_err(|_| Error::domain("oracle", format!("--max must be an integer, got '{max}'")))?;
    let hits = oracle_hits(&max)?;
    let expected = oracle::closed_form_pairs(&max)?;
    let rows = hits
        .iter()
        .enumerate()
        .map(|(i, h)| {
            let matches = expected.get(i) == Some(h);
            vec![h.n.clone().into(), h.r.clone().into(), matches.into()]
        })
        .collect();
    let ok = hits == expected;
    Ok((
        Document {
            command: "oracle",
            meta: vec![("cross_check", if ok { "OK" } else { "MISMATCH" }.into())],
            columns: vec!["n", "r", "closed_form"],
            rows,
        },
        if ok { EXIT_OK } else { EXIT_FAILED },
    ))
}

fn cmd_pell(count: usize) -> Result<(Document, i32), Error> {
    let orbit = pell::solve_orbit::<Int>(count)?;
    let mut ok = true;
    let mut rows = Vec::with_capacity(count);
    for (i, p) in orbit.into_iter().enumerate() {
        let n = i as i64 + 1;
        let solves = pell::is_solution(&p);
        let closed = pell::orbit_closed_form::<Int>(n)? == p;
        ok &= solves && closed;
        rows.push(vec![
            n.into(),
            p.x.into(),
            p.y.into(),
            solves.into(),
            closed.into(),
        ]);
    }
    Ok((
        Document {
            command: "pell",
            meta: vec![],
            columns: vec!["n", "x", "y", "is_solution", "matches_closed_form"],
            rows,
        },
        if ok { EXIT_OK } else { EXIT_FAILED },
    ))
}
