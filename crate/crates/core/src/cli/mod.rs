//! The `fibknot` command line.

mod notation;
mod render;

use std::ffi::OsString;
use std::io::Write;
use std::ops::RangeInclusive;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::contfrac::{even_expansion, Fraction};
use crate::error::{Error, Result};
use crate::fiblinks::FibLinkParams;
use crate::links::{Components, RationalLink};
use crate::poly::{alexander_polynomial, conway_polynomial};
use crate::verify;

pub use notation::parse_notation;
pub use render::{
    cf_json, gf2_json, int_json, int_poly_json, laurent_json, to_json_text, FibRecord, CSV_HEADER,
    LINK_SIGN_NOTE,
};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(
    name = "fibknot",
    version,
    about = "Invariants of rational knots and Fibonacci links"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Schubert fraction of a Conway notation, e.g. "C(3,3)" or "2 -2".
    Fraction {
        #[arg(allow_hyphen_values = true)]
        notation: String,
    },
    /// Even continued fraction of alpha/beta.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        fraction: String,
    },
    /// Conway polynomial of a rational link.
    Conway {
        #[arg(allow_hyphen_values = true)]
        notation: String,
    },
    /// Alexander polynomial of a rational knot.
    Alexander {
        #[arg(allow_hyphen_values = true)]
        notation: String,
    },
    /// Full record for the Fibonacci link F_j^(n) = C(n, ..., n).
    Fib {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        j: i64,
    },
    /// One row per (n, j); ranges are inclusive, e.g. 1..9.
    Table {
        #[arg(long, value_parser = parse_range)]
        n_range: RangeInclusive<i64>,
        #[arg(long, value_parser = parse_range)]
        j_range: RangeInclusive<i64>,
    },
    /// Run the full identity sweep; exits 0 iff every check passes.
    Verify {
        #[arg(long, default_value_t = 9)]
        max_n: u64,
        #[arg(long, default_value_t = 15)]
        max_j: u64,
    },
}

/// `a..b` or `a..=b` (both inclusive), or a single integer.
fn parse_range(s: &str) -> std::result::Result<RangeInclusive<i64>, String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<i64>()
            .map_err(|_| format!("invalid integer {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok(lo..=hi)
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid usage");
            let _ = writeln!(err, "{line}");
            return 2;
        }
    };
    match execute(&cli) {
        Ok((text, status)) => {
            let _ = out.write_all(text.as_bytes());
            status
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

/// Runs a parsed command, returning its output and exit status.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Fraction { notation } => fraction_cmd(notation, format)?,
        Command::Normalize { fraction } => normalize_cmd(fraction, format)?,
        Command::Conway { notation } => conway_cmd(notation, format)?,
        Command::Alexander { notation } => alexander_cmd(notation, format)?,
        Command::Fib { n, j } => {
            let record = FibRecord::compute(FibLinkParams::new(*n, *j)?);
            match format {
                Format::Text => record.to_text(),
                Format::Json => to_json_text(&record.to_json()),
                Format::Csv => csv_text(std::iter::once(record.csv_row()))?,
            }
        }
        Command::Table { n_range, j_range } => {
            let rows = table(n_range.clone(), j_range.clone())?;
            render_table(&rows, format)?
        }
        Command::Verify { max_n, max_j } => {
            let report = verify::run(*max_n, *max_j);
            let status = if report.all_passed() { 0 } else { 1 };
            let text = match format {
                Format::Json => to_json_text(&verify_json(&report)),
                _ => format!("{report}\n"),
            };
            return Ok((text, status));
        }
    };
    Ok((out, 0))
}

fn link_from(notation: &str) -> Result<RationalLink> {
    RationalLink::from_notation(parse_notation(notation)?)
}

fn fraction_cmd(notation: &str, format: Format) -> Result<String> {
    let link = link_from(notation)?;
    let f = link.fraction();
    Ok(match format {
        Format::Text => format!("{f}\n"),
        Format::Json => to_json_text(&json!({
            "notation": cf_json(link.notation()),
            "fraction": f.to_string(),
            "alpha": int_json(f.num()),
            "beta": int_json(f.den()),
            "components": link.components().count(),
        })),
        Format::Csv => csv_text_with(
            &["notation", "alpha", "beta", "components"],
            std::iter::once([
                link.notation().to_string(),
                f.num().to_string(),
                f.den().to_string(),
                link.components().count().to_string(),
            ]),
        )?,
    })
}

fn normalize_cmd(fraction: &str, format: Format) -> Result<String> {
    let f: Fraction = fraction.parse()?;
    let e = even_expansion(&f)?;
    Ok(match format {
        Format::Text => {
            let mut s = format!("{}\n", e.quotients);
            if e.s_applied {
                s.push_str(&format!(
                    "note: expanded s({f}) = {} (same link)\n",
                    e.expanded
                ));
            }
            s
        }
        Format::Json => to_json_text(&json!({
            "input": f.to_string(),
            "expanded": e.expanded.to_string(),
            "s_applied": e.s_applied,
            "expansion": cf_json(&e.quotients),
        })),
        Format::Csv => csv_text_with(
            &["input", "expanded", "s_applied", "expansion"],
            std::iter::once([
                f.to_string(),
                e.expanded.to_string(),
                e.s_applied.to_string(),
                e.quotients.to_string(),
            ]),
        )?,
    })
}

/// `∇` from the notation itself when it is already even, otherwise from the
/// link's even normal form.
fn conway_of(link: &RationalLink) -> (crate::ContinuedFraction, crate::IntPoly) {
    let expansion = match conway_polynomial(link.notation()) {
        Ok(_) => link.notation().clone(),
        Err(_) => link.even_normal_form(),
    };
    let nabla = conway_polynomial(&expansion).expect("even expansion");
    (expansion, nabla)
}

fn conway_cmd(notation: &str, format: Format) -> Result<String> {
    let link = link_from(notation)?;
    let (expansion, nabla) = conway_of(&link);
    let is_link = link.components() == Components::TwoComponent;
    Ok(match format {
        Format::Text => {
            let mut s = format!("{nabla}\n");
            if is_link {
                s.push_str(&format!("expansion used: {expansion}\n{LINK_SIGN_NOTE}\n"));
            }
            s
        }
        Format::Json => to_json_text(&json!({
            "notation": cf_json(link.notation()),
            "fraction": link.fraction().to_string(),
            "components": link.components().count(),
            "expansion": cf_json(&expansion),
            "conway": int_poly_json(&nabla),
            "conway_mod2": gf2_json(&nabla.mod2()),
        })),
        Format::Csv => csv_text_with(
            &["notation", "expansion", "conway", "conway_mod2"],
            std::iter::once([
                link.notation().to_string(),
                expansion.to_string(),
                nabla.to_string(),
                nabla.mod2().to_string(),
            ]),
        )?,
    })
}

fn alexander_cmd(notation: &str, format: Format) -> Result<String> {
    let link = link_from(notation)?;
    if !link.is_knot() {
        return Err(Error::TwoComponentLink("the Alexander polynomial"));
    }
    let (_, nabla) = conway_of(&link);
    let delta = alexander_polynomial(&nabla)?;
    Ok(match format {
        Format::Text => format!("{delta}\n"),
        Format::Json => to_json_text(&json!({
            "notation": cf_json(link.notation()),
            "fraction": link.fraction().to_string(),
            "alexander": laurent_json(&delta),
        })),
        Format::Csv => csv_text_with(
            &["notation", "alexander"],
            std::iter::once([link.notation().to_string(), delta.to_string()]),
        )?,
    })
}

/// Records for every `(n, j)` in the ranges, `n` ascending then `j`.
pub fn table(n_range: RangeInclusive<i64>, j_range: RangeInclusive<i64>) -> Result<Vec<FibRecord>> {
    let cells = n_range
        .flat_map(|n| j_range.clone().map(move |j| FibLinkParams::new(n, j)))
        .collect::<Result<Vec<_>>>()?;
    Ok(cells.into_par_iter().map(FibRecord::compute).collect())
}

pub fn render_table(rows: &[FibRecord], format: Format) -> Result<String> {
    Ok(match format {
        Format::Csv => csv_text(rows.iter().map(FibRecord::csv_row))?,
        Format::Json => to_json_text(&Value::Array(rows.iter().map(FibRecord::to_json).collect())),
        Format::Text => {
            let cells: Vec<[String; 12]> = rows.iter().map(FibRecord::csv_row).collect();
            let mut widths = CSV_HEADER.map(str::len);
            for row in &cells {
                for (w, c) in widths.iter_mut().zip(row) {
                    *w = (*w).max(c.chars().count());
                }
            }
            let line = |row: &[String]| {
                let padded: Vec<String> = row
                    .iter()
                    .zip(widths)
                    .map(|(c, w)| format!("{c:<w$}"))
                    .collect();
                padded.join("  ").trim_end().to_string() + "\n"
            };
            let header: Vec<String> = CSV_HEADER.iter().map(|s| s.to_string()).collect();
            let mut s = line(&header);
            for row in &cells {
                s.push_str(&line(row));
            }
            s
        }
    })
}

fn csv_text(rows: impl Iterator<Item = [String; 12]>) -> Result<String> {
    csv_text_with(&CSV_HEADER, rows)
}

fn csv_text_with<const N: usize>(
    header: &[&str],
    rows: impl Iterator<Item = [String; N]>,
) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::InvalidParams(format!("csv output: {e}"));
    w.write_record(header).map_err(io)?;
    for row in rows {
        w.write_record(&row).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::InvalidParams(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("utf-8 fields"))
}

fn verify_json(report: &verify::VerifyReport) -> Value {
    json!({
        "max_n": report.max_n,
        "max_j": report.max_j,
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "passed": c.passed,
            "failed": c.failed,
            "failures": c.failures,
        })).collect::<Vec<_>>(),
        "all_passed": report.all_passed(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("fibknot").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn range_parsing() {
        assert_eq!(parse_range("1..9"), Ok(1..=9));
        assert_eq!(parse_range("1..=9"), Ok(1..=9));
        assert_eq!(parse_range("4"), Ok(4..=4));
        assert!(parse_range("9..1").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn conway_trefoil() {
        assert_eq!(
            run_str(&["conway", "[2,-2]"]),
            (0, "z^2 + 1\n".into(), String::new())
        );
    }

    #[test]
    fn hyphen_values_are_notation() {
        let (code, out, _) = run_str(&["fraction", "-2 2"]);
        assert_eq!((code, out.as_str()), (0, "3/-2\n"));
    }

    #[test]
    fn alexander_refuses_links() {
        let (code, out, err) = run_str(&["alexander", "C(2)"]);
        assert_eq!(code, 1);
        assert!(out.is_empty());
        assert!(
            err.starts_with("error: the link has two components"),
            "{err}"
        );
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn usage_errors_are_one_line() {
        let (code, _, err) = run_str(&["fib", "--n", "3"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
        let (code, _, err) = run_str(&["bogus"]);
        assert_eq!(code, 2);
        assert_eq!(err.lines().count(), 1);
    }

    #[test]
    fn fib_open_case() {
        let (code, out, _) = run_str(&["fib", "--n", "3", "--j", "3"]);
        assert_eq!(code, 0);
        assert!(out.contains("conway mod 2  1\n"), "{out}");
        assert!(out.contains("lissajous     inconclusive"), "{out}");
    }

    #[test]
    fn normalize_reports_substitution() {
        let (_, out, _) = run_str(&["normalize", "5/3"]);
        assert_eq!(out, "[-2, -2]\nnote: expanded s(5/3) = 5/-2 (same link)\n");
        let (code, _, err) = run_str(&["normalize", "6/4"]);
        assert_eq!(code, 1);
        assert!(err.contains("not a canonical Schubert fraction"));
    }
}
