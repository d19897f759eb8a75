//! `lapspec` command line.
//!
//! Exit status: 0 when everything succeeded and every check passed, 1 when a
//! family verification failed, 2 on usage or input errors.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde::Serialize;

use crate::energy::{is_cospectral, EnergyReport};
use crate::expr::{parse, GraphExpr};
use crate::families::{self, FamilyId, FamilySpec, FamilyVerdict};
use crate::rational;
use crate::scan::{self, ScanOptions, ScanRecord};
use crate::spectrum::{spectrum_of, Spectrum};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "lapspec", version, about = "Exact Laplacian spectra and L-borderenergetic graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Laplacian energy report for an expression
    Eval {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Exact Laplacian spectrum of an expression
    Spectrum {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Check the closed-form spectra and energies of the built-in families
    VerifyFamily {
        /// Family name (omega1..omega4, g12, g13, g23, g24, g34, gir) or "all"
        #[arg(long)]
        id: String,
        #[arg(long, default_value_t = 1)]
        r_min: u64,
        #[arg(long)]
        r_max: u64,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether two expressions have the same Laplacian spectrum
    Cospectral {
        first: String,
        second: String,
        #[arg(long)]
        json: bool,
    },
    /// Scan a graph6 file ("-" for stdin) for L-borderenergetic graphs
    Scan {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        /// Worker threads (0 = all cores)
        #[arg(long, env = "LAPSPEC_JOBS", default_value_t = 0)]
        jobs: usize,
        /// Write records as JSON lines to this path
        #[arg(long, value_name = "OUT.jsonl")]
        json: Option<PathBuf>,
        /// Write index,g6,n,le,verdict rows to this path
        #[arg(long, value_name = "OUT.csv")]
        csv: Option<PathBuf>,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(io::Error::other(e))
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Eval { expr, json } => eval(&expr, json, out),
        Command::Spectrum { expr, json } => spectrum(&expr, json, out),
        Command::VerifyFamily {
            id,
            r_min,
            r_max,
            json,
        } => verify_family(&id, r_min, r_max, json, out, err),
        Command::Cospectral {
            first,
            second,
            json,
        } => cospectral(&first, &second, json, out),
        Command::Scan {
            file,
            tol,
            jobs,
            json,
            csv,
        } => scan_file(file, tol, jobs, json, csv, out, err),
    };
    match result {
        Ok(code) => code,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn parse_expr(text: &str) -> Result<GraphExpr, CliError> {
    parse(text).map_err(|e| CliError::Input(format!("cannot parse {text:?}: {e}")))
}

fn write_json_line(out: &mut dyn Write, value: &impl Serialize) -> Result<(), CliError> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

/// Left-aligned columns separated by two spaces.
fn write_table(out: &mut dyn Write, rows: &[Vec<String>]) -> io::Result<()> {
    let cols = rows.first().map_or(0, Vec::len);
    let widths: Vec<usize> = (0..cols)
        .map(|c| rows.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    for row in rows {
        let mut line = String::new();
        for (c, cell) in row.iter().enumerate() {
            if c + 1 == cols {
                line.push_str(cell);
            } else {
                line.push_str(&format!("{cell:<w$}  ", w = widths[c]));
            }
        }
        writeln!(out, "{}", line.trim_end())?;
    }
    Ok(())
}

fn eval(text: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let expr = parse_expr(text)?;
    let report = EnergyReport::for_expr(&expr);
    if json {
        write_json_line(out, &report)?;
    } else {
        let rows = vec![
            vec!["expr".into(), expr.render()],
            vec!["n".into(), report.order.to_string()],
            vec!["m".into(), report.edges.to_string()],
            vec!["dbar".into(), rational::display(&report.avg_degree)],
            vec!["LE".into(), rational::display(&report.laplacian_energy)],
            vec!["target".into(), report.target.to_string()],
            vec!["borderenergetic".into(), report.is_l_borderenergetic.to_string()],
            vec!["complete".into(), report.is_complete.to_string()],
        ];
        write_table(out, &rows)?;
    }
    Ok(EXIT_OK)
}

fn spectrum_rows(s: &Spectrum) -> Vec<Vec<String>> {
    let mut rows = vec![vec![
        "eigenvalue".to_string(),
        "decimal".to_string(),
        "multiplicity".to_string(),
    ]];
    for (v, m) in s.entries() {
        rows.push(vec![
            v.to_string(),
            format!("{:.6}", rational::to_f64(v)),
            m.to_string(),
        ]);
    }
    rows
}

fn spectrum(text: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let s = spectrum_of(&parse_expr(text)?);
    if json {
        write_json_line(out, &s)?;
    } else {
        write_table(out, &spectrum_rows(&s))?;
    }
    Ok(EXIT_OK)
}

fn cospectral(a: &str, b: &str, json: bool, out: &mut dyn Write) -> Result<i32, CliError> {
    let sa = spectrum_of(&parse_expr(a)?);
    let sb = spectrum_of(&parse_expr(b)?);
    let same = is_cospectral(&sa, &sb);
    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            cospectral: bool,
            first: &'a Spectrum,
            second: &'a Spectrum,
        }
        write_json_line(
            out,
            &Out {
                cospectral: same,
                first: &sa,
                second: &sb,
            },
        )?;
    } else {
        writeln!(out, "{}", if same { "cospectral" } else { "not cospectral" })?;
    }
    Ok(EXIT_OK)
}

fn verify_family(
    id: &str,
    r_min: u64,
    r_max: u64,
    json: bool,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let ids: Vec<FamilyId> = if id.eq_ignore_ascii_case("all") {
        FamilyId::ALL.to_vec()
    } else {
        vec![id.parse().map_err(|e: families::FamilyError| CliError::Usage(e.to_string()))?]
    };
    if r_min == 0 || r_min > r_max {
        return Err(CliError::Usage(format!(
            "need 1 <= --r-min <= --r-max, got {r_min}..={r_max}"
        )));
    }

    let specs: Vec<FamilySpec> = (r_min..=r_max)
        .flat_map(|r| ids.iter().flat_map(move |&id| families::members(id, r)))
        .collect();
    let verdicts: Vec<FamilyVerdict> = specs
        .par_iter()
        .map(|s| families::verify(s).expect("members are valid specs"))
        .collect();
    let mut failed = verdicts.iter().filter(|v| !v.passed()).count();

    if json {
        for v in &verdicts {
            write_json_line(out, v)?;
        }
    } else {
        let mut rows = vec![[
            "id", "r", "i", "n", "spectra", "LE", "target", "noncospectral_Kn", "status",
        ]
        .map(String::from)
        .to_vec()];
        for v in &verdicts {
            rows.push(vec![
                v.spec.id.to_string(),
                v.spec.r.to_string(),
                v.spec.i.map_or("-".into(), |i| i.to_string()),
                v.order().to_string(),
                if v.spectra_match { "match" } else { "MISMATCH" }.into(),
                rational::display(&v.le),
                v.target().to_string(),
                v.noncospectral_with_complete.to_string(),
                if v.passed() { "ok" } else { "FAIL" }.into(),
            ]);
        }
        write_table(out, &rows)?;
    }

    for r in r_min..=r_max {
        if ids.contains(&FamilyId::Gir) {
            let girs = families::members(FamilyId::Gir, r);
            if let Some(c) = families::pairwise_noncospectral(&girs).expect("valid specs") {
                failed += 1;
                writeln!(err, "FAIL: {} and {} are cospectral", c.first, c.second)?;
            }
        }
        if ids.len() > 1 {
            for c in families::coincidences(r)
                .into_iter()
                .filter(|c| ids.contains(&c.first.id) && ids.contains(&c.second.id))
            {
                writeln!(err, "note: {} and {} are cospectral", c.first, c.second)?;
            }
        }
    }
    writeln!(
        err,
        "{} members checked, {} failed",
        verdicts.len(),
        failed
    )?;
    Ok(if failed == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn open_lines(path: &PathBuf) -> Result<Box<dyn BufRead>, CliError> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin())));
    }
    let file = File::open(path)
        .map_err(|e| CliError::Input(format!("cannot open {}: {e}", path.display())))?;
    Ok(Box::new(BufReader::new(file)))
}

#[derive(Serialize)]
struct CsvRow<'a> {
    index: usize,
    g6: &'a str,
    n: usize,
    le: f64,
    verdict: &'static str,
}

#[allow(clippy::too_many_arguments)]
fn scan_file(
    path: PathBuf,
    tol: f64,
    jobs: usize,
    json_path: Option<PathBuf>,
    csv_path: Option<PathBuf>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(CliError::Usage(format!("--tol must be positive, got {tol}")));
    }
    let reader = open_lines(&path)?;
    let mut json_out = json_path
        .map(|p| File::create(&p).map(BufWriter::new))
        .transpose()?;
    let mut csv_out = csv_path.map(csv::Writer::from_path).transpose()?;

    let opts = ScanOptions {
        tol,
        jobs,
        ..ScanOptions::default()
    };
    writeln!(out, "{:>8}  {:<12}  {:>3}  {:>16}  verdict", "index", "g6", "n", "le")?;

    let mut read_error = None;
    let lines = reader.lines().map_while(|l| match l {
        Ok(line) => Some(line),
        Err(e) => {
            read_error = Some(e);
            None
        }
    });
    let mut hits: Vec<ScanRecord> = Vec::new();
    let mut sink_error: Option<CliError> = None;
    let summary = scan::scan_stream(lines, &opts, |record| {
        if sink_error.is_some() {
            return;
        }
        let result = (|| -> Result<(), CliError> {
            writeln!(
                out,
                "{:>8}  {:<12}  {:>3}  {:>16.9}  {}",
                record.index,
                record.g6,
                record.n,
                record.numeric_le,
                record.verdict.as_str()
            )?;
            if let Some(w) = json_out.as_mut() {
                write_json_line(w, &record)?;
            }
            if let Some(w) = csv_out.as_mut() {
                w.serialize(CsvRow {
                    index: record.index,
                    g6: &record.g6,
                    n: record.n,
                    le: record.numeric_le,
                    verdict: record.verdict.as_str(),
                })?;
            }
            Ok(())
        })();
        if let Err(e) = result {
            sink_error = Some(e);
        }
        if record.verdict.is_hit() {
            hits.push(record);
        }
    });
    if let Some(e) = sink_error {
        return Err(e);
    }
    if let Some(e) = read_error {
        return Err(CliError::Input(format!("reading {}: {e}", path.display())));
    }
    if let Some(mut w) = json_out {
        w.flush()?;
    }
    if let Some(mut w) = csv_out {
        w.flush()?;
    }

    for e in &summary.errors {
        writeln!(err, "skipped {e}")?;
    }
    let classes = scan::dedupe_cospectral(&hits);
    let certified = hits
        .iter()
        .filter(|r| r.verdict == scan::Verdict::CertifiedHit)
        .count();
    writeln!(
        err,
        "{} records, {} hits ({} certified), {} cospectral classes, {} skipped lines",
        summary.records,
        hits.len(),
        certified,
        classes.len(),
        summary.errors.len()
    )?;
    for class in &classes {
        let members: Vec<String> = class.members.iter().map(|m| m.to_string()).collect();
        let key = match &class.key {
            scan::SpectrumKey::Exact(v) => format!("{v:?}"),
            scan::SpectrumKey::Rounded(v) => format!("~[{}]", v.join(", ")),
        };
        writeln!(err, "class n={} lines {} spectrum {}", class.n, members.join(","), key)?;
    }
    Ok(if summary.errors.is_empty() {
        EXIT_OK
    } else {
        EXIT_USAGE
    })
}
