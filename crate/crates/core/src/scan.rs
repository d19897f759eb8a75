//! Scan graph6 enumerations for L-borderenergetic graphs.
//!
//! Each graph gets a numeric Laplacian spectrum from the Jacobi solver. A
//! graph whose numeric energy lands within `tol` of `2n - 2` is a numeric
//! hit; if its spectrum rounds to integers and the exact characteristic
//! polynomial confirms that multiset, the energy is recomputed exactly and
//! the hit is upgraded to certified.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::energy::is_l_borderenergetic;
use crate::rational;
use crate::realize::graph6::{self, Graph6Error};
use crate::realize::{certify_integer_spectrum, DenseGraph, JacobiOptions};
use crate::spectrum::Spectrum;

/// Distance below which a numeric eigenvalue is proposed as an integer.
pub const INTEGER_SNAP: f64 = 1e-6;

/// Lines handed to the worker pool at a time.
pub const CHUNK_SIZE: usize = 512;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    pub tol: f64,
    /// Worker threads; 0 picks the rayon default.
    pub jobs: usize,
    pub jacobi: JacobiOptions,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            tol: 1e-6,
            jobs: 0,
            jacobi: JacobiOptions::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Miss,
    NumericHit,
    CertifiedHit,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Miss => "miss",
            Verdict::NumericHit => "numeric_hit",
            Verdict::CertifiedHit => "certified_hit",
        }
    }

    pub fn is_hit(self) -> bool {
        self != Verdict::Miss
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanRecord {
    /// 1-based input line number.
    pub index: usize,
    pub g6: String,
    pub n: usize,
    pub numeric_spectrum: Vec<f64>,
    pub numeric_le: f64,
    pub verdict: Verdict,
    pub certificate: Option<Vec<i64>>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScanLineError {
    #[error("line {line}: {source}")]
    Decode { line: usize, source: Graph6Error },
    #[error("line {line}: {message}")]
    Eigen { line: usize, message: String },
}

/// Classifies one graph6 record.
pub fn scan_one(index: usize, g6: &str, opts: &ScanOptions) -> Result<ScanRecord, ScanLineError> {
    let g = graph6::decode(g6).map_err(|source| ScanLineError::Decode {
        line: index,
        source,
    })?;
    scan_graph(index, g6.to_string(), &g, opts)
}

pub fn scan_graph(
    index: usize,
    g6: String,
    g: &DenseGraph,
    opts: &ScanOptions,
) -> Result<ScanRecord, ScanLineError> {
    let n = g.order();
    let eig = g
        .laplacian_eigenvalues(opts.jacobi)
        .map_err(|e| ScanLineError::Eigen {
            line: index,
            message: e.to_string(),
        })?;
    let dbar = 2.0 * g.edge_count() as f64 / n as f64;
    let numeric_le: f64 = eig.iter().map(|mu| (mu - dbar).abs()).sum();
    let target = 2.0 * n as f64 - 2.0;

    let mut verdict = Verdict::Miss;
    let mut certificate = None;
    if (numeric_le - target).abs() < opts.tol {
        verdict = Verdict::NumericHit;
        if let Some(candidate) = snap_to_integers(&eig) {
            if exact_hit(g, &candidate) {
                verdict = Verdict::CertifiedHit;
                certificate = Some(candidate);
            }
        }
    }
    Ok(ScanRecord {
        index,
        g6,
        n,
        numeric_spectrum: eig,
        numeric_le,
        verdict,
        certificate,
    })
}

fn snap_to_integers(eig: &[f64]) -> Option<Vec<i64>> {
    eig.iter()
        .map(|&x| {
            let k = x.round();
            ((x - k).abs() < INTEGER_SNAP).then_some(k as i64)
        })
        .collect()
}

fn exact_hit(g: &DenseGraph, candidate: &[i64]) -> bool {
    if !certify_integer_spectrum(&g.laplacian_matrix(), candidate) {
        return false;
    }
    let spectrum = Spectrum::new(
        candidate.len() as u64,
        candidate.iter().map(|&k| (rational::int(k.into()), 1)),
    );
    matches!(spectrum, Ok(s) if is_l_borderenergetic(&s).holds)
}

/// Strips the optional `>>graph6<<` header and line terminators; `None`
/// for lines that carry no record.
fn record_text(line: &str) -> Option<&str> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(graph6::HEADER).unwrap_or(line);
    (!line.trim().is_empty()).then_some(line)
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ScanSummary {
    pub records: usize,
    pub errors: Vec<ScanLineError>,
}

/// Scans lines in fixed-size chunks on a worker pool and hands records to
/// `sink` in input order. Lines that fail to decode are collected in the
/// summary and skipped.
pub fn scan_stream<I, F>(lines: I, opts: &ScanOptions, mut sink: F) -> ScanSummary
where
    I: IntoIterator<Item = String>,
    F: FnMut(ScanRecord),
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .expect("thread pool");
    let mut summary = ScanSummary::default();
    let mut chunk: Vec<(usize, String)> = Vec::with_capacity(CHUNK_SIZE);
    let mut flush = |chunk: &mut Vec<(usize, String)>, summary: &mut ScanSummary| {
        let results: Vec<Result<ScanRecord, ScanLineError>> = pool.install(|| {
            chunk
                .par_iter()
                .map(|(index, text)| scan_one(*index, text, opts))
                .collect()
        });
        chunk.clear();
        for result in results {
            match result {
                Ok(record) => {
                    summary.records += 1;
                    sink(record);
                }
                Err(e) => summary.errors.push(e),
            }
        }
    };
    for (offset, line) in lines.into_iter().enumerate() {
        if let Some(text) = record_text(&line) {
            chunk.push((offset + 1, text.to_string()));
        }
        if chunk.len() == CHUNK_SIZE {
            flush(&mut chunk, &mut summary);
        }
    }
    if !chunk.is_empty() {
        flush(&mut chunk, &mut summary);
    }
    summary
}

/// Collecting form of [`scan_stream`].
pub fn scan_lines<I>(lines: I, opts: &ScanOptions) -> (Vec<ScanRecord>, Vec<ScanLineError>)
where
    I: IntoIterator<Item = String>,
{
    let mut records = Vec::new();
    let summary = scan_stream(lines, opts, |r| records.push(r));
    (records, summary.errors)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpectrumKey {
    /// Exact integer multiset from a certified hit.
    Exact(Vec<i64>),
    /// Numeric spectrum rounded to 9 decimal places.
    Rounded(Vec<String>),
}

impl SpectrumKey {
    pub fn of(record: &ScanRecord) -> SpectrumKey {
        match &record.certificate {
            Some(cert) if record.verdict == Verdict::CertifiedHit => {
                let mut cert = cert.clone();
                cert.sort_unstable();
                SpectrumKey::Exact(cert)
            }
            _ => SpectrumKey::Rounded(
                record
                    .numeric_spectrum
                    .iter()
                    .map(|x| format!("{x:.9}"))
                    // tiny negative roundoff would otherwise key apart from 0
                    .map(|s| if s == "-0.000000000" { "0.000000000".into() } else { s })
                    .collect(),
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CospectralClass {
    pub n: usize,
    pub key: SpectrumKey,
    /// Input line numbers of the members, ascending.
    pub members: Vec<usize>,
}

/// Groups hits by spectrum. Misses are ignored. Classes are ordered by
/// `(n, first member index)`.
pub fn dedupe_cospectral(records: &[ScanRecord]) -> Vec<CospectralClass> {
    let mut classes: Vec<CospectralClass> = Vec::new();
    let mut by_key: HashMap<(usize, SpectrumKey), usize> = HashMap::new();
    for record in records.iter().filter(|r| r.verdict.is_hit()) {
        let key = SpectrumKey::of(record);
        match by_key.get(&(record.n, key.clone())) {
            Some(&slot) => classes[slot].members.push(record.index),
            None => {
                by_key.insert((record.n, key.clone()), classes.len());
                classes.push(CospectralClass {
                    n: record.n,
                    key,
                    members: vec![record.index],
                });
            }
        }
    }
    for class in &mut classes {
        class.members.sort_unstable();
    }
    classes.sort_by_key(|c| (c.n, c.members[0]));
    classes
}
