//! Streaming counterexample search over graph6 lines or generated corpora.
//!
//! Graphs are checked in parallel chunks; records come out in input order.
//! The final line of output is always a JSON summary object.

use std::io::{self, BufRead, Write};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;
use crate::graph6::{parse_graph6, to_graph6};
use crate::spectral;

use super::{eval_theorem, TheoremId, TheoremReport, VerifierConfig};

const CHUNK: usize = 256;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy)]
pub struct ScanOptions {
    pub theorem: TheoremId,
    pub a: usize,
    pub b: usize,
    pub config: VerifierConfig,
    pub format: OutputFormat,
}

#[derive(Debug, Clone, Serialize)]
pub struct ScanRecord {
    pub id: usize,
    pub graph6: String,
    pub e: usize,
    pub delta: usize,
    pub rho: f64,
    pub q: f64,
    pub counterexample: bool,
    pub elapsed_us: u64,
    pub report: TheoremReport,
}

#[derive(Debug, Clone)]
pub enum ScanItem {
    Record(Box<ScanRecord>),
    Error { id: usize, message: String },
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct ScanSummary {
    pub theorem: String,
    pub a: usize,
    pub b: usize,
    pub checked: usize,
    pub errors: usize,
    pub applicable: usize,
    pub hypothesis_met: usize,
    pub oracle_skipped: usize,
    pub counterexamples: usize,
    pub chain_violations: usize,
}

#[derive(Debug, Error)]
#[error("scan aborted after {} records: {source}", summary.checked + summary.errors)]
pub struct ScanError {
    pub source: io::Error,
    pub summary: ScanSummary,
}

/// Evaluates one graph. Spectral values are reported for every record.
pub fn check_graph(id: usize, g: &Graph, opts: &ScanOptions) -> ScanItem {
    let start = Instant::now();
    let spectrum = match spectral::spectral_summary(g, opts.config.tol) {
        Ok(s) => s,
        Err(e) => return ScanItem::Error { id, message: e.to_string() },
    };
    match eval_theorem(opts.theorem, g, opts.a, opts.b, &opts.config) {
        Ok(report) => ScanItem::Record(Box::new(ScanRecord {
            id,
            graph6: to_graph6(g),
            e: g.size(),
            delta: g.min_degree(),
            rho: spectrum.rho,
            q: spectrum.q,
            counterexample: !report.consistent,
            elapsed_us: start.elapsed().as_micros() as u64,
            report,
        })),
        Err(e) => ScanItem::Error { id, message: e.to_string() },
    }
}

pub fn check_line(id: usize, line: &str, opts: &ScanOptions) -> ScanItem {
    match parse_graph6(line) {
        Ok(g) => check_graph(id, &g, opts),
        Err(e) => ScanItem::Error { id, message: format!("graph6: {e}") },
    }
}

/// Writes records in order and keeps the running summary.
pub struct ScanWriter<W: Write> {
    out: W,
    opts: ScanOptions,
    summary: ScanSummary,
}

impl<W: Write> ScanWriter<W> {
    pub fn new(mut out: W, opts: ScanOptions) -> io::Result<Self> {
        if opts.format == OutputFormat::Tsv {
            writeln!(out, "id\ttheorem\thypothesis_met\toracle\tconsistent\trho\tq\te\tdelta")?;
        }
        let summary =
            ScanSummary { theorem: opts.theorem.label().to_string(), a: opts.a, b: opts.b, ..ScanSummary::default() };
        Ok(ScanWriter { out, opts, summary })
    }

    pub fn summary(&self) -> &ScanSummary {
        &self.summary
    }

    pub fn write(&mut self, item: &ScanItem) -> io::Result<()> {
        match item {
            ScanItem::Record(r) => {
                let s = &mut self.summary;
                s.checked += 1;
                s.applicable += usize::from(r.report.applicable);
                s.hypothesis_met += usize::from(r.report.hypothesis_met);
                s.oracle_skipped += usize::from(r.report.oracle == super::OracleOutcome::SkippedSizeGuard);
                s.counterexamples += usize::from(r.counterexample);
                s.chain_violations += usize::from(r.report.size_chain == Some(false));
                match self.opts.format {
                    OutputFormat::Json => writeln!(self.out, "{}", serde_json::to_string(r)?),
                    OutputFormat::Tsv => writeln!(
                        self.out,
                        "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
                        r.id,
                        r.report.theorem,
                        r.report.hypothesis_met,
                        r.report.oracle.label(),
                        r.report.consistent,
                        r.rho,
                        r.q,
                        r.e,
                        r.delta
                    ),
                }
            }
            ScanItem::Error { id, message } => {
                self.summary.errors += 1;
                match self.opts.format {
                    OutputFormat::Json => {
                        let v = serde_json::json!({ "id": id, "error": message });
                        writeln!(self.out, "{v}")
                    }
                    OutputFormat::Tsv => writeln!(self.out, "{id}\terror\t{}", message.replace(['\t', '\n'], " ")),
                }
            }
        }
    }

    /// Emits the summary line and returns it.
    pub fn finish(mut self) -> io::Result<ScanSummary> {
        let v = serde_json::json!({ "summary": &self.summary });
        writeln!(self.out, "{v}")?;
        self.out.flush()?;
        Ok(self.summary)
    }
}

fn abort(source: io::Error, summary: &ScanSummary) -> ScanError {
    ScanError { source, summary: summary.clone() }
}

/// Scans graph6 lines (ids are 1-based line numbers; blank lines are skipped).
pub fn scan_reader<R: BufRead, W: Write>(input: R, out: W, opts: &ScanOptions) -> Result<ScanSummary, ScanError> {
    let mut writer = ScanWriter::new(out, *opts).map_err(|e| abort(e, &ScanSummary::default()))?;
    let mut lines = input.lines().enumerate();
    loop {
        let mut chunk = Vec::with_capacity(CHUNK);
        let mut read_error = None;
        for (i, line) in lines.by_ref() {
            match line {
                Ok(l) if l.trim().is_empty() => continue,
                Ok(l) => chunk.push((i + 1, l)),
                Err(e) => {
                    read_error = Some(e);
                    break;
                }
            }
            if chunk.len() == CHUNK {
                break;
            }
        }
        let done = chunk.len() < CHUNK;
        let items: Vec<ScanItem> = chunk.par_iter().map(|(id, l)| check_line(*id, l.trim(), opts)).collect();
        for item in &items {
            writer.write(item).map_err(|e| abort(e, writer.summary()))?;
        }
        if let Some(e) = read_error {
            let summary = writer.summary().clone();
            // best effort: still close the output with the partial summary
            let _ = writer.finish();
            return Err(ScanError { source: e, summary });
        }
        if done {
            break;
        }
    }
    writer.finish().map_err(|e| ScanError { source: e, summary: ScanSummary::default() })
}

/// Scans an in-memory corpus; ids are 1-based positions.
pub fn scan_graphs<I, W>(graphs: I, out: W, opts: &ScanOptions) -> Result<ScanSummary, ScanError>
where
    I: IntoIterator<Item = Graph>,
    W: Write,
{
    let mut writer = ScanWriter::new(out, *opts).map_err(|e| abort(e, &ScanSummary::default()))?;
    let mut graphs = graphs.into_iter().enumerate();
    loop {
        let chunk: Vec<(usize, Graph)> = graphs.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            break;
        }
        let items: Vec<ScanItem> = chunk.par_iter().map(|(i, g)| check_graph(i + 1, g, opts)).collect();
        for item in &items {
            writer.write(item).map_err(|e| abort(e, writer.summary()))?;
        }
    }
    writer.finish().map_err(|e| ScanError { source: e, summary: ScanSummary::default() })
}
