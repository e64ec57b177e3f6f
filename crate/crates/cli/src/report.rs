//! TSV and JSON-lines rendering of analysis records.

use std::fmt::Display;
use std::io::{self, Write};

use serde::Serialize;
use symbreak_core::analysis::{AnalysisRecord, CorpusSummary, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

const COLUMNS: [&str; 21] = [
    "graph6",
    "n",
    "m",
    "status",
    "aut_order",
    "D",
    "D_prime",
    "is_tree",
    "is_cyclic",
    "in_family_T",
    "predicted_index",
    "orbit_size",
    "labels_used",
    "step1_feasible",
    "fallback_used",
    "certificate_verified",
    "verdict_inequality",
    "verdict_main_theorem",
    "verdict_tree_theorem",
    "verdict_corollary",
    "detail",
];

const WITNESS_COLUMNS: [&str; 2] = ["vertex_labeling", "edge_labeling"];

#[derive(Serialize)]
struct SummaryLine<'a> {
    summary: &'a CorpusSummary,
}

pub struct Reporter<W: Write> {
    out: W,
    format: Format,
    witnesses: bool,
}

fn cell<T: Display>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

fn joined(labels: Option<&[u32]>) -> String {
    match labels {
        Some(l) if !l.is_empty() => l.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
        _ => "-".to_string(),
    }
}

fn status(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Skipped => "skipped",
        Status::Error => "error",
    }
}

impl<W: Write> Reporter<W> {
    pub fn new(out: W, format: Format, witnesses: bool) -> Self {
        Reporter { out, format, witnesses }
    }

    pub fn header(&mut self) -> io::Result<()> {
        if self.format == Format::Tsv {
            let mut cols: Vec<&str> = COLUMNS.to_vec();
            if self.witnesses {
                cols.extend(WITNESS_COLUMNS);
            }
            writeln!(self.out, "{}", cols.join("\t"))?;
        }
        Ok(())
    }

    pub fn record(&mut self, r: &AnalysisRecord) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, r)?;
                writeln!(self.out)
            }
            Format::Tsv => {
                let detail = r.detail.as_deref().map(|d| d.replace(['\t', '\n', '\r'], " "));
                let mut row = vec![
                    r.graph6.clone(),
                    r.n.to_string(),
                    r.m.to_string(),
                    status(r.status).to_string(),
                    cell(r.aut_order),
                    cell(r.d),
                    cell(r.d_prime),
                    r.is_tree.to_string(),
                    r.is_cyclic.to_string(),
                    cell(r.in_family_t),
                    cell(r.predicted_index),
                    cell(r.orbit_size),
                    cell(r.labels_used),
                    cell(r.step1_feasible),
                    cell(r.fallback_used),
                    cell(r.certificate_verified),
                    cell(r.verdict_inequality),
                    cell(r.verdict_main_theorem),
                    cell(r.verdict_tree_theorem),
                    cell(r.verdict_corollary),
                    cell(detail),
                ];
                if self.witnesses {
                    let w = r.witnesses.as_ref();
                    row.push(joined(w.and_then(|w| w.vertex_labeling.as_ref()).map(|l| l.labels())));
                    row.push(joined(w.and_then(|w| w.edge_labeling.as_ref()).map(|l| l.labels())));
                }
                writeln!(self.out, "{}", row.join("\t"))
            }
        }
    }

    /// JSON output ends with a summary line; TSV keeps stdout a pure table and
    /// writes the summary to `err` as `key<TAB>value` lines.
    pub fn summary(&mut self, s: &CorpusSummary, err: &mut impl Write) -> io::Result<()> {
        match self.format {
            Format::Json => {
                serde_json::to_writer(&mut self.out, &SummaryLine { summary: s })?;
                writeln!(self.out)
            }
            Format::Tsv => {
                let rows = [
                    ("records", s.records),
                    ("analyzed", s.analyzed),
                    ("skipped", s.skipped),
                    ("errors", s.errors),
                    ("trees", s.trees),
                    ("cyclic", s.cyclic),
                    ("in_family_T", s.in_family_t),
                    ("violations", s.violations),
                    ("step1_infeasible", s.step1_infeasible),
                    ("fallback_used", s.fallback_used),
                ];
                for (k, v) in rows {
                    writeln!(err, "{k}\t{v}")?;
                }
                for f in &s.failures {
                    writeln!(err, "failure\t{f}")?;
                }
                Ok(())
            }
        }
    }

    pub fn flush(&mut self) -> io::Result<()> {
        self.out.flush()
    }
}
