//! Per-graph analysis records and corpus summaries.

use serde::{Serialize, Serializer};

use crate::graph::{encode_graph6, has_cycle, is_connected, is_tree, Graph};
use crate::group::automorphisms_with;
use crate::labeling::{distinguishing_index_with, distinguishing_number_with, EdgeLabeling, VertexLabeling};
use crate::transfer::{construct_edge_labeling_with, survey_orbit_choices, OrbitChoice, TransferCertificate};
use crate::tree_family::family_t_membership_with;
use crate::{Error, Limits};

#[derive(Debug, Clone, Default)]
pub struct AnalysisOptions {
    pub limits: Limits,
    /// Attach witnesses and the full transfer certificate.
    pub emit_certificates: bool,
    /// Also run the transfer with every cycle orbit, not just the smallest.
    pub survey_orbits: bool,
}

/// A distinguishing index, which does not exist for graphs where some
/// nontrivial automorphism fixes every edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IndexValue {
    Value(u32),
    NotDefined,
}

impl IndexValue {
    pub fn value(self) -> Option<u32> {
        match self {
            IndexValue::Value(v) => Some(v),
            IndexValue::NotDefined => None,
        }
    }
}

impl std::fmt::Display for IndexValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            IndexValue::Value(v) => write!(f, "{v}"),
            IndexValue::NotDefined => f.write_str("NotDefined"),
        }
    }
}

impl Serialize for IndexValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            IndexValue::Value(v) => s.serialize_u32(*v),
            IndexValue::NotDefined => s.serialize_str("NotDefined"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Skipped,
    Error,
}

/// Witnesses behind a record, emitted on request.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witnesses {
    pub vertex_labeling: Option<VertexLabeling>,
    pub edge_labeling: Option<EdgeLabeling>,
    pub transfer: Option<TransferCertificate>,
}

/// Everything computed for one graph.
///
/// The `verdict_*` fields are derived from the numeric fields by
/// [`AnalysisRecord::recompute_verdicts`]; `None` means the verdict does not
/// apply to this graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisRecord {
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub status: Status,
    pub detail: Option<String>,
    pub aut_order: Option<usize>,
    #[serde(rename = "D")]
    pub d: Option<u32>,
    #[serde(rename = "D_prime")]
    pub d_prime: Option<IndexValue>,
    pub is_tree: bool,
    pub is_cyclic: bool,
    #[serde(rename = "in_family_T")]
    pub in_family_t: Option<bool>,
    pub predicted_index: Option<u32>,
    pub orbit_size: Option<usize>,
    pub labels_used: Option<u32>,
    pub step1_feasible: Option<bool>,
    pub fallback_used: Option<bool>,
    pub certificate_verified: Option<bool>,
    pub verdict_inequality: Option<bool>,
    pub verdict_main_theorem: Option<bool>,
    pub verdict_tree_theorem: Option<bool>,
    pub verdict_corollary: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit_survey: Option<Vec<OrbitChoice>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<Witnesses>,
}

impl AnalysisRecord {
    fn blank(graph6: String, n: usize, m: usize) -> Self {
        AnalysisRecord {
            graph6,
            n,
            m,
            status: Status::Ok,
            detail: None,
            aut_order: None,
            d: None,
            d_prime: None,
            is_tree: false,
            is_cyclic: false,
            in_family_t: None,
            predicted_index: None,
            orbit_size: None,
            labels_used: None,
            step1_feasible: None,
            fallback_used: None,
            certificate_verified: None,
            verdict_inequality: None,
            verdict_main_theorem: None,
            verdict_tree_theorem: None,
            verdict_corollary: None,
            orbit_survey: None,
            witnesses: None,
        }
    }

    /// A record for an input line that could not be parsed.
    pub fn unparsable(line: usize, text: &str, err: &Error) -> Self {
        let mut r = Self::blank(text.to_string(), 0, 0);
        r.status = Status::Error;
        r.detail = Some(format!("line {line}: {err}"));
        r
    }

    /// Fills in the verdicts from the numeric fields.
    pub fn recompute_verdicts(&mut self) {
        let (d, dp) = (self.d, self.d_prime.and_then(IndexValue::value));
        let order3 = self.n >= 3;
        self.verdict_inequality = match (d, dp) {
            (Some(d), Some(dp)) if order3 => Some(dp <= d + 1),
            _ => None,
        };
        self.verdict_main_theorem = match (d, dp) {
            (Some(d), Some(dp)) if self.is_cyclic => Some(
                dp <= d
                    && self.certificate_verified == Some(true)
                    && self.labels_used.is_some_and(|l| l <= d),
            ),
            _ => None,
        };
        self.verdict_tree_theorem = match (dp, self.predicted_index) {
            (Some(dp), Some(p)) if self.is_tree && order3 => Some(dp == p),
            _ => None,
        };
        self.verdict_corollary = match (d, dp) {
            (Some(d), Some(dp)) if order3 => {
                let in_family = self.is_tree && self.in_family_t == Some(true);
                Some((dp == d + 1) == in_family)
            }
            _ => None,
        };
    }

    fn verdicts(&self) -> [(&'static str, Option<bool>); 4] {
        [
            ("verdict_inequality", self.verdict_inequality),
            ("verdict_main_theorem", self.verdict_main_theorem),
            ("verdict_tree_theorem", self.verdict_tree_theorem),
            ("verdict_corollary", self.verdict_corollary),
        ]
    }

    /// Names of the verdicts that fail.
    pub fn failed_verdicts(&self) -> Vec<&'static str> {
        self.verdicts().into_iter().filter(|(_, v)| *v == Some(false)).map(|(k, _)| k).collect()
    }

    /// No failed verdict and no error.
    pub fn passes(&self) -> bool {
        self.status != Status::Error && self.failed_verdicts().is_empty()
    }
}

/// Computes one record. Budget and other per-graph errors end up in the
/// record, never in a panic.
pub fn analyze_graph(g: &Graph, opts: &AnalysisOptions) -> AnalysisRecord {
    let g6 = encode_graph6(g).unwrap_or_default();
    let mut r = AnalysisRecord::blank(g6, g.n(), g.m());
    if !is_connected(g) {
        r.status = Status::Skipped;
        r.detail = Some("disconnected".into());
        return r;
    }
    if let Err(e) = fill(g, opts, &mut r) {
        r.status = Status::Error;
        r.detail = Some(e.to_string());
    }
    r.recompute_verdicts();
    r
}

fn fill(g: &Graph, opts: &AnalysisOptions, r: &mut AnalysisRecord) -> crate::Result<()> {
    let limits = &opts.limits;
    r.is_tree = is_tree(g);
    r.is_cyclic = has_cycle(g);
    let grp = automorphisms_with(g, None, limits)?;
    r.aut_order = Some(grp.order());
    let dn = distinguishing_number_with(&grp, limits)?;
    r.d = Some(dn.value);
    let mut witnesses =
        Witnesses { vertex_labeling: Some(dn.witness.clone()), edge_labeling: None, transfer: None };
    match distinguishing_index_with(g, &grp, limits) {
        Ok(di) => {
            r.d_prime = Some(IndexValue::Value(di.value));
            witnesses.edge_labeling = Some(di.witness);
        }
        Err(Error::NotDefined) => r.d_prime = Some(IndexValue::NotDefined),
        Err(e) => return Err(e),
    }
    if r.is_tree && g.n() >= 3 {
        let report = family_t_membership_with(g, limits)?;
        r.in_family_t = Some(report.in_family);
        r.predicted_index = Some(report.predicted_index);
    }
    if r.is_cyclic {
        let cert = construct_edge_labeling_with(g, &dn.witness, limits)?;
        r.orbit_size = Some(cert.orbit_size());
        r.labels_used = Some(cert.labels_used);
        r.step1_feasible = Some(cert.step1_labels.is_some());
        r.fallback_used = Some(cert.fallback_used);
        r.certificate_verified = Some(cert.verified);
        if opts.survey_orbits {
            r.orbit_survey = Some(survey_orbit_choices(g, &grp, &dn.witness, limits)?);
        }
        witnesses.transfer = Some(cert);
    }
    if opts.emit_certificates {
        r.witnesses = Some(witnesses);
    }
    Ok(())
}

/// Totals over a corpus run.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct CorpusSummary {
    pub records: usize,
    pub analyzed: usize,
    pub skipped: usize,
    pub errors: usize,
    pub trees: usize,
    pub cyclic: usize,
    #[serde(rename = "in_family_T")]
    pub in_family_t: usize,
    pub violations: usize,
    pub step1_infeasible: usize,
    pub fallback_used: usize,
    /// `graph6: reason` for every failing record.
    pub failures: Vec<String>,
}

impl CorpusSummary {
    pub fn add(&mut self, r: &AnalysisRecord) {
        self.records += 1;
        match r.status {
            Status::Ok => self.analyzed += 1,
            Status::Skipped => self.skipped += 1,
            Status::Error => {
                self.errors += 1;
                let detail = r.detail.as_deref().unwrap_or("error");
                self.failures.push(format!("{}: {detail}", r.graph6));
            }
        }
        self.trees += usize::from(r.is_tree);
        self.cyclic += usize::from(r.is_cyclic);
        self.in_family_t += usize::from(r.in_family_t == Some(true));
        self.step1_infeasible += usize::from(r.step1_feasible == Some(false));
        self.fallback_used += usize::from(r.fallback_used == Some(true));
        let failed = r.failed_verdicts();
        if !failed.is_empty() {
            self.violations += 1;
            self.failures.push(format!("{}: {}", r.graph6, failed.join(",")));
        }
    }

    pub fn is_clean(&self) -> bool {
        self.errors == 0 && self.violations == 0
    }
}
