//! Turning a distinguishing vertex labeling of a connected graph with a cycle
//! into a distinguishing edge labeling over the same alphabet.
//!
//! The construction picks a cycle `C0` with the smallest orbit
//! `{C0, ..., Ck}` under `Aut(G)` and lets `H` be the union of the orbit.
//!
//! 1. The edges of `H` are labeled so that any automorphism carrying a member
//!    `Ci` onto a member `Cj` while matching edge labels along the way also
//!    matches the vertex labels of `Ci` with those of `Cj`.
//! 2. Every other edge `xy` takes the vertex label of its endpoint farther from
//!    `H`, or 1 when both endpoints are equally far.
//!
//! The local labeling of step 1 is found by search (the naive transfer
//! `L(v_j v_{j+1}) = φ(v_j)` is tried first). The result is always re-checked
//! against the whole automorphism group; if step 1 has no solution or the
//! assembled labeling fails the check, a global search over edge labelings
//! with the same alphabet takes over and the certificate says so.

use std::collections::HashSet;

use serde::Serialize;

use crate::graph::{
    bits, enumerate_cycles_with_cap, has_cycle, is_connected, multi_source_distances, Cycle, Graph,
};
use crate::group::{
    automorphisms_with, cycle_orbits, smallest_orbit_cycle, AutomorphismGroup, CycleOrbit, Permutation,
};
use crate::labeling::{
    find_distinguishing_edge_labeling, is_distinguishing_edge, is_distinguishing_vertex, Budget,
    EdgeLabeling, VertexLabeling,
};
use crate::{Error, Limits, Result};

/// Labels on a subset of the edges of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialEdgeLabeling {
    labels: Vec<Option<u32>>,
}

impl PartialEdgeLabeling {
    pub fn empty(m: usize) -> Self {
        PartialEdgeLabeling { labels: vec![None; m] }
    }

    pub fn from_pairs(m: usize, pairs: impl IntoIterator<Item = (usize, u32)>) -> Self {
        let mut out = Self::empty(m);
        for (e, l) in pairs {
            out.labels[e] = Some(l);
        }
        out
    }

    pub fn get(&self, e: usize) -> Option<u32> {
        self.labels[e]
    }

    pub fn set(&mut self, e: usize, label: u32) {
        self.labels[e] = Some(label);
    }

    /// `(edge id, label)` for every labeled edge, by edge id.
    pub fn pairs(&self) -> Vec<(usize, u32)> {
        self.labels.iter().enumerate().filter_map(|(e, l)| l.map(|l| (e, l))).collect()
    }
}

impl Serialize for PartialEdgeLabeling {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.pairs().serialize(s)
    }
}

/// An automorphism that carries `source` onto `target` matching every edge
/// label of `source`, yet changes some vertex label on `source`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalViolation {
    pub element: Permutation,
    pub source: Cycle,
    pub target: Cycle,
}

impl LocalViolation {
    /// True for the same-cycle case (`Ci` onto itself), false for `Ci` onto
    /// a different `Cj`.
    pub fn is_setwise_stabilizing(&self) -> bool {
        self.source == self.target
    }
}

/// Checks the local conditions by direct quantification over every group
/// element and every orbit member. Unlabeled edges never match.
pub fn check_local_conditions(
    g: &Graph,
    grp: &AutomorphismGroup,
    orbit: &CycleOrbit,
    phi: &VertexLabeling,
    labels: &PartialEdgeLabeling,
) -> std::result::Result<(), LocalViolation> {
    for f in grp.elements() {
        for ci in orbit.members() {
            let matches = ci.edges().iter().all(|&e| {
                let here = labels.get(e);
                here.is_some() && here == labels.get(f.edge_image(g, e))
            });
            if !matches {
                continue;
            }
            if ci.vertices().iter().any(|&v| phi.get(f.apply(v)) != phi.get(v)) {
                return Err(LocalViolation {
                    element: f.clone(),
                    source: ci.clone(),
                    target: crate::group::apply_to_cycle(g, f, ci),
                });
            }
        }
    }
    Ok(())
}

/// `L(v_j v_{j+1}) = φ(v_j)` along each member's canonical orientation;
/// an edge shared by several members keeps the label of the first.
pub fn naive_transfer(g: &Graph, orbit: &CycleOrbit, phi: &VertexLabeling) -> PartialEdgeLabeling {
    let mut out = PartialEdgeLabeling::empty(g.m());
    for c in orbit.members() {
        for (j, e) in c.traversal_edges(g).into_iter().enumerate() {
            if out.get(e).is_none() {
                out.set(e, phi.get(c.vertices()[j]));
            }
        }
    }
    out
}

/// Result of the local search on the edges of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalLabeling {
    pub labels: PartialEdgeLabeling,
    /// The naive transfer already satisfied the conditions.
    pub seeded: bool,
}

/// Labels the edges of the orbit union `H` with `φ`'s alphabet so that the
/// local conditions hold.
///
/// Returns the naive transfer when it works, otherwise the lexicographically
/// first solution by edge id. Fails with `Step1Infeasible` when none exists
/// and `SearchBudgetExceeded` after `limits.step1_budget` search nodes.
pub fn step1_orbit_cycle_labeling(
    g: &Graph,
    grp: &AutomorphismGroup,
    orbit: &CycleOrbit,
    phi: &VertexLabeling,
    limits: &Limits,
) -> Result<LocalLabeling> {
    let naive = naive_transfer(g, orbit, phi);
    if check_local_conditions(g, grp, orbit, phi, &naive).is_ok() {
        return Ok(LocalLabeling { labels: naive, seeded: true });
    }

    let h_edges = orbit.edge_union();
    let mut pos = vec![usize::MAX; g.m()];
    for (i, &e) in h_edges.iter().enumerate() {
        pos[e] = i;
    }
    // Each constraint lists position pairs of which at least one must differ.
    let mut constraints: HashSet<Vec<(usize, usize)>> = HashSet::new();
    for f in grp.non_identity() {
        for ci in orbit.members() {
            if ci.vertices().iter().all(|&v| phi.get(f.apply(v)) == phi.get(v)) {
                continue;
            }
            let mut pairs: Vec<(usize, usize)> = ci
                .edges()
                .iter()
                .map(|&e| (pos[e], pos[f.edge_image(g, e)]))
                .filter(|(a, b)| a != b)
                .map(|(a, b)| (a.min(b), a.max(b)))
                .collect();
            if pairs.is_empty() {
                return Err(Error::Step1Infeasible);
            }
            pairs.sort_unstable();
            pairs.dedup();
            constraints.insert(pairs);
        }
    }
    let mut due: Vec<Vec<Vec<(usize, usize)>>> = vec![Vec::new(); h_edges.len()];
    for c in constraints {
        let last = c.iter().map(|&(_, b)| b).max().unwrap();
        due[last].push(c);
    }
    for list in &mut due {
        list.sort();
    }

    struct Search<'a> {
        due: &'a [Vec<Vec<(usize, usize)>>],
        labels: Vec<u32>,
        alphabet: u32,
        work: u64,
        cap: u64,
    }
    impl Search<'_> {
        fn go(&mut self, at: usize, max_used: u32) -> Result<bool> {
            if at == self.labels.len() {
                return Ok(true);
            }
            for l in 1..=(max_used + 1).min(self.alphabet) {
                self.work += 1 + self.due[at].len() as u64;
                if self.work > self.cap {
                    return Err(Error::SearchBudgetExceeded(self.cap));
                }
                self.labels[at] = l;
                let labels = &self.labels;
                let ok = self.due[at].iter().all(|c| c.iter().any(|&(a, b)| labels[a] != labels[b]));
                if ok && self.go(at + 1, max_used.max(l))? {
                    return Ok(true);
                }
            }
            Ok(false)
        }
    }
    let mut search = Search {
        due: &due,
        labels: vec![1; h_edges.len()],
        alphabet: phi.alphabet(),
        work: 0,
        cap: limits.step1_budget,
    };
    if !search.go(0, 0)? {
        return Err(Error::Step1Infeasible);
    }
    let labels = PartialEdgeLabeling::from_pairs(g.m(), h_edges.iter().copied().zip(search.labels));
    debug_assert!(check_local_conditions(g, grp, orbit, phi, &labels).is_ok());
    Ok(LocalLabeling { labels, seeded: false })
}

/// Completes a labeling of `E(H)` to all of `E(G)` by distance to `H`.
pub fn step2_distance_extension(
    g: &Graph,
    phi: &VertexLabeling,
    h_vertices: &[usize],
    partial: &PartialEdgeLabeling,
) -> Result<EdgeLabeling> {
    let dist = multi_source_distances(g, h_vertices)?;
    let far =
        |v: usize| dist.get(v).ok_or_else(|| Error::PreconditionViolated("graph is not connected".into()));
    let mut labels = Vec::with_capacity(g.m());
    for (e, &(x, y)) in g.edges().iter().enumerate() {
        let l = match partial.get(e) {
            Some(l) => l,
            None => match far(x)?.cmp(&far(y)?) {
                std::cmp::Ordering::Greater => phi.get(x),
                std::cmp::Ordering::Less => phi.get(y),
                std::cmp::Ordering::Equal => 1,
            },
        };
        labels.push(l);
    }
    EdgeLabeling::new(labels, phi.alphabet())
}

/// Audit trail of one run of [`construct_edge_labeling`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TransferCertificate {
    pub chosen_cycle: Cycle,
    pub orbit: CycleOrbit,
    pub h_vertices: Vec<usize>,
    pub h_edges: Vec<usize>,
    /// The local labeling of `E(H)`, absent when the local search failed.
    pub step1_labels: Option<PartialEdgeLabeling>,
    pub step1_seeded: bool,
    pub final_labeling: EdgeLabeling,
    pub labels_used: u32,
    pub verified: bool,
    pub fallback_used: bool,
    pub fallback_reason: Option<String>,
}

impl TransferCertificate {
    pub fn orbit_size(&self) -> usize {
        self.orbit.len()
    }
}

pub fn construct_edge_labeling(g: &Graph, phi: &VertexLabeling) -> Result<TransferCertificate> {
    construct_edge_labeling_with(g, phi, &Limits::default())
}

/// Runs the two-step construction for a connected graph with a cycle and a
/// distinguishing vertex labeling `phi`; the returned labeling uses at most
/// `phi.alphabet()` labels and has been checked against the full group.
pub fn construct_edge_labeling_with(
    g: &Graph,
    phi: &VertexLabeling,
    limits: &Limits,
) -> Result<TransferCertificate> {
    if !is_connected(g) {
        return Err(Error::PreconditionViolated("graph is not connected".into()));
    }
    if !has_cycle(g) {
        return Err(Error::PreconditionViolated("graph has no cycle".into()));
    }
    if phi.len() != g.n() {
        return Err(Error::PreconditionViolated("labeling does not cover the vertex set".into()));
    }
    let grp = automorphisms_with(g, None, limits)?;
    if !is_distinguishing_vertex(&grp, phi) {
        return Err(Error::PreconditionViolated("vertex labeling is not distinguishing".into()));
    }

    let cycles = enumerate_cycles_with_cap(g, limits.cycle_budget)?;
    let (chosen_cycle, orbit) = smallest_orbit_cycle(g, &grp, &cycles)?;
    let h_vertices: Vec<usize> = bits(orbit.vertex_mask()).collect();
    let h_edges = orbit.edge_union();

    let step1 = step1_orbit_cycle_labeling(g, &grp, &orbit, phi, limits);
    let (step1_labels, step1_seeded, reason) = match step1 {
        Ok(local) => {
            let labeling = step2_distance_extension(g, phi, &h_vertices, &local.labels)?;
            if is_distinguishing_edge(g, &grp, &labeling) {
                return Ok(TransferCertificate {
                    chosen_cycle,
                    orbit,
                    h_vertices,
                    h_edges,
                    labels_used: labeling.labels_used(),
                    final_labeling: labeling,
                    step1_labels: Some(local.labels),
                    step1_seeded: local.seeded,
                    verified: true,
                    fallback_used: false,
                    fallback_reason: None,
                });
            }
            (Some(local.labels), local.seeded, "assembled labeling is not distinguishing".to_string())
        }
        Err(Error::Step1Infeasible) => (None, false, "local conditions unsatisfiable".to_string()),
        Err(Error::SearchBudgetExceeded(cap)) => (None, false, format!("local search exceeded {cap} nodes")),
        Err(e) => return Err(e),
    };

    let mut budget = Budget::new(limits.search_budget);
    for d in 1..=phi.alphabet() {
        if let Some(labeling) = find_distinguishing_edge_labeling(g, &grp, d, &mut budget)? {
            return Ok(TransferCertificate {
                chosen_cycle,
                orbit,
                h_vertices,
                h_edges,
                labels_used: labeling.labels_used(),
                final_labeling: labeling,
                step1_labels,
                step1_seeded,
                verified: true,
                fallback_used: true,
                fallback_reason: Some(reason),
            });
        }
    }
    Err(Error::ConstructionFailed(format!(
        "{reason}; no distinguishing edge labeling with {} labels",
        phi.alphabet()
    )))
}

/// How the construction fares when `H` is built from a given cycle orbit
/// instead of the smallest one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitChoice {
    pub cycle_length: usize,
    pub orbit_size: usize,
    pub smallest: bool,
    pub step1_feasible: bool,
    /// Step 1 stopped at the work cap, so infeasibility is unproven.
    pub budget_exhausted: bool,
    /// Step 1 succeeded and the assembled labeling distinguishes.
    pub verified: bool,
}

/// Runs steps 1 and 2 for every cycle orbit of `g`.
pub fn survey_orbit_choices(
    g: &Graph,
    grp: &AutomorphismGroup,
    phi: &VertexLabeling,
    limits: &Limits,
) -> Result<Vec<OrbitChoice>> {
    let cycles = enumerate_cycles_with_cap(g, limits.cycle_budget)?;
    let orbits = cycle_orbits(g, grp, &cycles);
    let min_size = orbits.first().map_or(0, CycleOrbit::len);
    let mut out = Vec::with_capacity(orbits.len());
    for orbit in &orbits {
        let h_vertices: Vec<usize> = bits(orbit.vertex_mask()).collect();
        let (step1_feasible, budget_exhausted, verified) =
            match step1_orbit_cycle_labeling(g, grp, orbit, phi, limits) {
                Ok(local) => {
                    let l = step2_distance_extension(g, phi, &h_vertices, &local.labels)?;
                    (true, false, is_distinguishing_edge(g, grp, &l))
                }
                Err(Error::Step1Infeasible) => (false, false, false),
                Err(Error::SearchBudgetExceeded(_)) => (false, true, false),
                Err(e) => return Err(e),
            };
        out.push(OrbitChoice {
            cycle_length: orbit.representative().len(),
            orbit_size: orbit.len(),
            smallest: orbit.len() == min_size,
            step1_feasible,
            budget_exhausted,
            verified,
        });
    }
    Ok(out)
}
