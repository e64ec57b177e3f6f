//! Vertex and edge labelings, the distinguishing predicates, and exact
//! searches for the distinguishing number and index.

use serde::Serialize;

use crate::graph::Graph;
use crate::group::{automorphisms_with, AutomorphismGroup, Permutation};
use crate::{Error, Limits, Result};

macro_rules! labeling_type {
    ($(#[$doc:meta])* $name:ident, $what:literal) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
        pub struct $name {
            labels: Vec<u32>,
            alphabet: u32,
        }

        impl $name {
            /// Labels are `1..=alphabet`, one per
            #[doc = $what]
            pub fn new(labels: Vec<u32>, alphabet: u32) -> Result<Self> {
                if alphabet == 0 {
                    return Err(Error::InvalidLabeling("alphabet must be nonempty".into()));
                }
                if let Some(bad) = labels.iter().find(|&&l| l == 0 || l > alphabet) {
                    return Err(Error::InvalidLabeling(format!("label {bad} outside 1..={alphabet}")));
                }
                Ok($name { labels, alphabet })
            }

            /// Every label is 1.
            pub fn constant(len: usize) -> Self {
                $name { labels: vec![1; len], alphabet: 1 }
            }

            pub fn labels(&self) -> &[u32] {
                &self.labels
            }

            #[inline]
            pub fn get(&self, i: usize) -> u32 {
                self.labels[i]
            }

            pub fn alphabet(&self) -> u32 {
                self.alphabet
            }

            pub fn len(&self) -> usize {
                self.labels.len()
            }

            pub fn is_empty(&self) -> bool {
                self.labels.is_empty()
            }

            /// Number of distinct labels actually used.
            pub fn labels_used(&self) -> u32 {
                let mut seen: Vec<u32> = self.labels.clone();
                seen.sort_unstable();
                seen.dedup();
                seen.len() as u32
            }

            /// Renames every label `l` to `rename[l - 1]`.
            pub fn renamed(&self, rename: &[u32]) -> Result<Self> {
                let alphabet = rename.iter().copied().max().unwrap_or(1);
                Self::new(self.labels.iter().map(|&l| rename[l as usize - 1]).collect(), alphabet)
            }
        }
    };
}

labeling_type!(
    /// A map from vertices to `1..=alphabet`.
    VertexLabeling,
    "vertex."
);
labeling_type!(
    /// A map from edge ids to `1..=alphabet`.
    EdgeLabeling,
    "edge id."
);

pub fn preserves_vertex_labeling(p: &Permutation, phi: &VertexLabeling) -> bool {
    (0..phi.len()).all(|v| phi.get(v) == phi.get(p.apply(v)))
}

pub fn preserves_edge_labeling(g: &Graph, p: &Permutation, l: &EdgeLabeling) -> bool {
    (0..g.m()).all(|e| l.get(e) == l.get(p.edge_image(g, e)))
}

/// True iff no non-identity element of `grp` preserves `phi`.
pub fn is_distinguishing_vertex(grp: &AutomorphismGroup, phi: &VertexLabeling) -> bool {
    grp.non_identity().all(|p| !preserves_vertex_labeling(p, phi))
}

/// True iff no non-identity element of `grp` preserves `l`.
pub fn is_distinguishing_edge(g: &Graph, grp: &AutomorphismGroup, l: &EdgeLabeling) -> bool {
    grp.non_identity().all(|p| !preserves_edge_labeling(g, p, l))
}

/// False when some non-identity automorphism fixes every edge, in which case
/// no edge labeling is distinguishing.
pub fn edge_labeling_possible(g: &Graph, grp: &AutomorphismGroup) -> bool {
    grp.non_identity().all(|p| (0..g.m()).any(|e| p.edge_image(g, e) != e))
}

/// An optimal value together with a labeling that attains it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Distinguishing<L> {
    pub value: u32,
    pub witness: L,
    /// Complete labelings examined across all alphabet sizes.
    pub examined: u64,
}

/// The distinguishing number `D(G)` and a witness labeling.
pub fn distinguishing_number(g: &Graph) -> Result<Distinguishing<VertexLabeling>> {
    let limits = Limits::default();
    let grp = automorphisms_with(g, None, &limits)?;
    distinguishing_number_with(&grp, &limits)
}

/// The distinguishing index `D'(G)` and a witness labeling.
pub fn distinguishing_index(g: &Graph) -> Result<Distinguishing<EdgeLabeling>> {
    let limits = Limits::default();
    let grp = automorphisms_with(g, None, &limits)?;
    distinguishing_index_with(g, &grp, &limits)
}

pub fn distinguishing_number_with(
    grp: &AutomorphismGroup,
    limits: &Limits,
) -> Result<Distinguishing<VertexLabeling>> {
    let n = grp.degree();
    let mut budget = Budget::new(limits.search_budget);
    for d in 1..=n as u32 {
        if let Some(phi) = find_distinguishing_vertex_labeling(grp, d, &mut budget)? {
            return Ok(Distinguishing { value: d, witness: phi, examined: budget.used });
        }
    }
    unreachable!("all-distinct labels always distinguish")
}

pub fn distinguishing_index_with(
    g: &Graph,
    grp: &AutomorphismGroup,
    limits: &Limits,
) -> Result<Distinguishing<EdgeLabeling>> {
    if !edge_labeling_possible(g, grp) {
        return Err(Error::NotDefined);
    }
    let table = EdgeActionTable::new(g, grp);
    let mut budget = Budget::new(limits.search_budget);
    for d in 1..=g.m().max(1) as u32 {
        if let Some(l) = table.find(d, &mut budget)? {
            return Ok(Distinguishing { value: d, witness: l, examined: budget.used });
        }
    }
    unreachable!("all-distinct labels distinguish once no automorphism fixes every edge")
}

/// Counts complete labelings examined against a cap.
#[derive(Debug, Clone, Copy)]
pub struct Budget {
    cap: u64,
    used: u64,
}

impl Budget {
    pub fn new(cap: u64) -> Self {
        Budget { cap, used: 0 }
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    fn spend(&mut self) -> Result<()> {
        if self.used == self.cap {
            return Err(Error::SearchBudgetExceeded(self.cap));
        }
        self.used += 1;
        Ok(())
    }
}

/// The lexicographically first distinguishing vertex labeling with labels
/// `1..=d`, if any.
pub fn find_distinguishing_vertex_labeling(
    grp: &AutomorphismGroup,
    d: u32,
    budget: &mut Budget,
) -> Result<Option<VertexLabeling>> {
    let labels = first_use_search(grp.degree(), d, budget, |labels| {
        grp.non_identity().all(|p| labels.iter().enumerate().any(|(v, &l)| labels[p.apply(v)] != l))
    })?;
    Ok(labels.map(|labels| VertexLabeling { labels, alphabet: d }))
}

/// The lexicographically first distinguishing edge labeling with labels
/// `1..=d`, if any.
pub fn find_distinguishing_edge_labeling(
    g: &Graph,
    grp: &AutomorphismGroup,
    d: u32,
    budget: &mut Budget,
) -> Result<Option<EdgeLabeling>> {
    EdgeActionTable::new(g, grp).find(d, budget)
}

/// The action of each non-identity automorphism on edge ids, in support
/// order.
struct EdgeActionTable {
    m: usize,
    images: Vec<Vec<u32>>,
}

impl EdgeActionTable {
    fn new(g: &Graph, grp: &AutomorphismGroup) -> Self {
        let images =
            grp.non_identity().map(|p| (0..g.m()).map(|e| p.edge_image(g, e) as u32).collect()).collect();
        EdgeActionTable { m: g.m(), images }
    }

    fn find(&self, d: u32, budget: &mut Budget) -> Result<Option<EdgeLabeling>> {
        let labels = first_use_search(self.m, d, budget, |labels| {
            self.images.iter().all(|img| img.iter().zip(labels).any(|(&e, &l)| labels[e as usize] != l))
        })?;
        Ok(labels.map(|labels| EdgeLabeling { labels, alphabet: d }))
    }
}

/// Walks sequences over `1..=d` in lexicographic order, restricted to
/// first-use form (position 0 gets 1, and label `k + 1` appears only after
/// label `k`), returning the first one `accept` takes. Every other sequence
/// is a renaming of one of these.
fn first_use_search(
    len: usize,
    d: u32,
    budget: &mut Budget,
    mut accept: impl FnMut(&[u32]) -> bool,
) -> Result<Option<Vec<u32>>> {
    fn go(
        pos: usize,
        max_used: u32,
        d: u32,
        labels: &mut Vec<u32>,
        budget: &mut Budget,
        accept: &mut dyn FnMut(&[u32]) -> bool,
    ) -> Result<bool> {
        if pos == labels.len() {
            budget.spend()?;
            return Ok(accept(labels));
        }
        for l in 1..=(max_used + 1).min(d) {
            labels[pos] = l;
            if go(pos + 1, max_used.max(l), d, labels, budget, accept)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
    let mut labels = vec![1; len];
    Ok(go(0, 0, d, &mut labels, budget, &mut accept)?.then_some(labels))
}
