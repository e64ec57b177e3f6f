use serde::Serialize;

use super::{bits, Graph};
use crate::{Error, Result};

/// A simple cycle of a host graph.
///
/// The vertex sequence is kept in canonical form: the lexicographically
/// smallest sequence among all rotations and both orientations. Two cycles
/// are equal iff they have the same edge set.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

impl Cycle {
    /// Validates `seq` as a cycle of `g` and canonicalizes it.
    pub fn new(g: &Graph, seq: &[usize]) -> Result<Self> {
        if seq.len() < 3 {
            return Err(Error::PreconditionViolated(format!(
                "cycle needs at least 3 vertices, got {}",
                seq.len()
            )));
        }
        let mut seen = 0u64;
        for &v in seq {
            if v >= g.n() {
                return Err(Error::InvalidVertex(v));
            }
            if seen >> v & 1 == 1 {
                return Err(Error::PreconditionViolated(format!("vertex {v} repeated in cycle")));
            }
            seen |= 1 << v;
        }
        let k = seq.len();
        let mut edges = Vec::with_capacity(k);
        for i in 0..k {
            let (u, v) = (seq[i], seq[(i + 1) % k]);
            edges.push(g.edge_id(u, v).ok_or(Error::InvalidEdge(u, v))?);
        }
        edges.sort_unstable();
        Ok(Cycle { vertices: canonical_sequence(seq), edges })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Edge ids, sorted.
    pub fn edges(&self) -> &[usize] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn vertex_mask(&self) -> u64 {
        self.vertices.iter().fold(0, |m, &v| m | 1 << v)
    }

    /// Edges in traversal order of the canonical sequence: edge `i` joins
    /// `vertices[i]` and `vertices[i + 1]` (cyclically).
    pub fn traversal_edges(&self, g: &Graph) -> Vec<usize> {
        let k = self.vertices.len();
        (0..k).map(|i| g.edge_id(self.vertices[i], self.vertices[(i + 1) % k]).expect("cycle edge")).collect()
    }
}

/// The lexicographically smallest rotation/reflection of a cyclic sequence.
pub(crate) fn canonical_sequence(seq: &[usize]) -> Vec<usize> {
    let k = seq.len();
    let mut best: Option<Vec<usize>> = None;
    for start in 0..k {
        for dir in [1, k - 1] {
            let cand: Vec<usize> = (0..k).map(|i| seq[(start + i * dir) % k]).collect();
            if best.as_ref().is_none_or(|b| cand < *b) {
                best = Some(cand);
            }
        }
    }
    best.unwrap()
}

pub fn enumerate_cycles(g: &Graph) -> Result<Vec<Cycle>> {
    enumerate_cycles_with_cap(g, crate::Limits::default().cycle_budget)
}

/// Every simple cycle exactly once, sorted by (length, vertex sequence).
///
/// Each cycle is found from its smallest vertex `s`, walking only through
/// vertices above `s`, and kept in the orientation whose second vertex is
/// smaller than its last.
pub fn enumerate_cycles_with_cap(g: &Graph, cap: usize) -> Result<Vec<Cycle>> {
    struct Walk<'a> {
        g: &'a Graph,
        start: usize,
        path: Vec<usize>,
        out: Vec<Cycle>,
        cap: usize,
    }
    impl Walk<'_> {
        fn extend(&mut self, v: usize, visited: u64) -> Result<()> {
            let above = !((1u64 << (self.start + 1)) - 1);
            if self.path.len() >= 3 && self.g.has_edge(v, self.start) && self.path[1] < v {
                if self.out.len() == self.cap {
                    return Err(Error::CycleBudgetExceeded(self.cap));
                }
                let edges = {
                    let k = self.path.len();
                    let mut e: Vec<usize> = (0..k)
                        .map(|i| self.g.edge_id(self.path[i], self.path[(i + 1) % k]).unwrap())
                        .collect();
                    e.sort_unstable();
                    e
                };
                self.out.push(Cycle { vertices: self.path.clone(), edges });
            }
            for w in bits(self.g.row(v) & above & !visited) {
                self.path.push(w);
                self.extend(w, visited | 1 << w)?;
                self.path.pop();
            }
            Ok(())
        }
    }

    let mut walk = Walk { g, start: 0, path: Vec::new(), out: Vec::new(), cap };
    for s in 0..g.n() {
        walk.start = s;
        walk.path.clear();
        walk.path.push(s);
        walk.extend(s, 1 << s)?;
    }
    let mut out = walk.out;
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(out)
}
