use std::collections::VecDeque;

use super::{bits, Graph};
use crate::{Error, Result};

/// Hop distances from the nearest vertex of a source set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceField {
    dist: Vec<Option<usize>>,
}

impl DistanceField {
    /// `None` for vertices unreachable from every source.
    pub fn get(&self, v: usize) -> Option<usize> {
        self.dist[v]
    }

    pub fn as_slice(&self) -> &[Option<usize>] {
        &self.dist
    }
}

pub fn is_connected(g: &Graph) -> bool {
    component_count(g) == 1
}

pub(crate) fn component_count(g: &Graph) -> usize {
    let all = full_mask(g.n());
    let mut seen = 0u64;
    let mut count = 0;
    while seen != all {
        let start = (!seen & all).trailing_zeros() as usize;
        seen |= reach(g, 1 << start);
        count += 1;
    }
    count
}

/// Vertices reachable from `from` (a bitset).
pub(crate) fn reach(g: &Graph, from: u64) -> u64 {
    let mut seen = from;
    let mut frontier = from;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= g.row(v);
        }
        frontier = next & !seen;
        seen |= frontier;
    }
    seen
}

pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// True iff the graph contains a simple cycle. A graph is a forest exactly
/// when `m = n - components`.
pub fn has_cycle(g: &Graph) -> bool {
    g.m() + component_count(g) > g.n()
}

pub fn multi_source_distances(g: &Graph, sources: &[usize]) -> Result<DistanceField> {
    if sources.is_empty() {
        return Err(Error::EmptySourceSet);
    }
    let mut dist = vec![None; g.n()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if s >= g.n() {
            return Err(Error::InvalidVertex(s));
        }
        if dist[s].is_none() {
            dist[s] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(DistanceField { dist })
}

/// All-pairs hop distances; `u32::MAX` marks unreachable pairs.
pub(crate) fn distance_matrix(g: &Graph) -> Vec<Vec<u32>> {
    (0..g.n())
        .map(|s| {
            multi_source_distances(g, &[s])
                .unwrap()
                .dist
                .into_iter()
                .map(|d| d.map_or(u32::MAX, |d| d as u32))
                .collect()
        })
        .collect()
}
