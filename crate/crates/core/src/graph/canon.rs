//! Colour refinement, canonical forms and isomorph-free enumeration.

use std::collections::HashSet;

use super::Graph;
use crate::{Error, Result};

/// Largest order accepted by [`enumerate_connected_graphs`].
pub const CONNECTED_ENUMERATION_CAP: usize = 8;
/// Largest order accepted by [`enumerate_trees`].
pub const TREE_ENUMERATION_CAP: usize = 14;

/// Refines vertex colours of several graphs jointly until stable.
///
/// A vertex's new colour is the rank of (old colour, sorted neighbour
/// colours) among all signatures in all graphs, so the colour order refines
/// the previous one and is invariant under isomorphism.
pub(crate) fn refine_joint(graphs: &[&Graph], colors: &mut [Vec<u32>]) {
    let mut classes = count_classes(colors);
    loop {
        let sigs: Vec<Vec<(u32, Vec<u32>)>> = graphs
            .iter()
            .zip(colors.iter())
            .map(|(g, c)| {
                (0..g.n())
                    .map(|v| {
                        let mut nb: Vec<u32> = g.neighbors(v).map(|w| c[w]).collect();
                        nb.sort_unstable();
                        (c[v], nb)
                    })
                    .collect()
            })
            .collect();
        let mut all: Vec<&(u32, Vec<u32>)> = sigs.iter().flatten().collect();
        all.sort();
        all.dedup();
        for (c, s) in colors.iter_mut().zip(&sigs) {
            for (v, sig) in s.iter().enumerate() {
                c[v] = all.binary_search(&sig).unwrap() as u32;
            }
        }
        if all.len() == classes {
            break;
        }
        classes = all.len();
    }
}

pub(crate) fn refine(g: &Graph, colors: &mut Vec<u32>) {
    refine_joint(&[g], std::slice::from_mut(colors));
}

fn count_classes(colors: &[Vec<u32>]) -> usize {
    let mut all: Vec<u32> = colors.iter().flatten().copied().collect();
    all.sort_unstable();
    all.dedup();
    all.len()
}

/// A canonical representative of the isomorphism class of `g`: isomorphic
/// graphs map to identical graphs.
///
/// Individualization-refinement over ordered partitions; the representative
/// is the relabeling with the smallest adjacency rows among all leaves.
pub fn canonical_form(g: &Graph) -> Graph {
    fn search(g: &Graph, mut colors: Vec<u32>, best: &mut Option<Vec<u64>>) {
        refine(g, &mut colors);
        let n = g.n();
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c as usize] += 1;
        }
        match (0..n).find(|&c| size[c] > 1) {
            None => {
                let image: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
                let mut rows = vec![0u64; n];
                for (u, v) in g.edges().iter().copied() {
                    rows[image[u]] |= 1 << image[v];
                    rows[image[v]] |= 1 << image[u];
                }
                if best.as_ref().is_none_or(|b| rows < *b) {
                    *best = Some(rows);
                }
            }
            Some(target) => {
                for v in (0..n).filter(|&v| colors[v] as usize == target) {
                    let next: Vec<u32> = (0..n).map(|u| 2 * colors[u] + u32::from(u != v)).collect();
                    search(g, next, best);
                }
            }
        }
    }
    let mut best = None;
    search(g, vec![0; g.n()], &mut best);
    Graph::from_rows(best.unwrap())
}

pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    enumerate_connected_graphs_with_cap(n, CONNECTED_ENUMERATION_CAP)
}

/// One canonical representative per isomorphism class of connected graphs
/// on `n` vertices, ordered by (edge count, adjacency rows).
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// the classes on `n` vertices all arise from classes on `n - 1` vertices by
/// attaching a new vertex to a nonempty neighbourhood.
pub fn enumerate_connected_graphs_with_cap(n: usize, cap: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > cap.min(super::MAX_ORDER) {
        return Err(Error::UnsupportedSize { n, cap });
    }
    Ok(grow(n, |k| (1..1u64 << k).collect()))
}

/// One canonical representative per isomorphism class of trees on `n`
/// vertices, grown by attaching leaves.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > TREE_ENUMERATION_CAP {
        return Err(Error::UnsupportedSize { n, cap: TREE_ENUMERATION_CAP });
    }
    Ok(grow(n, |k| (0..k).map(|v| 1u64 << v).collect()))
}

fn grow(n: usize, neighbourhoods: impl Fn(usize) -> Vec<u64>) -> Vec<Graph> {
    let mut level = vec![Graph::new(1, []).unwrap()];
    for k in 1..n {
        let masks = neighbourhoods(k);
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for &mask in &masks {
                let mut rows: Vec<u64> = (0..k).map(|v| g.row(v) | (mask >> v & 1) << k).collect();
                rows.push(mask);
                let canon = canonical_form(&Graph::from_rows(rows));
                if seen.insert(canon.adj.clone()) {
                    next.push(canon);
                }
            }
        }
        next.sort_by(|a, b| (a.m(), &a.adj).cmp(&(b.m(), &b.adj)));
        level = next;
    }
    level
}
