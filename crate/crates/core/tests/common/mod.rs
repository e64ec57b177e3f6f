//! Brute-force oracles. Nothing here goes through the pruned searches of
//! the library: groups come from all `n!` permutations and labelings from
//! all `d^n` / `d^m` sequences.

#![allow(dead_code)]

use symbreak_core::Graph;

/// Connected graphs on 1..=8 vertices (OEIS A001349).
pub const CONNECTED_COUNTS: [usize; 8] = [1, 1, 2, 6, 21, 112, 853, 11117];
/// Trees on 1..=10 vertices (OEIS A000055).
pub const TREE_COUNTS: [usize; 10] = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106];

pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out.sort();
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k.is_multiple_of(2) {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

/// Automorphisms as image tables, by testing every permutation.
pub fn brute_automorphisms(g: &Graph) -> Vec<Vec<usize>> {
    all_permutations(g.n())
        .into_iter()
        .filter(|p| g.edges().iter().all(|&(u, v)| g.has_edge(p[u], p[v])))
        .collect()
}

fn edge_action(g: &Graph, p: &[usize]) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|&(u, v)| {
            g.edges().iter().position(|&(a, b)| (a, b) == (p[u].min(p[v]), p[u].max(p[v]))).unwrap()
        })
        .collect()
}

fn for_each_sequence(len: usize, d: u32, mut f: impl FnMut(&[u32]) -> bool) -> bool {
    let mut s = vec![1u32; len];
    loop {
        if f(&s) {
            return true;
        }
        let Some(i) = (0..len).rev().find(|&i| s[i] < d) else {
            return false;
        };
        s[i] += 1;
        s[i + 1..].fill(1);
    }
}

/// `D(G)` from all `d^n` labelings.
pub fn brute_distinguishing_number(g: &Graph) -> u32 {
    let auts = brute_automorphisms(g);
    let nontrivial: Vec<&Vec<usize>> =
        auts.iter().filter(|p| p.iter().enumerate().any(|(i, &v)| i != v)).collect();
    (1..=g.n() as u32)
        .find(|&d| {
            for_each_sequence(g.n(), d, |phi| {
                nontrivial.iter().all(|p| (0..g.n()).any(|v| phi[v] != phi[p[v]]))
            })
        })
        .unwrap()
}

/// `D'(G)` from all `d^m` labelings; `None` when no edge labeling distinguishes.
pub fn brute_distinguishing_index(g: &Graph) -> Option<u32> {
    let auts = brute_automorphisms(g);
    let actions: Vec<Vec<usize>> = auts
        .iter()
        .filter(|p| p.iter().enumerate().any(|(i, &v)| i != v))
        .map(|p| edge_action(g, p))
        .collect();
    let m = g.m();
    (1..=m.max(1) as u32)
        .find(|&d| for_each_sequence(m, d, |l| actions.iter().all(|a| (0..m).any(|e| l[e] != l[a[e]]))))
}

/// Simple cycles as edge subsets in which every vertex has degree 0 or 2
/// and the used edges form one connected piece.
pub fn brute_cycle_count(g: &Graph) -> usize {
    let m = g.m();
    assert!(m <= 20);
    let mut count = 0;
    for mask in 1u32..1 << m {
        let mut deg = vec![0; g.n()];
        let used: Vec<(usize, usize)> = (0..m).filter(|e| mask >> e & 1 == 1).map(|e| g.edge(e)).collect();
        for &(u, v) in &used {
            deg[u] += 1;
            deg[v] += 1;
        }
        if deg.iter().any(|&d| d != 0 && d != 2) {
            continue;
        }
        // connected: walk from one endpoint
        let mut seen = vec![false; g.n()];
        let mut stack = vec![used[0].0];
        seen[used[0].0] = true;
        while let Some(x) = stack.pop() {
            for &(u, v) in &used {
                for (a, b) in [(u, v), (v, u)] {
                    if a == x && !seen[b] {
                        seen[b] = true;
                        stack.push(b);
                    }
                }
            }
        }
        if (0..g.n()).all(|v| deg[v] == 0 || seen[v]) {
            count += 1;
        }
    }
    count
}
