//! Recognition of the trees whose distinguishing index is one more than
//! their distinguishing number.
//!
//! A tree `T` of order at least 3 is in the family when
//! 1. it is bicentric with central edge `vw`,
//! 2. the halves `T_v` and `T_w` of `T - vw`, rooted at `v` and `w`, are
//!    isomorphic as rooted trees, and
//! 3. `T_v` has exactly one distinguishing edge labeling with `D(T)` labels.
//!
//! "Exactly one" counts labelings up to root-fixing automorphisms of `T_v`,
//! not up to renaming labels: `P4` has two such classes and `D' = D`, the
//! double star `S(2,2)` has one and `D' = D + 1`.

use serde::Serialize;

use crate::graph::{bits, is_tree, tree_center, Graph};
use crate::group::automorphisms_with;
use crate::labeling::distinguishing_number_with;
use crate::{Error, Limits, Result};

/// A tree with a distinguished root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    graph: Graph,
    root: usize,
}

impl RootedTree {
    pub fn new(graph: Graph, root: usize) -> Result<Self> {
        if !is_tree(&graph) {
            return Err(Error::NotATree);
        }
        if root >= graph.n() {
            return Err(Error::InvalidVertex(root));
        }
        Ok(RootedTree { graph, root })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn root(&self) -> usize {
        self.root
    }

    /// AHU encoding: a vertex is `(` followed by its children's codes in
    /// sorted order, then `)`. Equal codes mean isomorphic rooted trees.
    pub fn canonical_code(&self) -> String {
        fn code(g: &Graph, v: usize, parent: Option<usize>) -> String {
            let mut kids: Vec<String> =
                g.neighbors(v).filter(|&w| Some(w) != parent).map(|w| code(g, w, Some(v))).collect();
            kids.sort_unstable();
            format!("({})", kids.concat())
        }
        code(&self.graph, self.root, None)
    }
}

pub fn rooted_isomorphic(a: &RootedTree, b: &RootedTree) -> bool {
    a.graph.n() == b.graph.n() && a.canonical_code() == b.canonical_code()
}

pub fn count_distinguishing_edge_labelings_rooted(t: &RootedTree, d: u32) -> Result<u64> {
    count_distinguishing_edge_labelings_rooted_with(t, d, &Limits::default())
}

/// Number of edge labelings of `t` over `1..=d` that no non-identity
/// root-fixing automorphism preserves, counted up to the action of the
/// root-fixing automorphisms.
pub fn count_distinguishing_edge_labelings_rooted_with(
    t: &RootedTree,
    d: u32,
    limits: &Limits,
) -> Result<u64> {
    if d == 0 {
        return Err(Error::InvalidLabeling("alphabet must be nonempty".into()));
    }
    let g = &t.graph;
    let m = g.m();
    let total = (d as u64).checked_pow(m as u32).filter(|&x| x <= limits.search_budget);
    if total.is_none() {
        return Err(Error::SearchBudgetExceeded(limits.search_budget));
    }
    let mut colors = vec![0u32; g.n()];
    colors[t.root] = 1;
    let grp = automorphisms_with(g, Some(&colors), limits)?;
    let actions: Vec<Vec<usize>> =
        grp.non_identity().map(|p| (0..m).map(|e| p.edge_image(g, e)).collect()).collect();

    let mut labels = vec![1u32; m];
    let mut image = vec![0u32; m];
    let mut count = 0;
    loop {
        let distinguishing = actions.iter().all(|a| (0..m).any(|e| labels[a[e]] != labels[e]));
        // a class is counted at its lexicographically smallest member
        let smallest = distinguishing
            && actions.iter().all(|a| {
                for e in 0..m {
                    image[a[e]] = labels[e];
                }
                labels <= image
            });
        if smallest {
            count += 1;
        }
        // next labeling in lexicographic order
        let Some(i) = (0..m).rev().find(|&i| labels[i] < d) else {
            break;
        };
        labels[i] += 1;
        labels[i + 1..].fill(1);
    }
    Ok(count)
}

/// The two rooted halves `(T_v, T_w)` of a bicentric tree, or `None` when
/// the tree has a single center.
pub fn split_at_central_edge(t: &Graph) -> Result<Option<(RootedTree, RootedTree)>> {
    let center = tree_center(t)?;
    let [v, w] = center[..] else {
        return Ok(None);
    };
    let cut = t.without_edge(t.edge_id(v, w).expect("centers are adjacent"));
    let half = |root: usize| -> Result<RootedTree> {
        let side = crate::graph::traversal::reach(&cut, 1 << root);
        let vertices: Vec<usize> = bits(side).collect();
        let graph = t.induced(&vertices)?;
        RootedTree::new(graph, vertices.iter().position(|&x| x == root).unwrap())
    };
    Ok(Some((half(v)?, half(w)?)))
}

/// Outcome of the family membership test for one tree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TreeFamilyReport {
    pub bicentric: bool,
    pub central_edge: Option<(usize, usize)>,
    pub halves_isomorphic: bool,
    pub distinguishing_number: u32,
    /// Distinguishing labelings of `T_v` with `D(T)` labels, up to root-fixing
    /// automorphisms; present for bicentric trees.
    pub unique_count: Option<u64>,
    pub in_family: bool,
    pub predicted_index: u32,
}

pub fn family_t_membership(t: &Graph) -> Result<TreeFamilyReport> {
    family_t_membership_with(t, &Limits::default())
}

pub fn family_t_membership_with(t: &Graph, limits: &Limits) -> Result<TreeFamilyReport> {
    if !is_tree(t) {
        return Err(Error::NotATree);
    }
    if t.n() < 3 {
        return Err(Error::OrderTooSmall(t.n()));
    }
    let grp = automorphisms_with(t, None, limits)?;
    let d = distinguishing_number_with(&grp, limits)?.value;
    let center = tree_center(t)?;
    let central_edge = (center.len() == 2).then(|| (center[0], center[1]));
    let (halves_isomorphic, unique_count) = match split_at_central_edge(t)? {
        Some((tv, tw)) => (
            rooted_isomorphic(&tv, &tw),
            Some(count_distinguishing_edge_labelings_rooted_with(&tv, d, limits)?),
        ),
        None => (false, None),
    };
    let in_family = central_edge.is_some() && halves_isomorphic && unique_count == Some(1);
    Ok(TreeFamilyReport {
        bicentric: central_edge.is_some(),
        central_edge,
        halves_isomorphic,
        distinguishing_number: d,
        unique_count,
        in_family,
        predicted_index: if in_family { d + 1 } else { d },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn double_star(a: usize, b: usize) -> Graph {
        let mut edges = vec![(0, 1)];
        edges.extend((0..a).map(|i| (0, 2 + i)));
        edges.extend((0..b).map(|i| (1, 2 + a + i)));
        Graph::new(2 + a + b, edges).unwrap()
    }

    fn cherry() -> RootedTree {
        RootedTree::new(Graph::star(2).unwrap(), 0).unwrap()
    }

    #[test]
    fn rooted_isomorphism() {
        let k1 = RootedTree::new(Graph::new(1, []).unwrap(), 0).unwrap();
        assert!(rooted_isomorphic(&k1, &k1.clone()));
        let p2 = Graph::path(2).unwrap();
        let a = RootedTree::new(p2.clone(), 0).unwrap();
        let b = RootedTree::new(p2, 1).unwrap();
        assert!(rooted_isomorphic(&a, &b));
        let leaf_rooted = RootedTree::new(Graph::star(2).unwrap(), 1).unwrap();
        assert!(!rooted_isomorphic(&cherry(), &leaf_rooted));
        assert_eq!(RootedTree::new(Graph::cycle(3).unwrap(), 0), Err(Error::NotATree));
    }

    #[test]
    fn counting() {
        let edge = RootedTree::new(Graph::path(2).unwrap(), 0).unwrap();
        assert_eq!(count_distinguishing_edge_labelings_rooted(&edge, 2).unwrap(), 2);
        assert_eq!(count_distinguishing_edge_labelings_rooted(&cherry(), 2).unwrap(), 1);
        assert_eq!(count_distinguishing_edge_labelings_rooted(&cherry(), 1).unwrap(), 0);
        assert_eq!(count_distinguishing_edge_labelings_rooted(&cherry(), 3).unwrap(), 3);
        let k1 = RootedTree::new(Graph::new(1, []).unwrap(), 0).unwrap();
        assert_eq!(count_distinguishing_edge_labelings_rooted(&k1, 2).unwrap(), 1);
        let limits = Limits { search_budget: 3, ..Limits::default() };
        assert_eq!(
            count_distinguishing_edge_labelings_rooted_with(&cherry(), 2, &limits),
            Err(Error::SearchBudgetExceeded(3))
        );
    }

    #[test]
    fn halves() {
        let (tv, tw) = split_at_central_edge(&double_star(2, 2)).unwrap().unwrap();
        assert_eq!((tv.graph().n(), tw.graph().n()), (3, 3));
        assert_eq!(tv.graph().degree(tv.root()), 2);
        assert!(split_at_central_edge(&Graph::path(5).unwrap()).unwrap().is_none());
    }

    #[test]
    fn membership() {
        let r = family_t_membership(&double_star(2, 2)).unwrap();
        assert!(r.in_family);
        assert_eq!((r.distinguishing_number, r.predicted_index, r.unique_count), (2, 3, Some(1)));

        let r = family_t_membership(&Graph::path(4).unwrap()).unwrap();
        assert!(r.bicentric && r.halves_isomorphic && !r.in_family);
        assert_eq!((r.unique_count, r.predicted_index), (Some(2), 2));

        let r = family_t_membership(&Graph::path(5).unwrap()).unwrap();
        assert!(!r.bicentric && !r.in_family);
        assert_eq!(r.predicted_index, 2);

        let r = family_t_membership(&double_star(2, 3)).unwrap();
        assert!(r.bicentric && !r.halves_isomorphic && !r.in_family);

        assert_eq!(family_t_membership(&Graph::path(2).unwrap()), Err(Error::OrderTooSmall(2)));
        assert_eq!(family_t_membership(&Graph::cycle(4).unwrap()), Err(Error::NotATree));
    }
}
