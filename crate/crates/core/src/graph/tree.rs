use super::{bits, is_connected, Graph};
use crate::{Error, Result};

pub fn is_tree(g: &Graph) -> bool {
    g.m() + 1 == g.n() && is_connected(g)
}

/// The center of a tree by iterated leaf removal: one vertex, or two adjacent
/// vertices for a bicentric tree.
pub fn tree_center(g: &Graph) -> Result<Vec<usize>> {
    if !is_tree(g) {
        return Err(Error::NotATree);
    }
    let mut alive = super::traversal::full_mask(g.n());
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    while alive.count_ones() > 2 {
        let leaves: Vec<usize> = bits(alive).filter(|&v| degree[v] <= 1).collect();
        for &v in &leaves {
            alive &= !(1 << v);
            for w in bits(g.row(v) & alive) {
                degree[w] -= 1;
            }
        }
    }
    Ok(bits(alive).collect())
}
