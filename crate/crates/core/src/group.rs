//! Automorphism groups as explicit element lists, and orbits of vertices,
//! edges and cycles under them.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::canon::{refine, refine_joint};
use crate::graph::cycles::canonical_sequence;
use crate::graph::traversal::distance_matrix;
use crate::graph::{Cycle, Graph};
use crate::{Error, Limits, Result};

/// A bijection of `0..n`, stored as its image table.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; image.len()];
        for &v in &image {
            if v >= image.len() || std::mem::replace(&mut seen[v], true) {
                return Err(Error::PreconditionViolated(format!("{image:?} is not a bijection")));
            }
        }
        Ok(Permutation(image))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    pub fn image(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.0[v]
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&v| self.0[v]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (v, &w) in self.0.iter().enumerate() {
            inv[w] = v;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(v, &w)| v == w)
    }

    /// Number of moved points.
    pub fn support_size(&self) -> usize {
        self.0.iter().enumerate().filter(|&(v, &w)| v != w).count()
    }

    pub fn is_automorphism_of(&self, g: &Graph) -> bool {
        self.0.len() == g.n() && g.edges().iter().all(|&(u, v)| g.has_edge(self.0[u], self.0[v]))
    }

    /// Id of the image of edge `e`. Panics unless `self` is an automorphism of `g`.
    #[inline]
    pub fn edge_image(&self, g: &Graph, e: usize) -> usize {
        let (u, v) = g.edge(e);
        g.edge_id(self.0[u], self.0[v]).expect("automorphism maps edges to edges")
    }
}

/// The full automorphism group of a graph, element by element.
///
/// Elements are sorted lexicographically by image, so the identity comes
/// first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutomorphismGroup {
    elements: Vec<Permutation>,
    by_support: Vec<usize>,
}

impl AutomorphismGroup {
    fn from_elements(mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        debug_assert!(elements[0].is_identity());
        let mut by_support: Vec<usize> = (1..elements.len()).collect();
        by_support.sort_by_key(|&i| (elements[i].support_size(), i));
        AutomorphismGroup { elements, by_support }
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn degree(&self) -> usize {
        self.elements[0].len()
    }

    /// Non-identity elements, fewest moved points first. Small-support
    /// elements are the likeliest to preserve a labeling, so label checks
    /// scan in this order.
    pub fn non_identity(&self) -> impl Iterator<Item = &Permutation> + '_ {
        self.by_support.iter().map(|&i| &self.elements[i])
    }

    /// The subgroup of elements satisfying `keep`.
    pub fn subgroup(&self, keep: impl Fn(&Permutation) -> bool) -> AutomorphismGroup {
        Self::from_elements(self.elements.iter().filter(|p| keep(p)).cloned().collect())
    }

    /// Vertex orbits, each sorted, ordered by smallest member.
    pub fn vertex_orbits(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        orbits_of(n, |v, out| out.extend(self.elements.iter().map(|p| p.apply(v))))
    }

    /// Edge orbits of `g`, as sorted lists of edge ids.
    pub fn edge_orbits(&self, g: &Graph) -> Vec<Vec<usize>> {
        orbits_of(g.m(), |e, out| out.extend(self.elements.iter().map(|p| p.edge_image(g, e))))
    }
}

fn orbits_of(points: usize, images: impl Fn(usize, &mut Vec<usize>)) -> Vec<Vec<usize>> {
    let mut seen = vec![false; points];
    let mut orbits = Vec::new();
    let mut buf = Vec::new();
    for x in 0..points {
        if seen[x] {
            continue;
        }
        buf.clear();
        images(x, &mut buf);
        buf.sort_unstable();
        buf.dedup();
        for &y in &buf {
            seen[y] = true;
        }
        orbits.push(buf.clone());
    }
    orbits
}

pub fn automorphisms(g: &Graph) -> Result<AutomorphismGroup> {
    automorphisms_with(g, None, &Limits::default())
}

/// Automorphisms of `g` that also preserve the vertex colouring `colors`
/// (when given).
///
/// Backtracking over vertices in a connectivity-first order. Candidate images
/// must share the refined colour (seeded by degree and the multiset of
/// distances to all vertices) and agree on distances to every vertex already
/// placed.
pub fn automorphisms_with(g: &Graph, colors: Option<&[u32]>, limits: &Limits) -> Result<AutomorphismGroup> {
    let dist = distance_matrix(g);
    let mut cells = initial_colors(&[(g, &dist, colors)]).pop().unwrap();
    refine(g, &mut cells);
    let mut found = Vec::new();
    let budget = limits.group_budget;
    let ok =
        backtrack(Side { g, dist: &dist, cells: &cells }, Side { g, dist: &dist, cells: &cells }, &mut |p| {
            found.push(p);
            (found.len() as u64) <= budget
        });
    if !ok {
        return Err(Error::GroupBudgetExceeded(budget));
    }
    Ok(AutomorphismGroup::from_elements(found))
}

/// An isomorphism from `g` onto `h`, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph) -> Option<Permutation> {
    if g.n() != h.n() || g.m() != h.m() {
        return None;
    }
    let (dg, dh) = (distance_matrix(g), distance_matrix(h));
    let mut cells = initial_colors(&[(g, &dg, None), (h, &dh, None)]);
    refine_joint(&[g, h], &mut cells);
    let mut hit = None;
    backtrack(
        Side { g, dist: &dg, cells: &cells[0] },
        Side { g: h, dist: &dh, cells: &cells[1] },
        &mut |p| {
            hit = Some(p);
            false
        },
    );
    hit
}

type Seed<'a> = (&'a Graph, &'a Vec<Vec<u32>>, Option<&'a [u32]>);

fn initial_colors(graphs: &[Seed<'_>]) -> Vec<Vec<u32>> {
    let keys: Vec<Vec<(u32, Vec<u32>)>> = graphs
        .iter()
        .map(|(g, dist, colors)| {
            (0..g.n())
                .map(|v| {
                    let mut row = dist[v].clone();
                    row.sort_unstable();
                    (colors.map_or(0, |c| c[v]), row)
                })
                .collect()
        })
        .collect();
    let mut all: Vec<&(u32, Vec<u32>)> = keys.iter().flatten().collect();
    all.sort();
    all.dedup();
    keys.iter().map(|k| k.iter().map(|key| all.binary_search(&key).unwrap() as u32).collect()).collect()
}

#[derive(Clone, Copy)]
struct Side<'a> {
    g: &'a Graph,
    dist: &'a [Vec<u32>],
    cells: &'a [u32],
}

/// Enumerates colour- and distance-preserving bijections `from -> to`,
/// handing each to `emit`; stops early (returning false) when `emit` does.
fn backtrack(from: Side<'_>, to: Side<'_>, emit: &mut dyn FnMut(Permutation) -> bool) -> bool {
    let n = from.g.n();
    let order = placement_order(from);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn go(
        depth: usize,
        order: &[usize],
        from: Side<'_>,
        to: Side<'_>,
        image: &mut [usize],
        used: &mut [bool],
        emit: &mut dyn FnMut(Permutation) -> bool,
    ) -> bool {
        if depth == order.len() {
            return emit(Permutation(image.to_vec()));
        }
        let u = order[depth];
        for w in 0..image.len() {
            if used[w] || to.cells[w] != from.cells[u] {
                continue;
            }
            let consistent = order[..depth].iter().all(|&x| from.dist[u][x] == to.dist[w][image[x]]);
            if !consistent {
                continue;
            }
            image[u] = w;
            used[w] = true;
            let keep_going = go(depth + 1, order, from, to, image, used, emit);
            used[w] = false;
            image[u] = usize::MAX;
            if !keep_going {
                return false;
            }
        }
        true
    }

    go(0, &order, from, to, &mut image, &mut used, emit)
}

/// Smallest cell first, then greedily the vertex with the most already
/// placed neighbours.
fn placement_order(side: Side<'_>) -> Vec<usize> {
    let n = side.g.n();
    let mut size = vec![0usize; side.cells.iter().max().map_or(0, |&c| c as usize + 1)];
    for &c in side.cells {
        size[c as usize] += 1;
    }
    let mut placed = 0u64;
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .min_by_key(|&v| {
                let links = (side.g.row(v) & placed).count_ones();
                (std::cmp::Reverse(links), size[side.cells[v] as usize], v)
            })
            .unwrap();
        placed |= 1 << v;
        order.push(v);
    }
    order
}

/// Image of a cycle under an automorphism, canonicalized.
pub fn apply_to_cycle(g: &Graph, p: &Permutation, c: &Cycle) -> Cycle {
    let mapped: Vec<usize> = c.vertices().iter().map(|&v| p.apply(v)).collect();
    Cycle::new(g, &mapped).expect("automorphisms map cycles to cycles")
}

/// The orbit `{ g·C : g ∈ Aut(G) }` of a cycle, with cycles compared as
/// subgraphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleOrbit {
    members: Vec<Cycle>,
}

impl CycleOrbit {
    pub fn orbit_of(g: &Graph, grp: &AutomorphismGroup, c: &Cycle) -> CycleOrbit {
        let mut members: Vec<Cycle> = grp.elements().iter().map(|p| apply_to_cycle(g, p, c)).collect();
        members.sort();
        members.dedup();
        CycleOrbit { members }
    }

    /// Members in (vertex sequence) order.
    pub fn members(&self) -> &[Cycle] {
        &self.members
    }

    pub fn representative(&self) -> &Cycle {
        &self.members[0]
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Vertex bitset of the union of the member cycles.
    pub fn vertex_mask(&self) -> u64 {
        self.members.iter().fold(0, |m, c| m | c.vertex_mask())
    }

    /// Sorted edge ids of the union of the member cycles.
    pub fn edge_union(&self) -> Vec<usize> {
        let mut edges: Vec<usize> = self.members.iter().flat_map(|c| c.edges().iter().copied()).collect();
        edges.sort_unstable();
        edges.dedup();
        edges
    }

    /// Index of a member with the given canonical vertex sequence.
    pub fn position(&self, vertices: &[usize]) -> Option<usize> {
        self.members.iter().position(|c| c.vertices() == vertices)
    }
}

/// Partitions `cycles` into orbits, ordered by (orbit size, representative
/// length, representative sequence).
pub fn cycle_orbits(g: &Graph, grp: &AutomorphismGroup, cycles: &[Cycle]) -> Vec<CycleOrbit> {
    let index: HashMap<&[usize], usize> = cycles.iter().enumerate().map(|(i, c)| (c.vertices(), i)).collect();
    let mut seen = vec![false; cycles.len()];
    let mut orbits = Vec::new();
    for (i, c) in cycles.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut keys: Vec<Vec<usize>> = grp
            .elements()
            .iter()
            .map(|p| canonical_sequence(&c.vertices().iter().map(|&v| p.apply(v)).collect::<Vec<_>>()))
            .collect();
        keys.sort();
        keys.dedup();
        let members = keys
            .iter()
            .map(|k| match index.get(k.as_slice()) {
                Some(&j) => {
                    seen[j] = true;
                    cycles[j].clone()
                }
                None => Cycle::new(g, k).expect("automorphisms map cycles to cycles"),
            })
            .collect();
        orbits.push(CycleOrbit { members });
    }
    orbits.sort_by(|a, b| {
        let key = |o: &CycleOrbit| (o.len(), o.representative().len());
        key(a).cmp(&key(b)).then_with(|| a.representative().vertices().cmp(b.representative().vertices()))
    });
    orbits
}

/// The cycle whose orbit is smallest, with its orbit. Ties go to the orbit
/// whose representative is shortest, then lexicographically smallest.
pub fn smallest_orbit_cycle(
    g: &Graph,
    grp: &AutomorphismGroup,
    cycles: &[Cycle],
) -> Result<(Cycle, CycleOrbit)> {
    let orbit = cycle_orbits(g, grp, cycles).into_iter().next().ok_or(Error::NoCycles)?;
    Ok((orbit.representative().clone(), orbit))
}
