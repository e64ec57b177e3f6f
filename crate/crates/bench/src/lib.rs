//! Fixture graphs shared by the criterion benches.

use symbreak_core::Graph;

fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::new(10, outer.chain(spokes).chain(inner)).unwrap()
}

fn double_star(a: usize, b: usize) -> Graph {
    let mut edges = vec![(0, 1)];
    edges.extend((0..a).map(|i| (0, 2 + i)));
    edges.extend((0..b).map(|i| (1, 2 + a + i)));
    Graph::new(2 + a + b, edges).unwrap()
}

/// Named fixtures, from little symmetry to a lot.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("k4_minus_e", Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()),
        ("c8", Graph::cycle(8).unwrap()),
        ("double_star_3_3", double_star(3, 3)),
        ("petersen", petersen()),
        ("k7", Graph::complete(7).unwrap()),
    ]
}
