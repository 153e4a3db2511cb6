//! Builders for the small named graphs, the Σ-based families and the
//! operations used to construct them.

mod families;
mod ops;
mod schlafli;
mod sweep;

pub use families::{generate, lemma_bound, lemma_hitting_set, ExpParams, FamilyId, FamilySpec};
pub use ops::{
    exponentiate, is_leaf_triangle, multiply, neighbour_partition, replicate, ExponentiationSpec,
    MultiplicationSpec, Side,
};
pub use schlafli::{schlafli_complement, schlafli_induced, IndexSet, SchlafliVertex, Tile};
pub use sweep::{default_sweep, random_schlafli_induced, run_sweep, SweepItem, CORPUS_SEED};

use crate::graph::{Graph, Label};

fn tagged(g: Graph, names: &[&str]) -> Graph {
    g.with_labels(names.iter().map(|s| Label::Tag(s.to_string())).collect())
}

/// Two disjoint triangles joined by a perfect matching.
pub fn prism() -> Graph {
    let g = Graph::from_edges(
        6,
        [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
    )
    .expect("valid edges");
    tagged(g, &["a1", "a2", "a3", "b1", "b2", "b3"])
}

/// The rotator on `v1..v9` (ids 0..8): `{v1,v2,v3}` is the center triangle,
/// `{v4,v5,v6}` is complete to `{v7,v8,v9}` and `vi` sees `v(i+3)`, `v(i+6)`.
pub fn rotator() -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2)];
    for i in 3..6 {
        for j in 6..9 {
            edges.push((i, j));
        }
    }
    for i in 0..3 {
        edges.push((i, i + 3));
        edges.push((i, i + 6));
    }
    let g = Graph::from_edges(9, edges).expect("valid edges");
    tagged(g, &["v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"])
}

/// The twister: four triangles `{0,2,3}`, `{1,2,4}`, `{5,6,8}`, `{6,7,9}`
/// where `2` and `6` are adjacent and the remaining vertices are linked by a
/// twisted pattern.
pub fn twister() -> Graph {
    let edges = [
        (0, 2),
        (0, 3),
        (2, 3),
        (1, 2),
        (1, 4),
        (2, 4),
        (5, 6),
        (5, 8),
        (6, 8),
        (6, 7),
        (6, 9),
        (7, 9),
        (2, 6),
        (0, 7),
        (0, 8),
        (3, 5),
        (3, 9),
        (1, 5),
        (1, 7),
        (4, 8),
        (4, 9),
    ];
    Graph::from_edges(10, edges).expect("valid edges")
}

/// `L(K3,3)`: vertex `3i + j` is the edge `(i, j)`; two vertices are
/// adjacent when they share a row or a column.
pub fn line_graph_k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..9 {
        for v in u + 1..9 {
            if u / 3 == v / 3 || u % 3 == v % 3 {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(9, edges).expect("valid edges");
    let names: Vec<String> = (0..9).map(|v| format!("e{}{}", v / 3 + 1, v % 3 + 1)).collect();
    g.with_labels(names.into_iter().map(Label::Tag).collect())
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let edges = (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)));
    Graph::from_edges(a + b, edges).expect("valid edges")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::is_isomorphic_small;
    use crate::recognition::{find_rotator_or_twister, is_clawfree, is_orientable, is_prismatic, Obstruction};

    #[test]
    fn named_graphs_are_prismatic() {
        for g in [prism(), rotator(), twister(), line_graph_k33(), schlafli_complement()] {
            assert!(is_prismatic(&g));
        }
    }

    #[test]
    fn prism_shape() {
        let p = prism();
        assert_eq!((p.n(), p.edge_count()), (6, 9));
        assert!(is_orientable(&p).unwrap());
    }

    #[test]
    fn line_graph_k33_shape() {
        let l = line_graph_k33();
        assert_eq!((l.n(), l.edge_count()), (9, 18));
        assert!(is_clawfree(&l));
        assert!(is_orientable(&l).unwrap());
        let d = l.derived_graph();
        assert!(is_isomorphic_small(&d.graph, &complete_bipartite(3, 3)).unwrap());
    }

    #[test]
    fn rotator_and_twister_are_not_orientable() {
        let r = rotator();
        assert_eq!(r.triangles().len(), 4);
        assert!(!is_orientable(&r).unwrap());
        assert!(matches!(
            find_rotator_or_twister(&r).found(),
            Some(Obstruction::Rotator { .. })
        ));

        let t = twister();
        assert_eq!(t.triangles().len(), 4);
        assert!(!is_orientable(&t).unwrap());
        // the twister has no triangle meeting all others
        let tris = t.triangles();
        assert!(tris
            .iter()
            .all(|a| tris.iter().filter(|b| !a.is_disjoint(b)).count() < tris.len()));
        assert!(matches!(
            find_rotator_or_twister(&t).found(),
            Some(Obstruction::Twister { .. })
        ));
    }

    #[test]
    fn bipartite() {
        let k = complete_bipartite(2, 3);
        assert_eq!(k.edge_count(), 6);
        assert!(k.triangles().is_empty());
    }
}
