//! Shared corpus and independent oracles for the integration tests.

#![allow(dead_code)]

use prismatic::generators::{run_sweep, schlafli_complement, FamilyId, FamilySpec};
use prismatic::{build_graph, Graph};

pub struct Instance {
    pub name: String,
    /// Present for swept family members.
    pub spec: Option<FamilySpec>,
    pub graph: Graph,
}

/// Every graph emitted by the default sweeps, then the small example on
/// six vertices whose best cover avoids triangles.
pub fn corpus() -> Vec<Instance> {
    let mut out = Vec::new();
    for id in FamilyId::ALL {
        for item in run_sweep(id) {
            if let Ok(graph) = item.graph {
                out.push(Instance {
                    name: item.spec.to_string(),
                    spec: Some(item.spec),
                    graph,
                });
            }
        }
    }
    out.push(Instance {
        name: "edges-beat-triangles".into(),
        spec: None,
        graph: edges_beat_triangles(),
    });
    out
}

/// a=0 b=1 c=2 d=3 e=4 f=5 with edges ab, bc, be, ce, ef, cd: the triangle
/// bce leaves a, d, f isolated (cover size 4), while ab, cd, ef cover
/// everything with 3 cliques.
pub fn edges_beat_triangles() -> Graph {
    build_graph(6, &[(0, 1), (1, 2), (1, 4), (2, 4), (4, 5), (2, 3)]).unwrap()
}

pub fn sigma() -> Graph {
    schlafli_complement()
}

/// Triangles by triple loop over `has_edge`.
pub fn brute_triangles(g: &Graph, skip: &[bool]) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in (0..n).filter(|&v| !skip[v]) {
        for b in (a + 1..n).filter(|&v| !skip[v] && g.has_edge(a, v)) {
            for c in (b + 1..n).filter(|&v| !skip[v] && g.has_edge(a, v) && g.has_edge(b, v)) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

pub fn brute_is_prismatic(g: &Graph) -> bool {
    let none = vec![false; g.n()];
    brute_triangles(g, &none).iter().all(|t| {
        (0..g.n())
            .filter(|v| !t.contains(v))
            .all(|v| t.iter().filter(|&&x| g.has_edge(v, x)).count() == 1)
    })
}

/// Matching number by a subset table; `n <= 20`.
pub fn brute_matching_number(g: &Graph) -> usize {
    let n = g.n();
    let mut best = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut b = best[rest];
        for u in 0..n {
            if rest & (1 << u) != 0 && g.has_edge(u, v) {
                b = b.max(1 + best[rest & !(1 << u)]);
            }
        }
        best[mask] = b;
    }
    best[(1 << n) - 1] as usize
}
