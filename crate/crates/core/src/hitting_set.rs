//! Vertex sets meeting every triangle: bounded search and exact minimum.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::recognition::require_diamond_k4_free;

/// Bound used by the clique-cover and packing dispatch.
pub const SMALL_HITTING_BOUND: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingSet {
    /// Sorted vertex ids.
    pub vertices: Vec<usize>,
    /// True when no smaller hitting set exists.
    pub minimum: bool,
}

impl HittingSet {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// First triangle of `g` missed by `set`, if any.
pub fn missed_triangle(g: &Graph, set: &[usize]) -> Option<Triangle> {
    let s = BitSet::from_iter(g.n(), set.iter().copied().filter(|&v| v < g.n()));
    g.triangles()
        .iter()
        .find(|t| t.0.iter().all(|&v| !s.contains(v)))
        .copied()
}

pub fn verify_hitting_set(g: &Graph, set: &[usize]) -> Result<()> {
    for &v in set {
        g.check_vertex(v)?;
    }
    match missed_triangle(g, set) {
        Some(t) => Err(Error::NotHittingSet(t)),
        None => Ok(()),
    }
}

struct Search<'a> {
    triangles: &'a [Triangle],
    chosen: BitSet,
    stack: Vec<usize>,
}

impl Search<'_> {
    fn hit(&self, t: &Triangle) -> bool {
        t.0.iter().any(|&v| self.chosen.contains(v))
    }

    /// Greedy vertex-disjoint packing of the uncovered triangles from
    /// `start` on: each needs its own hitter.
    fn packing_bound(&self, start: usize, n: usize, limit: usize) -> usize {
        let mut used = BitSet::new(n);
        let mut count = 0;
        for t in &self.triangles[start..] {
            if !self.hit(t) && t.0.iter().all(|&v| !used.contains(v)) {
                count += 1;
                if count > limit {
                    break;
                }
                for v in t.0 {
                    used.insert(v);
                }
            }
        }
        count
    }

    fn run(&mut self, start: usize, budget: usize, n: usize) -> bool {
        let Some(offset) = self.triangles[start..].iter().position(|t| !self.hit(t)) else {
            return true;
        };
        let idx = start + offset;
        if budget == 0 || self.packing_bound(idx, n, budget) > budget {
            return false;
        }
        for v in self.triangles[idx].0 {
            self.chosen.insert(v);
            self.stack.push(v);
            if self.run(idx + 1, budget - 1, n) {
                return true;
            }
            self.stack.pop();
            self.chosen.remove(v);
        }
        false
    }
}

fn search(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut s = Search {
        triangles: g.triangles(),
        chosen: BitSet::new(g.n()),
        stack: Vec::new(),
    };
    if s.run(0, k, g.n()) {
        let mut v = s.stack;
        v.sort_unstable();
        Some(v)
    } else {
        None
    }
}

/// A hitting set of at most `k` vertices, or `None` when none exists.
///
/// Branches on the lexicographically smallest uncovered triangle, trying its
/// vertices in ascending order, so the search tree has at most `3^k` leaves.
pub fn find_hitting_set_at_most(g: &Graph, k: usize) -> Result<Option<HittingSet>> {
    require_diamond_k4_free(g)?;
    Ok(search(g, k).map(|vertices| HittingSet {
        minimum: false,
        vertices,
    }))
}

fn greedy_hitting_set(g: &Graph) -> Vec<usize> {
    let tris = g.triangles();
    let mut covered = vec![false; tris.len()];
    let mut chosen = Vec::new();
    loop {
        let mut count = vec![0usize; g.n()];
        for (t, _) in tris.iter().zip(&covered).filter(|(_, c)| !**c) {
            for v in t.0 {
                count[v] += 1;
            }
        }
        let Some((v, &c)) = count.iter().enumerate().max_by_key(|&(v, c)| (*c, std::cmp::Reverse(v))) else {
            break;
        };
        if c == 0 {
            break;
        }
        chosen.push(v);
        for (t, cov) in tris.iter().zip(covered.iter_mut()) {
            if t.contains(v) {
                *cov = true;
            }
        }
    }
    chosen.sort_unstable();
    chosen
}

/// A minimum hitting set, by iterative deepening between a disjoint-packing
/// lower bound and a greedy upper bound. Works on any graph.
pub fn min_hitting_set(g: &Graph) -> HittingSet {
    let greedy = greedy_hitting_set(g);
    let probe = Search {
        triangles: g.triangles(),
        chosen: BitSet::new(g.n()),
        stack: Vec::new(),
    };
    let lower = probe.packing_bound(0, g.n(), usize::MAX);
    for k in lower..greedy.len() {
        if let Some(vertices) = search(g, k) {
            return HittingSet {
                vertices,
                minimum: true,
            };
        }
    }
    HittingSet {
        vertices: greedy,
        minimum: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{prism, rotator, schlafli_complement, twister};
    use crate::graph::build_graph;
    use crate::witness::witness_matrix;
    use proptest::prelude::*;

    fn brute_min(g: &Graph) -> usize {
        let n = g.n();
        (0u32..1 << n)
            .filter(|mask| {
                let set: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
                missed_triangle(g, &set).is_none()
            })
            .map(u32::count_ones)
            .min()
            .unwrap() as usize
    }

    #[test]
    fn triangle_free_needs_nothing() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = find_hitting_set_at_most(&g, 0).unwrap().unwrap();
        assert!(h.is_empty());
    }

    #[test]
    fn prism_takes_one_vertex_per_triangle() {
        let p = prism();
        assert!(find_hitting_set_at_most(&p, 1).unwrap().is_none());
        let h = find_hitting_set_at_most(&p, 2).unwrap().unwrap();
        assert_eq!(h.vertices, vec![0, 3]);
    }

    #[test]
    fn sigma_needs_ten() {
        let sigma = schlafli_complement();
        assert!(find_hitting_set_at_most(&sigma, 5).unwrap().is_none());
        let h = min_hitting_set(&sigma);
        assert_eq!(h.len(), 10);
        assert!(h.minimum);
        verify_hitting_set(&sigma, &h.vertices).unwrap();
        let m = witness_matrix(&sigma).unwrap();
        assert!(m.is_triangle_free_without(&BitSet::from_iter(27, h.vertices.iter().copied())));
    }

    #[test]
    fn rotator_and_twister_against_brute_force() {
        for g in [rotator(), twister()] {
            assert_eq!(min_hitting_set(&g).len(), brute_min(&g));
        }
    }

    #[test]
    fn rejects_k4() {
        let k4 = build_graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(matches!(find_hitting_set_at_most(&k4, 3), Err(Error::NotDiamondK4Free(_))));
        // the exact oracle takes any graph
        assert_eq!(min_hitting_set(&k4).len(), 2);
    }

    #[test]
    fn verify_reports_missed_triangle() {
        let p = prism();
        assert_eq!(verify_hitting_set(&p, &[0]), Err(Error::NotHittingSet(Triangle([3, 4, 5]))));
    }

    proptest! {
        #[test]
        fn min_matches_brute_force(n in 3usize..11, bits in proptest::collection::vec(any::<bool>(), 55)) {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k % bits.len()] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            let g = build_graph(n, &edges).unwrap();
            let h = min_hitting_set(&g);
            prop_assert!(verify_hitting_set(&g, &h.vertices).is_ok());
            prop_assert_eq!(h.len(), brute_min(&g));
        }
    }
}
