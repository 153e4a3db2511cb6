//! Minimum clique covers of K4-free graphs: partitions of the vertex set into
//! triangles, edges and single vertices using as few parts as possible.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::hitting_set::{find_hitting_set_at_most, verify_hitting_set, SMALL_HITTING_BOUND};
use crate::matching::max_matching_within;
use crate::recognition::{is_orientable, is_prismatic, require_prismatic, Obstruction};
use crate::witness::witness_matrix;

/// Vertex limit for the exhaustive triangle-set search.
pub const EXACT_COVER_LIMIT: usize = 27;
/// Vertex limit for the brute-force oracle.
pub const BRUTEFORCE_COVER_LIMIT: usize = 18;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CliqueCover {
    pub triangles: Vec<Triangle>,
    /// Edges `(u, v)` with `u < v`.
    pub edges: Vec<(usize, usize)>,
    pub singletons: Vec<usize>,
}

impl CliqueCover {
    /// Builds a cover with every list sorted.
    pub fn new(triangles: Vec<Triangle>, edges: Vec<(usize, usize)>, singletons: Vec<usize>) -> Self {
        let mut c = CliqueCover {
            triangles,
            edges: edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect(),
            singletons,
        };
        c.triangles.sort_unstable();
        c.edges.sort_unstable();
        c.singletons.sort_unstable();
        c
    }

    pub fn size(&self) -> usize {
        self.triangles.len() + self.edges.len() + self.singletons.len()
    }

    /// True when the cover has no triangle or no singleton.
    pub fn is_normalized(&self) -> bool {
        self.triangles.is_empty() || self.singletons.is_empty()
    }

    /// Checks that the parts are cliques of `g` partitioning its vertices.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let mut seen = vec![false; n];
        let mut claim = |v: usize| -> Result<()> {
            if v >= n {
                return Err(Error::InvalidCover(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidCover(format!("vertex {v} covered twice")));
            }
            Ok(())
        };
        for t in &self.triangles {
            for v in t.0 {
                claim(v)?;
            }
        }
        for &(u, v) in &self.edges {
            claim(u)?;
            claim(v)?;
        }
        for &v in &self.singletons {
            claim(v)?;
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidCover(format!("vertex {v} not covered")));
        }
        if let Some(t) = self.triangles.iter().find(|t| !g.is_triangle(t)) {
            return Err(Error::InvalidCover(format!("{t} is not a triangle")));
        }
        if let Some((u, v)) = self.edges.iter().find(|(u, v)| !g.has_edge(*u, *v)) {
            return Err(Error::InvalidCover(format!("{u} {v} is not an edge")));
        }
        Ok(())
    }
}

impl fmt::Display for CliqueCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.triangles {
            writeln!(f, "t {} {} {}", t.0[0], t.0[1], t.0[2])?;
        }
        for (u, v) in &self.edges {
            writeln!(f, "e {u} {v}")?;
        }
        for v in &self.singletons {
            writeln!(f, "v {v}")?;
        }
        writeln!(f, "size {}", self.size())
    }
}

fn find_k4(g: &Graph) -> Option<[usize; 4]> {
    for t in g.triangles() {
        let [a, b, c] = t.0;
        let common = g.neighbors(a).intersection(g.neighbors(b)).intersection(g.neighbors(c));
        if let Some(d) = common.first() {
            let mut vs = [a, b, c, d];
            vs.sort_unstable();
            return Some(vs);
        }
    }
    None
}

fn require_k4_free(g: &Graph) -> Result<()> {
    match find_k4(g) {
        Some(vs) => Err(Error::NotDiamondK4Free(Obstruction::K4(vs))),
        None => Ok(()),
    }
}

fn covered_by(n: usize, triangles: &[Triangle]) -> BitSet {
    BitSet::from_iter(n, triangles.iter().flat_map(|t| t.0))
}

/// Completes a set of disjoint triangles with a maximum matching of the rest.
fn complete(g: &Graph, triangles: Vec<Triangle>) -> CliqueCover {
    let free = g.vertex_set().difference(&covered_by(g.n(), &triangles));
    let m = max_matching_within(g, &free);
    let singletons = free.iter().filter(|&v| m.mate(v).is_none()).collect();
    CliqueCover::new(triangles, m.edges(), singletons)
}

/// Size of the best cover that uses exactly the triangles in `triangles`.
fn completed_size(g: &Graph, triangles: &[Triangle]) -> usize {
    let free = g.vertex_set().difference(&covered_by(g.n(), triangles));
    g.n() - 2 * triangles.len() - max_matching_within(g, &free).len()
}

/// Keeps `candidate` when it beats `best` on (size, sorted triangle list).
fn keep_better(best: &mut Option<(usize, Vec<Triangle>)>, size: usize, mut tris: Vec<Triangle>) {
    tris.sort_unstable();
    let better = match best {
        None => true,
        Some((s, t)) => (size, tris.as_slice()) < (*s, t.as_slice()),
    };
    if better {
        *best = Some((size, tris));
    }
}

/// Minimum cover given a hitting set `s` of at most five vertices: every
/// triangle of a cover contains a hitter, so it suffices to try at most one
/// triangle through each hitter and match the remaining vertices.
///
/// Ties are broken towards the lexicographically least triangle list.
pub fn clique_cover_via_hitting_set(g: &Graph, s: &[usize]) -> Result<CliqueCover> {
    if s.len() > SMALL_HITTING_BOUND {
        return Err(Error::SizeLimit {
            what: "hitting set",
            limit: SMALL_HITTING_BOUND,
            actual: s.len(),
        });
    }
    let w = witness_matrix(g)?;
    verify_hitting_set(g, s)?;
    let options: Vec<Vec<Triangle>> = s.iter().map(|&v| w.triangles_through(v)).collect();

    fn walk(
        g: &Graph,
        options: &[Vec<Triangle>],
        used: &mut BitSet,
        chosen: &mut Vec<Triangle>,
        best: &mut Option<(usize, Vec<Triangle>)>,
    ) {
        let Some((first, rest)) = options.split_first() else {
            keep_better(best, completed_size(g, chosen), chosen.clone());
            return;
        };
        walk(g, rest, used, chosen, best);
        for t in first {
            if t.0.iter().all(|&v| !used.contains(v)) {
                for v in t.0 {
                    used.insert(v);
                }
                chosen.push(*t);
                walk(g, rest, used, chosen, best);
                chosen.pop();
                for v in t.0 {
                    used.remove(v);
                }
            }
        }
    }

    let mut best = None;
    walk(g, &options, &mut BitSet::new(g.n()), &mut Vec::new(), &mut best);
    let (_, tris) = best.expect("the empty choice is always evaluated");
    Ok(complete(g, tris))
}

/// Minimum cover of a diamond-free, K4-free graph that has a hitting set of
/// at most five vertices.
pub fn clique_cover_small_hitting(g: &Graph) -> Result<CliqueCover> {
    match find_hitting_set_at_most(g, SMALL_HITTING_BOUND)? {
        Some(h) => clique_cover_via_hitting_set(g, &h.vertices),
        None => Err(Error::NoSmallHittingSet(SMALL_HITTING_BOUND)),
    }
}

/// Minimum cover of a non-orientable prismatic graph. Such a graph either
/// has a hitting set of at most five vertices or at most 27 vertices.
pub fn clique_cover_nonorientable(g: &Graph) -> Result<CliqueCover> {
    require_prismatic(g)?;
    if is_orientable(g)? {
        return Err(Error::Orientable);
    }
    if let Some(h) = find_hitting_set_at_most(g, SMALL_HITTING_BOUND)? {
        return clique_cover_via_hitting_set(g, &h.vertices);
    }
    if g.n() > EXACT_COVER_LIMIT {
        return Err(Error::StructureViolation(format!(
            "non-orientable prismatic graph on {} vertices has no hitting set of size at most {SMALL_HITTING_BOUND}",
            g.n()
        )));
    }
    clique_cover_exact(g)
}

struct ExactSearch<'a> {
    g: &'a Graph,
    triangles: Vec<(Triangle, BitSet)>,
    chosen: Vec<usize>,
    best: usize,
    best_set: Vec<usize>,
}

impl ExactSearch<'_> {
    /// Preorder over increasing index sequences, which is lexicographic order
    /// of the triangle lists, so strict improvement keeps the least optimum.
    fn visit(&mut self, start: usize, used: &BitSet) {
        let n = self.g.n();
        let t = self.chosen.len();
        let free = self.g.vertex_set().difference(used);
        if n - 2 * t - free.len() / 2 < self.best {
            let size = n - 2 * t - max_matching_within(self.g, &free).len();
            if size < self.best {
                self.best = size;
                self.best_set = self.chosen.clone();
            }
        }
        // vertices still reachable by a further triangle cost at least 1/3
        // each, the others at least 1/2
        let mut reach = BitSet::new(n);
        for (_, set) in self.triangles[start..].iter().filter(|(_, s)| s.is_disjoint(used)) {
            reach.union_with(set);
        }
        let c = reach.len();
        let rest = free.len() - c;
        let lower = t + (2 * c + 3 * rest).div_ceil(6);
        if lower >= self.best {
            return;
        }
        for j in start..self.triangles.len() {
            if self.triangles[j].1.is_disjoint(used) {
                let next = used.union(&self.triangles[j].1);
                self.chosen.push(j);
                self.visit(j + 1, &next);
                self.chosen.pop();
            }
        }
    }
}

/// Exact minimum cover of a K4-free graph on at most 27 vertices by
/// enumerating disjoint triangle sets with a fractional lower bound.
pub fn clique_cover_exact(g: &Graph) -> Result<CliqueCover> {
    if g.n() > EXACT_COVER_LIMIT {
        return Err(Error::SizeLimit {
            what: "exact clique cover",
            limit: EXACT_COVER_LIMIT,
            actual: g.n(),
        });
    }
    require_k4_free(g)?;
    let triangles: Vec<(Triangle, BitSet)> = g.triangles().iter().map(|t| (*t, t.as_set(g.n()))).collect();
    let mut s = ExactSearch {
        g,
        triangles,
        chosen: Vec::new(),
        best: usize::MAX,
        best_set: Vec::new(),
    };
    s.visit(0, &BitSet::new(g.n()));
    let tris = s.best_set.iter().map(|&i| s.triangles[i].0).collect();
    Ok(complete(g, tris))
}

/// Exhaustive oracle on at most 18 vertices: all disjoint triangle sets,
/// with maximum matchings taken from a subset table. On prismatic inputs
/// only triangle sets whose remainder is perfectly matchable are scored
/// (apart from the empty set), which is enough by [`normalize_cover`].
pub fn clique_cover_bruteforce(g: &Graph) -> Result<CliqueCover> {
    let n = g.n();
    if n > BRUTEFORCE_COVER_LIMIT {
        return Err(Error::SizeLimit {
            what: "brute-force clique cover",
            limit: BRUTEFORCE_COVER_LIMIT,
            actual: n,
        });
    }
    require_k4_free(g)?;
    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect();
    // nu[mask] = matching number of the subgraph induced by mask
    let mut nu = vec![0u8; 1 << n];
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = nu[rest];
        let mut cand = adj[v] as usize & rest;
        while cand != 0 {
            let u = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            best = best.max(1 + nu[rest & !(1 << u)]);
        }
        nu[mask] = best;
    }
    let prismatic = is_prismatic(g);
    let tris: Vec<(Triangle, usize)> = g
        .triangles()
        .iter()
        .map(|t| (*t, t.0.iter().fold(0usize, |m, &v| m | 1 << v)))
        .collect();
    let full = (1usize << n) - 1;

    struct Walk<'a> {
        nu: &'a [u8],
        tris: &'a [(Triangle, usize)],
        prismatic: bool,
        best: Option<(usize, Vec<usize>)>,
    }
    impl Walk<'_> {
        fn go(&mut self, start: usize, used: usize, chosen: &mut Vec<usize>, full: usize) {
            let free = full & !used;
            let f = free.count_ones() as usize;
            let m = self.nu[free] as usize;
            let admissible = !self.prismatic || chosen.is_empty() || 2 * m == f;
            if admissible {
                let size = chosen.len() + f - m;
                if self.best.as_ref().is_none_or(|(s, _)| size < *s) {
                    self.best = Some((size, chosen.clone()));
                }
            }
            for j in start..self.tris.len() {
                if self.tris[j].1 & used == 0 {
                    chosen.push(j);
                    self.go(j + 1, used | self.tris[j].1, chosen, full);
                    chosen.pop();
                }
            }
        }
    }
    let mut w = Walk {
        nu: &nu,
        tris: &tris,
        prismatic,
        best: None,
    };
    w.go(0, 0, &mut Vec::new(), full);
    let (_, chosen) = w.best.expect("the empty set is always scored");
    let triangles: Vec<Triangle> = chosen.iter().map(|&j| tris[j].0).collect();
    let used = chosen.iter().fold(0usize, |m, &j| m | tris[j].1);

    // read a maximum matching back out of the table
    let mut edges = Vec::new();
    let mut singletons = Vec::new();
    let mut mask = full & !used;
    while mask != 0 {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let partner = (0..n).find(|&u| adj[v] as usize & rest & (1 << u) != 0 && nu[mask] == 1 + nu[rest & !(1 << u)]);
        match partner {
            Some(u) => {
                edges.push((v, u));
                mask = rest & !(1 << u);
            }
            None => {
                singletons.push(v);
                mask = rest;
            }
        }
    }
    Ok(CliqueCover::new(triangles, edges, singletons))
}

/// Rewrites a cover of a prismatic graph until it has no triangle or no
/// singleton. Each step trades a triangle `T` and a singleton `u` for the
/// edges `T - w` and `uw`, where `w` is the unique neighbour of `u` in `T`.
pub fn normalize_cover(g: &Graph, c: &CliqueCover) -> Result<CliqueCover> {
    require_prismatic(g)?;
    c.validate(g)?;
    let mut triangles = c.triangles.clone();
    let mut edges = c.edges.clone();
    let mut singletons = c.singletons.clone();
    triangles.sort_unstable();
    singletons.sort_unstable();
    // exchange the smallest triangle with the smallest singleton each round
    while !triangles.is_empty() && !singletons.is_empty() {
        let t = triangles.remove(0);
        let u = singletons.remove(0);
        let w = t
            .0
            .into_iter()
            .find(|&x| g.has_edge(u, x))
            .expect("prismatic: a vertex outside a triangle sees exactly one of its vertices");
        let rest: Vec<usize> = t.0.into_iter().filter(|&x| x != w).collect();
        edges.push((rest[0], rest[1]));
        edges.push((u.min(w), u.max(w)));
    }
    Ok(CliqueCover::new(triangles, edges, singletons))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{line_graph_k33, prism, rotator, schlafli_complement, twister};
    use crate::graph::build_graph;

    /// a=0 b=1 c=2 d=3 e=4 f=5
    fn mauvais() -> Graph {
        build_graph(6, &[(0, 1), (1, 2), (1, 4), (2, 4), (4, 5), (2, 3)]).unwrap()
    }

    fn k3_plus_k1() -> Graph {
        build_graph(4, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    #[test]
    fn mauvais_prefers_edges() {
        let g = mauvais();
        assert!(is_prismatic(&g));
        let c = clique_cover_small_hitting(&g).unwrap();
        c.validate(&g).unwrap();
        assert_eq!(c.size(), 3);
        assert!(c.triangles.is_empty());
        assert_eq!(clique_cover_bruteforce(&g).unwrap().size(), 3);
        assert_eq!(clique_cover_exact(&g).unwrap().size(), 3);
    }

    #[test]
    fn trivial_covers() {
        let k3 = build_graph(3, &[(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(clique_cover_bruteforce(&k3).unwrap().size(), 1);
        assert_eq!(clique_cover_bruteforce(&Graph::empty(4)).unwrap().size(), 4);
        assert_eq!(clique_cover_bruteforce(&k3_plus_k1()).unwrap().size(), 2);
        assert_eq!(clique_cover_bruteforce(&Graph::empty(0)).unwrap().size(), 0);
        assert_eq!(clique_cover_exact(&Graph::empty(1)).unwrap().singletons, vec![0]);
    }

    #[test]
    fn triangle_free_is_matching() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c = clique_cover_via_hitting_set(&g, &[]).unwrap();
        assert_eq!(c.size(), 3);
        assert_eq!(c.edges.len(), 2);
    }

    #[test]
    fn prism_two_triangles() {
        let p = prism();
        let c = clique_cover_via_hitting_set(&p, &[0, 3]).unwrap();
        assert_eq!(c.triangles, vec![Triangle([0, 1, 2]), Triangle([3, 4, 5])]);
        assert_eq!(c.to_string(), "t 0 1 2\nt 3 4 5\nsize 2\n");
    }

    #[test]
    fn rejects_bad_hitting_sets() {
        let p = prism();
        assert!(matches!(clique_cover_via_hitting_set(&p, &[0]), Err(Error::NotHittingSet(_))));
        assert!(matches!(
            clique_cover_via_hitting_set(&p, &[0, 1, 2, 3, 4, 5]),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn nonorientable_small_graphs() {
        for g in [rotator(), twister()] {
            let c = clique_cover_nonorientable(&g).unwrap();
            c.validate(&g).unwrap();
            assert_eq!(c.size(), clique_cover_bruteforce(&g).unwrap().size());
        }
        assert_eq!(clique_cover_nonorientable(&prism()), Err(Error::Orientable));
        assert!(matches!(clique_cover_nonorientable(&k3_plus_k1()), Err(Error::NotPrismatic(_))));
    }

    #[test]
    fn sigma_is_nine_triangles() {
        let sigma = schlafli_complement();
        let c = clique_cover_nonorientable(&sigma).unwrap();
        c.validate(&sigma).unwrap();
        assert_eq!(c.size(), 9);
        assert_eq!(c.triangles.len(), 9);
    }

    #[test]
    fn exact_agrees_with_bruteforce() {
        for g in [prism(), rotator(), twister(), line_graph_k33(), mauvais()] {
            let a = clique_cover_exact(&g).unwrap();
            let b = clique_cover_bruteforce(&g).unwrap();
            a.validate(&g).unwrap();
            b.validate(&g).unwrap();
            assert_eq!(a.size(), b.size());
        }
    }

    #[test]
    fn normalization_exchange() {
        let g = k3_plus_k1();
        // not prismatic, so only the shape of the exchange is checked by hand
        assert!(normalize_cover(&g, &CliqueCover::new(vec![Triangle([0, 1, 2])], vec![], vec![3])).is_err());

        // prism + pendant-free example: cover {a1 a2 a3}, {b1 b2}, {b3}
        let p = prism();
        let c = CliqueCover::new(vec![Triangle([0, 1, 2])], vec![(3, 4)], vec![5]);
        let nc = normalize_cover(&p, &c).unwrap();
        nc.validate(&p).unwrap();
        assert_eq!(nc.size(), c.size());
        assert!(nc.is_normalized());
        assert_eq!(nc.edges, vec![(0, 1), (2, 5), (3, 4)]);
    }

    #[test]
    fn validate_catches_errors() {
        let p = prism();
        let overlap = CliqueCover::new(vec![Triangle([0, 1, 2])], vec![(0, 3)], vec![4, 5]);
        assert!(overlap.validate(&p).is_err());
        let missing = CliqueCover::new(vec![Triangle([0, 1, 2])], vec![], vec![3, 4]);
        assert!(missing.validate(&p).is_err());
        let non_edge = CliqueCover::new(vec![], vec![(0, 4), (1, 3), (2, 5)], vec![]);
        assert!(non_edge.validate(&p).is_err());
    }
}
