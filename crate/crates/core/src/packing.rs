//! Maximum sets of vertex-disjoint triangles in prismatic graphs, and the
//! stable-set engine on the triangle intersection graph.

use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::generators::complete_bipartite;
use crate::graph::{Graph, Triangle};
use crate::hitting_set::{find_hitting_set_at_most, SMALL_HITTING_BOUND};
use crate::iso::is_isomorphic_small;
use crate::recognition::{check_clawfree, require_prismatic, Verdict};
use crate::witness::witness_matrix;

/// Triangle limit for the brute-force oracle.
pub const BRUTEFORCE_PACKING_LIMIT: usize = 60;
/// Graphs up to this many vertices are packed by direct search.
pub const SMALL_PACKING_VERTICES: usize = 27;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TrianglePacking {
    /// Sorted, pairwise vertex-disjoint.
    pub triangles: Vec<Triangle>,
}

impl TrianglePacking {
    pub fn new(mut triangles: Vec<Triangle>) -> Self {
        triangles.sort_unstable();
        TrianglePacking { triangles }
    }

    pub fn len(&self) -> usize {
        self.triangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triangles.is_empty()
    }

    /// Every member is a triangle of `g` and no two share a vertex.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = BitSet::new(g.n());
        self.triangles.iter().all(|t| {
            t.0.iter().all(|&v| v < g.n()) && g.is_triangle(t) && t.0.iter().all(|&v| seen.insert(v))
        })
    }
}

impl fmt::Display for TrianglePacking {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for t in &self.triangles {
            writeln!(f, "t {} {} {}", t.0[0], t.0[1], t.0[2])?;
        }
        writeln!(f, "size {}", self.len())
    }
}

fn packing_search(g: &Graph) -> TrianglePacking {
    struct Walk<'a> {
        tris: Vec<(Triangle, BitSet)>,
        g: &'a Graph,
        chosen: Vec<usize>,
        best: Vec<usize>,
    }
    impl Walk<'_> {
        fn go(&mut self, start: usize, used: &BitSet) {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            let mut reach = BitSet::new(self.g.n());
            for (_, s) in self.tris[start..].iter().filter(|(_, s)| s.is_disjoint(used)) {
                reach.union_with(s);
            }
            if self.chosen.len() + reach.len() / 3 <= self.best.len() {
                return;
            }
            for j in start..self.tris.len() {
                if self.tris[j].1.is_disjoint(used) {
                    let next = used.union(&self.tris[j].1);
                    self.chosen.push(j);
                    self.go(j + 1, &next);
                    self.chosen.pop();
                }
            }
        }
    }
    let mut w = Walk {
        tris: g.triangles().iter().map(|t| (*t, t.as_set(g.n()))).collect(),
        g,
        chosen: Vec::new(),
        best: Vec::new(),
    };
    w.go(0, &BitSet::new(g.n()));
    TrianglePacking::new(w.best.iter().map(|&i| w.tris[i].0).collect())
}

/// Exact maximum packing by branch and bound over the triangle list, bounded
/// by a third of the vertices still coverable. Any graph with at most 60
/// triangles.
pub fn max_triangle_packing_bruteforce(g: &Graph) -> Result<TrianglePacking> {
    let t = g.triangles().len();
    if t > BRUTEFORCE_PACKING_LIMIT {
        return Err(Error::SizeLimit {
            what: "brute-force triangle packing",
            limit: BRUTEFORCE_PACKING_LIMIT,
            actual: t,
        });
    }
    Ok(packing_search(g))
}

/// At most one triangle through each hitter; the largest disjoint choice,
/// lexicographically least among ties.
fn packing_via_hitting_set(g: &Graph, s: &[usize]) -> Result<TrianglePacking> {
    let w = witness_matrix(g)?;
    let options: Vec<Vec<Triangle>> = s.iter().map(|&v| w.triangles_through(v)).collect();
    fn walk(options: &[Vec<Triangle>], used: &mut BitSet, chosen: &mut Vec<Triangle>, best: &mut Option<Vec<Triangle>>) {
        let Some((first, rest)) = options.split_first() else {
            let mut c = chosen.clone();
            c.sort_unstable();
            let better = match best {
                None => true,
                Some(b) => c.len() > b.len() || (c.len() == b.len() && c < *b),
            };
            if better {
                *best = Some(c);
            }
            return;
        };
        walk(rest, used, chosen, best);
        for t in first {
            if t.0.iter().all(|&v| !used.contains(v)) {
                for v in t.0 {
                    used.insert(v);
                }
                chosen.push(*t);
                walk(rest, used, chosen, best);
                chosen.pop();
                for v in t.0 {
                    used.remove(v);
                }
            }
        }
    }
    let mut best = None;
    walk(&options, &mut BitSet::new(g.n()), &mut Vec::new(), &mut best);
    Ok(TrianglePacking::new(best.unwrap_or_default()))
}

/// Maximum packing of a prismatic graph: direct search up to 27 vertices,
/// per-hitter enumeration when a hitting set of at most five vertices
/// exists, and otherwise stable sets in the components of the derived graph.
pub fn max_triangle_packing_prismatic(g: &Graph) -> Result<TrianglePacking> {
    require_prismatic(g)?;
    if g.n() <= SMALL_PACKING_VERTICES {
        return Ok(packing_search(g));
    }
    if let Some(h) = find_hitting_set_at_most(g, SMALL_HITTING_BOUND)? {
        return packing_via_hitting_set(g, &h.vertices);
    }
    max_triangle_packing_derived(g)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    K33,
    ClawFree,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DerivedComponent {
    /// Triangles of the host, sorted.
    pub triangles: Vec<Triangle>,
    pub kind: ComponentKind,
}

/// Components of the derived graph, each tagged `K33`, claw-free, or `None`
/// when it is neither. Any graph is accepted.
pub fn derived_component_kinds(g: &Graph) -> Result<Vec<(Vec<Triangle>, Option<ComponentKind>)>> {
    let d = g.derived_graph();
    let k33 = complete_bipartite(3, 3);
    let mut out = Vec::new();
    for comp in d.graph.components() {
        let sub = d.graph.induced_subgraph(&comp)?.graph;
        let triangles: Vec<Triangle> = comp.iter().map(|&i| d.triangles[i]).collect();
        let kind = if sub.n() == 6 && sub.edge_count() == 9 && is_isomorphic_small(&sub, &k33)? {
            Some(ComponentKind::K33)
        } else if check_clawfree(&sub).holds() {
            Some(ComponentKind::ClawFree)
        } else {
            None
        };
        out.push((triangles, kind));
    }
    Ok(out)
}

/// Components of the derived graph, each tagged as `K33` or claw-free. A
/// component that is neither is reported as a structure violation. Any graph
/// is accepted, so disjoint unions of prismatic graphs can be classified.
pub fn classify_derived_components(g: &Graph) -> Result<Vec<DerivedComponent>> {
    let d = g.derived_graph();
    derived_component_kinds(g)?
        .into_iter()
        .map(|(triangles, kind)| match kind {
            Some(kind) => Ok(DerivedComponent { triangles, kind }),
            None => {
                let index: Vec<usize> = triangles
                    .iter()
                    .map(|t| d.triangles.binary_search(t).expect("triangle of g"))
                    .collect();
                let sub = d.graph.induced_subgraph(&index)?.graph;
                let claw = check_clawfree(&sub);
                let claw = claw.obstruction().expect("not claw-free");
                Err(Error::StructureViolation(format!(
                    "derived component containing {} is neither K3,3 nor claw-free ({claw})",
                    triangles[0]
                )))
            }
        })
        .collect()
}

/// Packing assembled from maximum stable sets of the derived components.
/// For `K33` components the side holding the least triangle is taken.
pub fn max_triangle_packing_derived(g: &Graph) -> Result<TrianglePacking> {
    let d = g.derived_graph();
    let mut out = Vec::new();
    for comp in classify_derived_components(g)? {
        match comp.kind {
            ComponentKind::K33 => {
                let first = comp.triangles[0];
                out.extend(comp.triangles.iter().filter(|t| first.is_disjoint(t) || **t == first));
            }
            ComponentKind::ClawFree => {
                let index: Vec<usize> = comp
                    .triangles
                    .iter()
                    .map(|t| g.triangles().binary_search(t).expect("triangle of g"))
                    .collect();
                let sub = d.graph.induced_subgraph(&index)?.graph;
                out.extend(max_stable_set(&sub).into_iter().map(|i| comp.triangles[i]));
            }
        }
    }
    Ok(TrianglePacking::new(out))
}

/// Maximum stable set of a claw-free graph.
pub fn max_stable_set_clawfree(g: &Graph) -> Result<Vec<usize>> {
    match check_clawfree(g) {
        Verdict::Yes => Ok(max_stable_set(g)),
        Verdict::No(claw) => Err(Error::NotClawFree(claw)),
    }
}

/// Exact maximum stable set by branch and bound: components are solved
/// separately, vertices of degree at most one are taken greedily, and the
/// number of cliques in a greedy clique cover bounds each subproblem.
pub fn max_stable_set(g: &Graph) -> Vec<usize> {
    let mut out = solve_stable(g, g.vertex_set());
    out.sort_unstable();
    out
}

fn solve_stable(g: &Graph, mut cand: BitSet) -> Vec<usize> {
    let mut taken = Vec::new();
    // degree <= 1 vertices belong to some maximum stable set
    loop {
        let low = cand.iter().find(|&v| g.neighbors(v).intersection_len(&cand) <= 1);
        let Some(v) = low else { break };
        taken.push(v);
        cand.remove(v);
        cand.difference_with(g.neighbors(v));
    }
    let comps = g.components_within(&cand);
    if comps.len() > 1 {
        for comp in comps {
            taken.extend(solve_stable(g, BitSet::from_iter(g.n(), comp)));
        }
        return taken;
    }
    if cand.is_empty() {
        return taken;
    }
    let mut best = greedy_stable(g, &cand);
    let mut chosen = Vec::new();
    branch(g, cand, &mut chosen, &mut best);
    taken.extend(best);
    taken
}

fn greedy_stable(g: &Graph, cand: &BitSet) -> Vec<usize> {
    let mut left = cand.clone();
    let mut out = Vec::new();
    while !left.is_empty() {
        let v = left
            .iter()
            .min_by_key(|&v| g.neighbors(v).intersection_len(&left))
            .expect("non-empty");
        out.push(v);
        left.remove(v);
        left.difference_with(g.neighbors(v));
    }
    out
}

fn clique_cover_bound(g: &Graph, cand: &BitSet) -> usize {
    let mut left = cand.clone();
    let mut count = 0;
    while let Some(v) = left.first() {
        left.remove(v);
        let mut pool = left.intersection(g.neighbors(v));
        while let Some(u) = pool.first() {
            left.remove(u);
            pool.remove(u);
            pool.intersect_with(g.neighbors(u));
        }
        count += 1;
    }
    count
}

fn branch(g: &Graph, cand: BitSet, chosen: &mut Vec<usize>, best: &mut Vec<usize>) {
    if cand.is_empty() {
        if chosen.len() > best.len() {
            *best = chosen.clone();
        }
        return;
    }
    if chosen.len() + clique_cover_bound(g, &cand) <= best.len() {
        return;
    }
    let v = cand
        .iter()
        .max_by_key(|&v| (g.neighbors(v).intersection_len(&cand), std::cmp::Reverse(v)))
        .expect("non-empty");
    let mut with = cand.difference(g.neighbors(v));
    with.remove(v);
    chosen.push(v);
    branch(g, with, chosen, best);
    chosen.pop();
    let mut without = cand;
    without.remove(v);
    branch(g, without, chosen, best);
}
