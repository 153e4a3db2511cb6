//! Membership tests for the structural classes the solvers dispatch on.
//!
//! Every negative answer comes with an [`Obstruction`] that can be re-checked
//! against the host graph with [`Obstruction::validate`].

use std::collections::VecDeque;
use std::fmt;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::generators::{rotator, twister};
use crate::graph::{Graph, Triangle};

/// Triangle-count cap for the rotator/twister search.
pub const OBSTRUCTION_SEARCH_CAP: usize = 2000;

/// One parity constraint between two vertex-disjoint triangles: `odd` is set
/// when the matching between them reverses the ascending cyclic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParityConstraint {
    pub first: Triangle,
    pub second: Triangle,
    pub odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    /// `vertex` has `count != 1` neighbours in `triangle`.
    NotUniqueNeighbour {
        triangle: Triangle,
        vertex: usize,
        count: usize,
    },
    /// `embedding[i]` is the host vertex playing rotator vertex `i`; rotator
    /// vertices 0, 1, 2 form the center.
    Rotator { embedding: [usize; 9], center: Triangle },
    Twister { embedding: [usize; 10] },
    Claw { center: usize, leaves: [usize; 3] },
    /// Edge `edge` with two non-adjacent common neighbours.
    Diamond { edge: (usize, usize), apexes: (usize, usize) },
    K4([usize; 4]),
    /// A cycle of parity constraints whose parities sum to an odd number.
    ParityCycle(Vec<ParityConstraint>),
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |vs: &[usize]| vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
        match self {
            Obstruction::NotUniqueNeighbour { triangle, vertex, count } => write!(
                f,
                "vertex {vertex} has {count} neighbours in triangle {triangle}"
            ),
            Obstruction::Rotator { embedding, center } => {
                write!(f, "rotator {} center {center}", join(embedding))
            }
            Obstruction::Twister { embedding } => write!(f, "twister {}", join(embedding)),
            Obstruction::Claw { center, leaves } => {
                write!(f, "claw center {center} leaves {}", join(leaves))
            }
            Obstruction::Diamond { edge, apexes } => write!(
                f,
                "diamond edge {} {} apexes {} {}",
                edge.0, edge.1, apexes.0, apexes.1
            ),
            Obstruction::K4(vs) => write!(f, "K4 {}", join(vs)),
            Obstruction::ParityCycle(cycle) => {
                write!(f, "parity cycle")?;
                for c in cycle {
                    write!(f, " {}{}{}", c.first, if c.odd { "~" } else { "=" }, c.second)?;
                }
                Ok(())
            }
        }
    }
}

impl Obstruction {
    /// Re-checks that the reported vertices realize the claimed pattern in `g`.
    pub fn validate(&self, g: &Graph) -> bool {
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < g.n());
        match self {
            Obstruction::NotUniqueNeighbour { triangle, vertex, count } => {
                in_range(&triangle.0)
                    && *vertex < g.n()
                    && g.is_triangle(triangle)
                    && !triangle.contains(*vertex)
                    && neighbours_in(g, *vertex, triangle) == *count
                    && *count != 1
            }
            Obstruction::Rotator { embedding, center } => {
                in_range(embedding)
                    && Triangle::new(embedding[0], embedding[1], embedding[2]) == *center
                    && realizes_induced(g, &rotator(), embedding)
            }
            Obstruction::Twister { embedding } => in_range(embedding) && realizes_induced(g, &twister(), embedding),
            Obstruction::Claw { center, leaves } => {
                in_range(leaves)
                    && *center < g.n()
                    && leaves.iter().all(|&l| l != *center && g.has_edge(*center, l))
                    && !g.has_edge(leaves[0], leaves[1])
                    && !g.has_edge(leaves[0], leaves[2])
                    && !g.has_edge(leaves[1], leaves[2])
            }
            Obstruction::Diamond { edge: (u, v), apexes: (x, y) } => {
                let vs = [*u, *v, *x, *y];
                in_range(&vs)
                    && distinct(&vs)
                    && g.has_edge(*u, *v)
                    && [*x, *y].iter().all(|&a| g.has_edge(a, *u) && g.has_edge(a, *v))
                    && !g.has_edge(*x, *y)
            }
            Obstruction::K4(vs) => {
                in_range(vs)
                    && distinct(vs)
                    && (0..4).all(|i| (i + 1..4).all(|j| g.has_edge(vs[i], vs[j])))
            }
            Obstruction::ParityCycle(cycle) => {
                if cycle.is_empty() {
                    return false;
                }
                let closed = (0..cycle.len()).all(|k| cycle[k].second == cycle[(k + 1) % cycle.len()].first);
                let each_ok = cycle.iter().all(|c| {
                    in_range(&c.first.0)
                        && in_range(&c.second.0)
                        && g.is_triangle(&c.first)
                        && g.is_triangle(&c.second)
                        && c.first.is_disjoint(&c.second)
                        && matching_parity(g, &c.first, &c.second) == Some(c.odd)
                });
                let odd = cycle.iter().filter(|c| c.odd).count() % 2 == 1;
                closed && each_ok && odd
            }
        }
    }
}

fn distinct(vs: &[usize]) -> bool {
    (0..vs.len()).all(|i| (i + 1..vs.len()).all(|j| vs[i] != vs[j]))
}

fn neighbours_in(g: &Graph, v: usize, t: &Triangle) -> usize {
    t.0.iter().filter(|&&x| g.has_edge(v, x)).count()
}

fn realizes_induced(g: &Graph, pattern: &Graph, embedding: &[usize]) -> bool {
    distinct(embedding)
        && (0..pattern.n()).all(|i| {
            (i + 1..pattern.n()).all(|j| pattern.has_edge(i, j) == g.has_edge(embedding[i], embedding[j]))
        })
}

/// Outcome of a structural check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No(Obstruction),
}

impl Verdict {
    pub fn holds(&self) -> bool {
        matches!(self, Verdict::Yes)
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match self {
            Verdict::Yes => None,
            Verdict::No(o) => Some(o),
        }
    }
}

/// Every vertex outside a triangle has exactly one neighbour in it.
pub fn check_prismatic(g: &Graph) -> Verdict {
    for t in g.triangles() {
        let set = t.as_set(g.n());
        for v in 0..g.n() {
            if t.contains(v) {
                continue;
            }
            let count = g.neighbors(v).intersection_len(&set);
            if count != 1 {
                return Verdict::No(Obstruction::NotUniqueNeighbour {
                    triangle: *t,
                    vertex: v,
                    count,
                });
            }
        }
    }
    Verdict::Yes
}

pub fn is_prismatic(g: &Graph) -> bool {
    check_prismatic(g).holds()
}

pub(crate) fn require_prismatic(g: &Graph) -> Result<()> {
    match check_prismatic(g) {
        Verdict::Yes => Ok(()),
        Verdict::No(o) => Err(Error::NotPrismatic(o)),
    }
}

/// Parity of the matching between disjoint triangles `s` and `t`, or `None`
/// when some vertex of `s` does not have exactly one neighbour in `t`.
pub fn matching_parity(g: &Graph, s: &Triangle, t: &Triangle) -> Option<bool> {
    let mut image = [0usize; 3];
    let mut hit = [false; 3];
    for (k, &sv) in s.0.iter().enumerate() {
        let mut found = None;
        for (pos, &tv) in t.0.iter().enumerate() {
            if g.has_edge(sv, tv) {
                if found.is_some() {
                    return None;
                }
                found = Some(pos);
            }
        }
        let pos = found?;
        if hit[pos] {
            return None;
        }
        hit[pos] = true;
        image[k] = pos;
    }
    // even permutations of (0,1,2) are exactly the cyclic rotations
    let even = matches!(image, [0, 1, 2] | [1, 2, 0] | [2, 0, 1]);
    Some(!even)
}

/// Union-find over triangle indices carrying the parity to the parent.
struct ParityUnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    parity: Vec<bool>,
}

impl ParityUnionFind {
    fn new(n: usize) -> Self {
        ParityUnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            parity: vec![false; n],
        }
    }

    /// Root of `x` and the parity of `x` relative to it.
    fn find(&mut self, x: usize) -> (usize, bool) {
        let p = self.parent[x];
        if p == x {
            return (x, false);
        }
        let (root, par) = self.find(p);
        self.parent[x] = root;
        self.parity[x] ^= par;
        (root, self.parity[x])
    }

    /// Records `x ^ y == odd`. Returns `None` if already implied, `Some(true)`
    /// if newly merged and `Some(false)` on contradiction.
    fn union(&mut self, x: usize, y: usize, odd: bool) -> Option<bool> {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return if px ^ py == odd { None } else { Some(false) };
        }
        let (big, small) = if self.rank[rx] >= self.rank[ry] { (rx, ry) } else { (ry, rx) };
        self.parent[small] = big;
        self.parity[small] = px ^ py ^ odd;
        if self.rank[big] == self.rank[small] {
            self.rank[big] += 1;
        }
        Some(true)
    }
}

/// Decides orientability by propagating the parity constraints between every
/// pair of vertex-disjoint triangles. Requires a prismatic graph.
pub fn check_orientable(g: &Graph) -> Result<Verdict> {
    require_prismatic(g)?;
    let tris = g.triangles();
    let sets: Vec<BitSet> = tris.iter().map(|t| t.as_set(g.n())).collect();
    let mut uf = ParityUnionFind::new(tris.len());
    // spanning forest of accepted constraints, for extracting a witness cycle
    let mut forest: Vec<Vec<(usize, bool)>> = vec![Vec::new(); tris.len()];
    for i in 0..tris.len() {
        for j in i + 1..tris.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                continue;
            }
            let odd = match matching_parity(g, &tris[i], &tris[j]) {
                Some(p) => p,
                None => {
                    // unreachable for prismatic input
                    return Err(Error::StructureViolation(format!(
                        "triangles {} and {} are not joined by a perfect matching",
                        tris[i], tris[j]
                    )));
                }
            };
            match uf.union(i, j, odd) {
                None => {}
                Some(true) => {
                    forest[i].push((j, odd));
                    forest[j].push((i, odd));
                }
                Some(false) => {
                    let mut cycle = forest_path(&forest, j, i)
                        .into_iter()
                        .map(|(a, b, p)| ParityConstraint { first: tris[a], second: tris[b], odd: p })
                        .collect::<Vec<_>>();
                    cycle.push(ParityConstraint { first: tris[i], second: tris[j], odd });
                    return Ok(Verdict::No(Obstruction::ParityCycle(cycle)));
                }
            }
        }
    }
    Ok(Verdict::Yes)
}

pub fn is_orientable(g: &Graph) -> Result<bool> {
    Ok(check_orientable(g)?.holds())
}

/// Path from `from` to `to` in the forest as `(a, b, parity)` steps.
fn forest_path(forest: &[Vec<(usize, bool)>], from: usize, to: usize) -> Vec<(usize, usize, bool)> {
    let mut prev: Vec<Option<(usize, bool)>> = vec![None; forest.len()];
    let mut seen = vec![false; forest.len()];
    let mut queue = VecDeque::from([from]);
    seen[from] = true;
    while let Some(u) = queue.pop_front() {
        if u == to {
            break;
        }
        for &(w, p) in &forest[u] {
            if !seen[w] {
                seen[w] = true;
                prev[w] = Some((u, p));
                queue.push_back(w);
            }
        }
    }
    let mut steps = Vec::new();
    let mut cur = to;
    while let Some((p, odd)) = prev[cur] {
        steps.push((p, cur, odd));
        cur = p;
    }
    steps.reverse();
    steps
}

/// Result of the rotator/twister search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionSearch {
    Found(Obstruction),
    NotFound,
    /// The graph has more triangles than [`OBSTRUCTION_SEARCH_CAP`].
    NotAttempted { triangles: usize },
}

impl ObstructionSearch {
    pub fn found(&self) -> Option<&Obstruction> {
        match self {
            ObstructionSearch::Found(o) => Some(o),
            _ => None,
        }
    }
}

// pattern vertex orders: the first three form a triangle (the rotator's
// center; one of the twister's two disjoint triangles)
const ROTATOR_ORDER: [usize; 9] = [0, 1, 2, 3, 6, 4, 7, 5, 8];
const TWISTER_ORDER: [usize; 10] = [0, 3, 2, 5, 8, 6, 1, 4, 7, 9];

/// Searches for an induced rotator or twister, anchored on triangles.
pub fn find_rotator_or_twister(g: &Graph) -> ObstructionSearch {
    let t = g.triangles().len();
    if t > OBSTRUCTION_SEARCH_CAP {
        return ObstructionSearch::NotAttempted { triangles: t };
    }
    if let Some(m) = find_induced(g, &rotator(), &ROTATOR_ORDER) {
        let embedding: [usize; 9] = m.try_into().expect("nine vertices");
        let center = Triangle::new(embedding[0], embedding[1], embedding[2]);
        return ObstructionSearch::Found(Obstruction::Rotator { embedding, center });
    }
    if let Some(m) = find_induced(g, &twister(), &TWISTER_ORDER) {
        let embedding: [usize; 10] = m.try_into().expect("ten vertices");
        return ObstructionSearch::Found(Obstruction::Twister { embedding });
    }
    ObstructionSearch::NotFound
}

/// Induced embedding of `pattern` whose first three `order` vertices form a
/// triangle. Returns the map pattern vertex → host vertex.
fn find_induced(g: &Graph, pattern: &Graph, order: &[usize]) -> Option<Vec<usize>> {
    debug_assert!(pattern.is_triangle(&Triangle::new(order[0], order[1], order[2])));
    if g.n() < pattern.n() {
        return None;
    }
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = BitSet::new(g.n());
    for t in g.triangles() {
        let [a, b, c] = t.0;
        for perm in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
            let fits = perm
                .iter()
                .zip(order)
                .all(|(&h, &p)| g.degree(h) >= pattern.degree(p));
            if !fits {
                continue;
            }
            for (&h, &p) in perm.iter().zip(order) {
                map[p] = h;
                used.insert(h);
            }
            if extend_embedding(g, pattern, order, 3, &mut map, &mut used) {
                return Some(map);
            }
            for h in perm {
                used.remove(h);
            }
        }
    }
    None
}

fn extend_embedding(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut BitSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = BitSet::full(g.n()).difference(used);
    for &q in &order[..depth] {
        if pattern.has_edge(p, q) {
            cand.intersect_with(g.neighbors(map[q]));
        } else {
            cand.difference_with(g.neighbors(map[q]));
        }
        if cand.is_empty() {
            return false;
        }
    }
    for h in cand.iter() {
        if g.degree(h) < pattern.degree(p) {
            continue;
        }
        map[p] = h;
        used.insert(h);
        if extend_embedding(g, pattern, order, depth + 1, map, used) {
            return true;
        }
        used.remove(h);
    }
    map[p] = usize::MAX;
    false
}

/// Rigidity: no two non-core vertices share their core neighbourhood, and
/// every non-adjacent pair has a common neighbour in the core.
pub fn is_rigid(g: &Graph) -> Result<bool> {
    require_prismatic(g)?;
    let core = g.core();
    let outside: Vec<usize> = (0..g.n()).filter(|v| !core.contains(*v)).collect();
    let traces: Vec<BitSet> = outside.iter().map(|&v| g.neighbors(v).intersection(&core)).collect();
    for i in 0..traces.len() {
        for j in i + 1..traces.len() {
            if traces[i] == traces[j] {
                return Ok(false);
            }
        }
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if !g.has_edge(u, v) && g.neighbors(u).intersection(g.neighbors(v)).is_disjoint(&core) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn check_clawfree(g: &Graph) -> Verdict {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for a in nb.iter() {
            let mut rest = nb.difference(g.neighbors(a));
            rest.remove(a);
            for b in rest.iter().filter(|&b| b > a) {
                let third = rest.difference(g.neighbors(b));
                if let Some(x) = third.iter().find(|&x| x > b) {
                    return Verdict::No(Obstruction::Claw { center: c, leaves: [a, b, x] });
                }
            }
        }
    }
    Verdict::Yes
}

pub fn is_clawfree(g: &Graph) -> bool {
    check_clawfree(g).holds()
}

/// First edge (in lexicographic order) with two common neighbours, reported
/// as a K4 or a diamond.
pub(crate) fn diamond_or_k4(g: &Graph) -> Option<Obstruction> {
    for (u, v) in g.edges() {
        let common = g.neighbors(u).intersection(g.neighbors(v));
        let mut it = common.iter();
        if let (Some(x), Some(y)) = (it.next(), it.next()) {
            if g.has_edge(x, y) {
                let mut vs = [u, v, x, y];
                vs.sort_unstable();
                return Some(Obstruction::K4(vs));
            }
            return Some(Obstruction::Diamond { edge: (u, v), apexes: (x, y) });
        }
    }
    None
}

pub fn check_diamond_k4_free(g: &Graph) -> Verdict {
    match diamond_or_k4(g) {
        None => Verdict::Yes,
        Some(o) => Verdict::No(o),
    }
}

pub fn is_diamond_k4_free(g: &Graph) -> bool {
    check_diamond_k4_free(g).holds()
}

pub(crate) fn require_diamond_k4_free(g: &Graph) -> Result<()> {
    match diamond_or_k4(g) {
        None => Ok(()),
        Some(o) => Err(Error::NotDiamondK4Free(o)),
    }
}
