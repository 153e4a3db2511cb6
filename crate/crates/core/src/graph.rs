//! Immutable simple undirected graphs with bit-row adjacency.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::generators::SchlafliVertex;

/// Three distinct vertices, stored in ascending order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triangle(pub [usize; 3]);

impl Triangle {
    pub fn new(a: usize, b: usize, c: usize) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        debug_assert!(v[0] != v[1] && v[1] != v[2], "degenerate triangle {v:?}");
        Triangle(v)
    }

    #[inline]
    pub fn vertices(&self) -> [usize; 3] {
        self.0
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.0.contains(&v)
    }

    pub fn is_disjoint(&self, other: &Triangle) -> bool {
        self.0.iter().all(|v| !other.contains(*v))
    }

    pub fn as_set(&self, capacity: usize) -> BitSet {
        BitSet::from_iter(capacity, self.0)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{},{}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Opaque per-vertex provenance tag. Algorithms never read labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Label {
    Schlafli(SchlafliVertex),
    Triangle(Triangle),
    Tag(String),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Schlafli(v) => write!(f, "{v}"),
            Label::Triangle(t) => write!(f, "T({},{},{})", t.0[0], t.0[1], t.0[2]),
            Label::Tag(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for Label {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        if s.is_empty() || s.chars().any(char::is_whitespace) {
            return Err(format!("label {s:?} must be a non-empty token"));
        }
        if let Ok(v) = s.parse::<SchlafliVertex>() {
            return Ok(Label::Schlafli(v));
        }
        if let Some(inner) = s.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
            let parts: Vec<_> = inner.split(',').map(str::parse::<usize>).collect();
            if let [Ok(a), Ok(b), Ok(c)] = parts[..] {
                if a < b && b < c {
                    return Ok(Label::Triangle(Triangle([a, b, c])));
                }
            }
        }
        Ok(Label::Tag(s.to_string()))
    }
}

/// A simple undirected graph on vertices `0..n`.
pub struct Graph {
    n: usize,
    rows: Vec<BitSet>,
    labels: Option<Vec<Label>>,
    triangles: OnceLock<Vec<Triangle>>,
}

impl Clone for Graph {
    fn clone(&self) -> Self {
        Graph {
            n: self.n,
            rows: self.rows.clone(),
            labels: self.labels.clone(),
            triangles: self.triangles.clone(),
        }
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows && self.labels == other.labels
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

/// Builds a graph from an edge list; duplicate pairs are merged.
pub fn build_graph(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
    Graph::from_edges(n, edges.iter().copied())
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            rows: vec![BitSet::new(n); n],
            labels: None,
            triangles: OnceLock::new(),
        }
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.rows[u].insert(v);
            g.rows[v].insert(u);
        }
        Ok(g)
    }

    /// Builds from symmetric rows. Caller guarantees symmetry and no loops.
    pub(crate) fn from_rows(rows: Vec<BitSet>) -> Self {
        let n = rows.len();
        debug_assert!((0..n).all(|u| !rows[u].contains(u)));
        debug_assert!((0..n).all(|u| rows[u].iter().all(|v| rows[v].contains(u))));
        Graph {
            n,
            rows,
            labels: None,
            triangles: OnceLock::new(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<Label>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(BitSet::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.rows[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn labels(&self) -> Option<&[Label]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&Label> {
        self.labels.as_ref().map(|l| &l[v])
    }

    /// First vertex carrying `label`.
    pub fn find_label(&self, label: &Label) -> Option<usize> {
        self.labels.as_ref()?.iter().position(|l| l == label)
    }

    pub fn vertex_set(&self) -> BitSet {
        BitSet::full(self.n)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::NoSuchVertex { vertex: v, n: self.n })
        }
    }

    /// All triangles, lexicographically sorted.
    pub fn triangles(&self) -> &[Triangle] {
        self.triangles.get_or_init(|| {
            let mut out = Vec::new();
            for u in 0..self.n {
                for v in self.rows[u].iter().filter(|&v| v > u) {
                    let common = self.rows[u].intersection(&self.rows[v]);
                    for w in common.iter().filter(|&w| w > v) {
                        out.push(Triangle([u, v, w]));
                    }
                }
            }
            out
        })
    }

    /// Triangles containing `v`, sorted.
    pub fn triangles_through(&self, v: usize) -> Vec<Triangle> {
        self.triangles().iter().copied().filter(|t| t.contains(v)).collect()
    }

    pub fn is_triangle(&self, t: &Triangle) -> bool {
        let [a, b, c] = t.0;
        self.has_edge(a, b) && self.has_edge(a, c) && self.has_edge(b, c)
    }

    /// Vertices lying in at least one triangle.
    pub fn core(&self) -> BitSet {
        let mut w = BitSet::new(self.n);
        for t in self.triangles() {
            for v in t.0 {
                w.insert(v);
            }
        }
        w
    }

    /// Subgraph induced by `vertices`, relabeled in ascending order of the
    /// original ids. Labels are carried over.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<InducedSubgraph> {
        let mut keep = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        for &v in &keep {
            self.check_vertex(v)?;
        }
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let k = keep.len();
        let rows = keep
            .iter()
            .map(|&v| BitSet::from_iter(k, self.rows[v].iter().filter_map(|u| Some(index[u]).filter(|&i| i != usize::MAX))))
            .collect();
        let mut graph = Graph::from_rows(rows);
        if let Some(labels) = &self.labels {
            graph.labels = Some(keep.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(InducedSubgraph {
            graph,
            vertex_map: keep,
        })
    }

    /// Subgraph induced by the members of `set`.
    pub fn induced_by_set(&self, set: &BitSet) -> InducedSubgraph {
        self.induced_subgraph(&set.to_vec())
            .expect("bitset members are in range")
    }

    pub fn complement(&self) -> Graph {
        let rows = (0..self.n)
            .map(|u| {
                let mut r = BitSet::full(self.n).difference(&self.rows[u]);
                r.remove(u);
                r
            })
            .collect();
        let mut g = Graph::from_rows(rows);
        g.labels = self.labels.clone();
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let edges = self
            .edges()
            .into_iter()
            .chain(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, edges).expect("shifted edges are valid")
    }

    /// The intersection graph of the triangles of this graph.
    pub fn derived_graph(&self) -> DerivedGraph {
        let triangles = self.triangles().to_vec();
        let t = triangles.len();
        // triangles through each vertex, as a set of triangle indices
        let mut through = vec![BitSet::new(t); self.n];
        for (i, tri) in triangles.iter().enumerate() {
            for v in tri.0 {
                through[v].insert(i);
            }
        }
        let rows = triangles
            .iter()
            .enumerate()
            .map(|(i, tri)| {
                let mut r = BitSet::new(t);
                for v in tri.0 {
                    r.union_with(&through[v]);
                }
                r.remove(i);
                r
            })
            .collect();
        let labels = triangles.iter().map(|&tri| Label::Triangle(tri)).collect();
        DerivedGraph {
            graph: Graph::from_rows(rows).with_labels(labels),
            triangles,
        }
    }

    /// Connected components of the subgraph induced by `within`, each sorted,
    /// ordered by smallest member.
    pub fn components_within(&self, within: &BitSet) -> Vec<Vec<usize>> {
        let mut seen = BitSet::new(self.n);
        let mut out = Vec::new();
        for s in within.iter() {
            if seen.contains(s) {
                continue;
            }
            let mut comp = vec![s];
            seen.insert(s);
            let mut head = 0;
            while head < comp.len() {
                let u = comp[head];
                head += 1;
                for w in self.rows[u].iter() {
                    if within.contains(w) && seen.insert(w) {
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_within(&self.vertex_set())
    }
}

/// An induced subgraph together with the map back to the host's vertex ids.
#[derive(Debug, Clone)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `vertex_map[i]` is the host vertex behind subgraph vertex `i`.
    pub vertex_map: Vec<usize>,
}

/// Derived graph: one vertex per triangle of the source graph, adjacent when
/// the triangles share a source vertex.
#[derive(Debug, Clone)]
pub struct DerivedGraph {
    pub graph: Graph,
    /// `triangles[i]` is the source triangle behind derived vertex `i`.
    pub triangles: Vec<Triangle>,
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn prism() -> Graph {
        build_graph(
            6,
            &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap()
    }

    fn brute_triangles(g: &Graph) -> usize {
        let n = g.n();
        let mut count = 0;
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if g.has_edge(a, b) && g.has_edge(a, c) && g.has_edge(b, c) {
                        count += 1;
                    }
                }
            }
        }
        count
    }

    #[test]
    fn build_examples() {
        let k3 = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.edge_count(), 3);
        assert_eq!(k3.triangles(), &[Triangle([0, 1, 2])]);

        let e = build_graph(4, &[]).unwrap();
        assert_eq!(e.edge_count(), 0);
        assert!(e.triangles().is_empty());

        let p = prism();
        assert_eq!(p.edge_count(), 9);
        assert_eq!(p.triangles().len(), 2);
    }

    #[test]
    fn build_dedups_and_rejects() {
        let g = build_graph(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(build_graph(3, &[(0, 3)]), Err(Error::VertexOutOfRange(0, 3, 3)));
        assert_eq!(build_graph(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn core_of_small_graphs() {
        let g = build_graph(4, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(g.core().to_vec(), vec![0, 1, 2]);
        let c6 = build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(c6.core().is_empty());
    }

    #[test]
    fn derived_graph_small() {
        let p = prism();
        let d = p.derived_graph();
        assert_eq!(d.graph.n(), 2);
        assert_eq!(d.graph.edge_count(), 0);

        let k3 = build_graph(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.derived_graph().graph.n(), 1);

        // bowtie: two triangles sharing vertex 0
        let bow = build_graph(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap();
        let d = bow.derived_graph();
        assert_eq!(d.graph.n(), 2);
        assert!(d.graph.has_edge(0, 1));
        assert_eq!(d.graph.label(0), Some(&Label::Triangle(Triangle([0, 1, 2]))));
    }

    #[test]
    fn induced_subgraph_relabels() {
        let p = prism();
        let sub = p.induced_subgraph(&[5, 3, 4]).unwrap();
        assert_eq!(sub.vertex_map, vec![3, 4, 5]);
        assert_eq!(sub.graph.edge_count(), 3);
        assert_eq!(sub.graph.triangles().len(), 1);

        let empty = p.induced_subgraph(&[]).unwrap();
        assert_eq!(empty.graph.n(), 0);

        assert!(matches!(
            p.induced_subgraph(&[0, 6]),
            Err(Error::NoSuchVertex { vertex: 6, n: 6 })
        ));
    }

    #[test]
    fn label_text_round_trip() {
        for text in ["r^1_2", "T(0,4,9)", "s^3_1#2", "a1b2"] {
            let l: Label = text.parse().unwrap();
            assert_eq!(l.to_string(), text);
        }
        assert!(matches!("T(2,1,0)".parse::<Label>(), Ok(Label::Tag(_))));
    }

    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2).prop_map(
                move |bits| {
                    let mut edges = Vec::new();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                edges.push((u, v));
                            }
                            k += 1;
                        }
                    }
                    build_graph(n, &edges).unwrap()
                },
            )
        })
    }

    proptest! {
        #[test]
        fn triangle_count_matches_brute_force(g in arb_graph(14)) {
            prop_assert_eq!(g.triangles().len(), brute_triangles(&g));
            let mut sorted = g.triangles().to_vec();
            sorted.sort();
            prop_assert_eq!(sorted.as_slice(), g.triangles());
        }

        #[test]
        fn derived_graph_matches_pairwise_intersections(g in arb_graph(12)) {
            let d = g.derived_graph();
            let tris = g.triangles();
            prop_assert_eq!(d.graph.n(), tris.len());
            let mut expected = 0;
            for i in 0..tris.len() {
                for j in i + 1..tris.len() {
                    if !tris[i].is_disjoint(&tris[j]) {
                        expected += 1;
                    }
                }
            }
            prop_assert_eq!(d.graph.edge_count(), expected);
        }

        #[test]
        fn core_is_union_of_triangles(g in arb_graph(14)) {
            let mut union = std::collections::BTreeSet::new();
            for t in g.triangles() {
                union.extend(t.0);
            }
            prop_assert_eq!(g.core().to_vec(), union.into_iter().collect::<Vec<_>>());
        }
    }
}
