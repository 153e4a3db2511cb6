//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm, `O(V^3)`).

use std::collections::VecDeque;

use crate::bitset::BitSet;
use crate::graph::Graph;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    mate: Vec<Option<usize>>,
}

impl Matching {
    pub fn mate(&self, v: usize) -> Option<usize> {
        self.mate[v]
    }

    /// Matched pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.mate
            .iter()
            .enumerate()
            .filter_map(|(u, m)| m.filter(|&v| u < v).map(|v| (u, v)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.mate.iter().filter(|m| m.is_some()).count() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Edges exist, mates are symmetric and every vertex is used at most once.
    pub fn is_valid(&self, g: &Graph) -> bool {
        self.mate.len() == g.n()
            && self.mate.iter().enumerate().all(|(u, m)| match *m {
                None => true,
                Some(v) => v < g.n() && g.has_edge(u, v) && self.mate[v] == Some(u),
            })
    }
}

struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl Blossom<'_> {
    fn lca(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Grows an alternating tree from `root`; returns the free endpoint of an
    /// augmenting path.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.used.iter_mut().for_each(|x| *x = false);
        self.parent.iter_mut().for_each(|x| *x = NONE);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        self.queue.clear();
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            let adj = self.adj;
            for &to in &adj[v] {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.used[next] = true;
                    self.queue.push_back(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }
}

fn solve(n: usize, adj: &[Vec<usize>]) -> Vec<usize> {
    let mut b = Blossom {
        adj,
        mate: vec![NONE; n],
        parent: vec![NONE; n],
        base: (0..n).collect(),
        used: vec![false; n],
        in_blossom: vec![false; n],
        queue: VecDeque::new(),
    };
    for (v, nbrs) in adj.iter().enumerate() {
        if b.mate[v] == NONE {
            if let Some(&u) = nbrs.iter().find(|&&u| b.mate[u] == NONE) {
                b.mate[v] = u;
                b.mate[u] = v;
            }
        }
    }
    for root in 0..n {
        if b.mate[root] == NONE {
            if let Some(end) = b.find_path(root) {
                b.augment(end);
            }
        }
    }
    b.mate
}

/// A maximum matching of `g`. Deterministic: vertices and neighbours are
/// scanned in ascending order.
pub fn max_matching(g: &Graph) -> Matching {
    max_matching_within(g, &g.vertex_set())
}

/// A maximum matching of the subgraph induced by `allowed`; vertices outside
/// it stay unmatched.
pub fn max_matching_within(g: &Graph, allowed: &BitSet) -> Matching {
    let n = g.n();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|v| {
            if allowed.contains(v) {
                g.neighbors(v).intersection(allowed).to_vec()
            } else {
                Vec::new()
            }
        })
        .collect();
    let mate = solve(n, &adj);
    Matching {
        mate: mate.into_iter().map(|m| (m != NONE).then_some(m)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{prism, schlafli_complement};
    use crate::graph::build_graph;
    use proptest::prelude::*;

    /// Exhaustive search over simple alternating paths starting at a free
    /// vertex.
    fn has_augmenting_path(g: &Graph, m: &Matching) -> bool {
        fn extend(g: &Graph, m: &Matching, v: usize, visited: &mut Vec<bool>) -> bool {
            for u in g.neighbors(v).iter() {
                if visited[u] || m.mate(v) == Some(u) {
                    continue;
                }
                match m.mate(u) {
                    None => return true,
                    Some(w) if !visited[w] => {
                        visited[u] = true;
                        visited[w] = true;
                        if extend(g, m, w, visited) {
                            return true;
                        }
                        visited[u] = false;
                        visited[w] = false;
                    }
                    Some(_) => {}
                }
            }
            false
        }
        (0..g.n()).filter(|&v| m.mate(v).is_none()).any(|v| {
            let mut visited = vec![false; g.n()];
            visited[v] = true;
            extend(g, m, v, &mut visited)
        })
    }

    fn brute_size(g: &Graph) -> usize {
        let n = g.n();
        let mut best = vec![0usize; 1 << n];
        for mask in 1usize..1 << n {
            let v = mask.trailing_zeros() as usize;
            let rest = mask & !(1 << v);
            let mut b = best[rest];
            for u in g.neighbors(v).iter() {
                if rest & (1 << u) != 0 {
                    b = b.max(1 + best[rest & !(1 << u)]);
                }
            }
            best[mask] = b;
        }
        best[(1 << n) - 1]
    }

    #[test]
    fn odd_cycle_with_tail() {
        // 5-cycle 0..4 plus pendant 5 on vertex 0 forces a blossom
        let g = build_graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap();
        let m = max_matching(&g);
        assert_eq!(m.len(), 3);
        assert!(m.is_valid(&g));
    }

    #[test]
    fn perfect_on_prism_and_sigma() {
        assert_eq!(max_matching(&prism()).len(), 3);
        let m = max_matching(&schlafli_complement());
        assert_eq!(m.len(), 13);
    }

    #[test]
    fn within_respects_mask() {
        let p = prism();
        let m = max_matching_within(&p, &BitSet::from_iter(6, [0, 1, 2]));
        assert_eq!(m.len(), 1);
        assert!(m.edges().iter().all(|&(u, v)| u < 3 && v < 3));
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        assert!(max_matching(&g).is_empty());
    }

    proptest! {
        #[test]
        fn maximum_on_random_graphs(n in 1usize..13, density in 0.0f64..1.0, seed in any::<u64>()) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.gen_bool(density) {
                        edges.push((u, v));
                    }
                }
            }
            let g = build_graph(n, &edges).unwrap();
            let m = max_matching(&g);
            prop_assert!(m.is_valid(&g));
            prop_assert!(!has_augmenting_path(&g, &m));
            prop_assert_eq!(m.len(), brute_size(&g));
        }
    }
}
