//! Isomorphism testing for small graphs by backtracking.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const ISO_LIMIT: usize = 12;

/// Decides whether `g` and `h` are isomorphic. Both graphs must have at most
/// [`ISO_LIMIT`] vertices.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<bool> {
    for x in [g, h] {
        if x.n() > ISO_LIMIT {
            return Err(Error::SizeLimit {
                what: "isomorphism test",
                limit: ISO_LIMIT,
                actual: x.n(),
            });
        }
    }
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return Ok(false);
    }
    let mut dg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..h.n()).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return Ok(false);
    }
    // map g's vertices in descending degree order
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    Ok(extend(g, h, &order, 0, &mut map, &mut used))
}

fn extend(g: &Graph, h: &Graph, order: &[usize], depth: usize, map: &mut [usize], used: &mut [bool]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..h.n() {
        if used[w] || h.degree(w) != g.degree(v) {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, order, depth + 1, map, used) {
            return true;
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    false
}
