//! The triangle-witness matrix: for every vertex pair, non-adjacent,
//! adjacent with no common neighbour, or the unique common neighbour.

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::graph::{Graph, Triangle};
use crate::recognition::diamond_or_k4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessEntry {
    NotAdjacent,
    AdjacentNoWitness,
    Witness(usize),
}

#[derive(Debug, Clone)]
pub struct TriangleWitnessMatrix {
    n: usize,
    entries: Vec<WitnessEntry>,
}

/// Computes the witness matrix. The graph must be diamond-free and K4-free so
/// that every edge has at most one common neighbour.
pub fn witness_matrix(g: &Graph) -> Result<TriangleWitnessMatrix> {
    if let Some(obs) = diamond_or_k4(g) {
        return Err(Error::NotDiamondK4Free(obs));
    }
    let n = g.n();
    let mut entries = vec![WitnessEntry::NotAdjacent; n * n];
    for u in 0..n {
        for v in g.neighbors(u).iter() {
            entries[u * n + v] = match g.neighbors(u).first_common(g.neighbors(v)) {
                Some(x) => WitnessEntry::Witness(x),
                None => WitnessEntry::AdjacentNoWitness,
            };
        }
    }
    Ok(TriangleWitnessMatrix { n, entries })
}

impl TriangleWitnessMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn entry(&self, u: usize, v: usize) -> WitnessEntry {
        self.entries[u * self.n + v]
    }

    /// Triangles through `v`, read off row `v`, sorted and deduplicated.
    pub fn triangles_through(&self, v: usize) -> Vec<Triangle> {
        let mut out: Vec<Triangle> = (0..self.n)
            .filter_map(|w| match self.entry(v, w) {
                WitnessEntry::Witness(x) if w < x => Some(Triangle::new(v, w, x)),
                _ => None,
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// True when deleting `removed` leaves no triangle: every entry between
    /// surviving vertices is non-adjacent, witness-free, or witnessed by a
    /// removed vertex.
    pub fn is_triangle_free_without(&self, removed: &BitSet) -> bool {
        (0..self.n).filter(|u| !removed.contains(*u)).all(|u| {
            (u + 1..self.n)
                .filter(|v| !removed.contains(*v))
                .all(|v| match self.entry(u, v) {
                    WitnessEntry::Witness(x) => removed.contains(x),
                    _ => true,
                })
        })
    }
}
