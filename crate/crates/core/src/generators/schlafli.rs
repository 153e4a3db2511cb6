//! The complement of the Schläfli graph and its induced subgraphs.

use std::fmt;
use std::str::FromStr;

use crate::graph::{Graph, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tile {
    R,
    S,
    T,
}

impl Tile {
    pub const ALL: [Tile; 3] = [Tile::R, Tile::S, Tile::T];

    fn index(self) -> usize {
        self as usize
    }

    /// The tile whose lines are complete to this tile's columns.
    fn next(self) -> Tile {
        Tile::ALL[(self.index() + 1) % 3]
    }

    fn letter(self) -> char {
        ['r', 's', 't'][self.index()]
    }
}

/// Vertex `tile^line_column` of Σ; `line` and `column` are in `1..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchlafliVertex {
    pub tile: Tile,
    pub line: u8,
    pub column: u8,
}

impl SchlafliVertex {
    pub fn new(tile: Tile, line: u8, column: u8) -> Self {
        assert!((1..=3).contains(&line) && (1..=3).contains(&column), "coordinates in 1..=3");
        SchlafliVertex { tile, line, column }
    }

    pub fn r(line: u8, column: u8) -> Self {
        Self::new(Tile::R, line, column)
    }

    pub fn s(line: u8, column: u8) -> Self {
        Self::new(Tile::S, line, column)
    }

    pub fn t(line: u8, column: u8) -> Self {
        Self::new(Tile::T, line, column)
    }

    /// Vertex id in Σ: tile-major, line-major, column-minor.
    pub fn id(self) -> usize {
        self.tile.index() * 9 + (self.line as usize - 1) * 3 + (self.column as usize - 1)
    }

    pub fn from_id(id: usize) -> Self {
        assert!(id < 27);
        SchlafliVertex {
            tile: Tile::ALL[id / 9],
            line: (id % 9 / 3 + 1) as u8,
            column: (id % 3 + 1) as u8,
        }
    }

    pub fn all() -> impl Iterator<Item = SchlafliVertex> {
        (0..27).map(SchlafliVertex::from_id)
    }

    pub fn is_adjacent(self, other: SchlafliVertex) -> bool {
        if self.tile == other.tile {
            self.line != other.line && self.column != other.column
        } else if self.tile.next() == other.tile {
            // column i of a tile is complete to line i of the next tile
            self.column == other.line
        } else {
            other.column == self.line
        }
    }

    /// Compact form `r12` used in parameter strings.
    pub fn short(self) -> String {
        format!("{}{}{}", self.tile.letter(), self.line, self.column)
    }

    pub fn parse_short(s: &str) -> Option<Self> {
        let b = s.as_bytes();
        if b.len() != 3 {
            return None;
        }
        let tile = match b[0] {
            b'r' => Tile::R,
            b's' => Tile::S,
            b't' => Tile::T,
            _ => return None,
        };
        let line = b[1].checked_sub(b'0').filter(|d| (1..=3).contains(d))?;
        let column = b[2].checked_sub(b'0').filter(|d| (1..=3).contains(d))?;
        Some(SchlafliVertex { tile, line, column })
    }
}

impl fmt::Display for SchlafliVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}_{}", self.tile.letter(), self.line, self.column)
    }
}

impl FromStr for SchlafliVertex {
    type Err = ();

    fn from_str(s: &str) -> Result<Self, ()> {
        let b = s.as_bytes();
        if b.len() != 5 || b[1] != b'^' || b[3] != b'_' {
            return Err(());
        }
        let short = format!("{}{}{}", b[0] as char, b[2] as char, b[4] as char);
        SchlafliVertex::parse_short(&short).ok_or(())
    }
}

/// Σ, the complement of the Schläfli graph, labeled with its coordinates.
pub fn schlafli_complement() -> Graph {
    schlafli_induced(&SchlafliVertex::all().collect::<Vec<_>>())
}

/// The subgraph of Σ induced by `vertices`, in Σ id order.
pub fn schlafli_induced(vertices: &[SchlafliVertex]) -> Graph {
    let mut vs = vertices.to_vec();
    vs.sort_by_key(|v| v.id());
    vs.dedup();
    let mut edges = Vec::new();
    for i in 0..vs.len() {
        for j in i + 1..vs.len() {
            if vs[i].is_adjacent(vs[j]) {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(vs.len(), edges)
        .expect("Σ edges are valid")
        .with_labels(vs.into_iter().map(Label::Schlafli).collect())
}

/// A subset of the index grid `{1,2,3}²`, stored as a 9-bit mask.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(pub u16);

impl IndexSet {
    pub const FULL: IndexSet = IndexSet(0x1ff);

    fn bit(i: u8, j: u8) -> u16 {
        debug_assert!((1..=3).contains(&i) && (1..=3).contains(&j));
        1 << ((i - 1) * 3 + (j - 1))
    }

    pub fn of(pairs: &[(u8, u8)]) -> Self {
        IndexSet(pairs.iter().fold(0, |m, &(i, j)| m | Self::bit(i, j)))
    }

    pub fn contains(self, i: u8, j: u8) -> bool {
        self.0 & Self::bit(i, j) != 0
    }

    pub fn with(self, i: u8, j: u8) -> Self {
        IndexSet(self.0 | Self::bit(i, j))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn pairs(self) -> impl Iterator<Item = (u8, u8)> {
        (1..=3u8)
            .flat_map(|i| (1..=3u8).map(move |j| (i, j)))
            .filter(move |&(i, j)| self.contains(i, j))
    }

    pub fn vertices(self, tile: Tile) -> impl Iterator<Item = SchlafliVertex> {
        self.pairs().map(move |(i, j)| SchlafliVertex::new(tile, i, j))
    }

    /// Every set with all of `required` and none of `forbidden`.
    pub fn all_between(required: IndexSet, forbidden: IndexSet) -> Vec<IndexSet> {
        let free = 0x1ff & !required.0 & !forbidden.0;
        let mut out = Vec::new();
        let mut sub = 0u16;
        loop {
            out.push(IndexSet(required.0 | sub));
            if sub == free {
                break;
            }
            sub = (sub.wrapping_sub(free)) & free;
        }
        out
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "-");
        }
        let parts: Vec<String> = self.pairs().map(|(i, j)| format!("{i}{j}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IndexSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "-" {
            return Ok(IndexSet(0));
        }
        let mut set = IndexSet(0);
        for part in s.split(',') {
            let b = part.as_bytes();
            let ok = b.len() == 2 && (b'1'..=b'3').contains(&b[0]) && (b'1'..=b'3').contains(&b[1]);
            if !ok {
                return Err(format!("bad index pair {part:?}"));
            }
            set = set.with(b[0] - b'0', b[1] - b'0');
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::is_prismatic;

    #[test]
    fn sigma_counts() {
        let g = schlafli_complement();
        assert_eq!(g.n(), 27);
        assert_eq!(g.edge_count(), 135);
        assert!((0..27).all(|v| g.degree(v) == 10));
        let tris = g.triangles();
        assert_eq!(tris.len(), 45);
        let internal = tris
            .iter()
            .filter(|t| t.0.iter().all(|&v| v / 9 == t.0[0] / 9))
            .count();
        assert_eq!(internal, 18);
        for v in 0..27 {
            assert_eq!(g.triangles_through(v).len(), 5);
        }
        assert!(is_prismatic(&g));
    }

    #[test]
    fn external_triangles_have_the_cyclic_form() {
        let g = schlafli_complement();
        let mut expected = Vec::new();
        for i in 1..=3 {
            for j in 1..=3 {
                for k in 1..=3 {
                    let mut t = [
                        SchlafliVertex::r(i, j).id(),
                        SchlafliVertex::s(j, k).id(),
                        SchlafliVertex::t(k, i).id(),
                    ];
                    t.sort_unstable();
                    expected.push(t);
                }
            }
        }
        expected.sort_unstable();
        let external: Vec<[usize; 3]> = g
            .triangles()
            .iter()
            .filter(|t| !t.0.iter().all(|&v| v / 9 == t.0[0] / 9))
            .map(|t| t.0)
            .collect();
        assert_eq!(external, expected);
    }

    #[test]
    fn tile_is_nine_vertices_eighteen_edges() {
        let tile: Vec<_> = SchlafliVertex::all().filter(|v| v.tile == Tile::R).collect();
        let g = schlafli_induced(&tile);
        assert_eq!(g.n(), 9);
        // brute force over pairs
        let mut count = 0;
        for a in &tile {
            for b in &tile {
                if a < b && a.line != b.line && a.column != b.column {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 18);
        assert_eq!(g.edge_count(), 18);
        assert!((0..9).all(|v| g.degree(v) == 4));
    }

    #[test]
    fn vertex_text_forms() {
        let v = SchlafliVertex::t(2, 3);
        assert_eq!(v.to_string(), "t^2_3");
        assert_eq!("t^2_3".parse::<SchlafliVertex>(), Ok(v));
        assert_eq!(SchlafliVertex::parse_short("t23"), Some(v));
        assert!("t^4_3".parse::<SchlafliVertex>().is_err());
        assert_eq!(SchlafliVertex::from_id(v.id()), v);
    }

    #[test]
    fn index_sets() {
        let req = IndexSet::of(&[(1, 1)]);
        let forb = IndexSet::of(&[(1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (3, 1)]);
        let all = IndexSet::all_between(req, forb);
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(|s| s.contains(1, 1) && !s.contains(2, 2)));
        let s: IndexSet = "11,23,32".parse().unwrap();
        assert_eq!(s.to_string(), "11,23,32");
        assert_eq!("-".parse::<IndexSet>().unwrap(), IndexSet(0));
    }
}
