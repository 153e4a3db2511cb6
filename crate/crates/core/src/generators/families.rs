//! The named graph families: parameter records, validation of each
//! family's membership conditions, construction, and the explicit hitting
//! set that comes with each family.

use std::collections::BTreeMap;
use std::fmt;

use super::ops::{exponentiate, multiply, ExponentiationSpec, MultiplicationSpec, Side};
use super::schlafli::{schlafli_complement, schlafli_induced, IndexSet, SchlafliVertex, Tile};
use super::{line_graph_k33, prism, rotator, twister};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label};
use crate::recognition::{check_prismatic, Verdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    Sigma,
    SchlafliInduced,
    FuzzilySchlafli,
    ParallelSquare,
    SkewSquare,
    F0,
    F1,
    F2,
    F3,
    F4,
    F5,
    F6,
    F7,
    F8,
    F9,
    Rotator,
    Twister,
    Prism,
    LineK33,
}

impl FamilyId {
    pub const ALL: [FamilyId; 19] = [
        FamilyId::Sigma,
        FamilyId::SchlafliInduced,
        FamilyId::FuzzilySchlafli,
        FamilyId::ParallelSquare,
        FamilyId::SkewSquare,
        FamilyId::F0,
        FamilyId::F1,
        FamilyId::F2,
        FamilyId::F3,
        FamilyId::F4,
        FamilyId::F5,
        FamilyId::F6,
        FamilyId::F7,
        FamilyId::F8,
        FamilyId::F9,
        FamilyId::Rotator,
        FamilyId::Twister,
        FamilyId::Prism,
        FamilyId::LineK33,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Sigma => "sigma",
            FamilyId::SchlafliInduced => "schlafli-induced",
            FamilyId::FuzzilySchlafli => "fuzzily-schlafli",
            FamilyId::ParallelSquare => "parallel-square",
            FamilyId::SkewSquare => "skew-square",
            FamilyId::F0 => "f0",
            FamilyId::F1 => "f1",
            FamilyId::F2 => "f2",
            FamilyId::F3 => "f3",
            FamilyId::F4 => "f4",
            FamilyId::F5 => "f5",
            FamilyId::F6 => "f6",
            FamilyId::F7 => "f7",
            FamilyId::F8 => "f8",
            FamilyId::F9 => "f9",
            FamilyId::Rotator => "rotator",
            FamilyId::Twister => "twister",
            FamilyId::Prism => "prism",
            FamilyId::LineK33 => "line-k33",
        }
    }

    pub fn from_name(name: &str) -> Option<FamilyId> {
        FamilyId::ALL.into_iter().find(|f| f.name() == name)
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Sizes and wiring of one exponentiation: `|A|`, `|B|`, the first
/// `matched` vertices of `A` and `B` paired index by index, and one side
/// choice per pair for every vertex of `C`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpParams {
    pub a: usize,
    pub b: usize,
    pub matched: usize,
    pub c_sides: Vec<Vec<Side>>,
}

impl ExpParams {
    /// `|A| = |B| = 1`, matched, `C` empty: reproduces the host.
    pub fn identity() -> Self {
        ExpParams {
            a: 1,
            b: 1,
            matched: 1,
            c_sides: Vec::new(),
        }
    }

    pub fn new(a: usize, b: usize, matched: usize, c_sides: &[&str]) -> Self {
        let c_sides = c_sides
            .iter()
            .map(|s| s.chars().map(|c| if c == 'a' { Side::A } else { Side::B }).collect())
            .collect();
        ExpParams { a, b, matched, c_sides }
    }

    fn spec(&self, a: usize, b: usize, c: usize) -> ExponentiationSpec {
        ExponentiationSpec {
            a,
            b,
            c,
            a_count: self.a,
            b_count: self.b,
            matching: (0..self.matched).map(|i| (i, i)).collect(),
            c_sides: self.c_sides.clone(),
        }
    }

    fn validate(&self, family: &str) -> Result<()> {
        if self.matched > self.a.min(self.b) {
            return Err(Error::param(family, "more matched pairs than vertices in A or B"));
        }
        if self.c_sides.iter().any(|s| s.len() != self.matched) {
            return Err(Error::param(family, "every C vertex needs one side per matched pair"));
        }
        Ok(())
    }
}

/// Text form `a.b.matched.|C|.sides`, where `sides` concatenates one `a`/`b`
/// letter per matched pair for each `C` vertex (`-` when empty).
impl fmt::Display for ExpParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sides: String = self
            .c_sides
            .iter()
            .flatten()
            .map(|s| if *s == Side::A { 'a' } else { 'b' })
            .collect();
        let sides = if sides.is_empty() { "-".to_string() } else { sides };
        write!(f, "{}.{}.{}.{}.{}", self.a, self.b, self.matched, self.c_sides.len(), sides)
    }
}

impl std::str::FromStr for ExpParams {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let parts: Vec<&str> = s.split('.').collect();
        let [a, b, k, nc, sides] = parts[..] else {
            return Err(format!("expected a.b.matched.c.sides, got {s:?}"));
        };
        let num = |x: &str| x.parse::<usize>().map_err(|_| format!("bad count {x:?}"));
        let (a, b, matched, nc) = (num(a)?, num(b)?, num(k)?, num(nc)?);
        let letters: Vec<Side> = match sides {
            "-" => Vec::new(),
            _ => sides
                .chars()
                .map(|c| match c {
                    'a' => Ok(Side::A),
                    'b' => Ok(Side::B),
                    _ => Err(format!("bad side {c:?}")),
                })
                .collect::<std::result::Result<_, _>>()?,
        };
        if letters.len() != nc * matched {
            return Err(format!("expected {} side letters, got {}", nc * matched, letters.len()));
        }
        let c_sides = if matched == 0 {
            vec![Vec::new(); nc]
        } else {
            letters.chunks(matched).map(<[Side]>::to_vec).collect()
        };
        Ok(ExpParams { a, b, matched, c_sides })
    }
}

/// One member of one family. Multiplied vertices are given as lists of φ
/// values, one value per new vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Sigma,
    SchlafliInduced {
        vertices: Vec<SchlafliVertex>,
    },
    /// `host` induces a subgraph of Σ in which `leaf = [a, b, c]` is a leaf
    /// triangle at `c`; `a` and `b` are multiplied.
    FuzzilySchlafli {
        host: Vec<SchlafliVertex>,
        leaf: [SchlafliVertex; 3],
        phi_a: Vec<i64>,
        phi_b: Vec<i64>,
    },
    /// φ lists for `s^1_2, s^1_3, s^2_1, s^3_1` of the tile `S`.
    ParallelSquare {
        phi: [Vec<i64>; 4],
        delete_z: bool,
    },
    /// φ lists for `a, b, c`.
    SkewSquare {
        phi: [Vec<i64>; 3],
    },
    F0 {
        i1: IndexSet,
        i2: IndexSet,
        i3: IndexSet,
    },
    /// `choices` holds one bit per pair of an edge of `A` with an edge or an
    /// isolated vertex of `B` (and symmetrically), in that order.
    F1 {
        r: bool,
        a_pairs: usize,
        a_singles: usize,
        b_pairs: usize,
        b_singles: usize,
        choices: u64,
    },
    /// φ lists for `s^1_2, s^1_3, s^2_1, s^3_1`.
    F2 {
        phi: [Vec<i64>; 4],
        exp: ExpParams,
    },
    F3 {
        delete_s11: bool,
        phi: [Vec<i64>; 4],
        exp1: ExpParams,
        exp2: ExpParams,
    },
    /// `y` holds the columns of line 3 of `R` that are kept, as a 3-bit mask.
    F4 {
        y: u8,
        i: IndexSet,
        exp: ExpParams,
    },
    F5 {
        i1: IndexSet,
        i2: IndexSet,
        i3: IndexSet,
    },
    F6 {
        phi_r: Vec<i64>,
        phi_t: Vec<i64>,
    },
    /// `extra` selects cross pairs of the prism added to `K` (bit order
    /// `a1b2, a1b3, a2b1, a2b3, a3b1, a3b2`); `keep` selects the vertices of
    /// `K` kept in the graph (bit order `a1, a2, a3, b1, b2, b3`).
    F7 {
        extra: u8,
        keep: u8,
    },
    /// φ lists for `v4, v7, v5, v8, v6, v9`.
    F8 {
        phi: [Vec<i64>; 6],
    },
    F9 {
        i1: IndexSet,
        i2: IndexSet,
        i3: IndexSet,
    },
    Rotator,
    Twister,
    Prism,
    LineK33,
}

/// The parallel-square, F2 and F3 multiplied vertices, in φ-list order.
const SQUARE: [(u8, u8); 4] = [(1, 2), (1, 3), (2, 1), (3, 1)];

pub(crate) const F7_EXTRA: [(usize, usize); 6] = [(0, 4), (0, 5), (1, 3), (1, 5), (2, 3), (2, 4)];
const F7_NAMES: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];

impl FamilySpec {
    pub fn id(&self) -> FamilyId {
        match self {
            FamilySpec::Sigma => FamilyId::Sigma,
            FamilySpec::SchlafliInduced { .. } => FamilyId::SchlafliInduced,
            FamilySpec::FuzzilySchlafli { .. } => FamilyId::FuzzilySchlafli,
            FamilySpec::ParallelSquare { .. } => FamilyId::ParallelSquare,
            FamilySpec::SkewSquare { .. } => FamilyId::SkewSquare,
            FamilySpec::F0 { .. } => FamilyId::F0,
            FamilySpec::F1 { .. } => FamilyId::F1,
            FamilySpec::F2 { .. } => FamilyId::F2,
            FamilySpec::F3 { .. } => FamilyId::F3,
            FamilySpec::F4 { .. } => FamilyId::F4,
            FamilySpec::F5 { .. } => FamilyId::F5,
            FamilySpec::F6 { .. } => FamilyId::F6,
            FamilySpec::F7 { .. } => FamilyId::F7,
            FamilySpec::F8 { .. } => FamilyId::F8,
            FamilySpec::F9 { .. } => FamilyId::F9,
            FamilySpec::Rotator => FamilyId::Rotator,
            FamilySpec::Twister => FamilyId::Twister,
            FamilySpec::Prism => FamilyId::Prism,
            FamilySpec::LineK33 => FamilyId::LineK33,
        }
    }

    /// Parameters as `key=value` pairs; [`FamilySpec::from_params`] inverts
    /// this.
    pub fn params(&self) -> Vec<(&'static str, String)> {
        match self {
            FamilySpec::Sigma
            | FamilySpec::Rotator
            | FamilySpec::Twister
            | FamilySpec::Prism
            | FamilySpec::LineK33 => Vec::new(),
            FamilySpec::SchlafliInduced { vertices } => vec![("keep", fmt_vertices(vertices))],
            FamilySpec::FuzzilySchlafli {
                host,
                leaf,
                phi_a,
                phi_b,
            } => vec![
                ("host", fmt_vertices(host)),
                ("leaf", fmt_vertices(leaf)),
                ("phi_a", fmt_phi(phi_a)),
                ("phi_b", fmt_phi(phi_b)),
            ],
            FamilySpec::ParallelSquare { phi, delete_z } => {
                vec![("phi", fmt_phis(phi)), ("delete_z", fmt_bool(*delete_z))]
            }
            FamilySpec::SkewSquare { phi } => vec![("phi", fmt_phis(phi))],
            FamilySpec::F0 { i1, i2, i3 } | FamilySpec::F5 { i1, i2, i3 } | FamilySpec::F9 { i1, i2, i3 } => {
                vec![("i1", i1.to_string()), ("i2", i2.to_string()), ("i3", i3.to_string())]
            }
            FamilySpec::F1 {
                r,
                a_pairs,
                a_singles,
                b_pairs,
                b_singles,
                choices,
            } => vec![
                ("r", fmt_bool(*r)),
                ("a_pairs", a_pairs.to_string()),
                ("a_singles", a_singles.to_string()),
                ("b_pairs", b_pairs.to_string()),
                ("b_singles", b_singles.to_string()),
                ("choices", choices.to_string()),
            ],
            FamilySpec::F2 { phi, exp } => vec![("phi", fmt_phis(phi)), ("exp", exp.to_string())],
            FamilySpec::F3 {
                delete_s11,
                phi,
                exp1,
                exp2,
            } => vec![
                ("delete_s11", fmt_bool(*delete_s11)),
                ("phi", fmt_phis(phi)),
                ("exp1", exp1.to_string()),
                ("exp2", exp2.to_string()),
            ],
            FamilySpec::F4 { y, i, exp } => {
                let cols: Vec<String> = (0..3).filter(|c| y & (1 << c) != 0).map(|c| (c + 1).to_string()).collect();
                let cols = if cols.is_empty() { "-".to_string() } else { cols.join(",") };
                vec![("y", cols), ("i", i.to_string()), ("exp", exp.to_string())]
            }
            FamilySpec::F6 { phi_r, phi_t } => vec![("phi_r", fmt_phi(phi_r)), ("phi_t", fmt_phi(phi_t))],
            FamilySpec::F7 { extra, keep } => vec![("extra", extra.to_string()), ("keep", keep.to_string())],
            FamilySpec::F8 { phi } => vec![("phi", fmt_phis(phi))],
        }
    }

    /// Builds a spec from `key=value` parameters. Every key the family uses
    /// must be present; unknown keys are rejected.
    pub fn from_params(id: FamilyId, params: &BTreeMap<String, String>) -> Result<FamilySpec> {
        let family = id.name();
        let mut used: Vec<&str> = Vec::new();
        let mut get = |key: &'static str| -> Result<&str> {
            used.push(key);
            params
                .get(key)
                .map(String::as_str)
                .ok_or_else(|| Error::param(family, format!("missing parameter {key}")))
        };
        let bad = |key: &str, msg: String| Error::param(family, format!("{key}: {msg}"));
        macro_rules! parse {
            ($key:literal, $f:expr) => {{
                let raw = get($key)?;
                $f(raw).map_err(|m: String| bad($key, m))?
            }};
        }
        let spec = match id {
            FamilyId::Sigma => FamilySpec::Sigma,
            FamilyId::Rotator => FamilySpec::Rotator,
            FamilyId::Twister => FamilySpec::Twister,
            FamilyId::Prism => FamilySpec::Prism,
            FamilyId::LineK33 => FamilySpec::LineK33,
            FamilyId::SchlafliInduced => FamilySpec::SchlafliInduced {
                vertices: parse!("keep", parse_vertices),
            },
            FamilyId::FuzzilySchlafli => {
                let host = parse!("host", parse_vertices);
                let leaf: Vec<SchlafliVertex> = parse!("leaf", parse_vertices);
                let leaf: [SchlafliVertex; 3] = leaf
                    .try_into()
                    .map_err(|_| bad("leaf", "expected three vertices a,b,c".into()))?;
                FamilySpec::FuzzilySchlafli {
                    host,
                    leaf,
                    phi_a: parse!("phi_a", parse_phi),
                    phi_b: parse!("phi_b", parse_phi),
                }
            }
            FamilyId::ParallelSquare => FamilySpec::ParallelSquare {
                phi: parse!("phi", parse_phis::<4>),
                delete_z: parse!("delete_z", parse_bool),
            },
            FamilyId::SkewSquare => FamilySpec::SkewSquare {
                phi: parse!("phi", parse_phis::<3>),
            },
            FamilyId::F0 | FamilyId::F5 | FamilyId::F9 => {
                let i1 = parse!("i1", parse_index_set);
                let i2 = parse!("i2", parse_index_set);
                let i3 = parse!("i3", parse_index_set);
                match id {
                    FamilyId::F0 => FamilySpec::F0 { i1, i2, i3 },
                    FamilyId::F5 => FamilySpec::F5 { i1, i2, i3 },
                    _ => FamilySpec::F9 { i1, i2, i3 },
                }
            }
            FamilyId::F1 => FamilySpec::F1 {
                r: parse!("r", parse_bool),
                a_pairs: parse!("a_pairs", parse_num::<usize>),
                a_singles: parse!("a_singles", parse_num::<usize>),
                b_pairs: parse!("b_pairs", parse_num::<usize>),
                b_singles: parse!("b_singles", parse_num::<usize>),
                choices: parse!("choices", parse_num::<u64>),
            },
            FamilyId::F2 => FamilySpec::F2 {
                phi: parse!("phi", parse_phis::<4>),
                exp: parse!("exp", parse_exp),
            },
            FamilyId::F3 => FamilySpec::F3 {
                delete_s11: parse!("delete_s11", parse_bool),
                phi: parse!("phi", parse_phis::<4>),
                exp1: parse!("exp1", parse_exp),
                exp2: parse!("exp2", parse_exp),
            },
            FamilyId::F4 => FamilySpec::F4 {
                y: parse!("y", parse_columns),
                i: parse!("i", parse_index_set),
                exp: parse!("exp", parse_exp),
            },
            FamilyId::F6 => FamilySpec::F6 {
                phi_r: parse!("phi_r", parse_phi),
                phi_t: parse!("phi_t", parse_phi),
            },
            FamilyId::F7 => FamilySpec::F7 {
                extra: parse!("extra", parse_num::<u8>),
                keep: parse!("keep", parse_num::<u8>),
            },
            FamilyId::F8 => FamilySpec::F8 {
                phi: parse!("phi", parse_phis::<6>),
            },
        };
        if let Some(unknown) = params.keys().find(|k| !used.contains(&k.as_str())) {
            return Err(Error::param(family, format!("unknown parameter {unknown}")));
        }
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id())?;
        for (k, v) in self.params() {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}

/// Parses the `name k=v ...` form written by `Display`.
impl std::str::FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<FamilySpec> {
        let mut toks = s.split_whitespace();
        let name = toks.next().ok_or_else(|| Error::param("family", "empty family spec"))?;
        let id = FamilyId::from_name(name).ok_or_else(|| Error::param(name, "unknown family"))?;
        let mut params = BTreeMap::new();
        for tok in toks {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::param(name, format!("expected key=value, got {tok:?}")))?;
            if params.insert(k.to_string(), v.to_string()).is_some() {
                return Err(Error::param(name, format!("parameter {k} given twice")));
            }
        }
        FamilySpec::from_params(id, &params)
    }
}

fn fmt_bool(b: bool) -> String {
    if b { "1" } else { "0" }.to_string()
}

fn fmt_phi(phi: &[i64]) -> String {
    phi.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

fn fmt_phis(phis: &[Vec<i64>]) -> String {
    phis.iter().map(|p| fmt_phi(p)).collect::<Vec<_>>().join("/")
}

fn fmt_vertices(vs: &[SchlafliVertex]) -> String {
    if vs.is_empty() {
        return "-".into();
    }
    vs.iter().map(|v| v.short()).collect::<Vec<_>>().join(",")
}

fn parse_num<T: std::str::FromStr>(s: &str) -> std::result::Result<T, String> {
    s.parse().map_err(|_| format!("bad number {s:?}"))
}

fn parse_bool(s: &str) -> std::result::Result<bool, String> {
    match s {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(format!("expected 0 or 1, got {s:?}")),
    }
}

fn parse_phi(s: &str) -> std::result::Result<Vec<i64>, String> {
    s.split(',').map(parse_num::<i64>).collect()
}

fn parse_phis<const N: usize>(s: &str) -> std::result::Result<[Vec<i64>; N], String> {
    let lists: Vec<Vec<i64>> = s.split('/').map(parse_phi).collect::<std::result::Result<_, _>>()?;
    let got = lists.len();
    lists.try_into().map_err(|_| format!("expected {N} '/'-separated lists, got {got}"))
}

fn parse_vertices(s: &str) -> std::result::Result<Vec<SchlafliVertex>, String> {
    if s == "-" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|v| SchlafliVertex::parse_short(v).ok_or_else(|| format!("bad vertex {v:?}")))
        .collect()
}

fn parse_index_set(s: &str) -> std::result::Result<IndexSet, String> {
    s.parse()
}

fn parse_exp(s: &str) -> std::result::Result<ExpParams, String> {
    s.parse()
}

fn parse_columns(s: &str) -> std::result::Result<u8, String> {
    if s == "-" {
        return Ok(0);
    }
    s.split(',').try_fold(0u8, |m, c| match c {
        "1" | "2" | "3" => Ok(m | 1 << (c.as_bytes()[0] - b'1')),
        _ => Err(format!("bad column {c:?}")),
    })
}

fn require(family: &str, ok: bool, clause: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::param(family, clause))
    }
}

fn check_index_set(family: &str, name: &str, set: IndexSet, required: &[(u8, u8)], forbidden: &[(u8, u8)]) -> Result<()> {
    for &(i, j) in required {
        require(family, set.contains(i, j), &format!("({i},{j}) must be in {name}"))?;
    }
    for &(i, j) in forbidden {
        require(family, !set.contains(i, j), &format!("({i},{j}) must not be in {name}"))?;
    }
    Ok(())
}

fn sigma_part(i1: IndexSet, i2: IndexSet, i3: IndexSet) -> Vec<SchlafliVertex> {
    i1.vertices(Tile::R)
        .chain(i2.vertices(Tile::S))
        .chain(i3.vertices(Tile::T))
        .collect()
}

fn schlafli(g: &Graph, v: SchlafliVertex) -> Option<usize> {
    g.find_label(&Label::Schlafli(v))
}

fn tag(g: &Graph, name: &str) -> Option<usize> {
    g.find_label(&Label::Tag(name.to_string()))
}

fn located(family: &str, v: Option<usize>, what: &str) -> Result<usize> {
    v.ok_or_else(|| Error::param(family, format!("vertex {what} is missing")))
}

/// Adds edges between Σ-labeled vertices, skipping pairs with an absent end.
fn add_schlafli_edges(g: Graph, pairs: &[(SchlafliVertex, SchlafliVertex)]) -> Graph {
    let mut edges = g.edges();
    for &(u, v) in pairs {
        if let (Some(u), Some(v)) = (schlafli(&g, u), schlafli(&g, v)) {
            edges.push((u, v));
        }
    }
    let labels = g.labels().map(<[Label]>::to_vec).unwrap_or_default();
    Graph::from_edges(g.n(), edges).expect("existing vertices").with_labels(labels)
}

fn contains_phi(phi: &[i64], value: i64) -> bool {
    phi.contains(&value)
}

fn square_multiplication(family: &str, h: &Graph, phi: &[Vec<i64>; 4]) -> Result<Graph> {
    let mut targets = Vec::new();
    for (i, j) in SQUARE {
        targets.push(located(family, schlafli(h, SchlafliVertex::s(i, j)), &format!("s^{i}_{j}"))?);
    }
    multiply(h, &MultiplicationSpec { targets, phi: phi.to_vec() })
}

fn tile_s() -> Graph {
    schlafli_induced(&IndexSet::FULL.vertices(Tile::S).collect::<Vec<_>>())
}

fn without(g: &Graph, drop: &[usize]) -> Graph {
    let keep: Vec<usize> = (0..g.n()).filter(|v| !drop.contains(v)).collect();
    g.induced_subgraph(&keep).expect("vertices in range").graph
}

/// Builds the graph of `spec`, checking the family's membership conditions
/// and that the result is prismatic.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let g = build(spec)?;
    match check_prismatic(&g) {
        Verdict::Yes => Ok(g),
        Verdict::No(obs) => Err(Error::NotPrismatic(obs)),
    }
}

fn build(spec: &FamilySpec) -> Result<Graph> {
    let family = spec.id().name();
    match spec {
        FamilySpec::Sigma => Ok(schlafli_complement()),
        FamilySpec::Rotator => Ok(rotator()),
        FamilySpec::Twister => Ok(twister()),
        FamilySpec::Prism => Ok(prism()),
        FamilySpec::LineK33 => Ok(line_graph_k33()),
        FamilySpec::SchlafliInduced { vertices } => Ok(schlafli_induced(vertices)),
        FamilySpec::FuzzilySchlafli {
            host,
            leaf,
            phi_a,
            phi_b,
        } => {
            let h = schlafli_induced(host);
            let [a, b, c] = leaf.map(|v| schlafli(&h, v));
            let (a, b, c) = (
                located(family, a, "a")?,
                located(family, b, "b")?,
                located(family, c, "c")?,
            );
            require(
                family,
                super::is_leaf_triangle(&h, a, b, c),
                "{a,b,c} must be a leaf triangle at c",
            )?;
            multiply(
                &h,
                &MultiplicationSpec {
                    targets: vec![a, b],
                    phi: vec![phi_a.clone(), phi_b.clone()],
                },
            )
        }
        FamilySpec::ParallelSquare { phi, delete_z } => {
            let g = square_multiplication(family, &tile_s(), phi)?;
            if *delete_z {
                let z = schlafli(&g, SchlafliVertex::s(1, 1)).expect("z is kept");
                Ok(without(&g, &[z]))
            } else {
                Ok(g)
            }
        }
        FamilySpec::SkewSquare { phi } => build_skew_square(phi),
        FamilySpec::F0 { i1, i2, i3 } => {
            check_index_set(family, "I1", *i1, &[(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)], &[(3, 3)])?;
            check_index_set(family, "I2", *i2, &[(1, 1), (2, 1), (3, 2)], &[(1, 2), (1, 3), (2, 2), (2, 3)])?;
            check_index_set(family, "I3", *i3, &[(1, 3), (2, 1), (2, 2)], &[(1, 1), (1, 2), (3, 1), (3, 2)])?;
            let h = schlafli_induced(&sigma_part(*i1, *i2, *i3));
            Ok(add_schlafli_edges(
                h,
                &[
                    (SchlafliVertex::s(3, 1), SchlafliVertex::t(2, 3)),
                    (SchlafliVertex::s(3, 1), SchlafliVertex::t(3, 3)),
                    (SchlafliVertex::s(3, 3), SchlafliVertex::t(2, 3)),
                ],
            ))
        }
        FamilySpec::F1 {
            r,
            a_pairs,
            a_singles,
            b_pairs,
            b_singles,
            choices,
        } => build_f1(*r, *a_pairs, *a_singles, *b_pairs, *b_singles, *choices),
        FamilySpec::F2 { phi, exp } => {
            let [p12, p13, p21, p31] = phi;
            require(
                family,
                p31.iter().all(|x| !p13.contains(x)),
                "no u in A^3_1 and v in A^1_3 with φ(u) = φ(v)",
            )?;
            require(
                family,
                contains_phi(p12, 1) && contains_phi(p21, 1),
                "1 must be a φ value in both A^1_2 and A^2_1",
            )?;
            require(
                family,
                !contains_phi(p13, 1) && !contains_phi(p31, 1),
                "φ(v) ≠ 1 for all v in A^3_1 ∪ A^1_3",
            )?;
            exp.validate(family)?;
            let h = square_multiplication(family, &tile_s(), phi)?;
            let a = located(family, tag(&h, "s^1_2#1"), "s^1_2#1")?;
            let b = located(family, tag(&h, "s^2_1#1"), "s^2_1#1")?;
            let c = located(family, schlafli(&h, SchlafliVertex::s(3, 3)), "s^3_3")?;
            exponentiate(&h, &exp.spec(a, b, c))
        }
        FamilySpec::F3 {
            delete_s11,
            phi,
            exp1,
            exp2,
        } => {
            let [p12, p13, p21, p31] = phi;
            require(
                family,
                contains_phi(p12, 1) && contains_phi(p31, 1),
                "1 must be a φ value in both A^1_2 and A^3_1",
            )?;
            require(
                family,
                !contains_phi(p13, 1) && !contains_phi(p21, 1),
                "φ(v) ≠ 1 for all v in A^1_3 ∪ A^2_1",
            )?;
            require(
                family,
                contains_phi(p13, 2) && contains_phi(p21, 2),
                "2 must be a φ value in both A^1_3 and A^2_1",
            )?;
            require(
                family,
                !contains_phi(p12, 2) && !contains_phi(p31, 2),
                "φ(v) ≠ 2 for all v in A^1_2 ∪ A^3_1",
            )?;
            exp1.validate(family)?;
            exp2.validate(family)?;
            let k = tile_s();
            let mut drop = vec![schlafli(&k, SchlafliVertex::s(2, 2)).expect("in tile")];
            if *delete_s11 {
                drop.push(schlafli(&k, SchlafliVertex::s(1, 1)).expect("in tile"));
            }
            let h = square_multiplication(family, &without(&k, &drop), phi)?;
            let a = located(family, tag(&h, "s^1_2#1"), "s^1_2#1")?;
            let b = located(family, tag(&h, "s^3_1#1"), "s^3_1#1")?;
            let c = located(family, schlafli(&h, SchlafliVertex::s(2, 3)), "s^2_3")?;
            let h = exponentiate(&h, &exp1.spec(a, b, c))?;
            let a = located(family, tag(&h, "s^1_3#2"), "s^1_3#2")?;
            let b = located(family, tag(&h, "s^2_1#2"), "s^2_1#2")?;
            let c = located(family, schlafli(&h, SchlafliVertex::s(3, 2)), "s^3_2")?;
            exponentiate(&h, &exp2.spec(a, b, c))
        }
        FamilySpec::F4 { y, i, exp } => {
            require(family, *y != 0 && *y < 8, "Y must be a non-empty subset of line 3 of R")?;
            check_index_set(family, "I", *i, &[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)], &[])?;
            require(family, i.len() >= 8, "|I| must be at least 8")?;
            exp.validate(family)?;
            let mut vs: Vec<SchlafliVertex> = (1..=3u8)
                .filter(|c| y & (1 << (c - 1)) != 0)
                .map(|c| SchlafliVertex::r(3, c))
                .collect();
            vs.extend(i.vertices(Tile::S));
            vs.extend([SchlafliVertex::t(1, 1), SchlafliVertex::t(2, 2), SchlafliVertex::t(3, 3)]);
            let h = schlafli_induced(&vs);
            let find = |v| schlafli(&h, v).expect("present");
            let spec = exp.spec(
                find(SchlafliVertex::t(1, 1)),
                find(SchlafliVertex::t(2, 2)),
                find(SchlafliVertex::t(3, 3)),
            );
            exponentiate(&h, &spec)
        }
        FamilySpec::F5 { i1, i2, i3 } => {
            check_index_set(family, "I1", *i1, &[(1, 1), (3, 1), (3, 2), (3, 3)], &[(2, 2), (2, 3)])?;
            check_index_set(family, "I2", *i2, &[], &[(1, 1)])?;
            check_index_set(family, "I3", *i3, &[(1, 2), (1, 3), (2, 3), (3, 3)], &[(2, 1), (3, 1)])?;
            let h = schlafli_induced(&sigma_part(*i1, *i2, *i3));
            Ok(add_schlafli_edges(h, &[(SchlafliVertex::r(1, 1), SchlafliVertex::t(1, 2))]))
        }
        FamilySpec::F6 { phi_r, phi_t } => {
            let i1 = IndexSet::of(&[(1, 1), (1, 2), (3, 1), (3, 2), (3, 3)]);
            let i2 = IndexSet::of(&[(1, 2), (2, 1), (2, 2), (3, 3)]);
            let i3 = IndexSet::of(&[(1, 2), (2, 2), (1, 3), (2, 3), (3, 3)]);
            let h = schlafli_induced(&sigma_part(i1, i2, i3));
            let h = add_schlafli_edges(h, &[(SchlafliVertex::r(1, 1), SchlafliVertex::t(1, 2))]);
            let targets = vec![
                schlafli(&h, SchlafliVertex::r(3, 3)).expect("present"),
                schlafli(&h, SchlafliVertex::t(3, 3)).expect("present"),
            ];
            multiply(
                &h,
                &MultiplicationSpec {
                    targets,
                    phi: vec![phi_r.clone(), phi_t.clone()],
                },
            )
        }
        FamilySpec::F7 { extra, keep } => {
            require(family, *extra < 64, "extra is a 6-bit mask")?;
            require(family, *keep < 64, "keep is a 6-bit mask")?;
            Ok(build_f7(*extra, *keep))
        }
        FamilySpec::F8 { phi } => {
            let mut g = rotator();
            for (k, (x, y)) in [("v4", "v7"), ("v5", "v8"), ("v6", "v9")].into_iter().enumerate() {
                let targets = vec![
                    located(family, tag(&g, x), x)?,
                    located(family, tag(&g, y), y)?,
                ];
                let phi = vec![phi[2 * k].clone(), phi[2 * k + 1].clone()];
                g = multiply(&g, &MultiplicationSpec { targets, phi })?;
            }
            Ok(g)
        }
        FamilySpec::F9 { i1, i2, i3 } => {
            check_index_set(family, "I1", *i1, &[(2, 1), (3, 1), (3, 2), (3, 3)], &[(1, 1), (2, 2), (2, 3)])?;
            require(
                family,
                i1.contains(1, 2) || i1.contains(1, 3),
                "I1 must contain at least one of (1,2), (1,3)",
            )?;
            check_index_set(family, "I2", *i2, &[(1, 1), (2, 2), (3, 3)], &[(1, 2), (1, 3)])?;
            check_index_set(family, "I3", *i3, &[(1, 3), (2, 3), (3, 3)], &[(1, 1), (2, 1), (3, 1)])?;
            require(
                family,
                i3.contains(1, 2) || i3.contains(2, 2) || i3.contains(3, 2),
                "I3 must contain at least one of (1,2), (2,2), (3,2)",
            )?;
            require(
                family,
                (i1.contains(1, 2) && i1.contains(1, 3))
                    || (i3.contains(1, 2) && (i3.contains(2, 2) || i3.contains(3, 2))),
                "either (1,2), (1,3) in I1, or I3 contains (1,2) and one of (2,2), (3,2)",
            )?;
            let h = schlafli_induced(&sigma_part(*i1, *i2, *i3));
            let mut z_nbrs = vec![SchlafliVertex::r(3, 2), SchlafliVertex::r(3, 3), SchlafliVertex::s(1, 1)];
            if i3.contains(2, 2) {
                z_nbrs.push(SchlafliVertex::t(2, 2));
            }
            if i3.contains(3, 2) {
                z_nbrs.push(SchlafliVertex::t(3, 2));
            }
            let z = h.n();
            let mut edges = h.edges();
            edges.extend(z_nbrs.iter().map(|&v| (schlafli(&h, v).expect("required vertex"), z)));
            let mut labels = h.labels().expect("Σ labels").to_vec();
            labels.push(Label::Tag("z".into()));
            Ok(Graph::from_edges(z + 1, edges)?.with_labels(labels))
        }
    }
}

fn build_skew_square(phi: &[Vec<i64>; 3]) -> Result<Graph> {
    // a, b, c, s, t
    let k = Graph::from_edges(5, [(3, 0), (3, 2), (0, 2), (4, 1), (4, 2), (1, 2)])
        .expect("valid edges")
        .with_labels(["a", "b", "c", "s", "t"].iter().map(|s| Label::Tag(s.to_string())).collect());
    let h = multiply(
        &k,
        &MultiplicationSpec {
            targets: vec![0, 1, 2],
            phi: phi.to_vec(),
        },
    )?;
    // s, t, then A, B, C
    let origins: Vec<(usize, i64)> = phi
        .iter()
        .enumerate()
        .flat_map(|(x, values)| values.iter().map(move |&p| (x, p)))
        .collect();
    let d0 = h.n();
    let mut edges = h.edges();
    for i in 1..=3i64 {
        let d = d0 + (i as usize - 1);
        for (k, &(x, p)) in origins.iter().enumerate() {
            let special = (1..=3).contains(&p) && p != i;
            // A ∪ B see d_i on special values, C on the others
            let adjacent = if x < 2 { special } else { !special };
            if adjacent {
                edges.push((2 + k, d));
            }
        }
    }
    let mut labels = h.labels().expect("labels").to_vec();
    labels.extend((1..=3).map(|i| Label::Tag(format!("d{i}"))));
    Ok(Graph::from_edges(d0 + 3, edges)?.with_labels(labels))
}

fn build_f1(r: bool, a_pairs: usize, a_singles: usize, b_pairs: usize, b_singles: usize, choices: u64) -> Result<Graph> {
    let bits = a_pairs * b_pairs + a_pairs * b_singles + b_pairs * a_singles;
    require("f1", bits <= 64, "too many choice bits")?;
    require("f1", bits == 64 || choices >> bits == 0, "choices has bits beyond the ones used")?;
    let (s, t) = (0, 1);
    let r0 = 2;
    let a0 = r0 + usize::from(r);
    let na = 2 * a_pairs + a_singles;
    let b0 = a0 + na;
    let nb = 2 * b_pairs + b_singles;
    let n = b0 + nb;
    let mut edges = vec![(s, t)];
    if r {
        edges.extend([(s, r0), (t, r0)]);
    }
    edges.extend((a0..b0).map(|a| (s, a)));
    edges.extend((b0..n).map(|b| (t, b)));
    edges.extend((0..a_pairs).map(|p| (a0 + 2 * p, a0 + 2 * p + 1)));
    edges.extend((0..b_pairs).map(|q| (b0 + 2 * q, b0 + 2 * q + 1)));
    let mut bit = 0;
    let mut next = || {
        let v = (choices >> bit) & 1;
        bit += 1;
        v as usize
    };
    for p in 0..a_pairs {
        for q in 0..b_pairs {
            let (a, b) = (a0 + 2 * p, b0 + 2 * q);
            if next() == 0 {
                edges.extend([(a, b), (a + 1, b + 1)]);
            } else {
                edges.extend([(a, b + 1), (a + 1, b)]);
            }
        }
    }
    for p in 0..a_pairs {
        for k in 0..b_singles {
            edges.push((a0 + 2 * p + next(), b0 + 2 * b_pairs + k));
        }
    }
    for q in 0..b_pairs {
        for k in 0..a_singles {
            edges.push((a0 + 2 * a_pairs + k, b0 + 2 * q + next()));
        }
    }
    for i in 0..a_singles {
        for j in 0..b_singles {
            edges.push((a0 + 2 * a_pairs + i, b0 + 2 * b_pairs + j));
        }
    }
    let mut labels = vec![Label::Tag("s".into()), Label::Tag("t".into())];
    if r {
        labels.push(Label::Tag("r".into()));
    }
    labels.extend((0..na).map(|i| Label::Tag(format!("a{i}"))));
    labels.extend((0..nb).map(|i| Label::Tag(format!("b{i}"))));
    Ok(Graph::from_edges(n, edges)?.with_labels(labels))
}

/// The host `K`: the prism plus the selected cross pairs.
pub(crate) fn f7_host(extra: u8) -> Graph {
    let mut edges = vec![(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)];
    edges.extend(F7_EXTRA.iter().enumerate().filter(|(i, _)| extra & (1 << i) != 0).map(|(_, &e)| e));
    Graph::from_edges(6, edges).expect("valid edges")
}

fn build_f7(extra: u8, keep: u8) -> Graph {
    let k = f7_host(extra);
    let k_edges = k.edges();
    let kept: Vec<usize> = (0..6).filter(|v| keep & (1 << v) != 0).collect();
    let ne = k_edges.len();
    let n = ne + kept.len();
    let mut edges = Vec::new();
    for (i, &(a, b)) in k_edges.iter().enumerate() {
        for (j, &(c, d)) in k_edges.iter().enumerate().skip(i + 1) {
            if a != c && a != d && b != c && b != d {
                edges.push((i, j));
            }
        }
        for (j, &v) in kept.iter().enumerate() {
            if v == a || v == b {
                edges.push((i, ne + j));
            }
        }
    }
    for (i, &u) in kept.iter().enumerate() {
        for (j, &v) in kept.iter().enumerate().skip(i + 1) {
            if !k.has_edge(u, v) {
                edges.push((ne + i, ne + j));
            }
        }
    }
    let mut labels: Vec<Label> = k_edges
        .iter()
        .map(|&(a, b)| Label::Tag(format!("{}{}", F7_NAMES[a], F7_NAMES[b])))
        .collect();
    labels.extend(kept.iter().map(|&v| Label::Tag(F7_NAMES[v].to_string())));
    Graph::from_edges(n, edges).expect("valid edges").with_labels(labels)
}

/// The size bound the family's hitting-set argument guarantees.
pub fn lemma_bound(id: FamilyId) -> Option<usize> {
    match id {
        FamilyId::Sigma | FamilyId::SchlafliInduced => Some(10),
        FamilyId::F1 => Some(2),
        FamilyId::F0 | FamilyId::F3 | FamilyId::F6 | FamilyId::F8 | FamilyId::F9 => Some(3),
        FamilyId::F2 | FamilyId::F4 | FamilyId::ParallelSquare => Some(4),
        FamilyId::SkewSquare | FamilyId::F5 | FamilyId::F7 | FamilyId::FuzzilySchlafli => Some(5),
        FamilyId::Rotator | FamilyId::Twister | FamilyId::Prism | FamilyId::LineK33 => None,
    }
}

/// The explicit hitting set the family's construction provides, as sorted
/// vertex ids of `g`, which must be `generate(spec)`.
pub fn lemma_hitting_set(spec: &FamilySpec, g: &Graph) -> Result<Vec<usize>> {
    let family = spec.id().name();
    let sigma_members = |vs: &[SchlafliVertex]| -> Vec<usize> { vs.iter().filter_map(|&v| schlafli(g, v)).collect() };
    let tags = |names: &[&str]| -> Result<Vec<usize>> { names.iter().map(|s| located(family, tag(g, s), s)).collect() };
    let neighbourhood_in_sigma = |v: SchlafliVertex| -> Vec<usize> {
        let sigma = schlafli_complement();
        let nbrs: Vec<SchlafliVertex> = sigma.neighbors(v.id()).iter().map(SchlafliVertex::from_id).collect();
        sigma_members(&nbrs)
    };
    let mut set = match spec {
        FamilySpec::Rotator | FamilySpec::Twister | FamilySpec::Prism | FamilySpec::LineK33 => {
            return Err(Error::NoConstructiveSet(family.to_string()))
        }
        FamilySpec::Sigma | FamilySpec::SchlafliInduced { .. } => neighbourhood_in_sigma(SchlafliVertex::r(1, 1)),
        FamilySpec::FuzzilySchlafli { host, leaf, .. } => {
            let [a, b, _] = *leaf;
            host.iter()
                .filter(|&&v| v != b && v.is_adjacent(a))
                .filter_map(|&v| schlafli(g, v))
                .collect()
        }
        FamilySpec::ParallelSquare { .. } => sigma_members(&[
            SchlafliVertex::s(2, 2),
            SchlafliVertex::s(2, 3),
            SchlafliVertex::s(3, 2),
            SchlafliVertex::s(3, 3),
        ]),
        FamilySpec::SkewSquare { .. } => tags(&["s", "t", "d1", "d2", "d3"])?,
        FamilySpec::F0 { .. } => sigma_members(&[SchlafliVertex::r(1, 3), SchlafliVertex::r(2, 3), SchlafliVertex::t(1, 3)]),
        FamilySpec::F1 { .. } => tags(&["s", "t"])?,
        FamilySpec::F2 { .. } => sigma_members(&[
            SchlafliVertex::s(3, 2),
            SchlafliVertex::s(2, 3),
            SchlafliVertex::s(2, 2),
            SchlafliVertex::s(3, 3),
        ]),
        FamilySpec::F3 { .. } => sigma_members(&[SchlafliVertex::s(3, 3), SchlafliVertex::s(3, 2), SchlafliVertex::s(2, 3)]),
        FamilySpec::F4 { .. } => sigma_members(&[
            SchlafliVertex::s(3, 1),
            SchlafliVertex::s(3, 2),
            SchlafliVertex::s(3, 3),
            SchlafliVertex::t(3, 3),
        ]),
        FamilySpec::F5 { .. } => sigma_members(&[
            SchlafliVertex::r(3, 2),
            SchlafliVertex::r(3, 3),
            SchlafliVertex::s(1, 2),
            SchlafliVertex::s(1, 3),
            SchlafliVertex::t(1, 1),
        ]),
        // the neighbourhood of r^1_3 in Σ, which is not itself a vertex
        FamilySpec::F6 { .. } => sigma_members(&[SchlafliVertex::r(3, 1), SchlafliVertex::r(3, 2), SchlafliVertex::s(3, 3)]),
        FamilySpec::F7 { .. } => (0..g.n())
            .filter(|&v| matches!(g.label(v), Some(Label::Tag(s)) if s.len() == 4 && s.starts_with("a1")))
            .collect(),
        FamilySpec::F8 { .. } => tags(&["v1", "v2", "v3"])?,
        FamilySpec::F9 { .. } => sigma_members(&[SchlafliVertex::r(3, 2), SchlafliVertex::r(3, 3), SchlafliVertex::s(1, 1)]),
    };
    set.sort_unstable();
    set.dedup();
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bitset::BitSet;
    use crate::iso::is_isomorphic_small;
    use crate::recognition::{find_rotator_or_twister, is_prismatic};

    fn hits_all(g: &Graph, set: &[usize]) -> bool {
        let s = BitSet::from_iter(g.n(), set.iter().copied());
        g.triangles().iter().all(|t| t.0.iter().any(|&v| s.contains(v)))
    }

    fn round_trip(spec: &FamilySpec) {
        let params: BTreeMap<String, String> =
            spec.params().into_iter().map(|(k, v)| (k.to_string(), v)).collect();
        assert_eq!(&FamilySpec::from_params(spec.id(), &params).unwrap(), spec);
    }

    #[test]
    fn f0_instance() {
        let spec = FamilySpec::F0 {
            i1: IndexSet::of(&[(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)]),
            i2: IndexSet::of(&[(1, 1), (2, 1), (3, 2), (3, 1), (3, 3)]),
            i3: IndexSet::of(&[(1, 3), (2, 1), (2, 2), (2, 3), (3, 3)]),
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.n(), 16);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set.len(), 3);
        assert!(hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn f0_rejects_violations() {
        let spec = FamilySpec::F0 {
            i1: IndexSet::FULL,
            i2: IndexSet::of(&[(1, 1), (2, 1), (3, 2)]),
            i3: IndexSet::of(&[(1, 3), (2, 1), (2, 2)]),
        };
        let err = generate(&spec).unwrap_err();
        assert!(err.to_string().contains("(3,3) must not be in I1"), "{err}");
    }

    #[test]
    fn f1_matched_instance() {
        // |R| = 1, A and B each one edge plus one isolated vertex
        let spec = FamilySpec::F1 {
            r: true,
            a_pairs: 1,
            a_singles: 1,
            b_pairs: 1,
            b_singles: 1,
            choices: 0b010,
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.n(), 9);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set, vec![0, 1]);
        assert!(hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn parallel_square_singletons_give_the_line_graph() {
        let spec = FamilySpec::ParallelSquare {
            phi: [vec![1], vec![2], vec![1], vec![2]],
            delete_z: false,
        };
        let g = generate(&spec).unwrap();
        // the multiplied square keeps its C4 only for suitable φ; the graph
        // is prismatic either way
        assert_eq!(g.n(), 9);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set.len(), 4);
        assert!(hits_all(&g, &set));
        let same = FamilySpec::ParallelSquare {
            phi: [vec![1], vec![1], vec![1], vec![1]],
            delete_z: false,
        };
        let g = generate(&same).unwrap();
        assert!(is_isomorphic_small(&g, &line_graph_k33()).unwrap());
        round_trip(&spec);
    }

    #[test]
    fn skew_square_instance() {
        let spec = FamilySpec::SkewSquare {
            phi: [vec![1, 2], vec![1, 3], vec![2, 3]],
        };
        match generate(&spec) {
            Ok(g) => {
                let set = lemma_hitting_set(&spec, &g).unwrap();
                assert_eq!(set.len(), 5);
                assert!(hits_all(&g, &set));
            }
            Err(Error::NotPrismatic(_)) => {}
            Err(e) => panic!("{e}"),
        }
        round_trip(&spec);
    }

    #[test]
    fn f2_validation_and_instance() {
        let ok = FamilySpec::F2 {
            phi: [vec![1], vec![2], vec![1], vec![3]],
            exp: ExpParams::identity(),
        };
        let g = generate(&ok).unwrap();
        let set = lemma_hitting_set(&ok, &g).unwrap();
        assert!(set.len() <= 4 && hits_all(&g, &set));
        round_trip(&ok);

        let bad = FamilySpec::F2 {
            phi: [vec![1], vec![2], vec![1], vec![2]],
            exp: ExpParams::identity(),
        };
        assert!(generate(&bad).unwrap_err().to_string().contains("A^3_1"));
    }

    #[test]
    fn f3_instance() {
        let spec = FamilySpec::F3 {
            delete_s11: false,
            phi: [vec![1], vec![2], vec![2], vec![1]],
            exp1: ExpParams::identity(),
            exp2: ExpParams::identity(),
        };
        let g = generate(&spec).unwrap();
        assert_eq!(g.n(), 8);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set.len(), 3);
        assert!(hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn f4_instance() {
        let spec = FamilySpec::F4 {
            y: 0b111,
            i: IndexSet::FULL,
            exp: ExpParams::new(2, 2, 1, &["a"]),
        };
        let g = generate(&spec).unwrap();
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set.len(), 4);
        assert!(hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn f6_lemma_set() {
        let spec = FamilySpec::F6 {
            phi_r: vec![1, 2],
            phi_t: vec![1, 3],
        };
        let g = generate(&spec).unwrap();
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert_eq!(set.len(), 3);
        assert!(hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn f7_full_prism() {
        let spec = FamilySpec::F7 { extra: 0, keep: 0b111111 };
        let g = generate(&spec).unwrap();
        assert_eq!(g.n(), 15);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        // a1a2, a1a3, a1b1
        assert_eq!(set.len(), 3);
        assert!(hits_all(&g, &set));
        let spec = FamilySpec::F7 { extra: 0b11, keep: 0 };
        let g = generate(&spec).unwrap();
        assert_eq!(lemma_hitting_set(&spec, &g).unwrap().len(), 5);
        round_trip(&spec);
    }

    #[test]
    fn f8_host_is_rotator_and_set_hits() {
        let spec = FamilySpec::F8 {
            phi: [vec![1], vec![1], vec![1], vec![1], vec![1], vec![1]],
        };
        let g = generate(&spec).unwrap();
        assert!(is_isomorphic_small(&g, &rotator()).unwrap());
        assert!(find_rotator_or_twister(&g).found().is_some());
        let spec = FamilySpec::F8 {
            phi: [vec![1, 2], vec![1, 2], vec![3], vec![3], vec![1], vec![1]],
        };
        let g = generate(&spec).unwrap();
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert!(set.len() == 3 && hits_all(&g, &set));
        round_trip(&spec);
    }

    #[test]
    fn f9_conditions() {
        let spec = FamilySpec::F9 {
            i1: IndexSet::of(&[(2, 1), (3, 1), (3, 2), (3, 3), (1, 2), (1, 3)]),
            i2: IndexSet::of(&[(1, 1), (2, 2), (3, 3)]),
            i3: IndexSet::of(&[(1, 3), (2, 3), (3, 3), (2, 2)]),
        };
        let g = generate(&spec).unwrap();
        let z = g.n() - 1;
        assert_eq!(g.degree(z), 4);
        let set = lemma_hitting_set(&spec, &g).unwrap();
        assert!(set.len() == 3 && hits_all(&g, &set));
        round_trip(&spec);

        let bad = FamilySpec::F9 {
            i1: IndexSet::of(&[(2, 1), (3, 1), (3, 2), (3, 3), (1, 2)]),
            i2: IndexSet::of(&[(1, 1), (2, 2), (3, 3)]),
            i3: IndexSet::of(&[(1, 3), (2, 3), (3, 3), (2, 2)]),
        };
        assert!(generate(&bad).unwrap_err().to_string().contains("either"));
    }

    #[test]
    fn fixed_families() {
        for spec in [FamilySpec::Rotator, FamilySpec::Twister, FamilySpec::Prism, FamilySpec::LineK33] {
            let g = generate(&spec).unwrap();
            assert!(is_prismatic(&g));
            assert!(matches!(lemma_hitting_set(&spec, &g), Err(Error::NoConstructiveSet(_))));
        }
        let g = generate(&FamilySpec::Sigma).unwrap();
        let set = lemma_hitting_set(&FamilySpec::Sigma, &g).unwrap();
        assert_eq!(set.len(), 10);
        assert!(hits_all(&g, &set));
    }

    #[test]
    fn exp_params_text() {
        let e = ExpParams::new(2, 2, 2, &["ab", "ba"]);
        assert_eq!(e.to_string(), "2.2.2.2.abba");
        assert_eq!("2.2.2.2.abba".parse::<ExpParams>().unwrap(), e);
        let e = ExpParams::new(0, 0, 0, &["", ""]);
        assert_eq!("0.0.0.2.-".parse::<ExpParams>().unwrap(), e);
        assert!("1.1.1.1.-".parse::<ExpParams>().is_err());
    }

    #[test]
    fn unknown_and_missing_params() {
        let mut params = BTreeMap::new();
        params.insert("i1".to_string(), "11".to_string());
        assert!(FamilySpec::from_params(FamilyId::F0, &params)
            .unwrap_err()
            .to_string()
            .contains("missing parameter i2"));
        let mut params = BTreeMap::new();
        params.insert("bogus".to_string(), "1".to_string());
        assert!(FamilySpec::from_params(FamilyId::Prism, &params).is_err());
    }
}
