//! Recognition, generation and exact solvers for prismatic graphs: graphs in
//! which every vertex outside a triangle has exactly one neighbour in it.
//!
//! The solvers cover minimum triangle hitting sets, maximum matchings,
//! minimum clique covers and maximum vertex-disjoint triangle packings.

pub mod bitset;
pub mod clique_cover;
pub mod error;
pub mod generators;
pub mod graph;
pub mod hitting_set;
pub mod io;
pub mod iso;
pub mod matching;
pub mod packing;
pub mod recognition;
pub mod witness;

pub use bitset::BitSet;
pub use clique_cover::{
    clique_cover_bruteforce, clique_cover_exact, clique_cover_nonorientable, clique_cover_small_hitting,
    clique_cover_via_hitting_set, normalize_cover, CliqueCover,
};
pub use error::{Error, Result};
pub use graph::{build_graph, DerivedGraph, Graph, InducedSubgraph, Label, Triangle};
pub use hitting_set::{find_hitting_set_at_most, min_hitting_set, verify_hitting_set, HittingSet};
pub use matching::{max_matching, max_matching_within, Matching};
pub use packing::{
    classify_derived_components, derived_component_kinds, max_stable_set, max_stable_set_clawfree, max_triangle_packing_bruteforce,
    max_triangle_packing_derived, max_triangle_packing_prismatic, ComponentKind, DerivedComponent,
    TrianglePacking,
};
pub use recognition::{
    check_clawfree, check_diamond_k4_free, check_orientable, check_prismatic, find_rotator_or_twister,
    is_clawfree, is_diamond_k4_free, is_orientable, is_prismatic, is_rigid, Obstruction, ObstructionSearch,
    Verdict,
};
pub use witness::{witness_matrix, TriangleWitnessMatrix, WitnessEntry};
