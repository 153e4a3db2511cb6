//! Default parameter sweeps: every family's membership conditions admit
//! many instances, and the sweeps pick a finite, deterministic set of legal
//! ones.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::families::{f7_host, generate, ExpParams, FamilyId, FamilySpec, F7_EXTRA};
use super::schlafli::{IndexSet, SchlafliVertex};
use crate::error::Error;
use crate::graph::{Graph, Triangle};
use crate::iso::is_isomorphic_small;

/// One swept parameterization and what [`generate`] made of it.
#[derive(Debug, Clone)]
pub struct SweepItem {
    pub spec: FamilySpec,
    pub graph: Result<Graph, Error>,
}

/// Seed of the Σ-induced part of the corpus.
pub const CORPUS_SEED: u64 = 0x5ca1ab1e;

/// The exponentiation shapes tried wherever a family exponentiates.
fn exp_shapes() -> Vec<ExpParams> {
    vec![
        ExpParams::identity(),
        ExpParams::new(2, 1, 1, &[]),
        ExpParams::new(2, 2, 2, &[]),
        ExpParams::new(1, 1, 0, &[]),
        ExpParams::new(1, 1, 1, &["a"]),
        ExpParams::new(1, 1, 1, &["b"]),
        ExpParams::new(2, 2, 1, &["a"]),
        ExpParams::new(0, 0, 0, &[""]),
        ExpParams::new(2, 2, 2, &["ab", "ba"]),
        ExpParams::new(3, 3, 3, &["aab"]),
    ]
}

fn cartesian<T: Clone>(choices: &[Vec<T>]) -> Vec<Vec<T>> {
    choices.iter().fold(vec![Vec::new()], |acc, options| {
        acc.iter()
            .flat_map(|prefix| {
                options.iter().map(move |o| {
                    let mut p = prefix.clone();
                    p.push(o.clone());
                    p
                })
            })
            .collect()
    })
}

fn phis(lists: &[&[i64]]) -> Vec<Vec<i64>> {
    lists.iter().map(|l| l.to_vec()).collect()
}

fn square_specs(choices: [Vec<Vec<i64>>; 4]) -> Vec<[Vec<i64>; 4]> {
    cartesian(&choices)
        .into_iter()
        .map(|v| v.try_into().expect("four lists"))
        .collect()
}

/// The parameterizations swept for `id`, all satisfying the family's
/// membership conditions. Whether each one is prismatic is up to
/// [`generate`].
pub fn default_sweep(id: FamilyId) -> Vec<FamilySpec> {
    match id {
        FamilyId::Sigma => vec![FamilySpec::Sigma],
        FamilyId::Rotator => vec![FamilySpec::Rotator],
        FamilyId::Twister => vec![FamilySpec::Twister],
        FamilyId::Prism => vec![FamilySpec::Prism],
        FamilyId::LineK33 => vec![FamilySpec::LineK33],
        FamilyId::SchlafliInduced => random_schlafli_induced(CORPUS_SEED, 100, 10, 27),
        FamilyId::FuzzilySchlafli => fuzzily_sweep(),
        FamilyId::ParallelSquare => {
            let pool = phis(&[&[1], &[2], &[1, 2], &[1, 2, 3]]);
            let mut out = Vec::new();
            for delete_z in [false, true] {
                for phi in square_specs([pool.clone(), pool.clone(), pool.clone(), pool.clone()]) {
                    out.push(FamilySpec::ParallelSquare { phi, delete_z });
                }
            }
            out
        }
        FamilyId::SkewSquare => {
            let pool = phis(&[&[0], &[1], &[2], &[3], &[1, 2], &[1, 4], &[1, 2, 3]]);
            cartesian(&[pool.clone(), pool.clone(), pool])
                .into_iter()
                .map(|v| FamilySpec::SkewSquare {
                    phi: v.try_into().expect("three lists"),
                })
                .collect()
        }
        FamilyId::F0 => {
            let i1 = IndexSet::all_between(
                IndexSet::of(&[(1, 1), (1, 3), (2, 2), (2, 3), (3, 1), (3, 2)]),
                IndexSet::of(&[(3, 3)]),
            );
            let i2 = IndexSet::all_between(
                IndexSet::of(&[(1, 1), (2, 1), (3, 2)]),
                IndexSet::of(&[(1, 2), (1, 3), (2, 2), (2, 3)]),
            );
            let i3 = IndexSet::all_between(
                IndexSet::of(&[(1, 3), (2, 1), (2, 2)]),
                IndexSet::of(&[(1, 1), (1, 2), (3, 1), (3, 2)]),
            );
            triples(&i1, &i2, &i3, |i1, i2, i3| FamilySpec::F0 { i1, i2, i3 })
        }
        FamilyId::F1 => f1_sweep(),
        FamilyId::F2 => {
            let with_one = phis(&[&[1], &[1, 2], &[1, 2, 3]]);
            let mut out = Vec::new();
            for phi in square_specs([
                with_one.clone(),
                phis(&[&[2], &[2, 3]]),
                with_one,
                phis(&[&[3], &[4], &[3, 4]]),
            ]) {
                if phi[3].iter().any(|x| phi[1].contains(x)) {
                    continue;
                }
                for exp in exp_shapes() {
                    out.push(FamilySpec::F2 { phi: phi.clone(), exp });
                }
            }
            out
        }
        FamilyId::F3 => {
            let ones = phis(&[&[1], &[1, 3]]);
            let twos = phis(&[&[2], &[2, 3]]);
            let exps = [
                (ExpParams::identity(), ExpParams::identity()),
                (ExpParams::new(1, 1, 1, &["a"]), ExpParams::new(1, 1, 1, &["b"])),
                (ExpParams::new(2, 2, 2, &[]), ExpParams::identity()),
                (ExpParams::new(0, 0, 0, &[""]), ExpParams::new(2, 2, 2, &["ab", "ba"])),
            ];
            let mut out = Vec::new();
            for delete_s11 in [false, true] {
                for phi in square_specs([ones.clone(), twos.clone(), twos.clone(), ones.clone()]) {
                    for (exp1, exp2) in &exps {
                        out.push(FamilySpec::F3 {
                            delete_s11,
                            phi: phi.clone(),
                            exp1: exp1.clone(),
                            exp2: exp2.clone(),
                        });
                    }
                }
            }
            out
        }
        FamilyId::F4 => {
            let base = IndexSet::of(&[(1, 1), (1, 2), (2, 1), (2, 2), (3, 1), (3, 2)]);
            let sets: Vec<IndexSet> = IndexSet::all_between(base, IndexSet(0))
                .into_iter()
                .filter(|s| s.len() >= 8)
                .collect();
            let mut out = Vec::new();
            for y in 1..8u8 {
                for &i in &sets {
                    for exp in exp_shapes() {
                        out.push(FamilySpec::F4 { y, i, exp });
                    }
                }
            }
            out
        }
        FamilyId::F5 => {
            let i1 = IndexSet::all_between(
                IndexSet::of(&[(1, 1), (3, 1), (3, 2), (3, 3)]),
                IndexSet::of(&[(2, 2), (2, 3)]),
            );
            let i2 = IndexSet::all_between(IndexSet(0), IndexSet::of(&[(1, 1)]));
            let i3 = IndexSet::all_between(
                IndexSet::of(&[(1, 2), (1, 3), (2, 3), (3, 3)]),
                IndexSet::of(&[(2, 1), (3, 1)]),
            );
            triples(&i1, &i2, &i3, |i1, i2, i3| FamilySpec::F5 { i1, i2, i3 })
        }
        FamilyId::F6 => {
            let pool = phis(&[&[1], &[2], &[1, 2], &[2, 3], &[1, 2, 3]]);
            cartesian(&[pool.clone(), pool])
                .into_iter()
                .map(|v| FamilySpec::F6 {
                    phi_r: v[0].clone(),
                    phi_t: v[1].clone(),
                })
                .collect()
        }
        FamilyId::F7 => {
            let mut out = Vec::new();
            for extra in f7_host_classes() {
                for keep in 0..64u8 {
                    out.push(FamilySpec::F7 { extra, keep });
                }
            }
            out
        }
        FamilyId::F8 => {
            let pool = phis(&[&[1], &[2], &[1, 2]]);
            cartesian(&vec![pool; 6])
                .into_iter()
                .map(|v| FamilySpec::F8 {
                    phi: v.try_into().expect("six lists"),
                })
                .collect()
        }
        FamilyId::F9 => {
            let i1 = IndexSet::all_between(
                IndexSet::of(&[(2, 1), (3, 1), (3, 2), (3, 3)]),
                IndexSet::of(&[(1, 1), (2, 2), (2, 3)]),
            );
            let i2 = IndexSet::all_between(
                IndexSet::of(&[(1, 1), (2, 2), (3, 3)]),
                IndexSet::of(&[(1, 2), (1, 3)]),
            );
            let i3 = IndexSet::all_between(
                IndexSet::of(&[(1, 3), (2, 3), (3, 3)]),
                IndexSet::of(&[(1, 1), (2, 1), (3, 1)]),
            );
            triples(&i1, &i2, &i3, |i1, i2, i3| FamilySpec::F9 { i1, i2, i3 })
                .into_iter()
                .filter(f9_legal)
                .collect()
        }
    }
}

fn f9_legal(spec: &FamilySpec) -> bool {
    let FamilySpec::F9 { i1, i3, .. } = spec else {
        return false;
    };
    (i1.contains(1, 2) || i1.contains(1, 3))
        && (i3.contains(1, 2) || i3.contains(2, 2) || i3.contains(3, 2))
        && ((i1.contains(1, 2) && i1.contains(1, 3))
            || (i3.contains(1, 2) && (i3.contains(2, 2) || i3.contains(3, 2))))
}

fn triples(
    i1: &[IndexSet],
    i2: &[IndexSet],
    i3: &[IndexSet],
    make: impl Fn(IndexSet, IndexSet, IndexSet) -> FamilySpec,
) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for &a in i1 {
        for &b in i2 {
            for &c in i3 {
                out.push(make(a, b, c));
            }
        }
    }
    out
}

fn fuzzily_sweep() -> Vec<FamilySpec> {
    let (a, b, c) = (SchlafliVertex::r(1, 1), SchlafliVertex::s(1, 1), SchlafliVertex::t(1, 1));
    let sigma = super::schlafli_complement();
    let leaf = Triangle::new(a.id(), b.id(), c.id());
    // each other triangle through a or b loses one of its two other vertices
    let others: Vec<[usize; 2]> = sigma
        .triangles()
        .iter()
        .filter(|t| (t.contains(a.id()) || t.contains(b.id())) && **t != leaf)
        .map(|t| {
            let rest: Vec<usize> = t.0.iter().copied().filter(|&v| v != a.id() && v != b.id()).collect();
            [rest[0], rest[1]]
        })
        .collect();
    debug_assert_eq!(others.len(), 8);
    let phi_choices: [(&[i64], &[i64]); 5] = [
        (&[1], &[1]),
        (&[1, 2], &[1, 2]),
        (&[1, 2], &[2, 3]),
        (&[1, 2, 3], &[1]),
        (&[1, 2, 3], &[1, 2, 3]),
    ];
    let mut out = Vec::new();
    for k in 0..16u32 {
        let mask = k * 17;
        let dropped: Vec<usize> = others
            .iter()
            .enumerate()
            .map(|(i, pair)| pair[((mask >> i) & 1) as usize])
            .collect();
        let host: Vec<SchlafliVertex> = SchlafliVertex::all().filter(|v| !dropped.contains(&v.id())).collect();
        for (pa, pb) in phi_choices {
            out.push(FamilySpec::FuzzilySchlafli {
                host: host.clone(),
                leaf: [a, b, c],
                phi_a: pa.to_vec(),
                phi_b: pb.to_vec(),
            });
        }
    }
    out
}

fn f1_sweep() -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for r in [false, true] {
        for sizes in cartesian(&vec![vec![0usize, 1, 2]; 4]) {
            let [a_pairs, a_singles, b_pairs, b_singles] = sizes[..] else {
                unreachable!()
            };
            let bits = a_pairs * b_pairs + a_pairs * b_singles + b_pairs * a_singles;
            let all = if bits == 0 { 0 } else { (1u64 << bits) - 1 };
            let mut masks = vec![0, all, all & 0x5555];
            masks.dedup();
            masks.sort_unstable();
            masks.dedup();
            for choices in masks {
                out.push(FamilySpec::F1 {
                    r,
                    a_pairs,
                    a_singles,
                    b_pairs,
                    b_singles,
                    choices,
                });
            }
        }
    }
    out
}

/// One representative extra-edge mask per isomorphism class of the host `K`.
pub(crate) fn f7_host_classes() -> Vec<u8> {
    let mut reps: Vec<(u8, Graph)> = Vec::new();
    for extra in 0..(1u8 << F7_EXTRA.len()) {
        let k = f7_host(extra);
        let seen = reps
            .iter()
            .any(|(_, r)| is_isomorphic_small(r, &k).expect("six vertices"));
        if !seen {
            reps.push((extra, k));
        }
    }
    reps.into_iter().map(|(e, _)| e).collect()
}

/// `count` induced subgraphs of Σ with between `min` and `max` vertices.
pub fn random_schlafli_induced(seed: u64, count: usize, min: usize, max: usize) -> Vec<FamilySpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<SchlafliVertex> = SchlafliVertex::all().collect();
    (0..count)
        .map(|_| {
            let size = rng.gen_range(min..=max.min(27));
            let mut vertices: Vec<SchlafliVertex> = all.choose_multiple(&mut rng, size).copied().collect();
            vertices.sort_by_key(|v| v.id());
            FamilySpec::SchlafliInduced { vertices }
        })
        .collect()
}

/// Runs [`generate`] over the family's default sweep.
pub fn run_sweep(id: FamilyId) -> Vec<SweepItem> {
    default_sweep(id)
        .into_iter()
        .map(|spec| {
            let graph = generate(&spec);
            SweepItem { spec, graph }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweeps_only_contain_legal_parameters() {
        for id in FamilyId::ALL {
            for item in run_sweep(id) {
                if let Err(e) = &item.graph {
                    assert!(matches!(e, Error::NotPrismatic(_)), "{}: {e}", item.spec);
                }
            }
        }
    }

    #[test]
    fn sweep_sizes() {
        assert_eq!(default_sweep(FamilyId::F0).len(), 64);
        assert_eq!(default_sweep(FamilyId::F5).len(), 16384);
        assert_eq!(default_sweep(FamilyId::SchlafliInduced).len(), 100);
        assert!(!default_sweep(FamilyId::F9).is_empty());
    }

    #[test]
    fn random_subgraphs_are_reproducible() {
        assert_eq!(random_schlafli_induced(7, 5, 10, 27), random_schlafli_induced(7, 5, 10, 27));
        for spec in random_schlafli_induced(7, 20, 10, 27) {
            let FamilySpec::SchlafliInduced { vertices } = spec else {
                unreachable!()
            };
            assert!((10..=27).contains(&vertices.len()));
        }
    }

    #[test]
    fn f7_classes_are_pairwise_distinct() {
        let classes = f7_host_classes();
        assert!(classes.contains(&0));
        for (i, &a) in classes.iter().enumerate() {
            for &b in &classes[i + 1..] {
                assert!(!is_isomorphic_small(&f7_host(a), &f7_host(b)).unwrap());
            }
        }
    }
}
