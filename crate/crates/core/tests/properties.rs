use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigUint;
use proptest::prelude::*;

use parity_polytope::bases::{
    character_matrix, configurations, marginal_matrix, parity_matrix, parity_words,
    verify_parity_basis,
};
use parity_polytope::classify::{
    count_cnk, count_cnk_oracle, dnk_bruteforce, enumerate_pn_with, full_dimensional_fast,
    full_dimensional_subgroups, lift, lift_conditions, prism, GroupPolytope,
};
use parity_polytope::codes::{
    code_from_hypergraph, codewords, hypergraph_from_generator, min_distance,
};
use parity_polytope::geometry::{
    affine_dim, affine_rank, face_lattice, faces_by_lp, VertexSet01,
};
use parity_polytope::gf2::{
    all_subgroups, index2_subgroups, rank_gf2, span_enumerate, standard_form, BitWord, GF2Matrix,
};
use parity_polytope::hypergraph::{is_hypergraph, uniform, PreHypergraph};
use parity_polytope::Rational;

/// Every non-atom subset of `[n]` as a bitmask, ascending.
fn non_atoms(n: usize) -> Vec<u64> {
    (1u64..1 << n).filter(|s| s.count_ones() > 1).collect()
}

fn pre_hypergraph(n: usize, pick: u64) -> PreHypergraph {
    let sets: Vec<BitWord> = (0..n)
        .map(|i| 1u64 << i)
        .chain(
            non_atoms(n)
                .into_iter()
                .enumerate()
                .filter(|(j, _)| (pick >> j) & 1 == 1)
                .map(|(_, s)| s),
        )
        .map(|s| BitWord::new(n, s).unwrap())
        .collect();
    PreHypergraph::new(n, sets).unwrap()
}

fn arb_pre_hypergraph(max_n: usize) -> impl Strategy<Value = PreHypergraph> {
    (1..=max_n, any::<u64>()).prop_map(|(n, pick)| pre_hypergraph(n, pick))
}

/// Rank over 𝔽₂ by elimination on byte rows, independent of the packed code.
fn rank_mod2(rows: &[Vec<u8>]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) else {
            continue;
        };
        m.swap(rank, p);
        for r in 0..m.len() {
            if r != rank && m[r][c] == 1 {
                let pivot = m[rank].clone();
                for (x, y) in m[r].iter_mut().zip(pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn vertex_set(a: &PreHypergraph) -> VertexSet01 {
    VertexSet01::from_words(&parity_words(a).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_byte_elimination(rows in prop::collection::vec(prop::collection::vec(0u8..2, 6), 6)) {
        let words: Vec<BitWord> = rows
            .iter()
            .map(|r| BitWord::from_bools(&r.iter().map(|&b| b == 1).collect::<Vec<_>>()).unwrap())
            .collect();
        prop_assert_eq!(rank_gf2(&GF2Matrix::from_rows(words).unwrap()), rank_mod2(&rows));
    }

    #[test]
    fn standard_form_preserves_the_code(rows in prop::collection::vec(any::<u8>(), 1..5)) {
        let words: Vec<BitWord> = rows.iter().map(|&r| BitWord::new(8, u64::from(r)).unwrap()).collect();
        let g = GF2Matrix::from_rows(words).unwrap();
        prop_assume!(rank_gf2(&g) == g.nrows());
        let (s, order) = standard_form(&g).unwrap();
        // Undo the column permutation: column j of s is column order[j] of g.
        let mut inverse = vec![0; order.len()];
        for (j, &c) in order.iter().enumerate() {
            inverse[c] = j;
        }
        let back = s.permute_columns(&inverse).unwrap();
        prop_assert_eq!(
            span_enumerate(8, back.rows()).unwrap(),
            span_enumerate(8, g.rows()).unwrap()
        );
    }

    #[test]
    fn parity_rows_are_distinct_and_characters_are_signs(a in arb_pre_hypergraph(5)) {
        let f = parity_matrix(&a).unwrap();
        let e = character_matrix(&a).unwrap();
        let rows: BTreeSet<&Vec<i8>> = f.entries.iter().collect();
        prop_assert_eq!(rows.len(), 1 << a.ground_size());
        for (fr, er) in f.entries.iter().zip(&e.entries) {
            for (x, y) in fr.iter().zip(er) {
                prop_assert_eq!(*y, 1 - 2 * x);
            }
        }
    }

    #[test]
    fn codewords_are_the_parity_rows(a in arb_pre_hypergraph(5)) {
        let mut rows = parity_words(&a).unwrap();
        rows.sort();
        prop_assert_eq!(codewords(&code_from_hypergraph(&a).unwrap()).unwrap(), rows);
    }

    #[test]
    fn generator_round_trip_n4(pick in any::<u64>()) {
        let a = pre_hypergraph(4, pick);
        let (back, dups) = hypergraph_from_generator(code_from_hypergraph(&a).unwrap().generator()).unwrap();
        prop_assert!(dups.is_empty());
        prop_assert_eq!(back, a);
    }

    #[test]
    fn min_distance_is_the_least_pairwise_distance(a in arb_pre_hypergraph(5)) {
        let code = code_from_hypergraph(&a).unwrap();
        let words = codewords(&code).unwrap();
        let pairwise = words.iter().tuple_combinations().map(|(x, y)| x.hamming(*y)).min().unwrap();
        prop_assert_eq!(min_distance(&code).unwrap(), pairwise);
    }
}

#[test]
fn generator_round_trip_exhaustive_n3() {
    for pick in 0..1u64 << non_atoms(3).len() {
        let a = pre_hypergraph(3, pick);
        let g = code_from_hypergraph(&a).unwrap();
        assert_eq!(hypergraph_from_generator(g.generator()).unwrap().0, a);
    }
}

#[test]
fn character_columns_are_orthogonal() {
    for n in 1..=5 {
        for k in 1..=n {
            let e = character_matrix(&uniform(k, n).unwrap()).unwrap();
            // Append the column of the empty set, which is constantly 1.
            let mut columns: Vec<Vec<i64>> = (0..e.ncols())
                .map(|c| e.column(c).into_iter().map(i64::from).collect())
                .collect();
            columns.push(vec![1; 1 << n]);
            for (x, y) in columns.iter().tuple_combinations() {
                assert_eq!(x.iter().zip(y).map(|(p, q)| p * q).sum::<i64>(), 0);
            }
        }
    }
}

#[test]
fn uniform_families_are_hypergraphs_with_a_parity_basis() {
    for n in 1..=6 {
        for k in 1..=n {
            assert!(is_hypergraph(&uniform(k, n).unwrap()));
        }
    }
    for n in 1..=4 {
        for k in 1..=n {
            assert!(verify_parity_basis(&uniform(k, n).unwrap()).unwrap());
        }
    }
}

#[test]
fn parity_polytope_size_and_dimension() {
    for n in 1..=4 {
        for k in 1..=n {
            let a = uniform(k, n).unwrap();
            let v = vertex_set(&a);
            let expected: u64 = (1..=k as u64).map(|j| num_integer::binomial(n as u64, j)).sum();
            assert_eq!(v.len(), 1 << n);
            assert_eq!(v.dim() as u64, expected);
            assert_eq!(affine_dim(&v), v.dim());
        }
    }
}

#[test]
fn marginal_and_parity_polytopes_share_dimension_and_faces() {
    for n in 1..=3 {
        for pick in 0..1u64 << non_atoms(n).len() {
            let a = pre_hypergraph(n, pick);
            if !is_hypergraph(&a) {
                continue;
            }
            let m = marginal_matrix(&a).unwrap();
            let points = configurations(n)
                .unwrap()
                .into_iter()
                .map(|x| {
                    m.row(x)
                        .iter()
                        .enumerate()
                        .fold(0u64, |p, (j, &e)| p | (e as u64) << j)
                })
                .collect();
            let marginal = VertexSet01::new(m.ncols(), points).unwrap();
            let parity = vertex_set(&a);
            assert_eq!(affine_dim(&marginal), affine_dim(&parity), "{a:?}");
            assert_eq!(faces_by_lp(&marginal).unwrap(), faces_by_lp(&parity).unwrap(), "{a:?}");
        }
    }
}

#[test]
fn projections_of_parity_polytopes() {
    for n in 1..=5 {
        for k in 1..=n {
            let words = parity_words(&uniform(k, n).unwrap()).unwrap();
            // Atoms come first, so the first n coordinates are x itself.
            let cube: BTreeSet<u64> = words.iter().map(|w| w.bits() & ((1 << n) - 1)).collect();
            assert_eq!(cube, (0..1u64 << n).collect());
        }
    }
    for n in 1..=4 {
        let full = uniform(n, n).unwrap();
        let full_words = parity_words(&full).unwrap();
        for k in 1..=n {
            let a = uniform(k, n).unwrap();
            let keep: Vec<usize> = a
                .sets()
                .iter()
                .map(|s| full.sets().iter().position(|t| t == s).unwrap())
                .collect();
            let projected: BTreeSet<u64> = full_words
                .iter()
                .map(|w| keep.iter().enumerate().fold(0, |acc, (j, &c)| acc | ((w.get(c) as u64) << j)))
                .collect();
            let direct: BTreeSet<u64> = parity_words(&a).unwrap().iter().map(|w| w.bits()).collect();
            assert_eq!(projected, direct);
        }
    }
}

#[test]
fn low_dimensional_neighbourliness() {
    let binom = |n: u64, k: u64| num_integer::binomial(n, k) as usize;
    let f23 = face_lattice(&vertex_set(&uniform(2, 3).unwrap())).unwrap().f_vector();
    for (i, &f) in f23.iter().enumerate().take(3) {
        assert_eq!(f, binom(8, i as u64 + 1));
    }
    let f34 = face_lattice(&vertex_set(&uniform(3, 4).unwrap())).unwrap().f_vector();
    for (i, &f) in f34.iter().enumerate().take(7) {
        assert_eq!(f, binom(16, i as u64 + 1));
    }
}

#[test]
fn fast_full_dimension_test_matches_rank_up_to_five() {
    for n in 1..=5 {
        for g in all_subgroups(n).unwrap() {
            let bits: Vec<u64> = g.iter().map(|w| w.bits()).collect();
            assert_eq!(full_dimensional_fast(n, &g), affine_rank::<Rational>(n, &bits) == n);
        }
    }
}

#[test]
fn enumeration_is_complete_up_to_five() {
    for n in 1..=5 {
        assert_eq!(
            enumerate_pn_with(n, n).unwrap().polytopes,
            full_dimensional_subgroups(n).unwrap()
        );
    }
}

#[test]
fn generation_never_repeats_up_to_six() {
    for n in 2..=6 {
        let e = enumerate_pn_with(n, n).unwrap();
        assert_eq!(e.generated, e.polytopes.len(), "n = {n}");
    }
}

#[test]
fn enumeration_counts_match_the_recursion_up_to_six() {
    let table = count_cnk(6).unwrap();
    for n in 1..=6 {
        let counts = enumerate_pn_with(n, n).unwrap().counts_by_k(n);
        for (k, &count) in counts.iter().enumerate().take(n + 1).skip(1) {
            assert_eq!(BigUint::from(count), *table.get(n, k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn recursion_matches_the_spanning_set_oracle() {
    let table = count_cnk(10).unwrap();
    for n in 1..=10 {
        for k in 1..=4.min(n) {
            assert_eq!(count_cnk_oracle(n, k).unwrap(), *table.get(n, k), "n = {n}, k = {k}");
        }
    }
}

#[test]
fn lift_conditions_agree_up_to_four() {
    for n in 1..=4 {
        for p in enumerate_pn_with(n, n).unwrap().polytopes {
            for s in index2_subgroups(p.vertices()).unwrap() {
                let c = lift_conditions(&p, &s.kernel).unwrap();
                assert!(c.all_equal(), "{p} / {:?}: {c:?}", s.kernel);
            }
        }
    }
}

#[test]
fn prism_and_lift_commute() {
    for n in 1..=4 {
        let cube = GroupPolytope::cube(n).unwrap();
        for s in index2_subgroups(cube.vertices()).unwrap() {
            let Ok(lifted) = lift(&cube, &s.kernel) else {
                continue;
            };
            // U × {0,1} inside W_{n+1}.
            let doubled: Vec<BitWord> = s
                .kernel
                .iter()
                .flat_map(|u| [u.push(false).unwrap(), u.push(true).unwrap()])
                .collect();
            let one_way = lift(&prism(&cube), &doubled).unwrap();
            let other_way = prism(&lifted);
            let swapped: BTreeSet<u64> = other_way
                .vertices()
                .iter()
                .map(|w| {
                    let b = w.bits();
                    let (x, y) = ((b >> n) & 1, (b >> (n + 1)) & 1);
                    (b & ((1 << n) - 1)) | (y << n) | (x << (n + 1))
                })
                .collect();
            let direct: BTreeSet<u64> = one_way.vertices().iter().map(|w| w.bits()).collect();
            assert_eq!(direct, swapped);
        }
    }
}

#[test]
fn dnk_bound() {
    let d = dnk_bruteforce(4, 3).unwrap();
    let c = count_cnk(4).unwrap().get(4, 3).clone();
    assert!(d >= BigUint::from(8u32 * 8) * &c);
    assert!(d > BigUint::from(4u32 * 8) * &c);
}

#[test]
fn configurations_cover_the_cube() {
    for n in 1..=8 {
        let c: BTreeSet<u64> = configurations(n).unwrap().iter().map(|w| w.bits()).collect();
        assert_eq!(c.len(), 1 << n);
    }
}
