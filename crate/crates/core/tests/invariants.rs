//! Cross-module invariants: identities that must hold for every tree in
//! the small-order enumerations, and property tests over random
//! Prüfer-generated trees.

use proptest::prelude::*;

use sigma_core::enumeration::{free_trees, FREE_TREE_COUNTS};
use sigma_core::extremal::{extremal_sigma, par_map_trees};
use sigma_core::families::{greedy_tree, GreedyVariant};
use sigma_core::formulas::{check_bound_upper_lambda, eval_sigma_caterpillar_spine, EvalMode};
use sigma_core::indices::{albertson, forgotten_f, sigma, zagreb_m1, zagreb_m2, IndexValue};
use sigma_core::tree::{are_isomorphic, parse_tree, DegreeSequence, Tree};
use sigma_core::TreeClass;

/// Parses the single-line `n;u v;u v` witness form.
fn parse_line(line: &str) -> Tree {
    parse_tree(&line.replace(';', "\n")).expect("valid witness line")
}

#[test]
fn sigma_identity_holds_on_enumeration() {
    for n in 1..=10usize {
        for t in free_trees(n).unwrap() {
            assert_eq!(sigma(&t).0, forgotten_f(&t).0 - 2 * zagreb_m2(&t).0);
        }
    }
}

#[test]
fn forgotten_equals_cubed_degree_sum() {
    // F(T) is determined by the degree sequence alone.
    for n in 2..=9usize {
        for t in free_trees(n).unwrap() {
            let cubes: i128 = t.degrees().iter().map(|&d| (d as i128).pow(3)).sum();
            assert_eq!(forgotten_f(&t).0, cubes);
        }
    }
}

#[test]
fn albertson_is_even_and_cauchy_schwarz_bounds_it() {
    for n in 2..=10usize {
        for t in free_trees(n).unwrap() {
            let irr = albertson(&t).0;
            assert_eq!(irr % 2, 0, "odd albertson on {}", t.serialize_line());
            let m = (n - 1) as i128;
            assert!(irr * irr <= m * sigma(&t).0);
        }
    }
}

#[test]
fn sigma_zero_only_below_three_vertices() {
    for n in 1..=10usize {
        for t in free_trees(n).unwrap() {
            if n <= 2 {
                assert_eq!(sigma(&t), IndexValue(0));
            } else {
                assert!(sigma(&t).0 >= 2);
            }
        }
    }
}

#[test]
fn canonical_form_survives_relabelings_of_every_small_tree() {
    // 100 pseudo-random relabelings of every tree with n <= 10.
    let mut state = 0x5deece66du64;
    let mut next = move || {
        state = state
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        (state >> 33) as usize
    };
    for n in 3..=10usize {
        for t in free_trees(n).unwrap() {
            let code = t.canonical_form();
            for _ in 0..100 {
                let mut perm: Vec<u32> = (0..n as u32).collect();
                for i in (1..n).rev() {
                    let j = next() % (i + 1);
                    perm.swap(i, j);
                }
                let relabeled: Vec<(u32, u32)> = t
                    .edges()
                    .iter()
                    .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
                    .collect();
                let other = Tree::new(n, relabeled).unwrap();
                assert_eq!(other.canonical_form(), code);
            }
        }
    }
}

#[test]
fn k_level_matches_three_level_on_grid() {
    for n in 3..=5usize {
        for p in 1..=3u32 {
            for r in 1..=3u32 {
                for s in 1..=3u32 {
                    let a = sigma_core::families::k_level_tree(n, p, &[1 + r, 1 + s]).unwrap();
                    let b = sigma_core::families::three_level_tree(n, p, r, s).unwrap();
                    assert!(are_isomorphic(&a, &b), "(n,p,r,s)=({n},{p},{r},{s})");
                    let (pp, rr, ss) = (p as usize, r as usize, s as usize);
                    assert_eq!(b.vertex_count(), n * (1 + pp + pp * rr + pp * rr * ss));
                    assert!(!b.is_caterpillar());
                    assert!(sigma_core::families::caterpillar_uniform(n, p)
                        .unwrap()
                        .is_caterpillar());
                }
            }
        }
    }
}

#[test]
fn extremal_witnesses_reverify() {
    for (n, class) in [
        (7usize, TreeClass::All),
        (8, TreeClass::Caterpillar),
        (8, TreeClass::GreedyRealizable),
    ] {
        let r = extremal_sigma(n, class).unwrap();
        let (min, max) = (r.min_value.unwrap(), r.max_value.unwrap());
        assert!(!r.min_witnesses.is_empty() && !r.max_witnesses.is_empty());
        for line in &r.min_witnesses {
            assert_eq!(sigma(&parse_line(line)), min);
        }
        for line in &r.max_witnesses {
            assert_eq!(sigma(&parse_line(line)), max);
        }
    }
}

#[test]
fn extremal_min_is_path_and_max_is_star() {
    for n in 4..=12usize {
        let r = extremal_sigma(n, TreeClass::All).unwrap();
        assert_eq!(r.min_value, Some(IndexValue(2)), "min at n = {n}");
        let n_i = n as i128;
        assert_eq!(
            r.max_value,
            Some(IndexValue((n_i - 1) * (n_i - 2) * (n_i - 2))),
            "max at n = {n}"
        );
        // The path is among the min witnesses; the star is unique max.
        let path = sigma_core::families::path(n).unwrap();
        assert!(r
            .min_witnesses
            .iter()
            .any(|line| are_isomorphic(&parse_line(line), &path)));
        assert_eq!(r.max_witnesses.len(), 1);
    }
}

#[test]
fn caterpillar_spine_formula_exhaustive_consistency() {
    // Spine-order reading, first sum to n-1: matches direct sigma on
    // every feasible spine list of length <= 6 with entries <= 6.
    fn rec(prefix: &mut Vec<u32>, checked: &mut u64) {
        if prefix.len() >= 2 {
            if let Ok(tree) = sigma_core::families::caterpillar_spine(prefix) {
                assert_eq!(
                    eval_sigma_caterpillar_spine(prefix, EvalMode::Exact),
                    sigma(&tree),
                    "spine {prefix:?}"
                );
                *checked += 1;
            }
        }
        if prefix.len() == 6 {
            return;
        }
        for d in 1..=6 {
            prefix.push(d);
            rec(prefix, checked);
            prefix.pop();
        }
    }
    let mut checked = 0;
    rec(&mut Vec::new(), &mut checked);
    assert!(checked > 20_000, "grid unexpectedly small: {checked}");
}

#[test]
fn isomorphism_is_an_equivalence_on_small_orders() {
    for n in 2..=8usize {
        let trees: Vec<Tree> = free_trees(n).unwrap().collect();
        for (i, a) in trees.iter().enumerate() {
            assert!(are_isomorphic(a, a));
            for b in trees.iter().skip(i + 1) {
                assert!(!are_isomorphic(a, b), "distinct classes compare equal");
            }
        }
    }
}

#[test]
fn parallel_and_sequential_searches_agree() {
    let sequential: Vec<String> = free_trees(9)
        .unwrap()
        .map(|t| t.serialize_line())
        .collect();
    let parallel = par_map_trees(9, |t| t.serialize_line()).unwrap();
    assert_eq!(sequential, parallel);
    assert_eq!(sequential.len() as u64, FREE_TREE_COUNTS[8]);
}

#[test]
fn lambda_bound_holds_on_all_small_caterpillars() {
    for n in 2..=9usize {
        for t in free_trees(n).unwrap() {
            if let Some(check) = check_bound_upper_lambda(&t) {
                assert!(check.holds, "violation at {}", t.serialize_line());
            }
        }
    }
}

fn arbitrary_prufer() -> impl Strategy<Value = Vec<u32>> {
    (2usize..=24).prop_flat_map(|n| {
        proptest::collection::vec(0..n as u32, n.saturating_sub(2))
    })
}

proptest! {
    #[test]
    fn canonical_form_is_relabeling_invariant(seq in arbitrary_prufer(), salt in 0u64..1000) {
        let tree = Tree::from_prufer(&seq).unwrap();
        let n = tree.vertex_count();
        // Deterministic permutation from the salt.
        let mut perm: Vec<u32> = (0..n as u32).collect();
        let mut state = salt.wrapping_add(0x9e3779b97f4a7c15);
        for i in (1..n).rev() {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            let j = (state >> 33) as usize % (i + 1);
            perm.swap(i, j);
        }
        let relabeled: Vec<(u32, u32)> = tree
            .edges()
            .iter()
            .map(|&(u, v)| (perm[u as usize], perm[v as usize]))
            .collect();
        let other = Tree::new(n, relabeled).unwrap();
        prop_assert_eq!(tree.canonical_form(), other.canonical_form());
    }

    #[test]
    fn serialize_parse_round_trip(seq in arbitrary_prufer()) {
        let tree = Tree::from_prufer(&seq).unwrap();
        let parsed = parse_tree(&tree.serialize()).unwrap();
        prop_assert_eq!(tree.edges(), parsed.edges());
    }

    #[test]
    fn parser_never_panics(text in "[0-9a-z \n;:-]{0,60}") {
        // Arbitrary junk must produce a value or an error, never a panic.
        let _ = parse_tree(&text);
    }

    #[test]
    fn greedy_realizes_input_sequence(seq in arbitrary_prufer()) {
        let ds = Tree::from_prufer(&seq).unwrap().degree_sequence();
        for variant in [GreedyVariant::Paper, GreedyVariant::Bfs] {
            let g = greedy_tree(&ds, variant).unwrap();
            prop_assert_eq!(g.degree_sequence(), ds.clone());
        }
    }

    #[test]
    fn identity_and_parity_on_random_trees(seq in arbitrary_prufer()) {
        let t = Tree::from_prufer(&seq).unwrap();
        prop_assert_eq!(sigma(&t).0, forgotten_f(&t).0 - 2 * zagreb_m2(&t).0);
        prop_assert_eq!(albertson(&t).0 % 2, 0);
        prop_assert!(zagreb_m1(&t).0 >= 0);
    }

    #[test]
    fn swap_preserves_degrees_and_sigma_delta(seq in arbitrary_prufer()) {
        let t = Tree::from_prufer(&seq).unwrap();
        let degrees = t.degrees();
        let edges = t.edges().to_vec();
        // Try every ordered pairing of two disjoint edges; the first
        // valid swap checks the delta identity.
        'outer: for &(a, b) in &edges {
            for &(c, e) in &edges {
                for (u, v, x, y) in [(a, b, c, e), (a, b, e, c), (b, a, c, e), (b, a, e, c)] {
                    if u == x || u == y || v == x || v == y {
                        continue;
                    }
                    if let Ok(swapped) = t.degree_preserving_swap(u, v, x, y) {
                        prop_assert_eq!(t.degree_sequence(), swapped.degree_sequence());
                        let delta = -2
                            * (degrees[u as usize] as i128 - degrees[x as usize] as i128)
                            * (degrees[v as usize] as i128 - degrees[y as usize] as i128);
                        // sigma(T) - sigma(T') = -2 (d(u)-d(x))(d(v)-d(y))
                        prop_assert_eq!(sigma(&t).0 - sigma(&swapped).0, delta);
                        break 'outer;
                    }
                }
            }
        }
    }
}

#[test]
fn swap_with_equal_degrees_keeps_sigma() {
    // Path 0..6: swap u=2,v=1, x=4,y=5 has d(u) = d(x) = 2.
    let t = sigma_core::families::path(7).unwrap();
    let s = t.degree_preserving_swap(2, 1, 4, 5).unwrap();
    assert_eq!(sigma(&t), sigma(&s));
}

#[test]
fn degree_sequences_partition_enumeration() {
    // Bucketing all trees on 8 vertices by degree sequence covers every
    // tree-graphic sequence of length 8.
    let sequences = sigma_core::enumeration::tree_graphic_sequences(8);
    let mut seen: std::collections::BTreeSet<DegreeSequence> = Default::default();
    for t in free_trees(8).unwrap() {
        seen.insert(t.degree_sequence());
    }
    assert_eq!(seen.len(), sequences.len());
    for ds in sequences {
        assert!(seen.contains(&ds));
    }
}
