mod common;

use common::random_hypergraph;
use hgx_core::constructions::{blowup, trees_with_parts};
use hgx_core::covers::{critical_leaves, is_crosscut, is_vertex_cover, min_crosscut, min_vertex_cover};
use hgx_core::{BipartiteGraph, Hypergraph, VertexSet};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Minimum cover and crosscut sizes by trying every vertex subset.
fn brute(h: &Hypergraph) -> (usize, Option<usize>) {
    let n = h.n();
    let mut tau = usize::MAX;
    let mut sigma = None;
    for bits in 0u128..1 << n {
        let x = VertexSet::from_bits(bits);
        let k = x.len();
        if h.edges().iter().all(|e| !e.is_disjoint(x)) {
            tau = tau.min(k);
        }
        if h.edges().iter().all(|e| e.intersection_len(x) == 1) && sigma.is_none_or(|s| k < s) {
            sigma = Some(k);
        }
    }
    (tau, sigma)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn solvers_match_brute_force(n in 2usize..=9, r in 1usize..=4, p in 0.02f64..0.5, seed in any::<u64>()) {
        prop_assume!(r <= n);
        let h = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), n, r, p);
        let (tau, sigma) = brute(&h);
        let cover = min_vertex_cover(&h);
        prop_assert_eq!(cover.size, tau);
        prop_assert!(is_vertex_cover(&h, cover.witness));
        let cross = min_crosscut(&h);
        prop_assert_eq!(cross.as_ref().map(|c| c.size), sigma);
        if let Some(c) = cross {
            prop_assert!(is_crosscut(&h, c.witness));
            prop_assert!(cover.size <= c.size);
        }
    }
}

#[test]
fn double_star_separates_tau_and_sigma() {
    let bl = blowup(&BipartiteGraph::double_star(3, 3), 1, 1).unwrap().hypergraph;
    assert_eq!(min_vertex_cover(&bl).size, 2);
    assert_eq!(min_crosscut(&bl).unwrap().size, 4);
}

#[test]
fn crosscut_of_tree_blowups_is_the_smaller_part() {
    for total in 2..=7 {
        for s in 1..total {
            let t = total - s;
            for tree in trees_with_parts(s, t).unwrap() {
                for (a, b) in [(1, 1), (2, 1), (3, 2)] {
                    let h = blowup(&tree, a, b).unwrap().hypergraph;
                    let c = min_crosscut(&h).expect("tree blowups have crosscuts");
                    assert_eq!(c.size, s.min(t), "tree {tree:?} a={a} b={b}");
                    assert!(is_crosscut(&h, c.witness));
                }
            }
        }
    }
}

#[test]
fn critical_leaves_lie_on_the_tree() {
    for tree in trees_with_parts(3, 3).unwrap() {
        for leaf in critical_leaves(&tree, 2, 1).unwrap() {
            assert!(tree.leaves().contains(&leaf));
        }
    }
    assert!(critical_leaves(&BipartiteGraph::complete(2, 2), 1, 1).is_err());
}
