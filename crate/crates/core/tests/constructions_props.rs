use hgx_core::canon::canonical_form;
use hgx_core::constructions::{
    ab_path, blowup, loose_path, no_stability_example, psi, psi1, tight_path, trees_with_parts,
};
use hgx_core::embedding::is_tight_tree;
use hgx_core::{binomial, BipartiteGraph};

#[test]
fn psi_sizes_match_formulas() {
    for n in 1..=14u64 {
        for r in 1..=5u64.min(n) {
            for c in 0..=4u64.min(n) {
                let p = psi(n as usize, r as usize, c as usize).unwrap();
                assert_eq!(p.len() as u128, binomial(n, r) - binomial(n - c, r), "psi({n},{r},{c})");
                if c > 0 && r <= n - c + 1 {
                    let p1 = psi1(n as usize, r as usize, c as usize).unwrap();
                    assert_eq!(p1.len() as u128, c as u128 * binomial(n - c, r - 1));
                    assert!(p1.edges().iter().all(|&e| p.contains_edge(e)));
                }
            }
        }
    }
}

#[test]
fn path_blowups_are_ab_paths() {
    for ell in 1..=6 {
        for a in 1..=3 {
            for b in 1..=3 {
                let bl = blowup(&BipartiteGraph::path(ell), a, b).unwrap();
                let direct = ab_path(ell, a, b).unwrap();
                assert_eq!(
                    canonical_form(&bl.hypergraph).unwrap(),
                    canonical_form(&direct).unwrap(),
                    "ell={ell} a={a} b={b}"
                );
            }
        }
    }
}

#[test]
fn tree_families_are_trees_with_given_parts() {
    for s in 1..=6 {
        for t in 1..=(10 - s).min(6) {
            let trees = trees_with_parts(s, t).unwrap();
            assert!(!trees.is_empty());
            for tree in &trees {
                assert!(tree.is_connected() && tree.is_tree());
                assert_eq!((tree.s(), tree.t()), (s, t));
            }
            let mut forms: Vec<_> = trees.iter().map(|t| t.canonical_form().unwrap()).collect();
            forms.sort();
            forms.dedup();
            assert_eq!(forms.len(), trees.len(), "duplicates for ({s},{t})");
        }
    }
}

#[test]
fn known_tree_counts() {
    // Trees on 4 vertices with parts (2,2): only the path; (1,3): the star.
    assert_eq!(trees_with_parts(2, 2).unwrap().len(), 1);
    assert_eq!(trees_with_parts(1, 3).unwrap().len(), 1);
    // Parts (3,3): the path, the double star, and the spider with legs
    // 1,2,2 whose center may lie on either side.
    assert_eq!(trees_with_parts(3, 3).unwrap().len(), 4);
}

#[test]
fn tight_and_loose_paths() {
    for r in 2..=5 {
        for ell in 1..=5 {
            assert!(is_tight_tree(&tight_path(ell, r).unwrap()).is_tight_tree);
            if r >= 3 && ell >= 2 {
                assert!(!is_tight_tree(&loose_path(ell, r).unwrap()).is_tight_tree);
            }
        }
    }
}

#[test]
fn no_stability_sizes() {
    for n in 5..=12u64 {
        let h = no_stability_example(n as usize, 3).unwrap();
        assert_eq!(h.len() as u128, binomial(n - 2, 2));
    }
}
