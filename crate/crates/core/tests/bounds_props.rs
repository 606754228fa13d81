mod common;

use common::random_hypergraph;
use hgx_core::binomial;
use hgx_core::bounds::{crosscut_lower, kk_shadow_bound, psi_lower, real_binomial};
use hgx_core::constructions::{psi, psi1};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn kk_inverts_on_integer_points() {
    for k in 2..=5 {
        for y0 in k as u64..=20 {
            let m = binomial(y0, k as u64);
            let want = binomial(y0, k as u64 - 1) as f64;
            assert!((kk_shadow_bound(m, k) - want).abs() <= 1e-9, "k={k} y0={y0}");
        }
    }
}

#[test]
fn kk_is_monotone_and_consistent() {
    for k in 2..=4 {
        let mut prev = 0.0;
        for m in 0..=2000u128 {
            let b = kk_shadow_bound(m, k);
            assert!(b >= prev - 1e-9, "k={k} m={m}");
            prev = b;
        }
    }
    // The root behind the (5,3) example.
    let b = kk_shadow_bound(5, 3);
    let mut lo = 3.0;
    let mut hi = 6.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if real_binomial(mid, 3) < 5.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!((real_binomial(hi, 3) - 5.0).abs() <= 1e-9);
    assert!((real_binomial(hi, 2) - b).abs() <= 1e-9);
}

#[test]
fn kk_holds_on_random_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let n = rng.gen_range(3..=8);
        let p = rng.gen_range(0.05..0.95);
        let g = random_hypergraph(&mut rng, n, 3, p);
        let shadow = g.shadow(2).unwrap().len() as f64;
        assert!(shadow >= kk_shadow_bound(g.len() as u128, 3) - 1e-9);
    }
}

#[test]
fn construction_bounds_count_their_constructions() {
    for n in 1..=14usize {
        for r in 1..=5.min(n) {
            for k in 1..=4.min(n) {
                let c = k - 1;
                let p = psi(n, r, c).unwrap();
                assert_eq!(psi_lower(n, r, k).unwrap().value.to_f64(), p.len() as f64);
                if c == 0 || r <= n - c + 1 {
                    let p1 = psi1(n, r, c).unwrap();
                    assert_eq!(crosscut_lower(n, r, k).unwrap().value.to_f64(), p1.len() as f64);
                }
            }
        }
    }
}
