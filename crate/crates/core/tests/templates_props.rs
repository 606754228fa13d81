mod common;

use common::random_hypergraph;
use hgx_core::templates::{
    covers_heavy_sets, extract_near_crosscut, heavy_sets, incidence, sample_template, SamplerParams,
};
use hgx_core::VertexSet;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn incidence_sizes(seed in any::<u64>(), n in 6usize..=14, p in 0.1f64..0.9, a in 1usize..=2, alpha in 0.1f64..0.9) {
        let host = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), n, 3, p);
        let params = SamplerParams { alpha, m: 2, seed, delta: 0.5 };
        let sampled = sample_template(&host, a, &params, VertexSet::EMPTY).unwrap();
        let inc = incidence(&host, &sampled.template).unwrap();
        prop_assert!(inc.h1.len() <= inc.h0.len());
        if sampled.template.a_is_matching() {
            prop_assert_eq!(inc.h0.len(), inc.h1.len());
        }
        for blk in sampled.template.b_sets() {
            prop_assert!(blk.is_disjoint(sampled.r_set));
        }
    }

    #[test]
    fn near_crosscut_is_a_crosscut(seed in any::<u64>(), n in 5usize..=12, p in 0.1f64..0.9, a in 1usize..=2, m in 1u64..=20) {
        let host = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(seed), n, 3, p);
        let nc = extract_near_crosscut(&host, a, m).unwrap();
        prop_assert!(nc.f.edges().iter().all(|e| e.intersection_len(nc.l) == 1));
        prop_assert_eq!(nc.g_size, nc.f.len() + nc.g0_size);
        let hs = heavy_sets(&host, a, m).unwrap();
        prop_assert!(covers_heavy_sets(&hs).unwrap());
    }
}

#[test]
fn sampled_set_has_the_expected_mean() {
    let n = 20;
    let host = random_hypergraph(&mut ChaCha8Rng::seed_from_u64(1), n, 3, 0.3);
    let l = VertexSet::from_vertices([1, 2, 3, 4]);
    let alpha = 0.3;
    let runs = 1000;
    let sizes: Vec<f64> = (0..runs)
        .map(|seed| {
            let params = SamplerParams {
                alpha,
                m: 2,
                seed,
                delta: 0.5,
            };
            sample_template(&host, 1, &params, l).unwrap().r_set.len() as f64
        })
        .collect();
    let mean = sizes.iter().sum::<f64>() / runs as f64;
    let expected = alpha * (n - l.len()) as f64;
    let se = (alpha * (1.0 - alpha) * (n - l.len()) as f64 / runs as f64).sqrt();
    assert!((mean - expected).abs() <= 5.0 * se, "mean {mean}, expected {expected}");
}
