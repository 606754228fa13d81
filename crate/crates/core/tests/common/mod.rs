#![allow(dead_code)]

use hgx_core::{k_subsets, Hypergraph, VertexSet};
use rand::Rng;

pub fn random_hypergraph(rng: &mut impl Rng, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges: Vec<VertexSet> = k_subsets(n, r).filter(|_| rng.gen_bool(p)).collect();
    Hypergraph::new(n, r, edges).unwrap()
}

/// Calls `f` with every injective map `[k] -> [n]` (as 1-based images).
pub fn for_each_injection(k: usize, n: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn go(map: &mut Vec<u32>, used: &mut Vec<bool>, k: usize, n: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if map.len() == k {
            return f(map);
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                map.push(v as u32);
                let stop = go(map, used, k, n, f);
                map.pop();
                used[v] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    go(&mut Vec::new(), &mut vec![false; n + 1], k, n, f)
}

/// Containment by trying every injective vertex map.
pub fn brute_contains(host: &Hypergraph, pattern: &Hypergraph) -> bool {
    if pattern.n() > host.n() {
        return false;
    }
    for_each_injection(pattern.n(), host.n(), &mut |map| {
        pattern.edges().iter().all(|&e| host.contains_edge(e.map(map)))
    })
}

/// `ex_r(n, F)` by checking every subfamily of `K_n^(r)`; needs `C(n, r) <= 20`.
pub fn naive_max_free(n: usize, r: usize, forbidden: &[Hypergraph]) -> usize {
    let cands: Vec<VertexSet> = k_subsets(n, r).collect();
    assert!(cands.len() <= 20);
    let index = |e: VertexSet| cands.iter().position(|&c| c == e).unwrap();
    let mut copies: Vec<u32> = Vec::new();
    for p in forbidden {
        if p.n() > n {
            continue;
        }
        for_each_injection(p.n(), n, &mut |map| {
            copies.push(p.edges().iter().fold(0, |acc, &e| acc | 1 << index(e.map(map))));
            false
        });
    }
    (0u32..1 << cands.len())
        .filter(|&s| copies.iter().all(|&c| c & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}
