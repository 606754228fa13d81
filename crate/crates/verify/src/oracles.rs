//! Slow, direct implementations used to check the fast engines.
//!
//! Nothing here calls the search or embedding code of `hgx-core`; only the
//! plain data types are shared.

use hgx_core::{Hypergraph, VertexSet};

/// All `k`-subsets of `1..=n` as sorted label lists, lexicographically.
pub fn combinations(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// Visits every injective map `[k] -> [n]`; stops when `f` returns `true`,
/// and reports whether it did.
pub fn any_injection(k: usize, n: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
    fn go(map: &mut Vec<u32>, used: &mut [bool], k: usize, f: &mut impl FnMut(&[u32]) -> bool) -> bool {
        if map.len() == k {
            return f(map);
        }
        for v in 1..used.len() {
            if !used[v] {
                used[v] = true;
                map.push(v as u32);
                let stop = go(map, used, k, f);
                map.pop();
                used[v] = false;
                if stop {
                    return true;
                }
            }
        }
        false
    }
    k <= n && go(&mut Vec::new(), &mut vec![false; n + 1], k, f)
}

/// Containment by trying every injective vertex map.
pub fn brute_contains(host: &Hypergraph, pattern: &Hypergraph) -> bool {
    any_injection(pattern.n(), host.n(), &mut |map| {
        pattern.edges().iter().all(|&e| host.contains_edge(e.map(map)))
    })
}

/// `ex_r(n, F)` by checking all `2^C(n,r)` subfamilies; `C(n, r) <= 24`.
pub fn naive_max_free(n: usize, r: usize, forbidden: &[Hypergraph]) -> usize {
    let cands: Vec<VertexSet> = combinations(n as u32, r)
        .into_iter()
        .map(VertexSet::from_vertices)
        .collect();
    assert!(cands.len() <= 24, "too many candidate edges for naive enumeration");
    let index = |e: VertexSet| cands.iter().position(|&c| c == e).expect("image is an r-set");
    let mut copies: Vec<u32> = Vec::new();
    for p in forbidden {
        any_injection(p.n(), n, &mut |map| {
            copies.push(p.edges().iter().fold(0, |acc, &e| acc | 1 << index(e.map(map))));
            false
        });
    }
    copies.sort_unstable();
    copies.dedup();
    (0u32..1 << cands.len())
        .filter(|&s| copies.iter().all(|&c| c & !s != 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Every pair of `[n]` lies in exactly one triple.
pub fn is_steiner_triple_system(h: &Hypergraph) -> bool {
    h.r() == 3
        && combinations(h.n() as u32, 2)
            .iter()
            .all(|pair| h.edges().iter().filter(|e| pair.iter().all(|&v| e.contains(v))).count() == 1)
}

/// Connected components of the support of a graph.
fn components(g: &Hypergraph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut comp = vec![usize::MAX; n + 1];
    let mut out: Vec<Vec<u32>> = Vec::new();
    for start in 1..=n as u32 {
        if comp[start as usize] != usize::MAX || !g.edges().iter().any(|e| e.contains(start)) {
            continue;
        }
        let id = out.len();
        let mut stack = vec![start];
        comp[start as usize] = id;
        let mut members = Vec::new();
        while let Some(v) = stack.pop() {
            members.push(v);
            for e in g.edges().iter().filter(|e| e.contains(v)) {
                for w in e.iter() {
                    if comp[w as usize] == usize::MAX {
                        comp[w as usize] = id;
                        stack.push(w);
                    }
                }
            }
        }
        out.push(members);
    }
    out
}

/// Each nontrivial component of the graph is a complete graph.
pub fn is_disjoint_union_of_cliques(g: &Hypergraph) -> bool {
    g.r() == 2
        && components(g).iter().all(|c| {
            let k = c.len();
            let inside = g.edges().iter().filter(|e| e.iter().all(|v| c.contains(&v))).count();
            inside == k * (k - 1) / 2
        })
}

/// Some vertex lies in every edge.
pub fn has_full_cover_vertex(h: &Hypergraph) -> bool {
    !h.is_empty() && (1..=h.n() as u32).any(|v| h.edges().iter().all(|e| e.contains(v)))
}

/// Whether some set of at most `k` vertices meets every edge in exactly one vertex.
pub fn has_crosscut_of_size_at_most(h: &Hypergraph, k: usize) -> bool {
    (0..=k.min(h.n())).any(|size| {
        combinations(h.n() as u32, size).iter().any(|x| {
            let x = VertexSet::from_vertices(x.iter().copied());
            h.edges().iter().all(|e| e.intersection_len(x) == 1)
        })
    })
}

/// `|{e ⊆ [n] : |e| = r, e ∩ [c] ≠ ∅}|` and `|{... : |e ∩ [c]| = 1}|`, by enumeration.
pub fn psi_sizes_by_enumeration(n: usize, r: usize, c: usize) -> (usize, usize) {
    let mut meet = 0;
    let mut once = 0;
    for e in combinations(n as u32, r) {
        let k = e.iter().filter(|&&v| v as usize <= c).count();
        meet += usize::from(k >= 1);
        once += usize::from(k == 1);
    }
    (meet, once)
}

/// `C(n, k)` by the additive recurrence.
pub fn pascal(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut row = vec![0u128; k + 1];
    row[0] = 1;
    for i in 1..=n {
        for j in (1..=k.min(i)).rev() {
            row[j] += row[j - 1];
        }
    }
    row[k]
}
