//! Generators for the standard extremal families.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartite::{BipartiteGraph, PartVertex};
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{subsets, VertexSet};

/// Largest `s + t` accepted by [`trees_with_parts`].
pub const TREE_ENUMERATION_LIMIT: usize = 10;

/// `Ψ_c(n, r)`: all `r`-sets meeting `{1, ..., c}`.
pub fn psi(n: usize, r: usize, c: usize) -> Result<Hypergraph> {
    if c > n {
        return invalid(format!("core size c={c} exceeds n={n}"));
    }
    let core = VertexSet::first_n(c);
    Ok(Hypergraph::complete(n, r)?.filter(|e| !e.is_disjoint(core)))
}

/// `Ψ¹_c(n, r)`: all `r`-sets meeting `{1, ..., c}` in exactly one vertex.
pub fn psi1(n: usize, r: usize, c: usize) -> Result<Hypergraph> {
    if c > n {
        return invalid(format!("core size c={c} exceeds n={n}"));
    }
    if c > 0 && r > n - c + 1 {
        return invalid(format!("r={r} exceeds n-c+1={}", n - c + 1));
    }
    let core = VertexSet::first_n(c);
    let outside = VertexSet::first_n(n) - core;
    let mut edges = Vec::new();
    for v in core {
        edges.extend(subsets(outside, r - 1).map(|f| f.with(v)));
    }
    Hypergraph::new(n, r, edges)
}

/// An `(a, b)`-blowup together with its block layout.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Blowup {
    pub hypergraph: Hypergraph,
    /// `u_blocks[i - 1]` is the `a`-set replacing `u_i`.
    pub u_blocks: Vec<VertexSet>,
    /// `v_blocks[j - 1]` is the `b`-set replacing `v_j`.
    pub v_blocks: Vec<VertexSet>,
}

impl Blowup {
    pub fn block(&self, x: PartVertex) -> VertexSet {
        match x {
            PartVertex::U(i) => self.u_blocks[i - 1],
            PartVertex::V(j) => self.v_blocks[j - 1],
        }
    }
}

/// `H(a, b)`: `U`-blocks occupy `1..=a·s`, `V`-blocks follow, both in index order.
pub fn blowup(skeleton: &BipartiteGraph, a: usize, b: usize) -> Result<Blowup> {
    if a == 0 || b == 0 {
        return invalid("block sizes a and b must be positive");
    }
    let (s, t) = (skeleton.s(), skeleton.t());
    let n = a * s + b * t;
    if n < a + b {
        return invalid(format!("blowup has {n} vertices, fewer than r={}", a + b));
    }
    let u_blocks: Vec<VertexSet> = (0..s)
        .map(|i| VertexSet::interval((i * a + 1) as u32, ((i + 1) * a) as u32))
        .collect();
    let v_blocks: Vec<VertexSet> = (0..t)
        .map(|j| VertexSet::interval((a * s + j * b + 1) as u32, (a * s + (j + 1) * b) as u32))
        .collect();
    let edges = skeleton.edges().iter().map(|&(u, v)| u_blocks[u - 1] | v_blocks[v - 1]);
    Ok(Blowup {
        hypergraph: Hypergraph::new(n, a + b, edges)?,
        u_blocks,
        v_blocks,
    })
}

/// `P_ℓ(a, b)` from the interval picture: `ℓ + 1` consecutive blocks of
/// sizes `a, b, a, b, ...` on a line, each edge the union of two neighbors.
pub fn ab_path(ell: usize, a: usize, b: usize) -> Result<Hypergraph> {
    if ell == 0 || a == 0 || b == 0 {
        return invalid("ab_path needs ell, a, b >= 1");
    }
    let mut blocks = Vec::with_capacity(ell + 1);
    let mut next = 1u32;
    for i in 0..=ell {
        let size = if i % 2 == 0 { a } else { b } as u32;
        blocks.push(VertexSet::interval(next, next + size - 1));
        next += size;
    }
    let n = (next - 1) as usize;
    Hypergraph::new(n, a + b, blocks.windows(2).map(|w| w[0] | w[1]))
}

/// The graph path with `ell` edges on `ell + 1` vertices.
pub fn graph_path(ell: usize) -> Result<Hypergraph> {
    ab_path(ell, 1, 1)
}

/// Tight path: edges `{i, ..., i + r - 1}` for `i = 1..=ell`.
pub fn tight_path(ell: usize, r: usize) -> Result<Hypergraph> {
    if ell == 0 || r == 0 {
        return invalid("tight_path needs ell, r >= 1");
    }
    let edges = (1..=ell as u32).map(|i| VertexSet::interval(i, i + r as u32 - 1));
    Hypergraph::new(ell + r - 1, r, edges)
}

/// Loose path: consecutive edges share exactly one vertex.
pub fn loose_path(ell: usize, r: usize) -> Result<Hypergraph> {
    if ell == 0 || r < 2 {
        return invalid("loose_path needs ell >= 1 and r >= 2");
    }
    let step = (r - 1) as u32;
    let edges = (0..ell as u32).map(|i| VertexSet::interval(i * step + 1, i * step + r as u32));
    Hypergraph::new(ell * (r - 1) + 1, r, edges)
}

/// The Fano plane, the Steiner triple system on 7 points.
pub fn fano() -> Hypergraph {
    Hypergraph::from_lists(
        7,
        3,
        &[
            &[1, 2, 3],
            &[1, 4, 5],
            &[1, 6, 7],
            &[2, 4, 6],
            &[2, 5, 7],
            &[3, 4, 7],
            &[3, 5, 6],
        ],
    )
    .expect("Fano plane is valid")
}

/// Edges `e ∪ {i}` where `e` ranges over `(r-1)`-subsets of `{3..n}` and
/// `i ∈ {1, 2}` is chosen by the parity of the vertex sum of `e` (even → 1).
pub fn no_stability_example(n: usize, r: usize) -> Result<Hypergraph> {
    no_stability_with(n, r, |e| e.iter().sum::<u32>() % 2 == 0)
}

/// Same family with a seeded random split of the `(r-1)`-sets.
pub fn no_stability_random(n: usize, r: usize, seed: u64) -> Result<Hypergraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    no_stability_with(n, r, |_| rng.gen_bool(0.5))
}

fn no_stability_with(n: usize, r: usize, mut first: impl FnMut(VertexSet) -> bool) -> Result<Hypergraph> {
    if r < 2 || n < r + 2 {
        return invalid(format!(
            "no-stability construction needs r >= 2 and n >= r+2, got n={n}, r={r}"
        ));
    }
    let rest = VertexSet::first_n(n) - VertexSet::first_n(2);
    let edges: Vec<VertexSet> = subsets(rest, r - 1)
        .map(|e| if first(e) { e.with(1) } else { e.with(2) })
        .collect();
    Hypergraph::new(n, r, edges)
}

/// All trees with parts of sizes `s` and `t`, one per isomorphism class
/// preserving the parts, sorted by canonical form.
///
/// Grown leaf by leaf from a single edge, deduplicating each generation.
pub fn trees_with_parts(s: usize, t: usize) -> Result<Vec<BipartiteGraph>> {
    if s == 0 || t == 0 {
        return invalid("both parts of a tree with an edge are nonempty");
    }
    if s + t > TREE_ENUMERATION_LIMIT {
        return invalid(format!(
            "tree enumeration limited to s+t <= {TREE_ENUMERATION_LIMIT}, got {}",
            s + t
        ));
    }
    let mut level: BTreeMap<Vec<u8>, BipartiteGraph> = BTreeMap::new();
    let edge = BipartiteGraph::complete(1, 1);
    level.insert(edge.canonical_form()?, edge);
    for _ in 2..s + t {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for x in tree.vertices().collect::<Vec<_>>() {
                let grown = tree.add_leaf(x);
                if grown.s() > s || grown.t() > t {
                    continue;
                }
                next.entry(grown.canonical_form()?).or_insert(grown);
            }
        }
        level = next;
    }
    Ok(level.into_values().filter(|g| g.s() == s && g.t() == t).collect())
}

/// The 4-cycle blowup `C₄(a, b)`.
pub fn c4_blowup(a: usize, b: usize) -> Result<Hypergraph> {
    Ok(blowup(&BipartiteGraph::complete(2, 2), a, b)?.hypergraph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::{are_isomorphic, canonical_form};
    use crate::vertex_set::binomial;

    #[test]
    fn psi_examples() {
        assert_eq!(psi(6, 3, 2).unwrap().len(), 16);
        assert!(psi(6, 3, 0).unwrap().is_empty());
        assert_eq!(psi(6, 3, 6).unwrap().len(), 20);
        assert!(psi(6, 3, 7).is_err());
    }

    #[test]
    fn psi1_examples() {
        assert_eq!(psi1(6, 3, 2).unwrap().len(), 12);
        assert!(psi1(6, 3, 0).unwrap().is_empty());
        let star = psi1(7, 3, 1).unwrap();
        assert_eq!(star.len(), 15);
        assert!(star.edges().iter().all(|e| e.contains(1)));
        assert!(psi1(5, 3, 4).is_err());
    }

    #[test]
    fn blowup_examples() {
        let one = blowup(&BipartiteGraph::complete(1, 1), 2, 1).unwrap();
        assert_eq!(one.hypergraph.edges(), &[VertexSet::from_vertices([1, 2, 3])]);

        let p5 = blowup(&BipartiteGraph::path(5), 3, 2).unwrap();
        assert_eq!(p5.hypergraph.n(), 15);
        assert_eq!(p5.hypergraph.len(), 5);
        assert_eq!(p5.u_blocks.len(), 3);
        assert_eq!(p5.block(PartVertex::V(1)), VertexSet::from_vertices([10, 11]));

        let c4 = c4_blowup(2, 1).unwrap();
        assert_eq!((c4.n(), c4.len()), (6, 4));
    }

    #[test]
    fn ab_path_matches_blowup_and_symmetries() {
        assert_eq!(
            ab_path(2, 1, 2).unwrap().edges(),
            &[VertexSet::from_vertices([1, 2, 3]), VertexSet::from_vertices([2, 3, 4])]
        );
        assert!(are_isomorphic(&ab_path(5, 3, 2).unwrap(), &ab_path(5, 2, 3).unwrap()).unwrap());
        assert!(!are_isomorphic(&ab_path(4, 2, 1).unwrap(), &ab_path(4, 1, 2).unwrap()).unwrap());
        for ell in 1..=6 {
            for a in 1..=3 {
                for b in 1..=3 {
                    let direct = ab_path(ell, a, b).unwrap();
                    let blown = blowup(&BipartiteGraph::path(ell), a, b).unwrap().hypergraph;
                    assert_eq!(canonical_form(&direct).unwrap(), canonical_form(&blown).unwrap());
                }
            }
        }
    }

    #[test]
    fn tight_and_loose_paths() {
        assert_eq!(tight_path(1, 3).unwrap().len(), 1);
        let t = tight_path(3, 3).unwrap();
        assert_eq!(
            t.edges(),
            &[
                VertexSet::from_vertices([1, 2, 3]),
                VertexSet::from_vertices([2, 3, 4]),
                VertexSet::from_vertices([3, 4, 5])
            ]
        );
        let l = loose_path(2, 3).unwrap();
        assert_eq!(
            l.edges(),
            &[VertexSet::from_vertices([1, 2, 3]), VertexSet::from_vertices([3, 4, 5])]
        );
        assert_eq!(loose_path(4, 3).unwrap().n(), 9);
    }

    #[test]
    fn no_stability_shape() {
        let h = no_stability_example(6, 3).unwrap();
        assert_eq!(h.len(), 6);
        let core = VertexSet::from_vertices([1, 2]);
        assert!(h.edges().iter().all(|e| e.intersection_len(core) == 1));
        for n in 5..=12 {
            let h = no_stability_random(n, 3, n as u64).unwrap();
            assert_eq!(h.len() as u128, binomial(n as u64 - 2, 2));
        }
        assert!(no_stability_example(4, 3).is_err());
    }

    #[test]
    fn small_tree_families() {
        assert_eq!(trees_with_parts(1, 1).unwrap().len(), 1);
        let stars = trees_with_parts(3, 1).unwrap();
        assert_eq!(stars.len(), 1);
        assert_eq!(stars[0], BipartiteGraph::star(3).swap_parts());
        let p3 = trees_with_parts(2, 2).unwrap();
        assert_eq!(p3.len(), 1);
        assert_eq!(
            p3[0].canonical_form().unwrap(),
            BipartiteGraph::path(3).canonical_form().unwrap()
        );
        assert!(trees_with_parts(6, 5).is_err());
        assert!(trees_with_parts(0, 3).is_err());
    }
}
