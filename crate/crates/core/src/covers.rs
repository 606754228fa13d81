//! Exact vertex covers and crosscuts.
//!
//! Both problems share one branch-and-bound: take the first edge not yet
//! hit by the chosen set and branch on its admissible vertices in increasing
//! order, excluding the earlier ones in later branches. Edges with a single
//! admissible vertex are forced, and a greedy packing of pairwise disjoint
//! open edges bounds the number of further picks from below.
//!
//! For crosscuts a chosen vertex additionally excludes every vertex it
//! shares an edge with, so that each edge is hit exactly once.

use crate::bipartite::{BipartiteGraph, PartVertex};
use crate::constructions::blowup;
use crate::error::{invalid, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A minimum cover or crosscut. `witness` is the lexicographically smallest
/// optimal set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverResult {
    pub size: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Cover,
    Crosscut,
}

/// `τ(H)` with a lexicographically smallest minimum cover.
pub fn min_vertex_cover(h: &Hypergraph) -> CoverResult {
    minimize(h.edges(), h.n(), Mode::Cover).expect("every hypergraph has a vertex cover")
}

/// `σ(H)` with a lexicographically smallest minimum crosscut, or `None`
/// when no crosscut exists.
pub fn min_crosscut(h: &Hypergraph) -> Option<CoverResult> {
    minimize(h.edges(), h.n(), Mode::Crosscut)
}

/// Minimum vertex cover of an arbitrary family of nonempty sets in `[n]`.
pub fn min_cover_of_sets(sets: &[VertexSet], n: usize) -> CoverResult {
    minimize(sets, n, Mode::Cover).expect("every family of nonempty sets has a cover")
}

pub fn is_vertex_cover(h: &Hypergraph, x: VertexSet) -> bool {
    h.edges().iter().all(|e| !e.is_disjoint(x))
}

pub fn is_crosscut(h: &Hypergraph, x: VertexSet) -> bool {
    h.edges().iter().all(|e| e.intersection_len(x) == 1)
}

fn minimize(edges: &[VertexSet], n: usize, mode: Mode) -> Option<CoverResult> {
    let solver = Solver { edges, mode };
    let all = VertexSet::first_n(n);
    let useful = edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e);
    // A useless vertex never helps, so excluding it keeps witnesses minimal.
    let base_excluded = all - useful;
    let size = (0..=useful.len()).find(|&k| solver.feasible(VertexSet::EMPTY, base_excluded, k))?;

    let mut witness = VertexSet::EMPTY;
    let mut lo = 1u32;
    while witness.len() < size {
        let v = (lo..=n as u32)
            .find(|&v| {
                let chosen = witness.with(v);
                let excluded = base_excluded | (VertexSet::first_n(v as usize) - chosen);
                solver.feasible(chosen, excluded, size - chosen.len())
            })
            .expect("a witness of the optimal size exists");
        witness.insert(v);
        lo = v + 1;
    }
    Some(CoverResult { size, witness })
}

struct Solver<'a> {
    edges: &'a [VertexSet],
    mode: Mode,
}

impl Solver<'_> {
    /// Whether some set `X ⊇ chosen` avoiding `excluded` with at most
    /// `budget` further vertices is a cover (or crosscut).
    fn feasible(&self, mut chosen: VertexSet, mut excluded: VertexSet, mut budget: usize) -> bool {
        // Propagate forced choices to a fixed point.
        loop {
            if self.mode == Mode::Crosscut {
                let mut blocked = VertexSet::EMPTY;
                for &e in self.edges {
                    match e.intersection_len(chosen) {
                        0 => {}
                        1 => blocked |= e - chosen,
                        _ => return false,
                    }
                }
                excluded |= blocked;
            }
            let mut forced = VertexSet::EMPTY;
            for &e in self.edges {
                if !e.is_disjoint(chosen) {
                    continue;
                }
                let avail = e - excluded;
                match avail.len() {
                    0 => return false,
                    1 => forced |= avail,
                    _ => {}
                }
            }
            if forced.is_empty() {
                break;
            }
            if forced.len() > budget {
                return false;
            }
            budget -= forced.len();
            chosen |= forced;
        }

        let mut first_open = None;
        let mut packed = VertexSet::EMPTY;
        let mut packing = 0usize;
        for &e in self.edges {
            if !e.is_disjoint(chosen) {
                continue;
            }
            let avail = e - excluded;
            first_open.get_or_insert(avail);
            if avail.is_disjoint(packed) {
                packed |= avail;
                packing += 1;
            }
        }
        let Some(branch) = first_open else {
            return true;
        };
        if packing > budget {
            return false;
        }
        let mut skipped = VertexSet::EMPTY;
        for v in branch {
            if self.feasible(chosen.with(v), excluded | skipped, budget - 1) {
                return true;
            }
            skipped.insert(v);
        }
        false
    }
}

/// Leaves `x` of the tree `T` with `σ(T∖x) < σ(T)`, where `σ` is evaluated
/// on the `(a, b)`-blowups. Leaves of both parts are examined.
pub fn critical_leaves(tree: &BipartiteGraph, a: usize, b: usize) -> Result<Vec<PartVertex>> {
    if !tree.is_tree() {
        return invalid("critical leaves are defined for trees only");
    }
    let sigma = blowup_crosscut_number(tree, a, b)?;
    let mut out = Vec::new();
    for x in tree.leaves() {
        let rest = tree.remove_vertex(x)?;
        if blowup_crosscut_number(&rest, a, b)? < sigma {
            out.push(x);
        }
    }
    Ok(out)
}

/// `σ` of the `(a, b)`-blowup of a skeleton; an edgeless skeleton has `σ = 0`.
fn blowup_crosscut_number(skeleton: &BipartiteGraph, a: usize, b: usize) -> Result<usize> {
    if skeleton.is_empty() {
        return Ok(0);
    }
    let h = blowup(skeleton, a, b)?.hypergraph;
    match min_crosscut(&h) {
        Some(c) => Ok(c.size),
        None => invalid("blowup of a tree has no crosscut"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{psi, tight_path};
    use crate::vertex_set::k_subsets;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    #[test]
    fn cover_examples() {
        let c = min_vertex_cover(&psi(8, 3, 2).unwrap());
        assert_eq!(c.size, 2);
        assert_eq!(c.witness, vs(&[1, 2]));
        assert_eq!(min_vertex_cover(&Hypergraph::complete(5, 3).unwrap()).size, 3);
        let empty = min_vertex_cover(&Hypergraph::empty(4, 2).unwrap());
        assert_eq!((empty.size, empty.witness), (0, VertexSet::EMPTY));
    }

    #[test]
    fn complete_graph_cover_is_fast() {
        let k20 = Hypergraph::complete(20, 2).unwrap();
        let c = min_vertex_cover(&k20);
        assert_eq!(c.size, 19);
        assert_eq!(c.witness, VertexSet::first_n(19));
    }

    #[test]
    fn crosscut_examples() {
        let h = Hypergraph::from_lists(4, 3, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let c = min_crosscut(&h).unwrap();
        assert_eq!((c.size, c.witness), (1, vs(&[1])));
        let t = min_crosscut(&tight_path(3, 3).unwrap()).unwrap();
        assert_eq!((t.size, t.witness), (1, vs(&[3])));
    }

    #[test]
    fn complete_graph_has_no_crosscut() {
        assert!(min_crosscut(&Hypergraph::complete(5, 3).unwrap()).is_none());
        let triangle = Hypergraph::new(3, 2, k_subsets(3, 2)).unwrap();
        assert!(min_crosscut(&triangle).is_none());
    }

    #[test]
    fn double_star_separates_tau_and_sigma() {
        let h = blowup(&BipartiteGraph::double_star(3, 3), 1, 1).unwrap().hypergraph;
        assert_eq!(min_vertex_cover(&h).size, 2);
        assert_eq!(min_crosscut(&h).unwrap().size, 4);
    }

    #[test]
    fn critical_leaf_examples() {
        // P3: u1 v1 u2 v2; the V-side leaf is v2.
        let p3 = BipartiteGraph::path(3);
        let crit = critical_leaves(&p3, 2, 1).unwrap();
        assert!(crit.contains(&PartVertex::V(2)));
        assert!(critical_leaves(&BipartiteGraph::path(4), 2, 1).unwrap().is_empty());
        assert!(critical_leaves(&BipartiteGraph::star(3), 2, 1).unwrap().is_empty());
        assert!(critical_leaves(&BipartiteGraph::star(1), 2, 1)
            .unwrap()
            .contains(&PartVertex::V(1)));
        assert!(critical_leaves(&BipartiteGraph::complete(2, 2), 1, 1).is_err());
    }
}
