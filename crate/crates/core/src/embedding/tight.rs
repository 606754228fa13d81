//! Tight trees: recognition and the greedy embedding into dense hosts.

use std::collections::{HashMap, HashSet};

use super::Embedding;
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{subsets, VertexSet};

/// Result of [`is_tight_tree`]; `order` certifies a positive answer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightTree {
    pub is_tight_tree: bool,
    pub order: Vec<VertexSet>,
}

/// Largest edge count for which [`is_tight_tree`] searches exhaustively.
const EXACT_EDGE_LIMIT: usize = 128;

/// Decides whether the edges admit an order `e_1, ..., e_ℓ` in which every
/// `e_i` (`i > 1`) meets the union of its predecessors in exactly `r - 1`
/// vertices, all inside one earlier edge.
///
/// Appending an edge can disable others (they may gain an `r`-th old
/// vertex), so the search backtracks over choices, remembering edge subsets
/// that are known dead ends. Above 128 edges only greedy extension is tried.
pub fn is_tight_tree(h: &Hypergraph) -> TightTree {
    let edges = h.edges();
    let no = TightTree {
        is_tight_tree: false,
        order: Vec::new(),
    };
    if edges.is_empty() {
        return no;
    }
    let r = h.r();
    if edges.len() > EXACT_EDGE_LIMIT {
        for &start in edges {
            if let Some(order) = greedy_order(edges, r, start) {
                return TightTree {
                    is_tight_tree: true,
                    order,
                };
            }
        }
        return no;
    }
    let mut dead = HashSet::new();
    for i in 0..edges.len() {
        let mut order = vec![i];
        if order_search(edges, r, 1u128 << i, edges[i], &mut order, &mut dead) {
            return TightTree {
                is_tight_tree: true,
                order: order.into_iter().map(|i| edges[i]).collect(),
            };
        }
    }
    no
}

fn can_append(edges: &[VertexSet], r: usize, placed: u128, union: VertexSet, e: VertexSet) -> bool {
    let common = e & union;
    common.len() + 1 == r && (0..edges.len()).any(|j| placed >> j & 1 == 1 && common.is_subset_of(edges[j]))
}

fn order_search(
    edges: &[VertexSet],
    r: usize,
    placed: u128,
    union: VertexSet,
    order: &mut Vec<usize>,
    dead: &mut HashSet<u128>,
) -> bool {
    if order.len() == edges.len() {
        return true;
    }
    if dead.contains(&placed) {
        return false;
    }
    for i in 0..edges.len() {
        if placed >> i & 1 == 0 && can_append(edges, r, placed, union, edges[i]) {
            order.push(i);
            if order_search(edges, r, placed | 1u128 << i, union | edges[i], order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(placed);
    false
}

fn greedy_order(edges: &[VertexSet], r: usize, start: VertexSet) -> Option<Vec<VertexSet>> {
    let mut order = vec![start];
    let mut union = start;
    let mut left: Vec<VertexSet> = edges.iter().copied().filter(|&e| e != start).collect();
    while !left.is_empty() {
        let pos = left.iter().position(|&e| {
            let common = e & union;
            common.len() + 1 == r && order.iter().any(|f| common.is_subset_of(*f))
        })?;
        let e = left.remove(pos);
        union |= e;
        order.push(e);
    }
    Some(order)
}

/// Repeatedly deletes `(r-1)`-sets of degree at most `threshold` together
/// with the edges through them; returns the surviving edges.
pub fn prune_low_degree(g: &Hypergraph, threshold: usize) -> Hypergraph {
    let r = g.r();
    if r < 2 {
        return if g.len() > threshold {
            g.clone()
        } else {
            g.filter(|_| false)
        };
    }
    let mut alive: HashSet<VertexSet> = g.edges().iter().copied().collect();
    let mut degree: HashMap<VertexSet, usize> = HashMap::new();
    for &e in g.edges() {
        for f in subsets(e, r - 1) {
            *degree.entry(f).or_default() += 1;
        }
    }
    let mut stack: Vec<VertexSet> = degree
        .iter()
        .filter(|(_, &d)| d <= threshold)
        .map(|(&f, _)| f)
        .collect();
    let mut removed: HashSet<VertexSet> = stack.iter().copied().collect();
    while let Some(f) = stack.pop() {
        for v in g.vertex_set() - f {
            let e = f.with(v);
            if !alive.remove(&e) {
                continue;
            }
            for other in subsets(e, r - 1) {
                let d = degree.get_mut(&other).expect("shadow member");
                *d -= 1;
                if *d <= threshold && removed.insert(other) {
                    stack.push(other);
                }
            }
        }
    }
    g.filter(|e| alive.contains(&e))
}

/// Embeds the tight tree `tree` into `g`.
///
/// First `g` is pruned of `(r-1)`-sets with at most `ℓ - 1` extensions; in
/// the surviving core every reachable `(r-1)`-set has `ℓ` extensions, so
/// edge-by-edge greedy extension along the certified order cannot get
/// stuck. The core is nonempty whenever `|G| > (ℓ-1)|∂G|`. If the core is
/// empty the same extension is run with backtracking on all of `g`.
pub fn greedy_tight_tree(g: &Hypergraph, tree: &Hypergraph) -> Option<Embedding> {
    if g.r() != tree.r() || tree.is_empty() {
        return None;
    }
    let cert = is_tight_tree(tree);
    if !cert.is_tight_tree {
        return None;
    }
    let ell = tree.len();
    let core = prune_low_degree(g, ell - 1);
    let plan = Plan::new(&cert.order, tree.n());
    let found = if core.is_empty() {
        plan.embed(g, true)
    } else {
        plan.embed(&core, false).or_else(|| plan.embed(g, true))
    };
    let mut map = found?;
    // Vertices of `tree` outside every edge go to the smallest free labels.
    let used: VertexSet = map.iter().copied().filter(|&v| v != 0).collect();
    let mut free = (g.vertex_set() - used).iter();
    for slot in map.iter_mut() {
        if *slot == 0 {
            *slot = free.next()?;
        }
    }
    Some(Embedding {
        vertex_map: map,
        block_map: None,
    })
}

/// The tight order rewritten as: first edge, then for every later edge the
/// old `(r-1)`-set and the single new vertex.
struct Plan {
    first: Vec<u32>,
    steps: Vec<(VertexSet, u32)>,
    n: usize,
}

impl Plan {
    fn new(order: &[VertexSet], n: usize) -> Self {
        let mut union = order[0];
        let mut steps = Vec::new();
        for &e in &order[1..] {
            let new = (e - union).min().expect("tight order adds one vertex");
            steps.push((e.without(new), new));
            union |= e;
        }
        Plan {
            first: order[0].to_vec(),
            steps,
            n,
        }
    }

    fn embed(&self, g: &Hypergraph, backtrack: bool) -> Option<Vec<u32>> {
        let edge_set: HashSet<VertexSet> = g.edges().iter().copied().collect();
        for &f in g.edges() {
            // In a pruned core any orientation of any first edge works;
            // otherwise every orientation of every edge is tried.
            let orientations = if backtrack {
                permutations(&f.to_vec())
            } else {
                vec![f.to_vec()]
            };
            for image in orientations {
                let mut map = vec![0u32; self.n];
                for (&p, &h) in self.first.iter().zip(&image) {
                    map[p as usize - 1] = h;
                }
                if self.extend(g, &edge_set, 0, &mut map, f, backtrack) {
                    return Some(map);
                }
            }
            if !backtrack {
                return None;
            }
        }
        None
    }

    fn extend(
        &self,
        g: &Hypergraph,
        edges: &HashSet<VertexSet>,
        step: usize,
        map: &mut [u32],
        used: VertexSet,
        backtrack: bool,
    ) -> bool {
        let Some(&(old, new)) = self.steps.get(step) else {
            return true;
        };
        let base = old
            .iter()
            .fold(VertexSet::EMPTY, |acc, p| acc.with(map[p as usize - 1]));
        for y in g.vertex_set() - used {
            if !edges.contains(&base.with(y)) {
                continue;
            }
            map[new as usize - 1] = y;
            if self.extend(g, edges, step + 1, map, used.with(y), backtrack) {
                return true;
            }
            map[new as usize - 1] = 0;
            if !backtrack {
                return false;
            }
        }
        false
    }
}

fn permutations(items: &[u32]) -> Vec<Vec<u32>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let head = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{loose_path, tight_path};
    use crate::embedding::validate_embedding;

    #[test]
    fn recognizes_tight_trees() {
        let t = is_tight_tree(&tight_path(4, 3).unwrap());
        assert!(t.is_tight_tree);
        assert_eq!(t.order.len(), 4);
        assert!(!is_tight_tree(&loose_path(2, 3).unwrap()).is_tight_tree);
        let disjoint = Hypergraph::from_lists(6, 3, &[&[1, 2, 3], &[4, 5, 6]]).unwrap();
        assert!(!is_tight_tree(&disjoint).is_tight_tree);
        // A "tight star": three edges through {1,2}.
        let star = Hypergraph::from_lists(5, 3, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]).unwrap();
        assert!(is_tight_tree(&star).is_tight_tree);
        // Three edges on four vertices: the last edge never adds a new vertex.
        let cyc = Hypergraph::from_lists(5, 3, &[&[1, 2, 3], &[1, 3, 4], &[2, 3, 4]]).unwrap();
        assert!(!is_tight_tree(&cyc).is_tight_tree);
    }

    #[test]
    fn greedy_embeds_in_dense_host() {
        let g = Hypergraph::complete(7, 3).unwrap();
        let t = tight_path(3, 3).unwrap();
        let emb = greedy_tight_tree(&g, &t).unwrap();
        assert!(validate_embedding(&g, &t, &emb));
    }

    #[test]
    fn fallback_tries_every_orientation() {
        let g = Hypergraph::from_lists(4, 3, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let t = tight_path(2, 3).unwrap();
        let emb = greedy_tight_tree(&g, &t).unwrap();
        assert!(validate_embedding(&g, &t, &emb));
    }

    #[test]
    fn single_triple_is_too_small() {
        let g = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(greedy_tight_tree(&g, &tight_path(2, 3).unwrap()), None);
    }

    #[test]
    fn pruning_removes_sparse_parts() {
        let g = Hypergraph::from_lists(5, 3, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert!(prune_low_degree(&g, 1).is_empty());
        let k5 = Hypergraph::complete(5, 3).unwrap();
        assert_eq!(prune_low_degree(&k5, 2).len(), 10);
        assert!(prune_low_degree(&k5, 3).is_empty());
    }
}
