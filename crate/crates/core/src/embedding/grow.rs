//! Growing a bipartite tree inside an incidence graph, leaf by leaf.

use crate::bipartite::{BipartiteGraph, PartVertex};

/// Images of the tree's vertices: `u_map[i - 1]` is the `U`-side index of
/// `host` receiving `u_i`, likewise for `v_map`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeEmbedding {
    pub u_map: Vec<usize>,
    pub v_map: Vec<usize>,
}

impl TreeEmbedding {
    /// Whether the maps are injective and send tree edges to host edges.
    pub fn is_valid(&self, host: &BipartiteGraph, tree: &BipartiteGraph) -> bool {
        let distinct = |m: &[usize], max: usize| {
            let mut seen = vec![false; max + 1];
            m.iter()
                .all(|&x| x >= 1 && x <= max && !std::mem::replace(&mut seen[x], true))
        };
        self.u_map.len() == tree.s()
            && self.v_map.len() == tree.t()
            && distinct(&self.u_map, host.s())
            && distinct(&self.v_map, host.t())
            && tree
                .edges()
                .iter()
                .all(|&(u, v)| host.has_edge(self.u_map[u - 1], self.v_map[v - 1]))
    }
}

/// Vertices surviving iterative deletion of `U`-side vertices of degree
/// below `min_u` and `V`-side vertices of degree below `min_v`, as masks
/// indexed from 0.
pub fn core_after_pruning(host: &BipartiteGraph, min_u: usize, min_v: usize) -> (Vec<bool>, Vec<bool>) {
    let (s, t) = (host.s(), host.t());
    let mut alive_u = vec![true; s];
    let mut alive_v = vec![true; t];
    let mut deg_u = vec![0usize; s];
    let mut deg_v = vec![0usize; t];
    let mut adj_u = vec![Vec::new(); s];
    let mut adj_v = vec![Vec::new(); t];
    for &(u, v) in host.edges() {
        deg_u[u - 1] += 1;
        deg_v[v - 1] += 1;
        adj_u[u - 1].push(v - 1);
        adj_v[v - 1].push(u - 1);
    }
    let mut stack: Vec<PartVertex> = Vec::new();
    for u in 0..s {
        if deg_u[u] < min_u {
            alive_u[u] = false;
            stack.push(PartVertex::U(u));
        }
    }
    for v in 0..t {
        if deg_v[v] < min_v {
            alive_v[v] = false;
            stack.push(PartVertex::V(v));
        }
    }
    while let Some(x) = stack.pop() {
        match x {
            PartVertex::U(u) => {
                for &v in &adj_u[u] {
                    deg_v[v] -= 1;
                    if alive_v[v] && deg_v[v] < min_v {
                        alive_v[v] = false;
                        stack.push(PartVertex::V(v));
                    }
                }
            }
            PartVertex::V(v) => {
                for &u in &adj_v[v] {
                    deg_u[u] -= 1;
                    if alive_u[u] && deg_u[u] < min_u {
                        alive_u[u] = false;
                        stack.push(PartVertex::U(u));
                    }
                }
            }
        }
    }
    (alive_u, alive_v)
}

/// Embeds the tree into `host`, `U` into the `U` side and `V` into the `V`
/// side.
///
/// The host is first pruned to its core where `U`-side degrees are at least
/// `t` and `V`-side degrees at least `s`. In that core each embedded vertex
/// always has an unused neighbor for its next tree neighbor, so the tree
/// grows greedily without backtracking. When the core is empty (or the tree
/// has no edges) the extension is retried on the whole host with
/// backtracking, which decides the question exactly.
pub fn grow_tree_in_bipartite(host: &BipartiteGraph, tree: &BipartiteGraph) -> Option<TreeEmbedding> {
    if !tree.is_tree() || tree.s() > host.s() || tree.t() > host.t() {
        return None;
    }
    let (alive_u, alive_v) = core_after_pruning(host, tree.t(), tree.s());
    if alive_u.iter().any(|&x| x) {
        let grower = Grower::new(host, tree, alive_u, alive_v);
        if let Some(e) = grower.run(false) {
            return Some(e);
        }
    }
    Grower::new(host, tree, vec![true; host.s()], vec![true; host.t()]).run(true)
}

struct Grower<'a> {
    tree: &'a BipartiteGraph,
    /// Host adjacency restricted to allowed vertices, 0-based.
    adj_u: Vec<Vec<usize>>,
    adj_v: Vec<Vec<usize>>,
    allowed_u: Vec<bool>,
    /// Tree vertices in BFS order from `u_1`, each with its parent.
    plan: Vec<(PartVertex, Option<PartVertex>)>,
}

impl<'a> Grower<'a> {
    fn new(host: &BipartiteGraph, tree: &'a BipartiteGraph, allowed_u: Vec<bool>, allowed_v: Vec<bool>) -> Self {
        let mut adj_u = vec![Vec::new(); host.s()];
        let mut adj_v = vec![Vec::new(); host.t()];
        for &(u, v) in host.edges() {
            if allowed_u[u - 1] && allowed_v[v - 1] {
                adj_u[u - 1].push(v - 1);
                adj_v[v - 1].push(u - 1);
            }
        }
        let mut plan = vec![(PartVertex::U(1), None)];
        let mut seen_u = vec![false; tree.s() + 1];
        let mut seen_v = vec![false; tree.t() + 1];
        seen_u[1] = true;
        let mut i = 0;
        while i < plan.len() {
            let x = plan[i].0;
            for y in tree.neighbors(x) {
                let seen = match y {
                    PartVertex::U(k) => &mut seen_u[k],
                    PartVertex::V(k) => &mut seen_v[k],
                };
                if !*seen {
                    *seen = true;
                    plan.push((y, Some(x)));
                }
            }
            i += 1;
        }
        Grower {
            tree,
            adj_u,
            adj_v,
            allowed_u,
            plan,
        }
    }

    fn run(&self, backtrack: bool) -> Option<TreeEmbedding> {
        let mut u_map = vec![usize::MAX; self.tree.s()];
        let mut v_map = vec![usize::MAX; self.tree.t()];
        let mut used_u = vec![false; self.adj_u.len()];
        let mut used_v = vec![false; self.adj_v.len()];
        let roots: Vec<usize> = (0..self.adj_u.len()).filter(|&u| self.allowed_u[u]).collect();
        for root in roots {
            u_map[0] = root;
            used_u[root] = true;
            let mut st = GrowState {
                u_map: &mut u_map,
                v_map: &mut v_map,
                used_u: &mut used_u,
                used_v: &mut used_v,
            };
            if self.extend(1, &mut st, backtrack) {
                return Some(TreeEmbedding {
                    u_map: u_map.iter().map(|&x| x + 1).collect(),
                    v_map: v_map.iter().map(|&x| x + 1).collect(),
                });
            }
            used_u[root] = false;
            if !backtrack {
                return None;
            }
        }
        None
    }

    fn extend(&self, step: usize, st: &mut GrowState, backtrack: bool) -> bool {
        let Some(&(x, parent)) = self.plan.get(step) else {
            return true;
        };
        let parent = parent.expect("non-root vertices have parents");
        let (options, used): (&[usize], &[bool]) = match (x, parent) {
            (PartVertex::V(_), PartVertex::U(p)) => (&self.adj_u[st.u_map[p - 1]], st.used_v),
            (PartVertex::U(_), PartVertex::V(p)) => (&self.adj_v[st.v_map[p - 1]], st.used_u),
            _ => unreachable!("tree edges join the two parts"),
        };
        let options: Vec<usize> = options.iter().copied().filter(|&y| !used[y]).collect();
        for y in options {
            match x {
                PartVertex::U(i) => {
                    st.u_map[i - 1] = y;
                    st.used_u[y] = true;
                }
                PartVertex::V(j) => {
                    st.v_map[j - 1] = y;
                    st.used_v[y] = true;
                }
            }
            if self.extend(step + 1, st, backtrack) {
                return true;
            }
            match x {
                PartVertex::U(_) => st.used_u[y] = false,
                PartVertex::V(_) => st.used_v[y] = false,
            }
            if !backtrack {
                return false;
            }
        }
        false
    }
}

struct GrowState<'m> {
    u_map: &'m mut Vec<usize>,
    v_map: &'m mut Vec<usize>,
    used_u: &'m mut Vec<bool>,
    used_v: &'m mut Vec<bool>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::trees_with_parts;

    #[test]
    fn complete_incidence_hosts_every_tree() {
        let host = BipartiteGraph::complete(3, 2);
        for tree in trees_with_parts(3, 2).unwrap() {
            let emb = grow_tree_in_bipartite(&host, &tree).unwrap();
            assert!(emb.is_valid(&host, &tree));
        }
    }

    #[test]
    fn empty_host_has_nothing() {
        let host = BipartiteGraph::new(3, 3, []).unwrap();
        assert_eq!(grow_tree_in_bipartite(&host, &BipartiteGraph::star(2)), None);
    }

    #[test]
    fn isolated_vertex_does_not_block() {
        // u1 is isolated; u2 sees both V vertices.
        let host = BipartiteGraph::new(2, 2, [(2, 1), (2, 2)]).unwrap();
        let star = BipartiteGraph::star(2);
        let emb = grow_tree_in_bipartite(&host, &star).unwrap();
        assert!(emb.is_valid(&host, &star));
        assert_eq!(emb.u_map, vec![2]);
    }

    #[test]
    fn pruning_core() {
        let host = BipartiteGraph::new(2, 2, [(1, 1), (2, 1), (2, 2)]).unwrap();
        let (u, v) = core_after_pruning(&host, 2, 2);
        assert!(u.iter().chain(&v).all(|&x| !x));
        let (u, v) = core_after_pruning(&host, 1, 1);
        assert!(u.iter().chain(&v).all(|&x| x));
    }
}
