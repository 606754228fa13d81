//! Bipartite skeletons `H(U, V)` with parts `U = {u_1..u_s}`, `V = {v_1..v_t}`.

use std::collections::VecDeque;

use crate::canon;
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::VertexSet;

/// A vertex of a bipartite skeleton, 1-based within its part.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum PartVertex {
    U(usize),
    V(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BipartiteGraph {
    s: usize,
    t: usize,
    /// Pairs `(u, v)`, 1-based, sorted.
    edges: Vec<(usize, usize)>,
}

impl BipartiteGraph {
    pub fn new<I: IntoIterator<Item = (usize, usize)>>(s: usize, t: usize, edges: I) -> Result<Self> {
        let mut edges: Vec<_> = edges.into_iter().collect();
        for &(u, v) in &edges {
            if u == 0 || u > s || v == 0 || v > t {
                return invalid(format!("edge ({u},{v}) out of range for parts {s},{t}"));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(format!("({},{})", w[0].0, w[0].1)));
        }
        Ok(BipartiteGraph { s, t, edges })
    }

    /// Path with `ell` edges: `u_1 v_1 u_2 v_2 ...`, starting in `U`.
    pub fn path(ell: usize) -> Self {
        let verts = ell + 1;
        let s = verts.div_ceil(2);
        let t = verts / 2;
        let edges = (0..ell).map(|i| {
            // Vertex i of the path is u_{i/2+1} when i is even, v_{i/2+1} otherwise.
            if i % 2 == 0 {
                (i / 2 + 1, i / 2 + 1)
            } else {
                (i / 2 + 2, i / 2 + 1)
            }
        });
        Self::new(s, t, edges).expect("path skeleton is valid")
    }

    /// Star with its center `u_1` and `t` leaves in `V`.
    pub fn star(t: usize) -> Self {
        Self::new(1, t, (1..=t).map(|v| (1, v))).expect("star skeleton is valid")
    }

    /// Complete bipartite graph `K_{s,t}`; `complete(2, 2)` is the 4-cycle.
    pub fn complete(s: usize, t: usize) -> Self {
        Self::new(s, t, (1..=s).flat_map(|u| (1..=t).map(move |v| (u, v)))).expect("complete bipartite graph is valid")
    }

    /// Two adjacent centers `u_1`, `v_1`; `u_1` carries `p` further leaves in
    /// `V` and `v_1` carries `q` further leaves in `U`.
    pub fn double_star(p: usize, q: usize) -> Self {
        let mut edges = vec![(1, 1)];
        edges.extend((0..p).map(|i| (1, i + 2)));
        edges.extend((0..q).map(|i| (i + 2, 1)));
        Self::new(q + 1, p + 1, edges).expect("double star is valid")
    }

    /// Decodes a Prüfer sequence over labels `1..=len+2`; the part containing
    /// label 1 becomes `U`, and each part is indexed by increasing label.
    pub fn from_prufer(seq: &[usize]) -> Result<Self> {
        let n = seq.len() + 2;
        if let Some(&bad) = seq.iter().find(|&&x| x == 0 || x > n) {
            return invalid(format!("Prüfer entry {bad} outside 1..={n}"));
        }
        let mut degree = vec![1usize; n + 1];
        for &x in seq {
            degree[x] += 1;
        }
        let mut pairs = Vec::with_capacity(n - 1);
        for &x in seq {
            let leaf = (1..=n).find(|&v| degree[v] == 1).expect("a leaf always exists");
            pairs.push((leaf, x));
            degree[leaf] -= 1;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (1..=n).filter(|&v| degree[v] == 1).collect();
        pairs.push((rest[0], rest[1]));

        let mut adj = vec![Vec::new(); n + 1];
        for &(x, y) in &pairs {
            adj[x].push(y);
            adj[y].push(x);
        }
        let mut side = vec![usize::MAX; n + 1];
        side[1] = 0;
        let mut queue = VecDeque::from([1]);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if side[y] == usize::MAX {
                    side[y] = 1 - side[x];
                    queue.push_back(y);
                }
            }
        }
        let mut index = vec![0; n + 1];
        let (mut s, mut t) = (0, 0);
        for v in 1..=n {
            if side[v] == 0 {
                s += 1;
                index[v] = s;
            } else {
                t += 1;
                index[v] = t;
            }
        }
        let edges = pairs.into_iter().map(|(x, y)| {
            if side[x] == 0 {
                (index[x], index[y])
            } else {
                (index[y], index[x])
            }
        });
        Self::new(s, t, edges)
    }

    #[inline]
    pub fn s(&self) -> usize {
        self.s
    }

    #[inline]
    pub fn t(&self) -> usize {
        self.t
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.binary_search(&(u, v)).is_ok()
    }

    pub fn neighbors(&self, x: PartVertex) -> Vec<PartVertex> {
        match x {
            PartVertex::U(i) => self
                .edges
                .iter()
                .filter(|e| e.0 == i)
                .map(|e| PartVertex::V(e.1))
                .collect(),
            PartVertex::V(j) => self
                .edges
                .iter()
                .filter(|e| e.1 == j)
                .map(|e| PartVertex::U(e.0))
                .collect(),
        }
    }

    pub fn degree(&self, x: PartVertex) -> usize {
        match x {
            PartVertex::U(i) => self.edges.iter().filter(|e| e.0 == i).count(),
            PartVertex::V(j) => self.edges.iter().filter(|e| e.1 == j).count(),
        }
    }

    /// All vertices, `U` first.
    pub fn vertices(&self) -> impl Iterator<Item = PartVertex> + '_ {
        (1..=self.s).map(PartVertex::U).chain((1..=self.t).map(PartVertex::V))
    }

    /// Whether all `s + t` vertices lie in a single component.
    pub fn is_connected(&self) -> bool {
        let total = self.s + self.t;
        if total == 0 {
            return false;
        }
        let flat = |x: PartVertex| match x {
            PartVertex::U(i) => i - 1,
            PartVertex::V(j) => self.s + j - 1,
        };
        let mut seen = vec![false; total];
        let start = self.vertices().next().expect("nonempty");
        seen[flat(start)] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for y in self.neighbors(x) {
                if !seen[flat(y)] {
                    seen[flat(y)] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count == total
    }

    pub fn is_tree(&self) -> bool {
        self.is_connected() && self.edges.len() + 1 == self.s + self.t
    }

    /// Degree-one vertices, `U` first.
    pub fn leaves(&self) -> Vec<PartVertex> {
        self.vertices().filter(|&x| self.degree(x) == 1).collect()
    }

    /// Deletes a vertex and re-indexes its part.
    pub fn remove_vertex(&self, x: PartVertex) -> Result<Self> {
        match x {
            PartVertex::U(i) if i >= 1 && i <= self.s => Self::new(
                self.s - 1,
                self.t,
                self.edges
                    .iter()
                    .filter(|e| e.0 != i)
                    .map(|&(u, v)| (if u > i { u - 1 } else { u }, v)),
            ),
            PartVertex::V(j) if j >= 1 && j <= self.t => Self::new(
                self.s,
                self.t - 1,
                self.edges
                    .iter()
                    .filter(|e| e.1 != j)
                    .map(|&(u, v)| (u, if v > j { v - 1 } else { v })),
            ),
            _ => invalid(format!("vertex {x:?} not in the graph")),
        }
    }

    /// Adds a new vertex to the opposite part of `x`, adjacent to `x`.
    pub fn add_leaf(&self, x: PartVertex) -> Self {
        let mut edges = self.edges.clone();
        match x {
            PartVertex::U(i) => {
                edges.push((i, self.t + 1));
                Self::new(self.s, self.t + 1, edges).expect("leaf addition is valid")
            }
            PartVertex::V(j) => {
                edges.push((self.s + 1, j));
                Self::new(self.s + 1, self.t, edges).expect("leaf addition is valid")
            }
        }
    }

    /// The same graph with the roles of `U` and `V` exchanged.
    pub fn swap_parts(&self) -> Self {
        Self::new(self.t, self.s, self.edges.iter().map(|&(u, v)| (v, u))).expect("swap is valid")
    }

    /// The underlying graph on `s + t` vertices (`U` first) with part colors.
    pub fn to_graph(&self) -> Result<(Hypergraph, Vec<u32>)> {
        let n = (self.s + self.t).max(2);
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| VertexSet::from_vertices([u as u32, (self.s + v) as u32]));
        let g = Hypergraph::new(n, 2, edges)?;
        let mut colors = vec![0u32; self.s];
        colors.extend(std::iter::repeat_n(1u32, n - self.s));
        Ok((g, colors))
    }

    /// Canonical form under isomorphisms that map `U` to `U` and `V` to `V`.
    pub fn canonical_form(&self) -> Result<Vec<u8>> {
        let (g, colors) = self.to_graph()?;
        let mut form = canon::canonical_form_colored(&g, &colors)?;
        form.extend_from_slice(&(self.s as u32).to_le_bytes());
        form.extend_from_slice(&(self.t as u32).to_le_bytes());
        Ok(form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_skeleton_shape() {
        let p = BipartiteGraph::path(4);
        assert_eq!((p.s(), p.t()), (3, 2));
        assert_eq!(p.edges(), &[(1, 1), (2, 1), (2, 2), (3, 2)]);
        assert!(p.is_tree());
        let p3 = BipartiteGraph::path(3);
        assert_eq!((p3.s(), p3.t()), (2, 2));
        assert_eq!(p3.leaves(), vec![PartVertex::U(1), PartVertex::V(2)]);
    }

    #[test]
    fn prufer_decoding() {
        // Star centered at 2 on four labels; label 1 is a leaf so U = {1,3,4}.
        let star = BipartiteGraph::from_prufer(&[2, 2]).unwrap();
        assert_eq!((star.s(), star.t()), (3, 1));
        assert!(star.is_tree());
        let edge = BipartiteGraph::from_prufer(&[]).unwrap();
        assert_eq!(edge.edges(), &[(1, 1)]);
        assert!(BipartiteGraph::from_prufer(&[5]).is_err());
    }

    #[test]
    fn connectivity_and_trees() {
        let c4 = BipartiteGraph::complete(2, 2);
        assert!(c4.is_connected());
        assert!(!c4.is_tree());
        let forest = BipartiteGraph::new(2, 2, [(1, 1), (2, 2)]).unwrap();
        assert!(!forest.is_connected());
        assert!(BipartiteGraph::new(1, 1, [(1, 2)]).is_err());
        assert!(BipartiteGraph::new(1, 1, [(1, 1), (1, 1)]).is_err());
    }

    #[test]
    fn remove_and_add_vertices() {
        let p = BipartiteGraph::path(3);
        let q = p.remove_vertex(PartVertex::V(2)).unwrap();
        assert_eq!((q.s(), q.t()), (2, 1));
        assert!(q.is_tree());
        let back = q.add_leaf(PartVertex::U(2));
        assert_eq!(back, p);
    }

    #[test]
    fn double_star_sizes() {
        let d = BipartiteGraph::double_star(3, 3);
        assert_eq!((d.s(), d.t()), (4, 4));
        assert_eq!(d.len(), 7);
        assert!(d.is_tree());
    }

    #[test]
    fn side_preserving_canonical_forms() {
        let a = BipartiteGraph::star(3);
        let b = a.swap_parts();
        assert_ne!(a.canonical_form().unwrap(), b.canonical_form().unwrap());
        let relabeled = BipartiteGraph::new(1, 3, [(1, 3), (1, 1), (1, 2)]).unwrap();
        assert_eq!(a.canonical_form().unwrap(), relabeled.canonical_form().unwrap());
    }
}
