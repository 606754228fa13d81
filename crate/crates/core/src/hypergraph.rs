//! Uniform hypergraphs on `[n]` and families of `p`-sets.

use std::collections::{BTreeSet, HashSet};

use crate::error::{invalid, Error, Result};
use crate::vertex_set::{k_subsets, subsets, VertexSet, MAX_VERTICES};

/// An `r`-uniform hypergraph on the vertex set `{1, ..., n}`.
///
/// Edges are kept sorted in colex order without duplicates, so two values
/// with the same edge set compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Builds a hypergraph, rejecting malformed or repeated edges.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, r: usize, edges: I) -> Result<Self> {
        check_dims(n, r)?;
        let ground = VertexSet::first_n(n);
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for &e in &edges {
            if e.len() != r {
                return Err(Error::WrongArity {
                    expected: r,
                    found: e.len(),
                });
            }
            if !e.is_subset_of(ground) {
                let vertex = (e - ground).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].to_string()));
        }
        Ok(Hypergraph { n, r, edges })
    }

    /// Builds a hypergraph from explicit vertex lists.
    pub fn from_lists(n: usize, r: usize, lists: &[&[u32]]) -> Result<Self> {
        let mut edges = Vec::with_capacity(lists.len());
        for list in lists {
            let mut e = VertexSet::EMPTY;
            for &v in *list {
                if v == 0 || v as usize > n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if e.contains(v) {
                    return Err(Error::DuplicateVertex(v));
                }
                e.insert(v);
            }
            edges.push(e);
        }
        Self::new(n, r, edges)
    }

    /// Builds a hypergraph from edges already known to be valid, dropping duplicates.
    pub(crate) fn from_sorted_unchecked(n: usize, r: usize, mut edges: Vec<VertexSet>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        debug_assert!(edges
            .iter()
            .all(|e| e.len() == r && e.is_subset_of(VertexSet::first_n(n))));
        Hypergraph { n, r, edges }
    }

    pub fn empty(n: usize, r: usize) -> Result<Self> {
        check_dims(n, r)?;
        Ok(Hypergraph {
            n,
            r,
            edges: Vec::new(),
        })
    }

    /// The complete `r`-graph on `[n]`.
    pub fn complete(n: usize, r: usize) -> Result<Self> {
        check_dims(n, r)?;
        Ok(Hypergraph {
            n,
            r,
            edges: k_subsets(n, r).collect(),
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn r(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in colex order.
    #[inline]
    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::first_n(self.n)
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    /// Vertices lying in at least one edge.
    pub fn support(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    /// Degree of every vertex; index `v - 1` holds the degree of `v`.
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for v in e.iter() {
                deg[v as usize - 1] += 1;
            }
        }
        deg
    }

    /// The `p`-shadow: all `p`-sets contained in some edge.
    pub fn shadow(&self, p: usize) -> Result<EdgeSet> {
        if p == 0 || p > self.r {
            return invalid(format!("shadow order p={p} must lie in 1..={}", self.r));
        }
        if p == self.r {
            return Ok(EdgeSet {
                n: self.n,
                p,
                members: self.edges.clone(),
            });
        }
        let mut seen = HashSet::new();
        for &e in &self.edges {
            seen.extend(subsets(e, p));
        }
        let mut members: Vec<_> = seen.into_iter().collect();
        members.sort_unstable();
        Ok(EdgeSet { n: self.n, p, members })
    }

    /// `Γ(e) = { f \ e : e ⊆ f ∈ H }` for a nonempty set `e` with `|e| < r`.
    pub fn neighborhood(&self, e: VertexSet) -> Result<EdgeSet> {
        self.check_link_set(e)?;
        let mut members: Vec<_> = self
            .edges
            .iter()
            .filter(|f| e.is_subset_of(**f))
            .map(|&f| f - e)
            .collect();
        members.sort_unstable();
        Ok(EdgeSet {
            n: self.n,
            p: self.r - e.len(),
            members,
        })
    }

    /// Number of edges containing `e`, i.e. `|Γ(e)|`.
    pub fn degree(&self, e: VertexSet) -> Result<usize> {
        self.check_link_set(e)?;
        Ok(self.edges.iter().filter(|f| e.is_subset_of(**f)).count())
    }

    fn check_link_set(&self, e: VertexSet) -> Result<()> {
        if e.is_empty() {
            return invalid("neighborhood of the empty set is not defined");
        }
        if e.len() >= self.r {
            return invalid(format!(
                "neighborhood set has {} vertices; must be fewer than r={}",
                e.len(),
                self.r
            ));
        }
        if !e.is_subset_of(self.vertex_set()) {
            let vertex = (e - self.vertex_set()).min().unwrap_or(0);
            return Err(Error::VertexOutOfRange { vertex, n: self.n });
        }
        Ok(())
    }

    /// Image under the vertex permutation `perm` (`perm[v - 1]` is the image of `v`).
    pub fn relabel(&self, perm: &[u32]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return invalid("permutation length differs from vertex count");
        }
        let image: VertexSet = perm
            .iter()
            .copied()
            .filter(|&v| v >= 1 && v as usize <= self.n)
            .collect();
        if image != self.vertex_set() {
            return invalid("relabeling is not a permutation of [n]");
        }
        Ok(Self::from_sorted_unchecked(
            self.n,
            self.r,
            self.edges.iter().map(|e| e.map(perm)).collect(),
        ))
    }

    /// Same edges on a larger (or equal) vertex set.
    pub fn with_vertex_count(&self, n: usize) -> Result<Hypergraph> {
        check_dims(n, self.r)?;
        if let Some(max) = self.support().max() {
            if max as usize > n {
                return invalid(format!("edges use vertex {max} > {n}"));
            }
        }
        Ok(Hypergraph {
            n,
            r: self.r,
            edges: self.edges.clone(),
        })
    }

    /// Sub-hypergraph of the edges satisfying `keep`.
    pub fn filter(&self, mut keep: impl FnMut(VertexSet) -> bool) -> Hypergraph {
        Hypergraph {
            n: self.n,
            r: self.r,
            edges: self.edges.iter().copied().filter(|&e| keep(e)).collect(),
        }
    }

    /// Whether every two edges intersect.
    pub fn is_intersecting(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, e)| self.edges[i + 1..].iter().all(|f| !e.is_disjoint(*f)))
    }

    /// Vertex pairs `(u, v)` whose transposition is an automorphism, grouped
    /// into classes. Entry `v - 1` is the class mask containing `v`.
    pub fn twin_classes(&self) -> Vec<VertexSet> {
        let edge_set: HashSet<VertexSet> = self.edges.iter().copied().collect();
        let mut class = vec![VertexSet::EMPTY; self.n];
        let mut assigned = VertexSet::EMPTY;
        for u in 1..=self.n as u32 {
            if assigned.contains(u) {
                continue;
            }
            let mut members = VertexSet::singleton(u);
            for v in u + 1..=self.n as u32 {
                if !assigned.contains(v) && self.swaps_to_self(u, v, &edge_set) {
                    members.insert(v);
                }
            }
            assigned |= members;
            for w in members {
                class[w as usize - 1] = members;
            }
        }
        class
    }

    fn swaps_to_self(&self, u: u32, v: u32, edge_set: &HashSet<VertexSet>) -> bool {
        let pair = VertexSet::singleton(u).with(v);
        self.edges.iter().all(|&e| {
            let k = e.intersection_len(pair);
            if k != 1 {
                return true;
            }
            edge_set.contains(&((e - pair) | (pair - e)))
        })
    }
}

fn check_dims(n: usize, r: usize) -> Result<()> {
    if r == 0 {
        return invalid("uniformity r must be at least 1");
    }
    if n < r {
        return invalid(format!("vertex count n={n} is smaller than r={r}"));
    }
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices {
            what: "hypergraph",
            n,
            max: MAX_VERTICES,
        });
    }
    Ok(())
}

/// A family of `p`-subsets of `[n]`: shadows, neighborhoods, matchings.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EdgeSet {
    n: usize,
    p: usize,
    members: Vec<VertexSet>,
}

impl EdgeSet {
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, p: usize, members: I) -> Result<Self> {
        let ground = VertexSet::first_n(n.min(MAX_VERTICES));
        let set: BTreeSet<VertexSet> = members.into_iter().collect();
        for e in &set {
            if e.len() != p {
                return Err(Error::WrongArity {
                    expected: p,
                    found: e.len(),
                });
            }
            if !e.is_subset_of(ground) {
                let vertex = (*e - ground).min().unwrap_or(0);
                return Err(Error::VertexOutOfRange { vertex, n });
            }
        }
        Ok(EdgeSet {
            n,
            p,
            members: set.into_iter().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> usize {
        self.p
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[VertexSet] {
        &self.members
    }

    pub fn contains(&self, e: VertexSet) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn is_matching(&self) -> bool {
        is_matching(&self.members)
    }

    /// The family viewed as a `p`-uniform hypergraph on `[n]`.
    pub fn to_hypergraph(&self) -> Result<Hypergraph> {
        Hypergraph::new(self.n.max(self.p), self.p, self.members.iter().copied())
    }
}

/// Whether the sets are pairwise disjoint.
pub fn is_matching(sets: &[VertexSet]) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &s in sets {
        if !seen.is_disjoint(s) {
            return false;
        }
        seen |= s;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::from_vertices(v.iter().copied())
    }

    fn fano() -> Hypergraph {
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
        .unwrap()
    }

    #[test]
    fn shadow_of_single_edge() {
        let h = Hypergraph::from_lists(3, 3, &[&[1, 2, 3]]).unwrap();
        let s = h.shadow(2).unwrap();
        assert_eq!(s.members(), &[vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]);
    }

    #[test]
    fn shadow_of_empty_family() {
        let h = Hypergraph::empty(4, 3).unwrap();
        assert!(h.shadow(1).unwrap().is_empty());
    }

    #[test]
    fn fano_shadow_is_every_pair() {
        let s = fano().shadow(2).unwrap();
        assert_eq!(s.len(), 21);
        assert_eq!(s.members(), k_subsets(7, 2).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn shadow_order_out_of_range() {
        let h = fano();
        assert!(matches!(h.shadow(0), Err(Error::InvalidParameter(_))));
        assert!(matches!(h.shadow(4), Err(Error::InvalidParameter(_))));
        assert_eq!(h.shadow(3).unwrap().len(), 7);
    }

    #[test]
    fn neighborhood_of_star_center() {
        let star = Hypergraph::new(5, 3, k_subsets(5, 3).filter(|e| e.contains(1))).unwrap();
        let g = star.neighborhood(vs(&[1])).unwrap();
        assert_eq!(g.p(), 2);
        assert_eq!(
            g.members(),
            k_subsets(5, 2)
                .filter(|e| !e.contains(1))
                .collect::<Vec<_>>()
                .as_slice()
        );
        assert_eq!(g.len(), 6);
    }

    #[test]
    fn neighborhood_examples() {
        let h = Hypergraph::from_lists(4, 3, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let g = h.neighborhood(vs(&[1, 2])).unwrap();
        assert_eq!(g.members(), &[vs(&[3]), vs(&[4])]);
        assert_eq!(h.degree(vs(&[1, 2])).unwrap(), 2);
        assert!(h.neighborhood(vs(&[3, 4])).unwrap().is_empty());
        assert!(h.neighborhood(vs(&[1, 2, 3])).is_err());
        assert!(h.neighborhood(VertexSet::EMPTY).is_err());
    }

    #[test]
    fn matching_predicate() {
        assert!(is_matching(&[vs(&[1, 2]), vs(&[3, 4])]));
        assert!(!is_matching(&[vs(&[1, 2]), vs(&[2, 3])]));
        assert!(is_matching(&[]));
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            Hypergraph::from_lists(3, 2, &[&[1, 4]]),
            Err(Error::VertexOutOfRange { vertex: 4, .. })
        ));
        assert!(matches!(
            Hypergraph::from_lists(3, 2, &[&[1, 1]]),
            Err(Error::DuplicateVertex(1))
        ));
        assert!(matches!(
            Hypergraph::from_lists(3, 2, &[&[1, 2], &[2, 1]]),
            Err(Error::DuplicateEdge(_))
        ));
        assert!(matches!(
            Hypergraph::from_lists(3, 2, &[&[1, 2, 3]]),
            Err(Error::WrongArity { expected: 2, found: 3 })
        ));
        assert!(Hypergraph::empty(2, 3).is_err());
        assert!(Hypergraph::empty(129, 3).is_err());
    }

    #[test]
    fn twins_of_star() {
        let star = Hypergraph::new(5, 3, k_subsets(5, 3).filter(|e| e.contains(1))).unwrap();
        let classes = star.twin_classes();
        assert_eq!(classes[0], vs(&[1]));
        assert_eq!(classes[1], vs(&[2, 3, 4, 5]));
    }

    #[test]
    fn relabel_preserves_size_and_rejects_non_permutations() {
        let h = fano();
        let g = h.relabel(&[7, 6, 5, 4, 3, 2, 1]).unwrap();
        assert_eq!(g.len(), 7);
        assert!(h.relabel(&[1, 1, 2, 3, 4, 5, 6]).is_err());
    }
}
