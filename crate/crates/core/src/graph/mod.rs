//! Small simple undirected graphs with bitset adjacency.
//!
//! Every graph here has at most [`MAX_ORDER`] vertices, so a neighbourhood
//! fits in a `u16` and most algorithms are plain exhaustive searches.

mod canon;
mod generate;
mod graph6;
mod invariants;
mod spec;
mod subgraph;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use canon::{canonical_code, canonical_labeling, CanonicalCode};
pub use generate::{all_graphs, augment_levels, canonical_form, forests};
pub use graph6::{from_graph6, to_graph6};
pub use invariants::{
    alpha, chi_family, chromatic_number, girth, invariants_of, is_acyclic, mu, ChiFamily, Invariants,
};
pub use spec::parse_graph;
pub use subgraph::{are_isomorphic, contains_subgraph, for_each_embedding};

/// Largest supported vertex count.
pub const MAX_ORDER: usize = 12;

/// Vertex set bitmask over `0..MAX_ORDER`.
pub type VertexSet = u16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    order: u8,
    adj: [VertexSet; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph on `order` vertices.
    ///
    /// Panics if `order > MAX_ORDER`; use [`Graph::try_empty`] for
    /// untrusted input.
    pub fn empty(order: usize) -> Self {
        Self::try_empty(order).expect("graph order exceeds MAX_ORDER")
    }

    pub fn try_empty(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderOverflow { order, max: MAX_ORDER });
        }
        Ok(Graph { order: order as u8, adj: [0; MAX_ORDER] })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::try_empty(order)?;
        for &(u, v) in edges {
            if u >= order || v >= order {
                return Err(Error::Parse(format!("edge {u}-{v} out of range for order {order}")));
            }
            if u == v {
                return Err(Error::Parse(format!("self-loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn complete(p: usize) -> Self {
        let mut g = Self::empty(p);
        let all = full_set(p);
        for v in 0..p {
            g.adj[v] = all & !(1 << v);
        }
        g
    }

    /// Path on `k` vertices (`k - 1` edges).
    pub fn path(k: usize) -> Self {
        let mut g = Self::empty(k);
        for v in 1..k {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let mut g = Self::path(k);
        g.add_edge(0, k - 1);
        g
    }

    /// The star `K_{1,t}` with centre `0`.
    pub fn star(t: usize) -> Self {
        let mut g = Self::empty(t + 1);
        for v in 1..=t {
            g.add_edge(0, v);
        }
        g
    }

    /// `m` disjoint edges.
    pub fn matching(m: usize) -> Self {
        let mut g = Self::empty(2 * m);
        for i in 0..m {
            g.add_edge(2 * i, 2 * i + 1);
        }
        g
    }

    /// Complete multipartite graph with the given class sizes, classes laid
    /// out on contiguous vertex ranges.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n: usize = sizes.iter().sum();
        let mut g = Self::empty(n);
        let class = class_index(sizes);
        for u in 0..n {
            for v in (u + 1)..n {
                if class[u] != class[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Self::complete_multipartite(&[a, b])
    }

    /// Turán graph `T_{n,m}`.
    pub fn turan(n: usize, m: usize) -> Self {
        Self::complete_multipartite(&turan_class_sizes(n, m))
    }

    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.order() + other.order();
        let mut g = Self::try_empty(n)?;
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        let off = self.order();
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        Ok(g)
    }

    /// Same edges on `order` vertices; the added vertices are isolated.
    pub fn padded(&self, order: usize) -> Result<Graph> {
        if order < self.order() {
            return Err(Error::Invalid(format!("cannot pad a graph of order {} down to {order}", self.order())));
        }
        let mut g = Self::try_empty(order)?;
        g.adj[..self.order()].copy_from_slice(&self.adj[..self.order()]);
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.order() && v < self.order());
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    #[inline]
    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj[..self.order()].iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |u| {
            let higher = self.adj[u] & !((2u32 << u) - 1) as u16;
            bits(higher).map(move |v| (u, v))
        })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn vertex_set(&self) -> VertexSet {
        full_set(self.order())
    }

    /// Vertices of positive degree.
    pub fn support(&self) -> VertexSet {
        (0..self.order()).filter(|&v| self.adj[v] != 0).fold(0, |s, v| s | 1 << v)
    }

    pub fn has_isolates(&self) -> bool {
        self.support() != self.vertex_set()
    }

    /// Subgraph induced on `set`, relabelled to `0..|set|` preserving order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let verts: Vec<usize> = bits(set).collect();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Drops isolated vertices. This is the form family membership sees.
    pub fn without_isolates(&self) -> Graph {
        self.induced(self.support())
    }

    /// `perm[v]` is the new label of vertex `v`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertex_set();
        let mut g = self.clone();
        for v in 0..self.order() {
            g.adj[v] = all & !self.adj[v] & !(1 << v);
        }
        g
    }

    /// Connected components as vertex sets, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen: VertexSet = 0;
        let mut out = Vec::new();
        for s in 0..self.order() {
            if seen >> s & 1 == 1 {
                continue;
            }
            let mut comp: VertexSet = 1 << s;
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Sorted-edge-list spec with an explicit order prefix, e.g. `4:0-1,1-2`.
    /// Parses back to an identical graph.
    pub fn to_edge_list(&self) -> String {
        let edges: Vec<String> = self.edges().map(|(u, v)| format!("{u}-{v}")).collect();
        format!("{}:{}", self.order(), edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.to_edge_list())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_edge_list())
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    order: usize,
    edges: Vec<[usize; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr { order: self.order(), edges: self.edges().map(|(u, v)| [u, v]).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        let edges: Vec<(usize, usize)> = repr.edges.iter().map(|e| (e[0], e[1])).collect();
        Graph::from_edges(repr.order, &edges).map_err(serde::de::Error::custom)
    }
}

#[inline]
pub fn full_set(n: usize) -> VertexSet {
    ((1u32 << n) - 1) as VertexSet
}

/// Iterates the set bits of a mask, lowest first.
#[inline]
pub fn bits(mut set: VertexSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

/// Class sizes of `T_{n,m}`: the first `n mod m` classes get the extra vertex.
pub fn turan_class_sizes(n: usize, m: usize) -> Vec<usize> {
    assert!(m >= 1, "Turán graph needs at least one class");
    (0..m).map(|i| n / m + usize::from(i < n % m)).collect()
}

/// `class[v]` for vertices laid out on contiguous ranges.
pub fn class_index(sizes: &[usize]) -> Vec<usize> {
    sizes.iter().enumerate().flat_map(|(i, &s)| std::iter::repeat_n(i, s)).collect()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// All `k`-subsets of `0..n` as bitmasks, in lexicographic order of their
/// sorted element lists.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<VertexSet> {
    fn rec(start: usize, n: usize, k: usize, acc: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(acc);
            return;
        }
        for v in start..=(n - k) {
            rec(v + 1, n, k - 1, acc | 1 << v, out);
        }
    }
    let mut out = Vec::with_capacity(binomial(n, k));
    if k <= n {
        rec(0, n, k, 0, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn turan_sizes_and_edges() {
        assert_eq!(turan_class_sizes(7, 3), vec![3, 2, 2]);
        assert_eq!(Graph::turan(5, 2).edge_count(), 6);
        assert_eq!(Graph::turan(6, 3).edge_count(), 12);
        assert_eq!(Graph::turan(8, 2).edge_count(), 16);
    }

    #[test]
    fn basic_constructors() {
        assert_eq!(Graph::complete(5).edge_count(), 10);
        assert_eq!(Graph::path(4).edge_count(), 3);
        assert_eq!(Graph::cycle(5).degree_sequence(), vec![2; 5]);
        assert_eq!(Graph::star(4).max_degree(), 4);
        let m = Graph::matching(2);
        assert_eq!((m.order(), m.edge_count()), (4, 2));
        let p = Graph::petersen();
        assert_eq!((p.edge_count(), p.max_degree(), p.min_degree()), (15, 3, 3));
    }

    #[test]
    fn isolates_and_induced() {
        let g = Graph::from_edges(6, &[(1, 3), (3, 5)]).unwrap();
        let h = g.without_isolates();
        assert_eq!(h.order(), 3);
        assert_eq!(h.edge_count(), 2);
        assert_eq!(g.components().len(), 4);
    }

    #[test]
    fn order_overflow() {
        assert!(matches!(Graph::try_empty(13), Err(Error::OrderOverflow { .. })));
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    #[test]
    fn subsets_enumerated_in_order() {
        let s = subsets_of_size(4, 2);
        assert_eq!(s, vec![0b0011, 0b0101, 0b1001, 0b0110, 0b1010, 0b1100]);
        assert_eq!(subsets_of_size(12, 6).len(), 924);
    }

    #[test]
    fn serde_roundtrip() {
        let g = Graph::from_edges(5, &[(0, 4), (1, 2)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"order":5,"edges":[[0,4],[1,2]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
    }
}
