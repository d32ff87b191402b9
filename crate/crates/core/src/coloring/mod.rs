//! Edge colorings of `K_n` in restricted-growth normal form.

mod finders;
mod pattern;

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet, MAX_ORDER};

pub use finders::{
    embed_forest_rainbow_in_lex, find_canonical_clique, find_clean_multipartite, find_min_order_rainbow, homogeneity,
    CleanMultipartite, Homogeneity, RainbowSubgraph,
};
pub use pattern::{build_pattern, Pattern, PatternParams};

pub type Color = u16;

/// A coloring of the edges of `K_n`. `colors` runs over edges in
/// lexicographic order `(0,1), (0,2), …, (0,n-1), (1,2), …`; colour ids are
/// numbered by first use along that order, so every colour partition has
/// exactly one representative.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeColoring {
    n: usize,
    colors: Vec<Color>,
}

/// Index of edge `{i, j}` in lexicographic order.
#[inline]
pub fn edge_index(n: usize, i: usize, j: usize) -> usize {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    debug_assert!(j < n && i != j);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

/// Edges of `K_n` in lexicographic order.
pub fn lex_edges(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|i| ((i + 1)..n).map(move |j| (i, j))).collect()
}

impl EdgeColoring {
    /// Builds a coloring from arbitrary colour keys in lexicographic edge
    /// order, renumbering to first-use form.
    pub fn from_keys<K: Eq + std::hash::Hash>(n: usize, keys: impl IntoIterator<Item = K>) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::OrderOverflow { order: n, max: MAX_ORDER });
        }
        let mut ids: HashMap<K, Color> = HashMap::new();
        let mut colors = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for k in keys {
            let next = ids.len() as Color;
            colors.push(*ids.entry(k).or_insert(next));
        }
        if colors.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Invalid(format!(
                "coloring of K{n} needs {} edge colors, got {}",
                n * n.saturating_sub(1) / 2,
                colors.len()
            )));
        }
        Ok(EdgeColoring { n, colors })
    }

    pub fn from_fn<K: Eq + std::hash::Hash>(n: usize, mut key: impl FnMut(usize, usize) -> K) -> Result<Self> {
        Self::from_keys(n, lex_edges(n).into_iter().map(|(i, j)| key(i, j)))
    }

    pub fn monochromatic(n: usize) -> Self {
        Self::from_fn(n, |_, _| 0).expect("valid order")
    }

    pub fn rainbow(n: usize) -> Self {
        Self::from_fn(n, |i, j| (i, j)).expect("valid order")
    }

    /// `host` rainbow, every other edge in one extra colour.
    pub fn rainbow_with_mono_complement(host: &Graph) -> Self {
        Self::from_fn(host.order(), |i, j| if host.has_edge(i, j) { Some((i, j)) } else { None }).expect("valid order")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Colours in lexicographic edge order.
    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> Color {
        self.colors[edge_index(self.n, i, j)]
    }

    pub fn color_count(&self) -> usize {
        self.colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0)
    }

    /// Edges of colour `c` as a graph on `n` vertices.
    pub fn color_class(&self, c: Color) -> Graph {
        let mut g = Graph::empty(self.n);
        for (k, (i, j)) in lex_edges(self.n).into_iter().enumerate() {
            if self.colors[k] == c {
                g.add_edge(i, j);
            }
        }
        g
    }

    /// Colour classes of the edges inside `set`, each as a graph on the
    /// original `n` labels (isolates kept), ordered by colour id.
    pub fn labeled_classes_on(&self, set: VertexSet) -> Vec<(Color, Graph)> {
        let mut classes: Vec<(Color, Graph)> = Vec::new();
        let verts: Vec<usize> = bits(set).collect();
        for (a, &i) in verts.iter().enumerate() {
            for &j in &verts[a + 1..] {
                let c = self.color(i, j);
                match classes.iter_mut().find(|(cc, _)| *cc == c) {
                    Some((_, g)) => g.add_edge(i, j),
                    None => {
                        let mut g = Graph::empty(self.n);
                        g.add_edge(i, j);
                        classes.push((c, g));
                    }
                }
            }
        }
        classes.sort_by_key(|(c, _)| *c);
        classes
    }

    /// Colour classes inside `set`, each returned isolate-free.
    pub fn classes_on(&self, set: VertexSet) -> Vec<(Color, Graph)> {
        self.labeled_classes_on(set).into_iter().map(|(c, g)| (c, g.without_isolates())).collect()
    }

    /// Restriction to `set`, relabelled to `0..|set|`.
    pub fn restrict(&self, set: VertexSet) -> EdgeColoring {
        let verts: Vec<usize> = bits(set).collect();
        Self::from_fn(verts.len(), |a, b| self.color(verts[a], verts[b])).expect("valid order")
    }

    /// Applies a vertex permutation: the new colour of `{perm[i], perm[j]}`
    /// is the old colour of `{i, j}`.
    pub fn permuted(&self, perm: &[usize]) -> EdgeColoring {
        let mut inv = vec![0; self.n];
        for (v, &p) in perm.iter().enumerate() {
            inv[p] = v;
        }
        Self::from_fn(self.n, |i, j| self.color(inv[i], inv[j])).expect("valid order")
    }

    /// True if all edges in `edges` have pairwise distinct colours.
    pub fn is_rainbow(&self, edges: &[(usize, usize)]) -> bool {
        let mut seen = std::collections::HashSet::new();
        edges.iter().all(|&(u, v)| seen.insert(self.color(u, v)))
    }
}

#[derive(Deserialize)]
struct ColoringRepr {
    n: usize,
    colors: Vec<usize>,
}

impl<'de> Deserialize<'de> for EdgeColoring {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = ColoringRepr::deserialize(d)?;
        EdgeColoring::from_keys(repr.n, repr.colors).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::full_set;

    #[test]
    fn edge_index_is_lexicographic() {
        let n = 6;
        for (k, (i, j)) in lex_edges(n).into_iter().enumerate() {
            assert_eq!(edge_index(n, i, j), k);
            assert_eq!(edge_index(n, j, i), k);
        }
    }

    #[test]
    fn normal_form() {
        let c = EdgeColoring::from_keys(3, [7, 3, 7]).unwrap();
        assert_eq!(c.colors(), &[0, 1, 0]);
        assert_eq!(c.color_count(), 2);
        assert!(EdgeColoring::from_keys(3, [1, 2]).is_err());
    }

    #[test]
    fn classes_partition_edges() {
        let c = EdgeColoring::from_fn(6, |i, j| (i + j) % 3).unwrap();
        for set in [full_set(6), 0b101101, 0b000111] {
            let total: usize = c.classes_on(set).iter().map(|(_, g)| g.edge_count()).sum();
            let k = set.count_ones() as usize;
            assert_eq!(total, k * (k - 1) / 2);
        }
    }

    #[test]
    fn rainbow_classes_are_single_edges() {
        let c = EdgeColoring::rainbow(5);
        let classes = c.classes_on(0b11110);
        assert_eq!(classes.len(), 6);
        assert!(classes.iter().all(|(_, g)| g.edge_count() == 1 && g.order() == 2));
    }

    #[test]
    fn json_shape() {
        let c = EdgeColoring::from_keys(3, [0, 1, 0]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":3,"colors":[0,1,0]}"#);
        let back: EdgeColoring = serde_json::from_str(r#"{"n":3,"colors":[5,5,2]}"#).unwrap();
        assert_eq!(back.colors(), &[0, 0, 1]);
        assert!(serde_json::from_str::<EdgeColoring>(r#"{"n":3,"colors":[0]}"#).is_err());
    }

    #[test]
    fn permutation_preserves_partition_shape() {
        let c = EdgeColoring::from_fn(5, |i, j| i.max(j)).unwrap();
        let p = c.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(p.color_count(), c.color_count());
        for (a, b) in lex_edges(5) {
            for (x, y) in lex_edges(5) {
                let same_before = c.color(a, b) == c.color(x, y);
                let same_after = p.color(4 - a, 4 - b) == p.color(4 - x, 4 - y);
                assert_eq!(same_before, same_after);
            }
        }
    }
}
