//! Exhaustive finders for canonical substructures of a coloring.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use super::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::graph::{bits, is_acyclic, subsets_of_size, Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Homogeneity {
    Mono,
    Rainbow,
    Lex,
}

/// How the edges inside `set` are colored: monochromatic, rainbow, or
/// order-isomorphic to LEX, checked in that order. Sets with at most one
/// edge count as monochromatic.
pub fn homogeneity(c: &EdgeColoring, set: VertexSet) -> Option<Homogeneity> {
    let verts: Vec<usize> = bits(set).collect();
    let colors: Vec<Color> = pairs(&verts).map(|(u, v)| c.color(u, v)).collect();
    if colors.windows(2).all(|w| w[0] == w[1]) {
        return Some(Homogeneity::Mono);
    }
    let distinct: HashSet<Color> = colors.iter().copied().collect();
    if distinct.len() == colors.len() {
        return Some(Homogeneity::Rainbow);
    }
    lex_order(c, &verts).map(|_| Homogeneity::Lex)
}

fn pairs(verts: &[usize]) -> impl Iterator<Item = (usize, usize)> + '_ {
    verts.iter().enumerate().flat_map(move |(a, &u)| verts[a + 1..].iter().map(move |&v| (u, v)))
}

/// An ordering `w_0, …, w_{t-1}` of `verts` under which every edge
/// `w_a w_b` (`a < b`) has a colour depending only on `b`, with distinct
/// colours for distinct `b`. Tries orderings by backtracking.
pub(crate) fn lex_order(c: &EdgeColoring, verts: &[usize]) -> Option<Vec<usize>> {
    fn rec(c: &EdgeColoring, verts: &[usize], order: &mut Vec<usize>, used: &mut Vec<Color>) -> bool {
        if order.len() == verts.len() {
            return true;
        }
        for &v in verts {
            if order.contains(&v) {
                continue;
            }
            let level = if order.is_empty() {
                None
            } else {
                let col = c.color(order[0], v);
                if order.iter().any(|&u| c.color(u, v) != col) || used.contains(&col) {
                    continue;
                }
                Some(col)
            };
            order.push(v);
            if let Some(col) = level {
                used.push(col);
            }
            if rec(c, verts, order, used) {
                return true;
            }
            order.pop();
            if level.is_some() {
                used.pop();
            }
        }
        false
    }
    let mut order = Vec::with_capacity(verts.len());
    rec(c, verts, &mut order, &mut Vec::new()).then_some(order)
}

/// First `t`-set (lexicographically) whose induced coloring is
/// monochromatic, rainbow or LEX.
pub fn find_canonical_clique(c: &EdgeColoring, t: usize) -> Option<(Homogeneity, Vec<usize>)> {
    if t > c.n() {
        return None;
    }
    subsets_of_size(c.n(), t).into_iter().find_map(|s| homogeneity(c, s).map(|kind| (kind, bits(s).collect())))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanMultipartite {
    pub classes: Vec<Vec<usize>>,
    pub kinds: Vec<Homogeneity>,
}

/// Searches for disjoint `V_1..V_r` of size `t` such that all cross edges
/// are rainbow, each `V_i` is homogeneous, and no cross colour occurs
/// inside any `V_i`. Classes are listed by increasing least element.
pub fn find_clean_multipartite(c: &EdgeColoring, r: usize, t: usize) -> Option<CleanMultipartite> {
    if r * t > c.n() || r == 0 || t == 0 {
        return None;
    }
    let candidates: Vec<(VertexSet, Homogeneity, HashSet<Color>)> = subsets_of_size(c.n(), t)
        .into_iter()
        .filter_map(|s| {
            homogeneity(c, s).map(|k| {
                let verts: Vec<usize> = bits(s).collect();
                (s, k, pairs(&verts).map(|(u, v)| c.color(u, v)).collect())
            })
        })
        .collect();

    struct Ctx<'a> {
        c: &'a EdgeColoring,
        r: usize,
        cand: &'a [(VertexSet, Homogeneity, HashSet<Color>)],
    }

    fn rec(
        ctx: &Ctx,
        chosen: &mut Vec<usize>,
        used: VertexSet,
        cross: &mut HashSet<Color>,
        inner: &mut Vec<Color>,
    ) -> bool {
        if chosen.len() == ctx.r {
            return true;
        }
        let min_start = chosen.last().map_or(0, |&i| ctx.cand[i].0.trailing_zeros() + 1);
        for (idx, (set, _, colors)) in ctx.cand.iter().enumerate() {
            if set & used != 0 || set.trailing_zeros() < min_start {
                continue;
            }
            if colors.iter().any(|col| cross.contains(col)) {
                continue;
            }
            let mut added = Vec::new();
            let mut ok = true;
            'outer: for u in bits(*set) {
                for v in bits(used) {
                    let col = ctx.c.color(u, v);
                    if cross.contains(&col) || inner.contains(&col) || colors.contains(&col) || added.contains(&col) {
                        ok = false;
                        break 'outer;
                    }
                    added.push(col);
                }
            }
            if !ok {
                continue;
            }
            cross.extend(added.iter().copied());
            let inner_len = inner.len();
            inner.extend(colors.iter().copied());
            chosen.push(idx);
            if rec(ctx, chosen, used | set, cross, inner) {
                return true;
            }
            chosen.pop();
            inner.truncate(inner_len);
            for col in &added {
                cross.remove(col);
            }
        }
        false
    }

    let ctx = Ctx { c, r, cand: &candidates };
    let mut chosen = Vec::new();
    if rec(&ctx, &mut chosen, 0, &mut HashSet::new(), &mut Vec::new()) {
        Some(CleanMultipartite {
            classes: chosen.iter().map(|&i| bits(candidates[i].0).collect()).collect(),
            kinds: chosen.iter().map(|&i| candidates[i].1).collect(),
        })
    } else {
        None
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RainbowSubgraph {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

impl RainbowSubgraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Isolate-free graph on `0..order`, vertices relabelled in order.
    pub fn graph(&self) -> Graph {
        let pos = |v: usize| self.vertices.iter().position(|&w| w == v).expect("edge endpoint in vertex set");
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
        Graph::from_edges(self.vertices.len(), &edges).expect("at most MAX_ORDER vertices")
    }
}

/// A rainbow subgraph with exactly `k` edges on as few vertices as
/// possible.
///
/// The least `s` for which some `s`-set spans `k` distinct colours is the
/// answer: any `k` edges of distinct colours inside such a set must cover
/// all `s` vertices, otherwise a smaller set would do.
pub fn find_min_order_rainbow(c: &EdgeColoring, k: usize) -> Result<RainbowSubgraph> {
    let have = c.color_count();
    if have < k {
        return Err(Error::TooFewColors { have, need: k });
    }
    if k == 0 {
        return Ok(RainbowSubgraph { vertices: Vec::new(), edges: Vec::new() });
    }
    let n = c.n();
    let start = (2..=n).find(|&s| s * (s - 1) / 2 >= k).unwrap_or(n);
    for s in start..=n {
        for set in subsets_of_size(n, s) {
            let verts: Vec<usize> = bits(set).collect();
            let mut seen = HashSet::new();
            let mut edges = Vec::new();
            for (u, v) in pairs(&verts) {
                if seen.insert(c.color(u, v)) {
                    edges.push((u, v));
                    if edges.len() == k {
                        return Ok(RainbowSubgraph { vertices: verts.clone(), edges });
                    }
                }
            }
        }
    }
    unreachable!("K_n itself spans at least k colours")
}

/// Embeds a forest into `K_n` so that it is rainbow under LEX.
///
/// Components are laid out one after another; inside a component the root
/// (its least vertex) takes the lowest free position and the rest follow in
/// BFS order, so each non-root vertex sits above its parent and the edge to
/// its parent takes the colour of its own position. Returns `phi` with
/// `phi[v]` the host vertex of `v`.
pub fn embed_forest_rainbow_in_lex(forest: &Graph, n: usize) -> Result<Vec<usize>> {
    if !is_acyclic(forest) {
        return Err(Error::NotAForest);
    }
    if forest.order() > n {
        return Err(Error::Invalid(format!("forest on {} vertices does not fit in K{n}", forest.order())));
    }
    let mut phi = vec![usize::MAX; forest.order()];
    let mut next = 0;
    for comp in forest.components() {
        let root = comp.trailing_zeros() as usize;
        let mut queue = std::collections::VecDeque::from([root]);
        phi[root] = next;
        next += 1;
        while let Some(u) = queue.pop_front() {
            for w in bits(forest.neighbors(u)) {
                if phi[w] == usize::MAX {
                    phi[w] = next;
                    next += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let lex = EdgeColoring::from_fn(n, |_, j| j)?;
    let image: Vec<(usize, usize)> = forest.edges().map(|(u, v)| (phi[u], phi[v])).collect();
    assert!(lex.is_rainbow(&image), "BFS layout of a forest is rainbow under LEX");
    Ok(phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{build_pattern, Pattern, PatternParams};
    use crate::graph::{forests, full_set, parse_graph};

    fn pattern(pattern: Pattern, n: usize, m: Option<usize>) -> EdgeColoring {
        build_pattern(&PatternParams { pattern, n, m }).unwrap()
    }

    #[test]
    fn canonical_clique_examples() {
        let (kind, _) = find_canonical_clique(&EdgeColoring::rainbow(6), 4).unwrap();
        assert_eq!(kind, Homogeneity::Rainbow);
        let lex = pattern(Pattern::Lex, 6, None);
        for s in subsets_of_size(6, 3) {
            assert_eq!(homogeneity(&lex, s), Some(Homogeneity::Lex));
        }
        assert_eq!(find_canonical_clique(&lex, 3).unwrap().0, Homogeneity::Lex);
    }

    #[test]
    fn p3_class_plus_rainbow_on_k4() {
        // Edges 01 and 12 share a colour; the other four are private.
        let c = EdgeColoring::from_fn(4, |i, j| if (i, j) == (0, 1) || (i, j) == (1, 2) { (9, 9) } else { (i, j) })
            .unwrap();
        assert_eq!(c.color_count(), 5);
        let rainbow_triples: Vec<_> =
            subsets_of_size(4, 3).into_iter().filter(|&s| homogeneity(&c, s) == Some(Homogeneity::Rainbow)).collect();
        assert_eq!(rainbow_triples, vec![0b1011, 0b1101, 0b1110]);
        let (kind, set) = find_canonical_clique(&c, 3).unwrap();
        assert_eq!(set, vec![0, 1, 2]);
        assert_eq!(kind, Homogeneity::Lex);
    }

    #[test]
    fn lex_recognised_under_any_vertex_order() {
        let lex = pattern(Pattern::Lex, 5, None);
        let shuffled = lex.permuted(&[3, 0, 4, 1, 2]);
        assert_eq!(homogeneity(&shuffled, full_set(5)), Some(Homogeneity::Lex));
        let order = lex_order(&shuffled, &[0, 1, 2, 3, 4]).unwrap();
        // The two lowest positions of a LEX order are interchangeable.
        assert_eq!(&order[2..], &[4, 1, 2]);
        let mut low = order[..2].to_vec();
        low.sort();
        assert_eq!(low, vec![0, 3]);
    }

    #[test]
    fn clean_multipartite_examples() {
        let rtdm = pattern(Pattern::Rtdm, 8, Some(2));
        let found = find_clean_multipartite(&rtdm, 2, 2).unwrap();
        assert_eq!(found.classes.len(), 2);
        assert!(find_clean_multipartite(&EdgeColoring::monochromatic(6), 2, 2).is_none());
        let r = find_clean_multipartite(&EdgeColoring::rainbow(6), 3, 2).unwrap();
        assert_eq!(r.kinds, vec![Homogeneity::Mono; 3]);
        assert!(find_clean_multipartite(&EdgeColoring::rainbow(6), 4, 2).is_none());
    }

    #[test]
    fn clean_multipartite_rejects_repeated_cross_colors_inside_classes() {
        // Rainbow K_{2,2} between {0,1} and {2,3} but edge 01 reuses colour of 02.
        let c = EdgeColoring::from_fn(4, |i, j| if (i, j) == (0, 1) { (0, 2) } else { (i, j) }).unwrap();
        assert!(find_clean_multipartite(&c, 2, 2).map_or(true, |m| m.classes != vec![vec![0, 1], vec![2, 3]]));
    }

    #[test]
    fn min_order_rainbow_tightness() {
        let pm = parse_graph("M3").unwrap();
        let c = EdgeColoring::rainbow_with_mono_complement(&pm);
        assert_eq!(find_min_order_rainbow(&c, 3).unwrap().order(), 4);
        assert_eq!(find_min_order_rainbow(&EdgeColoring::rainbow(6), 3).unwrap().order(), 3);
        assert!(matches!(
            find_min_order_rainbow(&EdgeColoring::monochromatic(5), 3),
            Err(Error::TooFewColors { have: 1, need: 3 })
        ));
    }

    #[test]
    fn min_order_rainbow_on_lex_k7() {
        let lex = pattern(Pattern::Lex, 7, None);
        let r = find_min_order_rainbow(&lex, 4).unwrap();
        // Brute force: four distinct LEX colours need four distinct top
        // endpoints above some bottom vertex, so five vertices.
        assert_eq!(r.order(), 5);
        assert!(lex.is_rainbow(&r.edges));
        assert_eq!(r.graph().edge_count(), 4);
    }

    #[test]
    fn forest_embedding_examples() {
        let lex = pattern(Pattern::Lex, 5, None);
        let p4 = Graph::path(4);
        let phi = embed_forest_rainbow_in_lex(&p4, 5).unwrap();
        let image: Vec<_> = p4.edges().map(|(u, v)| (phi[u], phi[v])).collect();
        assert!(lex.is_rainbow(&image));

        let star = Graph::star(4);
        let phi = embed_forest_rainbow_in_lex(&star, 5).unwrap();
        assert_eq!(phi[0], 0);
        let colors: HashSet<Color> = star.edges().map(|(u, v)| lex.color(phi[u], phi[v])).collect();
        assert_eq!(colors, (0..4).collect());

        assert!(matches!(embed_forest_rainbow_in_lex(&Graph::cycle(3), 5), Err(Error::NotAForest)));
        assert!(embed_forest_rainbow_in_lex(&Graph::path(6), 5).is_err());
    }

    #[test]
    fn two_disjoint_edges_always_rainbow_in_lex() {
        let lex = pattern(Pattern::Lex, 4, None);
        for (a, b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
            assert!(lex.is_rainbow(&[a, b]));
        }
        assert!(embed_forest_rainbow_in_lex(&parse_graph("M2").unwrap(), 4).is_ok());
    }

    #[test]
    fn every_small_forest_embeds() {
        for n in 1..=7 {
            for f in forests(n) {
                embed_forest_rainbow_in_lex(&f, n).unwrap();
            }
        }
    }
}
