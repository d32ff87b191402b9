use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use super::{bits, subsets_of_size, Graph, VertexSet};
use crate::family::GraphFamily;

/// Exact invariants, all by exhaustive computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "InvariantsRepr", from = "InvariantsRepr")]
pub struct Invariants {
    pub order: usize,
    pub edges: usize,
    pub chi: usize,
    pub alpha: usize,
    /// `None` for acyclic graphs.
    pub girth: Option<usize>,
    pub max_deg: usize,
    pub min_deg: usize,
    pub connected: bool,
    pub bipartite: bool,
    pub components: usize,
}

/// JSON shape: acyclic graphs carry `girth: 0` and `acyclic: true`.
#[derive(Clone, Serialize, Deserialize)]
struct InvariantsRepr {
    order: usize,
    edges: usize,
    chi: usize,
    alpha: usize,
    girth: usize,
    acyclic: bool,
    max_deg: usize,
    min_deg: usize,
    connected: bool,
    bipartite: bool,
    components: usize,
}

impl From<Invariants> for InvariantsRepr {
    fn from(i: Invariants) -> Self {
        InvariantsRepr {
            order: i.order,
            edges: i.edges,
            chi: i.chi,
            alpha: i.alpha,
            girth: i.girth.unwrap_or(0),
            acyclic: i.girth.is_none(),
            max_deg: i.max_deg,
            min_deg: i.min_deg,
            connected: i.connected,
            bipartite: i.bipartite,
            components: i.components,
        }
    }
}

impl From<InvariantsRepr> for Invariants {
    fn from(r: InvariantsRepr) -> Self {
        Invariants {
            order: r.order,
            edges: r.edges,
            chi: r.chi,
            alpha: r.alpha,
            girth: (!r.acyclic).then_some(r.girth),
            max_deg: r.max_deg,
            min_deg: r.min_deg,
            connected: r.connected,
            bipartite: r.bipartite,
            components: r.components,
        }
    }
}

pub fn invariants_of(g: &Graph) -> Invariants {
    let chi = chromatic_number(g);
    Invariants {
        order: g.order(),
        edges: g.edge_count(),
        chi,
        alpha: alpha(g),
        girth: girth(g),
        max_deg: g.max_degree(),
        min_deg: g.min_degree(),
        connected: g.is_connected(),
        bipartite: chi <= 2,
        components: g.components().len(),
    }
}

pub fn chromatic_number(g: &Graph) -> usize {
    let n = g.order();
    if n == 0 {
        return 0;
    }
    if g.edge_count() == 0 {
        return 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    (2..=n).find(|&k| colorable(g, &order, k)).unwrap_or(n)
}

fn colorable(g: &Graph, order: &[usize], k: usize) -> bool {
    fn rec(g: &Graph, order: &[usize], i: usize, k: usize, used: usize, class: &mut [VertexSet]) -> bool {
        if i == order.len() {
            return true;
        }
        let v = order[i];
        // A fresh color is interchangeable with any other fresh color.
        for c in 0..(used + 1).min(k) {
            if class[c] & g.neighbors(v) == 0 {
                class[c] |= 1 << v;
                if rec(g, order, i + 1, k, used.max(c + 1), class) {
                    return true;
                }
                class[c] &= !(1 << v);
            }
        }
        false
    }
    let mut class = vec![0 as VertexSet; k];
    rec(g, order, 0, k, 0, &mut class)
}

/// Independence number.
pub fn alpha(g: &Graph) -> usize {
    fn mis(g: &Graph, set: VertexSet) -> usize {
        if set == 0 {
            return 0;
        }
        let v = set.trailing_zeros() as usize;
        let nb = g.neighbors(v) & set;
        if nb == 0 {
            return 1 + mis(g, set & !(1 << v));
        }
        let with = 1 + mis(g, set & !(1 << v) & !nb);
        let without = mis(g, set & !(1 << v));
        with.max(without)
    }
    mis(g, g.vertex_set())
}

/// Length of a shortest cycle; `None` if the graph is a forest.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for w in bits(g.neighbors(u)) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if parent[u] != w {
                    let len = dist[u] + dist[w] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

pub fn is_acyclic(g: &Graph) -> bool {
    g.edge_count() + g.components().len() == g.order()
}

/// Smallest `k` such that every induced subgraph on `k` vertices contains a
/// cycle; `None` (infinite) iff the graph is acyclic.
pub fn mu(g: &Graph) -> Option<usize> {
    if is_acyclic(g) {
        return None;
    }
    let n = g.order();
    (3..=n).find(|&k| subsets_of_size(n, k).into_iter().all(|s| !is_acyclic(&g.induced(s))))
}

/// Result of `chi_family`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChiFamily {
    pub value: usize,
    /// No nonempty edge subset of `G` lies in the family; `value` is `chi(G)`.
    pub no_removal: bool,
}

/// Minimum of `chi(G - D)` over nonempty edge sets `D` of `G` whose
/// isolate-free form is in `family`.
pub fn chi_family(g: &Graph, family: &GraphFamily) -> ChiFamily {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() <= 24, "chi_family enumerates 2^e edge subsets; e = {} is too many", edges.len());
    let mut best: Option<usize> = None;
    for mask in 1u32..(1u32 << edges.len()) {
        let mut removed = Graph::empty(g.order());
        let mut rest = g.clone();
        for (k, &(u, v)) in edges.iter().enumerate() {
            if mask >> k & 1 == 1 {
                removed.add_edge(u, v);
                rest.remove_edge(u, v);
            }
        }
        if !family.member(&removed) {
            continue;
        }
        let chi = chromatic_number(&rest);
        if best.is_none_or(|b| chi < b) {
            best = Some(chi);
            if chi <= 1 {
                break;
            }
        }
    }
    match best {
        Some(value) => ChiFamily { value, no_removal: false },
        None => ChiFamily { value: chromatic_number(g), no_removal: true },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::parse_family;
    use crate::graph::parse_graph;

    #[test]
    fn c5() {
        let i = invariants_of(&Graph::cycle(5));
        assert_eq!((i.chi, i.alpha, i.girth), (3, 2, Some(5)));
        assert!(i.connected && !i.bipartite);
    }

    #[test]
    fn turan_7_3() {
        let i = invariants_of(&Graph::turan(7, 3));
        assert_eq!((i.chi, i.alpha), (3, 3));
    }

    #[test]
    fn petersen() {
        let i = invariants_of(&Graph::petersen());
        assert_eq!((i.girth, i.alpha, i.chi), (Some(5), 4, 3));
    }

    #[test]
    fn forest_girth_serialises_as_zero() {
        let i = invariants_of(&parse_graph("P4+K2").unwrap());
        assert_eq!(i.girth, None);
        assert_eq!(i.components, 2);
        let v = serde_json::to_value(&i).unwrap();
        assert_eq!(v["girth"], 0);
        assert_eq!(v["acyclic"], true);
        let back: Invariants = serde_json::from_value(v).unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn mu_examples() {
        assert_eq!(mu(&Graph::complete(4)), Some(3));
        assert_eq!(mu(&Graph::path(5)), None);
        assert_eq!(mu(&Graph::cycle(5)), Some(5));
    }

    #[test]
    fn chi_family_examples() {
        let triangle_free = parse_family("free:K3").unwrap();
        assert_eq!(chi_family(&Graph::complete(5), &triangle_free).value, 3);
        assert_eq!(chi_family(&Graph::complete(6), &triangle_free).value, 3);
        let k2 = parse_family("k2").unwrap();
        assert_eq!(chi_family(&Graph::complete(4), &k2).value, 3);
    }

    #[test]
    fn chi_family_without_candidates_falls_back() {
        let up_k4 = parse_family("up:K4").unwrap();
        let r = chi_family(&Graph::complete(3), &up_k4);
        assert_eq!(r, ChiFamily { value: 3, no_removal: true });
    }

    #[test]
    fn chromatic_numbers() {
        assert_eq!(chromatic_number(&Graph::empty(0)), 0);
        assert_eq!(chromatic_number(&Graph::empty(3)), 1);
        assert_eq!(chromatic_number(&Graph::complete(7)), 7);
        assert_eq!(chromatic_number(&Graph::cycle(6)), 2);
    }
}
