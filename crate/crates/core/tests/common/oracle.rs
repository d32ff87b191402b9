//! Naive reference implementations used to cross-check the search engine.
//! Nothing here shares code with the engine beyond graph primitives.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use arlab_core::coloring::EdgeColoring;
use arlab_core::family::GraphFamily;
use arlab_core::graph::{for_each_embedding, Graph};

/// Every restricted-growth string of length `len`.
pub fn restricted_growth_strings(len: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, max: usize, len: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == len {
            out.push(prefix.clone());
            return;
        }
        for c in 0..=max + 1 {
            prefix.push(c);
            rec(prefix, max.max(c), len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if len == 0 {
        out.push(Vec::new());
    } else {
        let mut prefix = vec![0];
        rec(&mut prefix, 0, len, &mut out);
    }
    out
}

/// All colorings of `K_n`, one per partition of its edge set.
pub fn all_colorings(n: usize) -> Vec<EdgeColoring> {
    restricted_growth_strings(n * (n - 1) / 2).into_iter().map(|rg| EdgeColoring::from_keys(n, rg).unwrap()).collect()
}

/// Edge sets of all copies of `target` in `K_n`.
pub fn copies(n: usize, target: &Graph) -> Vec<Vec<(usize, usize)>> {
    let target = target.without_isolates();
    let mut seen = BTreeSet::new();
    let _ = for_each_embedding(&Graph::complete(n), &target, |phi| {
        let mut edges: Vec<(usize, usize)> =
            target.edges().map(|(u, v)| (phi[u].min(phi[v]), phi[u].max(phi[v]))).collect();
        edges.sort_unstable();
        seen.insert(edges);
        ControlFlow::Continue(())
    });
    seen.into_iter().collect()
}

/// Membership of each colour class of `c` restricted to `edges`.
pub fn class_memberships(c: &EdgeColoring, edges: &[(usize, usize)], family: &GraphFamily) -> Vec<bool> {
    let mut colors: Vec<u16> = edges.iter().map(|&(u, v)| c.color(u, v)).collect();
    colors.sort_unstable();
    colors.dedup();
    colors
        .into_iter()
        .map(|col| {
            let class: Vec<(usize, usize)> = edges.iter().copied().filter(|&(u, v)| c.color(u, v) == col).collect();
            family.member(&Graph::from_edges(c.n(), &class).unwrap())
        })
        .collect()
}

/// `f` by enumerating every coloring.
pub fn naive_f(n: usize, target: &Graph, family: &GraphFamily) -> usize {
    let cps = copies(n, target);
    let best_bad = all_colorings(n)
        .iter()
        .filter(|c| !cps.iter().any(|e| class_memberships(c, e, family).iter().all(|&m| m)))
        .map(EdgeColoring::color_count)
        .max()
        .unwrap_or(0);
    best_bad + 1
}

/// `g` by enumerating every coloring.
pub fn naive_g(n: usize, target: &Graph, family: &GraphFamily) -> usize {
    let cps = copies(n, target);
    all_colorings(n)
        .iter()
        .filter(|c| cps.iter().all(|e| class_memberships(c, e, family).iter().any(|&m| m)))
        .map(EdgeColoring::color_count)
        .max()
        .unwrap_or(0)
}

/// Pairs `(target, family)` for `f` and for `g` used by the equivalence checks.
pub const F_BATTERY: &[(&str, &str)] = &[
    ("K3", "k2"),
    ("K3", "not:P3"),
    ("K4", "k2"),
    ("K4", "free:K3"),
    ("K4", "matchings"),
    ("P4", "matchings"),
    ("K4-e", "k2"),
    ("C4", "not:M2"),
];

pub const G_BATTERY: &[(&str, &str)] = &[
    ("K3", "up:P3"),
    ("K4", "up:K3"),
    ("K4", "up:M2"),
    ("K4", "up:P4"),
    ("M2", "is:M2"),
    ("P3", "is:P3"),
    ("K4-e", "up:K3"),
    ("C4", "up:P3"),
];
