//! Decision procedures on a fixed coloring: is there an `F`-witness copy of
//! `G`, and is every copy of `G` pierced by a class from `F`?

use serde::{Deserialize, Serialize};

use crate::coloring::{Color, EdgeColoring};
use crate::error::{Error, Result};
use crate::family::GraphFamily;
use crate::graph::{bits, subsets_of_size, Graph};

use super::copies::local_copy_masks;

/// A copy of the target inside `K_n` together with its colour classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CopyWitness {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
    pub classes: Vec<ClassInfo>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassInfo {
    pub color: Color,
    /// Isolate-free class graph.
    pub graph: Graph,
    pub member: bool,
}

impl CopyWitness {
    pub fn all_classes_in_family(&self) -> bool {
        self.classes.iter().all(|c| c.member)
    }

    pub fn some_class_in_family(&self) -> bool {
        self.classes.iter().any(|c| c.member)
    }
}

/// Calls `visit` on every copy of `target` (isolates ignored) in `K_n`,
/// vertex sets in lexicographic order, until it returns `Some`.
fn scan_copies<T>(
    c: &EdgeColoring,
    target: &Graph,
    family: &GraphFamily,
    mut visit: impl FnMut(CopyWitness) -> Option<T>,
) -> Option<T> {
    let target = target.without_isolates();
    let q = target.order();
    let n = c.n();
    if q > n || q < 2 {
        return None;
    }
    let local_edges: Vec<(usize, usize)> = crate::coloring::lex_edges(q);
    let masks = local_copy_masks(&target);
    for set in subsets_of_size(n, q) {
        let verts: Vec<usize> = bits(set).collect();
        for &mask in &masks {
            let edges: Vec<(usize, usize)> = (0..local_edges.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| (verts[local_edges[k].0], verts[local_edges[k].1]))
                .collect();
            let mut by_color: Vec<(Color, Graph)> = Vec::new();
            for &(u, v) in &edges {
                let col = c.color(u, v);
                match by_color.iter_mut().find(|(k, _)| *k == col) {
                    Some((_, g)) => g.add_edge(u, v),
                    None => {
                        let mut g = Graph::empty(n);
                        g.add_edge(u, v);
                        by_color.push((col, g));
                    }
                }
            }
            by_color.sort_by_key(|(k, _)| *k);
            let classes = by_color
                .into_iter()
                .map(|(color, g)| {
                    let graph = g.without_isolates();
                    let member = family.member(&graph);
                    ClassInfo { color, graph, member }
                })
                .collect();
            if let Some(out) = visit(CopyWitness { vertices: verts.clone(), edges, classes }) {
                return Some(out);
            }
        }
    }
    None
}

/// First copy of `target` all of whose colour classes lie in `family`.
pub fn holds_f_witness(c: &EdgeColoring, target: &Graph, family: &GraphFamily) -> Result<Option<CopyWitness>> {
    if !family.contains_k2() {
        return Err(Error::FamilyLacksK2(family.name().to_string()));
    }
    Ok(scan_copies(c, target, family, |w| w.all_classes_in_family().then_some(w)))
}

/// First copy of `target` with no colour class in `family`.
pub fn unpierced_copy(c: &EdgeColoring, target: &Graph, family: &GraphFamily) -> Result<Option<CopyWitness>> {
    if family.contains_k2() {
        return Err(Error::FamilyContainsK2(family.name().to_string()));
    }
    Ok(scan_copies(c, target, family, |w| (!w.some_class_in_family()).then_some(w)))
}

/// Whether every copy of `target` contains a colour class from `family`.
pub fn pierces_all(c: &EdgeColoring, target: &Graph, family: &GraphFamily) -> Result<bool> {
    Ok(unpierced_copy(c, target, family)?.is_none())
}
