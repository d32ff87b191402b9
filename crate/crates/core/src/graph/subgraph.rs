use std::ops::ControlFlow;

use super::{bits, canonical_code, Graph, VertexSet};

/// Finds an injection `phi` of pattern vertices into host vertices such that
/// every pattern edge `uv` maps to a host edge `phi(u)phi(v)`. Not induced.
pub fn contains_subgraph(host: &Graph, pattern: &Graph) -> Option<Vec<usize>> {
    let mut found = None;
    let _ = for_each_embedding(host, pattern, |phi| {
        found = Some(phi.to_vec());
        ControlFlow::Break(())
    });
    found
}

/// Calls `visit` for every injection of `pattern` into `host` preserving
/// adjacency, until it returns `Break`. The slice is indexed by pattern vertex.
pub fn for_each_embedding<F>(host: &Graph, pattern: &Graph, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let p = pattern.order();
    if p > host.order() || pattern.edge_count() > host.edge_count() {
        return ControlFlow::Continue(());
    }
    let order = placement_order(pattern);
    let mut phi = vec![usize::MAX; p];
    extend(host, pattern, &order, 0, 0, &mut phi, &mut visit)
}

/// Greedy order: next vertex has the most already-placed neighbours, ties
/// broken by degree. Keeps the adjacency filter tight early.
fn placement_order(pattern: &Graph) -> Vec<usize> {
    let p = pattern.order();
    let mut placed: VertexSet = 0;
    let mut order = Vec::with_capacity(p);
    for _ in 0..p {
        let v = (0..p)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| {
                let back = (pattern.neighbors(v) & placed).count_ones();
                (back, pattern.degree(v), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex remains");
        placed |= 1 << v;
        order.push(v);
    }
    order
}

fn extend<F>(
    host: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    phi: &mut [usize],
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if depth == order.len() {
        return visit(phi);
    }
    let v = order[depth];
    let need = pattern.degree(v);
    let mut candidates = host.vertex_set() & !used;
    for &u in &order[..depth] {
        if pattern.has_edge(u, v) {
            candidates &= host.neighbors(phi[u]);
        }
    }
    for w in bits(candidates) {
        if host.degree(w) < need {
            continue;
        }
        phi[v] = w;
        extend(host, pattern, order, depth + 1, used | 1 << w, phi, visit)?;
    }
    phi[v] = usize::MAX;
    ControlFlow::Continue(())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && canonical_code(a) == canonical_code(b)
}
