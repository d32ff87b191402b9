use std::ops::ControlFlow;

use crate::coloring::edge_index;
use crate::graph::{for_each_embedding, Graph};

/// Largest isolate-free target order the engine accepts.
pub const MAX_TARGET_ORDER: usize = 7;

/// Edge sets of the distinct copies of `target` in `K_q`, `q = |target|`,
/// as bitmasks over the lexicographic edge order of `K_q`. Sorted.
pub(crate) fn local_copy_masks(target: &Graph) -> Vec<u64> {
    let q = target.order();
    assert!(q <= MAX_TARGET_ORDER, "target order {q} above {MAX_TARGET_ORDER}");
    let mut masks = Vec::new();
    let _ = for_each_embedding(&Graph::complete(q), target, |phi| {
        let mask = target.edges().fold(0u64, |m, (u, v)| m | 1 << edge_index(q, phi[u], phi[v]));
        masks.push(mask);
        ControlFlow::Continue(())
    });
    masks.sort_unstable();
    masks.dedup();
    masks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    #[test]
    fn copy_counts() {
        // q! / |Aut(G)|
        assert_eq!(local_copy_masks(&Graph::complete(4)).len(), 1);
        assert_eq!(local_copy_masks(&parse_graph("P3").unwrap()).len(), 3);
        assert_eq!(local_copy_masks(&parse_graph("C4").unwrap()).len(), 3);
        assert_eq!(local_copy_masks(&parse_graph("M2").unwrap()).len(), 3);
        assert_eq!(local_copy_masks(&parse_graph("P4").unwrap()).len(), 12);
        assert_eq!(local_copy_masks(&parse_graph("K4-e").unwrap()).len(), 6);
    }
}
