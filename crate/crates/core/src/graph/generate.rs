//! Isomorph-free generation by vertex augmentation.

use std::collections::HashMap;

use super::{canonical_code, canonical_labeling, is_acyclic, Graph};

/// Generates isomorphism-class representatives level by level: level `k`
/// holds the graphs on `k` vertices accepted by `keep` whose every
/// one-vertex-deleted subgraph chain was also accepted.
///
/// This is complete for any `keep` closed under vertex deletion (for
/// example any subgraph-closed property). Representatives are in canonical
/// labelling and each level is sorted by canonical code.
pub fn augment_levels<F>(max_order: usize, keep: F) -> Vec<Vec<Graph>>
where
    F: Fn(&Graph) -> bool,
{
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
    for k in 0..max_order {
        let mut next: HashMap<_, Graph> = HashMap::new();
        for g in &levels[k] {
            let base = g.padded(k + 1).expect("order within MAX_ORDER");
            for nbhd in 0u32..(1u32 << k) {
                let mut h = base.clone();
                for v in 0..k {
                    if nbhd >> v & 1 == 1 {
                        h.add_edge(v, k);
                    }
                }
                if !keep(&h) {
                    continue;
                }
                let code = canonical_code(&h);
                next.entry(code).or_insert_with(|| canonical_form(&h));
            }
        }
        let mut level: Vec<_> = next.into_iter().collect();
        level.sort_by(|a, b| a.0.cmp(&b.0));
        levels.push(level.into_iter().map(|(_, g)| g).collect());
    }
    levels
}

pub fn canonical_form(g: &Graph) -> Graph {
    let lab = canonical_labeling(g);
    let mut perm = vec![0; g.order()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

/// All graphs on `0..=n` vertices up to isomorphism, indexed by order.
pub fn all_graphs(n: usize) -> Vec<Vec<Graph>> {
    augment_levels(n, |_| true)
}

/// All forests on exactly `n` vertices up to isomorphism.
pub fn forests(n: usize) -> Vec<Graph> {
    augment_levels(n, is_acyclic).pop().unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_counts() {
        let counts: Vec<usize> = all_graphs(7).iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn forest_counts() {
        // Unlabelled forests: 1, 2, 3, 6, 10, 20, 37.
        let counts: Vec<usize> = (1..=7).map(|n| forests(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 6, 10, 20, 37]);
    }
}
