use serde::{Deserialize, Serialize};

use crate::graph::{canonical_code, parse_graph, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BeVerdict {
    /// Hypotheses hold and the pair is not exceptional: a packing exists.
    Guaranteed,
    /// Hypotheses hold but the pair is one of the seven that do not pack.
    Exception,
    /// Hypotheses fail; no conclusion either way.
    Inconclusive,
}

const EXCEPTIONS: [(&str, &str); 7] = [
    ("2K2", "K1+K3"),
    ("2K1+K3", "K2+K3"),
    ("3K2", "2K1+K4"),
    ("3K1+K3", "2K3"),
    ("2K2+K3", "3K1+K4"),
    ("4K1+K4", "K2+2K3"),
    ("5K1+K4", "3K3"),
];

/// The seven exceptional pairs, each graph on the common order `n`.
pub fn be_exception_pairs() -> Vec<(Graph, Graph)> {
    EXCEPTIONS.iter().map(|(a, b)| (parse_graph(a).expect("valid spec"), parse_graph(b).expect("valid spec"))).collect()
}

/// Classifies a pair by the Bollobás–Eldridge packing condition: both
/// padded to `n = max(|G1|, |G2|)` vertices, `Δ(G_i) < n − 1`,
/// `e(G1) + e(G2) ≤ 2n − 3`, and the pair (in either order, up to
/// isomorphism) is not exceptional.
pub fn be_packable(g1: &Graph, g2: &Graph) -> BeVerdict {
    let n = g1.order().max(g2.order());
    let (a, b) = (g1.padded(n).expect("n <= MAX_ORDER"), g2.padded(n).expect("n <= MAX_ORDER"));
    let hypotheses =
        n >= 2 && a.max_degree() < n - 1 && b.max_degree() < n - 1 && a.edge_count() + b.edge_count() + 3 <= 2 * n;
    if !hypotheses {
        return BeVerdict::Inconclusive;
    }
    let (ca, cb) = (canonical_code(&a), canonical_code(&b));
    let listed = be_exception_pairs().iter().any(|(x, y)| {
        x.order() == n && {
            let (cx, cy) = (canonical_code(x), canonical_code(y));
            (ca == cx && cb == cy) || (ca == cy && cb == cx)
        }
    });
    if listed {
        BeVerdict::Exception
    } else {
        BeVerdict::Guaranteed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::packing::pack;

    #[test]
    fn exception_pairs_are_exceptions_and_do_not_pack() {
        for (a, b) in be_exception_pairs() {
            assert_eq!(a.order(), b.order());
            assert_eq!(be_packable(&a, &b), BeVerdict::Exception, "{a} / {b}");
            assert_eq!(be_packable(&b, &a), BeVerdict::Exception);
            assert!(pack(&a, &b, a.order()).unwrap().is_none(), "{a} / {b}");
        }
    }

    #[test]
    fn hypothesis_arithmetic() {
        let p4 = parse_graph("P4").unwrap().padded(6).unwrap();
        let c5 = parse_graph("C5").unwrap().padded(6).unwrap();
        assert_eq!(be_packable(&p4, &c5), BeVerdict::Guaranteed);
        assert_eq!(be_packable(&parse_graph("S3").unwrap(), &parse_graph("K2").unwrap()), BeVerdict::Inconclusive);
        assert_eq!(be_packable(&parse_graph("C5").unwrap(), &parse_graph("C5").unwrap()), BeVerdict::Inconclusive);
    }
}
