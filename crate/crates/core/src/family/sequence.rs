//! Edge-count sequences `S` and the families `F_S` of graphs with `e(G) ∈ S`.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graph::binomial;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EdgeCountSequence {
    /// Positive perfect squares.
    Squares,
    /// Positive integers `e` with `e ≡ residue (mod modulus)`.
    Mod {
        residue: usize,
        modulus: usize,
    },
    Set(BTreeSet<usize>),
}

impl EdgeCountSequence {
    pub fn contains(&self, e: usize) -> bool {
        if e == 0 {
            return false;
        }
        match self {
            Self::Squares => {
                let r = (e as f64).sqrt().round() as usize;
                r * r == e
            }
            Self::Mod { residue, modulus } => e % modulus == *residue,
            Self::Set(s) => s.contains(&e),
        }
    }

    /// The first `count` terms in increasing order. Finite sets may yield
    /// fewer.
    pub fn first_terms(&self, count: usize) -> Vec<usize> {
        match self {
            Self::Set(s) => s.iter().copied().filter(|&e| e > 0).take(count).collect(),
            _ => (1..).filter(|&e| self.contains(e)).take(count).collect(),
        }
    }
}

/// `1 ∈ S` and `2 ∉ S`.
pub fn is_legal(s: &EdgeCountSequence) -> bool {
    s.contains(1) && !s.contains(2)
}

/// `p` is `S`-good if some `t` with `⌈(p+1)/2⌉ ≤ t ≤ p` has `C(t,2) ∈ S`.
/// Only meaningful for legal `S` and `p ≥ 5`.
pub fn is_s_good(p: usize, s: &EdgeCountSequence) -> bool {
    ((p + 1).div_ceil(2)..=p).any(|t| s.contains(binomial(t, 2)))
}

/// `i`-th term (1-based) of the sparsest well-spaced sequence of triangular
/// numbers: `1`, then `C(5·2^(i-2), 2)`.
pub fn sparsest_well_spaced(i: usize) -> u128 {
    assert!(i >= 1, "sequence is 1-indexed");
    if i == 1 {
        return 1;
    }
    let t: u128 = 5u128 << (i - 2);
    t * (t - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> EdgeCountSequence {
        EdgeCountSequence::Set(v.iter().copied().collect())
    }

    #[test]
    fn sparsest_terms() {
        let terms: Vec<u128> = (1..=4).map(sparsest_well_spaced).collect();
        assert_eq!(terms, vec![1, 10, 45, 190]);
    }

    #[test]
    fn sparsest_sequence_is_well_spaced() {
        let s = EdgeCountSequence::Set((1..=5).map(|i| sparsest_well_spaced(i) as usize).collect());
        assert!(is_legal(&s));
        // t-values 2,5,10,20,40 cover every p in 5..=79.
        assert!((5..80).all(|p| is_s_good(p, &s)));
        assert!(!is_s_good(80, &s));
    }

    #[test]
    fn triangular_fibonacci() {
        let s = set(&[1, 3, 21, 55]);
        assert!(is_legal(&s));
        assert!(is_s_good(5, &s));
        assert!(!is_s_good(6, &s));
        assert!((7..=13).all(|p| is_s_good(p, &s)));
        assert!((11..=21).all(|p| is_s_good(p, &s)));
        assert!(!is_s_good(22, &s));
    }

    #[test]
    fn legality() {
        assert!(!is_legal(&set(&[2, 3])));
        assert!(!is_legal(&set(&[1, 2])));
        assert!(is_legal(&EdgeCountSequence::Squares));
    }

    #[test]
    fn squares_up_to_66() {
        let sq: Vec<usize> = (1..=66).filter(|&e| EdgeCountSequence::Squares.contains(e)).collect();
        assert_eq!(sq, vec![1, 4, 9, 16, 25, 36, 49, 64]);
        assert_eq!(EdgeCountSequence::Squares.first_terms(4), vec![1, 4, 9, 16]);
    }

    #[test]
    fn mod_terms() {
        let s = EdgeCountSequence::Mod { residue: 1, modulus: 3 };
        assert_eq!(s.first_terms(4), vec![1, 4, 7, 10]);
    }
}
