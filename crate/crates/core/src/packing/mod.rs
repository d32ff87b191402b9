//! Packings of two graphs in `K_p`, minimum edge overlap, and
//! blockers / anti-packers.
//!
//! Both graphs are padded with isolates to `p` vertices. One is held fixed
//! at the identity placement and the other is permuted by a depth-first
//! search that tracks the overlap incrementally. Vertices of the permuted
//! graph that are twins (equal open or equal closed neighbourhoods) are
//! interchangeable, so their images are forced to increase.

mod blockers;
mod bollobas_eldridge;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bits, Graph, VertexSet, MAX_ORDER};

pub use blockers::{
    enumerate_minimal, is_anti_packer, is_blocker, is_minimal_anti_packer, is_minimal_blocker, MinimalFamily,
    Obstruction,
};
pub use bollobas_eldridge::{be_exception_pairs, be_packable, BeVerdict};

/// Estimated placements above which a search is refused.
pub const PLACEMENT_LIMIT: f64 = 4.0e8;

/// Two vertex injections into `0..p` with disjoint edge images.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PackingWitness {
    pub p: usize,
    pub first: Vec<usize>,
    pub second: Vec<usize>,
}

impl PackingWitness {
    /// Checks injectivity, range and edge-disjointness.
    pub fn verify(&self, g1: &Graph, g2: &Graph) -> bool {
        overlap_of(g1, &self.first, g2, &self.second, self.p) == Some(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OverlapReport {
    pub p: usize,
    pub min_overlap: usize,
    /// Placement of `H`: vertex `v` of `H` goes to `h_placement[v]`.
    pub h_placement: Vec<usize>,
    pub g_placement: Vec<usize>,
    /// Host edges used by both placements.
    pub shared_edges: Vec<(usize, usize)>,
}

/// Number of edges shared by the images of `a` and `b`, or `None` if a
/// placement is not an injection into `0..p`.
pub fn overlap_of(a: &Graph, pa: &[usize], b: &Graph, pb: &[usize], p: usize) -> Option<usize> {
    let shared = shared_edges(a, pa, b, pb, p)?;
    Some(shared.len())
}

fn shared_edges(a: &Graph, pa: &[usize], b: &Graph, pb: &[usize], p: usize) -> Option<Vec<(usize, usize)>> {
    let injective = |g: &Graph, pl: &[usize]| {
        pl.len() == g.order() && pl.iter().all(|&x| x < p) && {
            let mut seen = 0u32;
            pl.iter().all(|&x| {
                let fresh = seen >> x & 1 == 0;
                seen |= 1 << x;
                fresh
            })
        }
    };
    if !injective(a, pa) || !injective(b, pb) {
        return None;
    }
    let mut image = Graph::empty(p);
    for (u, v) in a.edges() {
        image.add_edge(pa[u], pa[v]);
    }
    let mut shared: Vec<(usize, usize)> =
        b.edges().map(|(u, v)| (pb[u].min(pb[v]), pb[u].max(pb[v]))).filter(|&(x, y)| image.has_edge(x, y)).collect();
    shared.sort_unstable();
    Some(shared)
}

/// Twin classes: vertices with equal open neighbourhoods, or equal closed
/// neighbourhoods. A vertex cannot have a nontrivial class of both kinds,
/// so the two relations together partition the vertex set.
pub(crate) fn twin_classes(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut class = vec![0 as VertexSet; n];
    for u in 0..n {
        for v in 0..n {
            let open = g.neighbors(u) == g.neighbors(v);
            let closed = g.neighbors(u) | 1 << u == g.neighbors(v) | 1 << v;
            if u == v || open || closed {
                class[u] |= 1 << v;
            }
        }
    }
    class
}

/// `p! / ∏ |class|!` over twin classes: the number of placements the
/// search enumerates without pruning.
fn placement_estimate(g: &Graph) -> f64 {
    let fact = |k: usize| (1..=k).map(|x| x as f64).product::<f64>();
    let mut seen: VertexSet = 0;
    let mut est = fact(g.order());
    for c in twin_classes(g) {
        if seen & c == 0 {
            est /= fact(c.count_ones() as usize);
            seen |= c;
        }
    }
    est
}

struct Search<'a> {
    fixed: &'a Graph,
    moving: &'a Graph,
    order: Vec<usize>,
    twins: Vec<VertexSet>,
    img: Vec<usize>,
    best: usize,
    best_img: Vec<usize>,
    stop_at: usize,
}

impl Search<'_> {
    fn dfs(&mut self, depth: usize, used: VertexSet, assigned: VertexSet, cur: usize) {
        if self.best <= self.stop_at {
            return;
        }
        if depth == self.order.len() {
            self.best = cur;
            self.best_img.clone_from(&self.img);
            return;
        }
        let v = self.order[depth];
        let p = self.fixed.order();
        let mut placed_nbrs: VertexSet = 0;
        for w in bits(self.moving.neighbors(v) & assigned) {
            placed_nbrs |= 1 << self.img[w];
        }
        let twins = self.twins[v] & assigned;
        let (mut lo, mut hi) = (0usize, p);
        for u in bits(twins) {
            if u < v {
                lo = lo.max(self.img[u] + 1);
            } else {
                hi = hi.min(self.img[u]);
            }
        }
        for pos in lo..hi {
            if used >> pos & 1 == 1 {
                continue;
            }
            let add = (self.fixed.neighbors(pos) & placed_nbrs).count_ones() as usize;
            if cur + add >= self.best {
                continue;
            }
            self.img[v] = pos;
            self.dfs(depth + 1, used | 1 << pos, assigned | 1 << v, cur + add);
            if self.best <= self.stop_at {
                return;
            }
        }
    }
}

/// Minimum overlap of `a` and `b` (both of order `p`), stopping early once
/// an overlap `<= stop_at` is found. Returns the overlap and placements of
/// `a` and `b`.
fn search_overlap(a: &Graph, b: &Graph, stop_at: usize) -> Result<(usize, Vec<usize>, Vec<usize>)> {
    let (ea, eb) = (placement_estimate(a), placement_estimate(b));
    let swap = ea < eb;
    let (fixed, moving) = if swap { (b, a) } else { (a, b) };
    let est = ea.min(eb);
    if est > PLACEMENT_LIMIT {
        return Err(Error::TooLarge(format!("about {est:.0} placements to examine")));
    }
    let p = fixed.order();
    // Greedy order: most already-placed neighbours, then highest degree.
    let mut placed = 0 as VertexSet;
    let mut dfs_order = Vec::with_capacity(p);
    while dfs_order.len() < p {
        let next = (0..p)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((moving.neighbors(v) & placed).count_ones(), moving.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed |= 1 << next;
        dfs_order.push(next);
    }
    let mut s = Search {
        fixed,
        moving,
        order: dfs_order,
        twins: twin_classes(moving),
        img: vec![0; p],
        best: usize::MAX,
        best_img: Vec::new(),
        stop_at,
    };
    s.dfs(0, 0, 0, 0);
    let identity: Vec<usize> = (0..p).collect();
    let (best, img) = (s.best, s.best_img);
    Ok(if swap { (best, img, identity) } else { (best, identity, img) })
}

fn padded_pair(a: &Graph, b: &Graph, p: usize) -> Result<(Graph, Graph)> {
    if p > MAX_ORDER {
        return Err(Error::OrderOverflow { order: p, max: MAX_ORDER });
    }
    if a.order() > p || b.order() > p {
        return Err(Error::Invalid(format!("graphs of order {} and {} do not fit in K{p}", a.order(), b.order())));
    }
    Ok((a.padded(p)?, b.padded(p)?))
}

/// An edge-disjoint placement of `g1` and `g2` in `K_p`, if one exists.
pub fn pack(g1: &Graph, g2: &Graph, p: usize) -> Result<Option<PackingWitness>> {
    let (a, b) = padded_pair(g1, g2, p)?;
    let (best, pa, pb) = search_overlap(&a, &b, 0)?;
    Ok((best == 0).then(|| PackingWitness { p, first: pa[..g1.order()].to_vec(), second: pb[..g2.order()].to_vec() }))
}

/// Exact minimum of `|E(H') ∩ E(G')|` over placements of `H` and `G` in
/// `K_p`, with a witness.
pub fn min_overlap(h: &Graph, g: &Graph, p: usize) -> Result<OverlapReport> {
    let (a, b) = padded_pair(h, g, p)?;
    let (best, pa, pb) = search_overlap(&a, &b, 0)?;
    let h_placement = pa[..h.order()].to_vec();
    let g_placement = pb[..g.order()].to_vec();
    let shared = shared_edges(h, &h_placement, g, &g_placement, p).expect("search yields injections");
    debug_assert_eq!(shared.len(), best);
    Ok(OverlapReport { p, min_overlap: best, h_placement, g_placement, shared_edges: shared })
}

/// Whether every placement overlaps in at least `k` edges.
pub(crate) fn overlap_at_least(h: &Graph, g: &Graph, p: usize, k: usize) -> Result<bool> {
    if k == 0 {
        return Ok(true);
    }
    let (a, b) = padded_pair(h, g, p)?;
    let (best, _, _) = search_overlap(&a, &b, k - 1)?;
    Ok(best >= k)
}
