//! Branch and bound over colorings of `K_n` in restricted-growth form.
//!
//! Edges are coloured in colex order `(0,1), (0,2), (1,2), (0,3), …`, so
//! the edges inside a `q`-set `S` are complete as soon as the edge between
//! its two largest vertices is coloured. Each `q`-set is tested exactly
//! once, at that edge, against a verdict cached per local colour pattern.
//!
//! The search maximises the colour count over colorings in which every
//! tested `q`-set is acceptable: in [`Mode::AvoidWitness`] no copy of `G`
//! may have all classes in `F`; in [`Mode::Pierce`] every copy must have a
//! class in `F`.

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicU8, AtomicUsize, Ordering};
use std::sync::RwLock;
use std::time::Instant;

use rayon::prelude::*;

use crate::coloring::{lex_edges, EdgeColoring};
use crate::family::GraphFamily;
use crate::graph::{binomial, bits, subsets_of_size, Graph};

use super::copies::local_copy_masks;
use super::Budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Mode {
    AvoidWitness,
    Pierce,
}

pub(crate) struct Outcome {
    /// Largest colour count found; 0 if no acceptable coloring was seen.
    pub best: usize,
    pub coloring: Option<EdgeColoring>,
    pub complete: bool,
    pub nodes: u64,
}

/// Verdicts per local colour pattern of a `q`-set, keyed by its
/// restricted-growth string.
enum Verdicts {
    /// Index `Σ d_i L^i`; 0 unknown, 1 rejected, 2 accepted.
    Dense(Vec<AtomicU8>),
    Sparse(RwLock<HashMap<u128, bool>>),
}

struct Tables<'a> {
    m: usize,
    /// Local edge count `C(q,2)`.
    l: usize,
    masks: Vec<u64>,
    family: &'a GraphFamily,
    target_order: usize,
    mode: Mode,
    /// For colex position `t`, the `q`-sets completed there, each as the
    /// colex positions of its local edges in local lexicographic order,
    /// `l` entries per set.
    completes: Vec<Vec<u8>>,
    verdicts: Verdicts,
}

impl<'a> Tables<'a> {
    fn new(n: usize, target: &Graph, family: &'a GraphFamily, mode: Mode) -> Self {
        let q = target.order();
        let l = binomial(q, 2);
        let colex: Vec<(usize, usize)> = colex_edges(n);
        let mut pos = vec![vec![0u8; n]; n];
        for (t, &(i, j)) in colex.iter().enumerate() {
            pos[i][j] = t as u8;
            pos[j][i] = t as u8;
        }
        let local = lex_edges(q);
        let mut completes = vec![Vec::new(); colex.len()];
        for (t, &(a, b)) in colex.iter().enumerate() {
            if q < 2 {
                break;
            }
            for rest in subsets_of_size(a, q - 2) {
                let verts: Vec<usize> = bits(rest).chain([a, b]).collect();
                for &(x, y) in &local {
                    completes[t].push(pos[verts[x]][verts[y]]);
                }
            }
        }
        let dense_size = (l as u64).checked_pow(l as u32).filter(|&s| s <= 1 << 22);
        let verdicts = match dense_size {
            Some(s) => Verdicts::Dense((0..s).map(|_| AtomicU8::new(0)).collect()),
            None => Verdicts::Sparse(RwLock::new(HashMap::new())),
        };
        Tables {
            m: colex.len(),
            l,
            masks: local_copy_masks(target),
            family,
            target_order: q,
            mode,
            completes,
            verdicts,
        }
    }

    /// Whether the local pattern `rg` (restricted-growth, length `l`) is
    /// acceptable.
    fn evaluate(&self, rg: &[u8]) -> bool {
        let q = self.target_order;
        let local = lex_edges(q);
        let copy_ok = |mask: u64| -> bool {
            let colors = rg.iter().enumerate().filter(|&(k, _)| mask >> k & 1 == 1).map(|(_, &c)| c);
            let top = colors.clone().max().map_or(0, |c| c as usize + 1);
            let mut any_member = false;
            let mut all_member = true;
            for col in 0..top {
                let mut g = Graph::empty(q);
                for (k, &(u, v)) in local.iter().enumerate() {
                    if mask >> k & 1 == 1 && rg[k] == col as u8 {
                        g.add_edge(u, v);
                    }
                }
                if g.edge_count() == 0 {
                    continue;
                }
                if self.family.member(&g) {
                    any_member = true;
                } else {
                    all_member = false;
                }
            }
            match self.mode {
                Mode::AvoidWitness => !all_member,
                Mode::Pierce => any_member,
            }
        };
        self.masks.iter().all(|&mask| copy_ok(mask))
    }

    fn accepts(&self, rg: &[u8]) -> bool {
        match &self.verdicts {
            Verdicts::Dense(table) => {
                let idx = rg.iter().rev().fold(0usize, |acc, &d| acc * self.l + d as usize);
                match table[idx].load(Ordering::Relaxed) {
                    1 => false,
                    2 => true,
                    _ => {
                        let ok = self.evaluate(rg);
                        table[idx].store(if ok { 2 } else { 1 }, Ordering::Relaxed);
                        ok
                    }
                }
            }
            Verdicts::Sparse(map) => {
                let key = rg.iter().rev().fold(0u128, |acc, &d| acc << 5 | d as u128);
                if let Some(&ok) = map.read().expect("verdict cache poisoned").get(&key) {
                    return ok;
                }
                let ok = self.evaluate(rg);
                map.write().expect("verdict cache poisoned").insert(key, ok);
                ok
            }
        }
    }

    /// Checks every `q`-set completed by colouring position `t`.
    #[inline]
    fn check(&self, colors: &[u8], t: usize) -> bool {
        let sets = &self.completes[t];
        if sets.is_empty() {
            return true;
        }
        let mut rg = [0u8; 28];
        let mut seen = [0u8; 28];
        for set in sets.chunks_exact(self.l) {
            let mut k = 0usize;
            for (slot, &p) in set.iter().enumerate() {
                let c = colors[p as usize];
                let id = match seen[..k].iter().position(|&s| s == c) {
                    Some(i) => i,
                    None => {
                        seen[k] = c;
                        k += 1;
                        k - 1
                    }
                };
                rg[slot] = id as u8;
            }
            if !self.accepts(&rg[..self.l]) {
                return false;
            }
        }
        true
    }
}

/// Edges of `K_n` in colex order.
pub(crate) fn colex_edges(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

struct Shared {
    best: AtomicUsize,
    nodes: AtomicU64,
    abort: AtomicBool,
    max_nodes: u64,
    deadline: Option<Instant>,
}

impl Shared {
    fn charge(&self, nodes: u64) -> bool {
        let total = self.nodes.fetch_add(nodes, Ordering::Relaxed) + nodes;
        if total > self.max_nodes || self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.abort.store(true, Ordering::Relaxed);
        }
        !self.abort.load(Ordering::Relaxed)
    }
}

const CHARGE_EVERY: u64 = 1 << 12;

struct Worker<'a> {
    t: &'a Tables<'a>,
    shared: &'a Shared,
    colors: Vec<u8>,
    best: usize,
    best_colors: Option<Vec<u8>>,
    pending: u64,
    nodes: u64,
    aborted: bool,
}

impl Worker<'_> {
    fn dfs(&mut self, pos: usize, used: usize) {
        if pos == self.t.m {
            if used > self.best {
                self.best = used;
                self.best_colors = Some(self.colors.clone());
                self.shared.best.fetch_max(used, Ordering::Relaxed);
            }
            return;
        }
        let remaining = self.t.m - pos - 1;
        let global = self.shared.best.load(Ordering::Relaxed);
        // New colour first: it carries the larger bound.
        for c in (0..=used).rev() {
            let after = used + usize::from(c == used);
            let bound = after + remaining;
            // Ties with the global best are kept so that the reported
            // coloring does not depend on scheduling.
            if bound <= self.best || bound < global {
                if c == used {
                    continue;
                }
                break;
            }
            self.pending += 1;
            if self.pending >= CHARGE_EVERY {
                self.nodes += self.pending;
                if !self.shared.charge(std::mem::take(&mut self.pending)) {
                    self.aborted = true;
                }
            }
            if self.aborted {
                return;
            }
            self.colors[pos] = c as u8;
            if self.t.check(&self.colors, pos) {
                self.dfs(pos + 1, after);
                if self.aborted {
                    return;
                }
            }
        }
    }
}

/// Valid prefixes of length `depth` in DFS order (new colour first).
fn prefixes(t: &Tables, depth: usize) -> Vec<(Vec<u8>, usize)> {
    fn rec(t: &Tables, colors: &mut Vec<u8>, used: usize, depth: usize, out: &mut Vec<(Vec<u8>, usize)>) {
        let pos = colors.len();
        if pos == depth {
            out.push((colors.clone(), used));
            return;
        }
        for c in (0..=used).rev() {
            colors.push(c as u8);
            let mut padded = colors.clone();
            padded.resize(t.m, 0);
            if t.check(&padded, pos) {
                rec(t, colors, used + usize::from(c == used), depth, out);
            }
            colors.pop();
        }
    }
    let mut out = Vec::new();
    rec(t, &mut Vec::new(), 0, depth, &mut out);
    out
}

/// Maximum colour count over acceptable colorings of `K_n`.
///
/// `target` must be isolate-free with `2 <= |target| <= n`.
pub(crate) fn maximize(n: usize, target: &Graph, family: &GraphFamily, mode: Mode, budget: &Budget) -> Outcome {
    let tables = Tables::new(n, target, family, mode);
    let shared = Shared {
        best: AtomicUsize::new(0),
        nodes: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        max_nodes: budget.max_nodes,
        deadline: budget.max_time.map(|d| Instant::now() + d),
    };
    let depth = tables.m.min(budget.split_depth.unwrap_or(6));
    let starts = prefixes(&tables, depth);

    let run = |(prefix, used): &(Vec<u8>, usize)| {
        let mut colors = prefix.clone();
        colors.resize(tables.m, 0);
        let mut w = Worker {
            t: &tables,
            shared: &shared,
            colors,
            best: 0,
            best_colors: None,
            pending: 0,
            nodes: 0,
            aborted: false,
        };
        w.dfs(depth, *used);
        w.nodes += w.pending;
        shared.nodes.fetch_add(w.pending, Ordering::Relaxed);
        (w.best, w.best_colors, w.nodes)
    };
    let results: Vec<_> = match budget.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(|| starts.par_iter().map(run).collect()),
        None => starts.par_iter().map(run).collect(),
    };

    let mut best = 0;
    let mut best_colors = None;
    let mut nodes = starts.len() as u64;
    for (value, colors, k) in results {
        nodes += k;
        if value > best {
            best = value;
            best_colors = colors;
        }
    }
    let coloring = best_colors.map(|colex| {
        let colex_pos: HashMap<(usize, usize), usize> =
            colex_edges(n).into_iter().enumerate().map(|(t, e)| (e, t)).collect();
        EdgeColoring::from_fn(n, |i, j| colex[colex_pos[&(i, j)]]).expect("valid order")
    });
    debug_assert!(coloring.as_ref().is_none_or(|c| c.color_count() == best));
    Outcome { best, coloring, complete: !shared.abort.load(Ordering::Relaxed), nodes }
}
