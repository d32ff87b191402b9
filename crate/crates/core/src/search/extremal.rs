//! Turán numbers `ex(n, F)` by isomorph-free vertex augmentation.
//!
//! If `H` is extremal on `n` vertices with `E >= ex(n-1)` edges, deleting a
//! vertex of minimum degree leaves at least `E·C(n-1,2)/C(n,2)` edges.
//! Repeating gives a chain `H_2 ⊂ … ⊂ H_n` of `F`-free graphs in which
//! `H_k` has at least `ex(n-1)·C(k,2)/C(n,2)` edges, so only graphs above
//! that threshold need to be extended.

use std::cell::Cell;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::graph::{augment_levels, binomial, contains_subgraph, Graph};

use super::{Budget, Certificate, Problem, SearchResult, Stats, Status};

/// Largest `n` accepted by [`ex_exact`].
pub const EX_MAX_ORDER: usize = 10;

struct Limits {
    nodes: Cell<u64>,
    max_nodes: u64,
    deadline: Option<Instant>,
    exhausted: Cell<bool>,
}

impl Limits {
    fn tick(&self) -> bool {
        self.nodes.set(self.nodes.get() + 1);
        if self.nodes.get() > self.max_nodes || self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.exhausted.set(true);
        }
        !self.exhausted.get()
    }
}

fn free_of(g: &Graph, forbidden: &[Graph]) -> bool {
    forbidden.iter().all(|f| contains_subgraph(g, f).is_none())
}

/// An extremal graph on `n` vertices, or the best found before the limits
/// ran out.
fn extremal(n: usize, forbidden: &[Graph], limits: &Limits) -> Graph {
    if n <= 1 {
        return Graph::empty(n);
    }
    let previous = extremal(n - 1, forbidden, limits).padded(n).expect("n <= MAX_ORDER");
    if limits.exhausted.get() {
        return previous;
    }
    let lower = previous.edge_count();
    let total = binomial(n, 2);
    let threshold = |k: usize| (lower * binomial(k, 2)).div_ceil(total);
    let levels =
        augment_levels(n, |h| limits.tick() && h.edge_count() >= threshold(h.order()) && free_of(h, forbidden));
    if limits.exhausted.get() {
        return previous;
    }
    levels[n].iter().max_by_key(|g| g.edge_count()).cloned().unwrap_or(previous)
}

/// `ex(n, F)` for a finite list of forbidden graphs (isolates ignored).
pub fn ex_exact(n: usize, forbidden: &[Graph], budget: &Budget) -> Result<SearchResult> {
    if n > EX_MAX_ORDER {
        return Err(Error::TooLarge(format!("ex search supports n <= {EX_MAX_ORDER}, got {n}")));
    }
    let cores: Vec<Graph> = forbidden.iter().map(Graph::without_isolates).collect();
    if cores.is_empty() || cores.iter().any(|f| f.edge_count() == 0) {
        return Err(Error::Invalid("forbidden graphs must be nonempty and have edges".into()));
    }
    let start = Instant::now();
    let limits = Limits {
        nodes: Cell::new(0),
        max_nodes: budget.max_nodes,
        deadline: budget.max_time.map(|d| start + d),
        exhausted: Cell::new(false),
    };
    let graph = extremal(n, &cores, &limits);
    Ok(SearchResult {
        problem: Problem::Ex,
        n,
        target: None,
        family: None,
        forbidden: forbidden.to_vec(),
        value: graph.edge_count(),
        status: if limits.exhausted.get() { Status::LowerBound } else { Status::Exact },
        certificate: Certificate::Graph { graph },
        stats: Stats { nodes: limits.nodes.get(), millis: start.elapsed().as_millis() as u64 },
    })
}
