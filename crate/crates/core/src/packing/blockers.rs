use std::collections::HashMap;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::overlap_at_least;
use crate::error::{Error, Result};
use crate::graph::{all_graphs, canonical_code, Graph};

/// A `(G,p)`-blocker meets every placement of `G` in at least two edges, an
/// anti-packer in at least one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Obstruction {
    Blocker,
    AntiPacker,
}

impl Obstruction {
    fn threshold(self) -> usize {
        match self {
            Obstruction::Blocker => 2,
            Obstruction::AntiPacker => 1,
        }
    }

    pub fn holds(self, h: &Graph, g: &Graph, p: usize) -> Result<bool> {
        overlap_at_least(h, g, p, self.threshold())
    }

    /// The property holds for `h` but for no one-edge-deleted subgraph.
    /// Overlap can only drop when an edge is deleted, so this is
    /// equivalent to minimality over all subgraphs.
    pub fn holds_minimally(self, h: &Graph, g: &Graph, p: usize) -> Result<bool> {
        if !self.holds(h, g, p)? {
            return Ok(false);
        }
        for (u, v) in h.edges() {
            let mut smaller = h.clone();
            smaller.remove_edge(u, v);
            if self.holds(&smaller, g, p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

pub fn is_blocker(h: &Graph, g: &Graph, p: usize) -> Result<bool> {
    Obstruction::Blocker.holds(h, g, p)
}

pub fn is_anti_packer(h: &Graph, g: &Graph, p: usize) -> Result<bool> {
    Obstruction::AntiPacker.holds(h, g, p)
}

pub fn is_minimal_blocker(h: &Graph, g: &Graph, p: usize) -> Result<bool> {
    Obstruction::Blocker.holds_minimally(h, g, p)
}

pub fn is_minimal_anti_packer(h: &Graph, g: &Graph, p: usize) -> Result<bool> {
    Obstruction::AntiPacker.holds_minimally(h, g, p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalFamily {
    /// Isolate-free representatives, by edge count then canonical code.
    pub graphs: Vec<Graph>,
    /// False if the deadline cut the enumeration short.
    pub complete: bool,
}

/// Largest host order accepted by [`enumerate_minimal`].
pub const ENUMERATE_MAX_P: usize = 7;

/// All minimal `(G,p)`-blockers or anti-packers with at most `max_edges`
/// edges, up to isomorphism.
pub fn enumerate_minimal(
    kind: Obstruction,
    g: &Graph,
    p: usize,
    max_edges: usize,
    deadline: Option<Instant>,
) -> Result<MinimalFamily> {
    if p > ENUMERATE_MAX_P {
        return Err(Error::TooLarge(format!("enumeration supports p <= {ENUMERATE_MAX_P}, got {p}")));
    }
    if g.order() > p {
        return Err(Error::Invalid(format!("G has {} vertices, more than p = {p}", g.order())));
    }
    let mut candidates: Vec<Graph> =
        all_graphs(p).pop().unwrap_or_default().into_iter().filter(|h| h.edge_count() <= max_edges).collect();
    candidates.sort_by_key(Graph::edge_count);

    // Property value per canonical code. Every one-edge deletion of a
    // candidate is itself a candidate with fewer edges, so it is already
    // known when needed.
    let mut holds: HashMap<_, bool> = HashMap::new();
    let mut graphs = Vec::new();
    for h in candidates {
        if deadline.is_some_and(|d| Instant::now() >= d) {
            return Ok(MinimalFamily { graphs, complete: false });
        }
        let has = h.edge_count() > 0 && kind.holds(&h, g, p)?;
        let minimal = has
            && h.edges().all(|(u, v)| {
                let mut smaller = h.clone();
                smaller.remove_edge(u, v);
                !holds[&canonical_code(&smaller)]
            });
        holds.insert(canonical_code(&h), has);
        if minimal {
            graphs.push(h.without_isolates());
        }
    }
    Ok(MinimalFamily { graphs, complete: true })
}
