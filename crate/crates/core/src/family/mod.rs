//! Graph families as membership predicates over isolate-free graphs.
//!
//! Expression grammar (see [`parse_family`]):
//!
//! ```text
//! union := term ('+' term)*
//! term  := 'co:' term | '(' union ')' | atom
//! atom  := all | k2 | is:<G> | up:<G> | not:<G> | free:<G>
//!        | matchings | matchings<=r | regular | maxdeg<=d | order<=k
//!        | connected | disconnected
//!        | edges:squares | edges:mod,<r>,<k> | edges:set,{a,b,...}
//! ```
//!
//! `<G>` is a graph spec as accepted by [`crate::graph::parse_graph`]. A `+`
//! followed by a family keyword starts a new union term; any other `+`
//! belongs to the graph spec (`up:K3+K2` is the family of graphs containing
//! a triangle plus a disjoint edge). `co:` binds tighter than `+`.

mod parse;
mod sequence;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{are_isomorphic, contains_subgraph, Graph};

pub use parse::parse_family;
pub use sequence::{is_legal, is_s_good, sparsest_well_spaced, EdgeCountSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyFlags {
    pub contains_k2: bool,
    /// Closed under taking (isolate-free, nonempty) subgraphs. `None` if not
    /// declared.
    pub hereditary: Option<bool>,
    pub upward_closed: Option<bool>,
}

#[derive(Clone, Debug)]
pub(crate) enum FamilyExpr {
    All,
    /// Exactly the graphs isomorphic to this one.
    Is(Graph),
    /// Graphs containing this one as a subgraph.
    Up(Graph),
    /// Everything except graphs isomorphic to this one.
    Not(Graph),
    /// Graphs not containing this one.
    Free(Graph),
    Matchings(Option<usize>),
    Regular,
    MaxDeg(usize),
    OrderAtMost(usize),
    Connected,
    Disconnected,
    Edges(EdgeCountSequence),
    Union(Vec<FamilyExpr>),
    Complement(Box<FamilyExpr>),
}

impl FamilyExpr {
    fn eval(&self, g: &Graph) -> bool {
        use FamilyExpr::*;
        match self {
            All => true,
            Is(h) => are_isomorphic(g, h),
            Up(h) => contains_subgraph(g, h).is_some(),
            Not(h) => !are_isomorphic(g, h),
            Free(h) => contains_subgraph(g, h).is_none(),
            Matchings(limit) => g.max_degree() <= 1 && limit.is_none_or(|r| g.edge_count() <= r),
            Regular => g.min_degree() == g.max_degree(),
            MaxDeg(d) => g.max_degree() <= *d,
            OrderAtMost(k) => g.order() <= *k,
            Connected => g.is_connected(),
            Disconnected => !g.is_connected(),
            Edges(seq) => seq.contains(g.edge_count()),
            Union(parts) => parts.iter().any(|p| p.eval(g)),
            Complement(inner) => !inner.eval(g),
        }
    }

    /// Declared (hereditary, upward_closed).
    fn closure_flags(&self) -> (Option<bool>, Option<bool>) {
        use FamilyExpr::*;
        let single_edge = |h: &Graph| h.edge_count() == 1;
        match self {
            All => (Some(true), Some(true)),
            Is(h) => (Some(single_edge(h)), Some(false)),
            Up(h) => (Some(single_edge(h)), Some(true)),
            Not(h) => (Some(false), Some(single_edge(h))),
            // free:K2 is the empty family, vacuously closed both ways.
            Free(h) => (Some(true), Some(single_edge(h))),
            Matchings(_) | MaxDeg(_) | OrderAtMost(_) => (Some(true), Some(false)),
            Regular | Connected | Disconnected => (Some(false), Some(false)),
            Edges(_) => (None, None),
            Union(parts) => {
                let flags: Vec<_> = parts.iter().map(FamilyExpr::closure_flags).collect();
                let all_true = |sel: fn(&(Option<bool>, Option<bool>)) -> Option<bool>| {
                    flags.iter().all(|f| sel(f) == Some(true)).then_some(true)
                };
                (all_true(|f| f.0), all_true(|f| f.1))
            }
            // The complement of a down-set is an up-set and vice versa.
            Complement(inner) => {
                let (h, u) = inner.closure_flags();
                (u, h)
            }
        }
    }
}

/// A family of graphs with a display name and declared closure flags.
#[derive(Clone)]
pub struct GraphFamily {
    expr: FamilyExpr,
    name: String,
    flags: FamilyFlags,
}

impl GraphFamily {
    pub(crate) fn new(expr: FamilyExpr, name: String) -> Self {
        let (hereditary, upward_closed) = expr.closure_flags();
        let contains_k2 = expr.eval(&Graph::complete(2));
        GraphFamily { expr, name, flags: FamilyFlags { contains_k2, hereditary, upward_closed } }
    }

    /// Membership of the isolate-free form of `g`. Edgeless graphs are never
    /// members: they are not in the universe of isolate-free nonempty graphs.
    pub fn member(&self, g: &Graph) -> bool {
        let h = if g.has_isolates() { g.without_isolates() } else { g.clone() };
        h.edge_count() > 0 && self.expr.eval(&h)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn flags(&self) -> FamilyFlags {
        self.flags
    }

    pub fn contains_k2(&self) -> bool {
        self.flags.contains_k2
    }

    /// `𝔉 ∖ F`, the complement within isolate-free nonempty graphs.
    pub fn complement(&self) -> GraphFamily {
        let expr = match &self.expr {
            FamilyExpr::Complement(inner) => (**inner).clone(),
            e => FamilyExpr::Complement(Box::new(e.clone())),
        };
        let name = match &self.expr {
            FamilyExpr::Complement(_) => {
                let rest = self.name.strip_prefix("co:").unwrap_or(&self.name);
                rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).unwrap_or(rest).to_string()
            }
            FamilyExpr::Union(_) => format!("co:({})", self.name),
            _ => format!("co:{}", self.name),
        };
        GraphFamily::new(expr, name)
    }

    /// JSON echo of the family used in every result.
    pub fn describe(&self) -> FamilyInfo {
        FamilyInfo { name: self.name.clone(), flags: self.flags }
    }
}

pub fn complement_family(f: &GraphFamily) -> GraphFamily {
    f.complement()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyInfo {
    pub name: String,
    #[serde(flatten)]
    pub flags: FamilyFlags,
}

impl fmt::Debug for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GraphFamily").field("name", &self.name).field("flags", &self.flags).finish()
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}
