//! Decision procedures and exact computation of `f`, `g`, `Ar`, `Lr` and
//! `ex` for small `n`.
//!
//! `f(n,G|F)` is computed as one more than the largest colour count of a
//! coloring with no `F`-witness copy of `G`. This is sound for every family:
//! if `M` is that largest count, every coloring with more than `M` colours
//! has a witness by definition of `M`, and the extremal `M`-coloring shows
//! that `M` colours do not force one. `g(n,G|F)` is the largest colour
//! count of a coloring in which every copy is pierced, or `0`.

mod copies;
mod decide;
mod engine;
mod extremal;

use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::error::{Error, Result};
use crate::family::{parse_family, FamilyInfo, GraphFamily};
use crate::graph::{Graph, MAX_ORDER};

pub use copies::MAX_TARGET_ORDER;
pub use decide::{holds_f_witness, pierces_all, unpierced_copy, ClassInfo, CopyWitness};
pub use extremal::ex_exact;

use engine::{maximize, Mode};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Problem {
    F,
    G,
    Ar,
    Lr,
    Ex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Exact,
    LowerBound,
    UpperBound,
    /// An `f` search that ran out of budget: the value is only the best
    /// candidate seen and carries no claim.
    Timeout,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    None,
    /// For `f`: a coloring with `value − 1` colours and no witness. For
    /// `g`: a piercing coloring with `value` colours.
    Coloring {
        coloring: EdgeColoring,
    },
    /// For `ex`: an extremal graph.
    Graph {
        graph: Graph,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub nodes: u64,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub problem: Problem,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub target: Option<Graph>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub family: Option<FamilyInfo>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub forbidden: Vec<Graph>,
    pub value: usize,
    pub status: Status,
    pub certificate: Certificate,
    pub stats: Stats,
}

impl SearchResult {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }
}

/// Search limits. Results are independent of `jobs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Depth at which the search tree is split into parallel tasks.
    pub split_depth: Option<usize>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: 100_000_000, max_time: Some(Duration::from_secs(600)), jobs: None, split_depth: None }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget { max_nodes: u64::MAX, max_time: None, jobs: None, split_depth: None }
    }

    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }
}

fn validate_target(n: usize, target: &Graph) -> Result<Graph> {
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n, max: MAX_ORDER });
    }
    let core = target.without_isolates();
    if core.edge_count() == 0 {
        return Err(Error::Invalid("target graph has no edges".into()));
    }
    if target.order() > n {
        return Err(Error::Invalid(format!("target has {} vertices, more than n = {n}", target.order())));
    }
    if core.order() > MAX_TARGET_ORDER {
        return Err(Error::TooLarge(format!(
            "target has {} non-isolated vertices; at most {MAX_TARGET_ORDER} supported",
            core.order()
        )));
    }
    Ok(core)
}

fn coloring_certificate(c: Option<EdgeColoring>) -> Certificate {
    c.map_or(Certificate::None, |coloring| Certificate::Coloring { coloring })
}

fn run_f(problem: Problem, n: usize, target: &Graph, family: &GraphFamily, budget: &Budget) -> Result<SearchResult> {
    if !family.contains_k2() {
        return Err(Error::FamilyLacksK2(family.name().to_string()));
    }
    let core = validate_target(n, target)?;
    let start = Instant::now();
    let out = maximize(n, &core, family, Mode::AvoidWitness, budget);
    Ok(SearchResult {
        problem,
        n,
        target: Some(target.clone()),
        family: Some(family.describe()),
        forbidden: Vec::new(),
        value: out.best + 1,
        status: if out.complete { Status::Exact } else { Status::Timeout },
        certificate: coloring_certificate(out.coloring),
        stats: Stats { nodes: out.nodes, millis: start.elapsed().as_millis() as u64 },
    })
}

/// `f(n, G | F)`: the least colour count forcing a copy of `G` with all
/// classes in `F`.
pub fn f_exact(n: usize, target: &Graph, family: &GraphFamily, budget: &Budget) -> Result<SearchResult> {
    run_f(Problem::F, n, target, family, budget)
}

/// `g(n, G | F)`: the largest colour count of a coloring in which every
/// copy of `G` has a class in `F`; `0` if even one colour fails.
pub fn g_exact(n: usize, target: &Graph, family: &GraphFamily, budget: &Budget) -> Result<SearchResult> {
    if family.contains_k2() {
        return Err(Error::FamilyContainsK2(family.name().to_string()));
    }
    let core = validate_target(n, target)?;
    let start = Instant::now();
    let out = maximize(n, &core, family, Mode::Pierce, budget);
    Ok(SearchResult {
        problem: Problem::G,
        n,
        target: Some(target.clone()),
        family: Some(family.describe()),
        forbidden: Vec::new(),
        value: out.best,
        status: if out.complete { Status::Exact } else { Status::LowerBound },
        certificate: coloring_certificate(out.coloring),
        stats: Stats { nodes: out.nodes, millis: start.elapsed().as_millis() as u64 },
    })
}

/// Anti-Ramsey number: `f` with `F = {K_2}`.
pub fn ar_exact(n: usize, target: &Graph, budget: &Budget) -> Result<SearchResult> {
    let k2 = parse_family("k2").expect("built-in family");
    run_f(Problem::Ar, n, target, &k2, budget)
}

/// Local anti-Ramsey number: `f` with `F` = all matchings, i.e. a copy of
/// `G` that is properly edge-coloured.
pub fn lr_exact(n: usize, target: &Graph, budget: &Budget) -> Result<SearchResult> {
    let matchings = parse_family("matchings").expect("built-in family");
    run_f(Problem::Lr, n, target, &matchings, budget)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerifyMode {
    /// The coloring has no `F`-witness copy: `f > colors`.
    FBad,
    /// The coloring pierces every copy: `g >= colors`.
    GValid,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConstructionReport {
    pub mode: VerifyMode,
    pub n: usize,
    pub colors: usize,
    pub verified: bool,
    /// The bound established when `verified`, e.g. `f >= 23`.
    pub bound: Option<String>,
    /// A copy contradicting the claim when not `verified`.
    pub violating: Option<CopyWitness>,
}

/// Checks a lower-bound construction without searching.
pub fn verify_construction(
    c: &EdgeColoring,
    mode: VerifyMode,
    target: &Graph,
    family: &GraphFamily,
) -> Result<ConstructionReport> {
    let colors = c.color_count();
    let (violating, bound) = match mode {
        VerifyMode::FBad => (holds_f_witness(c, target, family)?, format!("f >= {}", colors + 1)),
        VerifyMode::GValid => (unpierced_copy(c, target, family)?, format!("g >= {colors}")),
    };
    let verified = violating.is_none();
    Ok(ConstructionReport { mode, n: c.n(), colors, verified, bound: verified.then_some(bound), violating })
}

/// Re-checks the certificate of an `f`, `g`, `Ar` or `Lr` result with the
/// decision procedures.
pub fn certificate_holds(result: &SearchResult, target: &Graph, family: &GraphFamily) -> Result<bool> {
    let Certificate::Coloring { coloring } = &result.certificate else {
        // Only the trivial values lack a certificate.
        return Ok(match result.problem {
            Problem::G => result.value == 0,
            _ => result.value == 1,
        });
    };
    Ok(match result.problem {
        Problem::G => coloring.color_count() == result.value && pierces_all(coloring, target, family)?,
        Problem::Ex => false,
        _ => coloring.color_count() + 1 == result.value && holds_f_witness(coloring, target, family)?.is_none(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::parse_graph;

    fn gr(s: &str) -> Graph {
        parse_graph(s).unwrap()
    }

    fn fam(s: &str) -> GraphFamily {
        parse_family(s).unwrap()
    }

    #[test]
    fn small_anti_ramsey_values() {
        let b = Budget::default();
        for n in 3..=5 {
            let r = ar_exact(n, &gr("K3"), &b).unwrap();
            assert_eq!(r.value, n, "Ar({n},K3)");
            assert!(r.is_exact());
            assert!(certificate_holds(&r, &gr("K3"), &fam("k2")).unwrap());
        }
        assert_eq!(ar_exact(4, &gr("K4"), &b).unwrap().value, 6);
        assert_eq!(ar_exact(5, &gr("K4"), &b).unwrap().value, 8);
    }

    #[test]
    fn small_piercing_values() {
        let b = Budget::default();
        for n in 4..=5 {
            let r = g_exact(n, &gr("K4"), &fam("up:K3"), &b).unwrap();
            assert_eq!(r.value, n);
            assert!(certificate_holds(&r, &gr("K4"), &fam("up:K3")).unwrap());
        }
        assert_eq!(g_exact(4, &gr("K3"), &fam("up:K4"), &b).unwrap().value, 0);
        assert_eq!(g_exact(4, &gr("K4"), &fam("up:M2"), &b).unwrap().value, 5);
        assert_eq!(g_exact(4, &gr("K4"), &fam("up:P4"), &b).unwrap().value, 4);
    }

    #[test]
    fn f_values() {
        let b = Budget::default();
        assert_eq!(f_exact(4, &gr("K3"), &fam("not:P3"), &b).unwrap().value, 4);
        assert_eq!(f_exact(4, &gr("K4"), &fam("not:P3"), &b).unwrap().value, 6);
    }

    #[test]
    fn jobs_do_not_change_results() {
        let one = g_exact(5, &gr("K4"), &fam("up:M2"), &Budget::default().with_jobs(1)).unwrap();
        let three = g_exact(5, &gr("K4"), &fam("up:M2"), &Budget::default().with_jobs(3)).unwrap();
        assert_eq!(one.value, three.value);
        assert_eq!(one.certificate, three.certificate);
    }

    #[test]
    fn timeouts_follow_the_asymmetry() {
        let tiny = Budget { max_nodes: 10, max_time: None, jobs: Some(1), split_depth: Some(3) };
        let f = ar_exact(6, &gr("K4"), &tiny).unwrap();
        assert_eq!(f.status, Status::Timeout);
        let g = g_exact(6, &gr("K4"), &fam("up:K3"), &tiny).unwrap();
        assert_eq!(g.status, Status::LowerBound);
        assert!(certificate_holds(&g, &gr("K4"), &fam("up:K3")).unwrap());
    }

    #[test]
    fn definedness_errors() {
        let b = Budget::default();
        assert!(matches!(f_exact(4, &gr("K3"), &fam("up:P3"), &b), Err(Error::FamilyLacksK2(_))));
        assert!(matches!(g_exact(4, &gr("K3"), &fam("all"), &b), Err(Error::FamilyContainsK2(_))));
        assert!(f_exact(3, &gr("K4"), &fam("k2"), &b).is_err());
    }

    #[test]
    fn constructions() {
        use crate::coloring::{build_pattern, Pattern, PatternParams};
        let rtdl = build_pattern(&PatternParams { pattern: Pattern::Rtdl, n: 8, m: Some(2) }).unwrap();
        let r = verify_construction(&rtdl, VerifyMode::FBad, &gr("K5"), &fam("edges:squares")).unwrap();
        assert!(r.verified);
        assert_eq!(r.colors, 22);
        assert_eq!(r.bound.as_deref(), Some("f >= 23"));

        let cyc = EdgeColoring::rainbow_with_mono_complement(&Graph::cycle(6));
        let r = verify_construction(&cyc, VerifyMode::GValid, &gr("K4"), &fam("up:P4")).unwrap();
        assert!(r.verified);
        assert_eq!(r.colors, 7);

        let r = verify_construction(&EdgeColoring::rainbow(5), VerifyMode::GValid, &gr("K4"), &fam("up:P3")).unwrap();
        assert!(!r.verified);
        assert!(r.violating.is_some());
    }
}
