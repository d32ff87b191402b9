use std::fmt;
use std::fs;
use std::time::{Duration, Instant};

use arlab_core::coloring::{
    build_pattern, find_canonical_clique, find_clean_multipartite, find_min_order_rainbow, EdgeColoring, PatternParams,
};
use arlab_core::family::{parse_family, GraphFamily};
use arlab_core::graph::{chi_family, invariants_of, parse_graph, to_graph6, Graph};
use arlab_core::packing::{be_packable, enumerate_minimal, min_overlap, pack, Obstruction};
use arlab_core::search::{
    ar_exact, ex_exact, f_exact, g_exact, lr_exact, verify_construction, Problem, SearchResult, VerifyMode,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::*;
use crate::cache::{self, Cache, SCHEMA};
use crate::suite;
use crate::table::Table;

#[derive(Debug)]
pub enum CliError {
    Core(arlab_core::Error),
    Usage(String),
    Io(String),
}

impl CliError {
    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Core(arlab_core::Error::Parse(_)) => "parse",
            CliError::Core(arlab_core::Error::OrderOverflow { .. }) => "order_overflow",
            CliError::Core(arlab_core::Error::Invalid(_)) => "invalid",
            CliError::Core(arlab_core::Error::FamilyLacksK2(_)) => "family_lacks_k2",
            CliError::Core(arlab_core::Error::FamilyContainsK2(_)) => "family_contains_k2",
            CliError::Core(arlab_core::Error::NotAForest) => "not_a_forest",
            CliError::Core(arlab_core::Error::TooFewColors { .. }) => "too_few_colors",
            CliError::Core(arlab_core::Error::TooLarge(_)) => "too_large",
            CliError::Usage(_) => "usage",
            CliError::Io(_) => "io",
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "schema": SCHEMA, "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => e.fmt(f),
            CliError::Usage(m) | CliError::Io(m) => f.write_str(m),
        }
    }
}

impl std::error::Error for CliError {}

impl From<arlab_core::Error> for CliError {
    fn from(e: arlab_core::Error) -> Self {
        CliError::Core(e)
    }
}

/// A finished command: the JSON document, its table rendering, and
/// whether the process should exit successfully.
pub struct Output {
    pub json: Value,
    pub table: String,
    pub success: bool,
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => serde_json::to_string_pretty(&self.json).expect("JSON values serialize"),
            Format::Table => self.table.clone(),
        }
    }
}

fn envelope(command: &str, field: &str, payload: impl Serialize) -> Value {
    let mut doc = json!({ "schema": SCHEMA, "command": command });
    doc[field] = serde_json::to_value(payload).expect("results serialize");
    doc
}

fn graph(flag: &str, spec: &str) -> Result<Graph, CliError> {
    parse_graph(spec).map_err(|e| CliError::Usage(format!("--{flag} {spec}: {e}")))
}

fn family(expr: &str) -> Result<GraphFamily, CliError> {
    Ok(parse_family(expr)?)
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let cache = (!cli.no_cache).then(|| Cache::new(cli.cache_dir.clone().unwrap_or_else(Cache::default_dir)));
    match &cli.command {
        Command::F(a) | Command::G(a) => {
            let problem = if matches!(cli.command, Command::F(_)) { Problem::F } else { Problem::G };
            let target = graph("target", &a.target)?;
            let fam = family(&a.family)?;
            let budget = a.budget.budget(cli.jobs);
            searches(problem, &a.n, cache.as_ref(), vec![target], Some(fam.name().to_string()), |n, gs| match problem {
                Problem::F => f_exact(n, &gs[0], &fam, &budget),
                _ => g_exact(n, &gs[0], &fam, &budget),
            })
        }
        Command::Ar(a) | Command::Lr(a) => {
            let problem = if matches!(cli.command, Command::Ar(_)) { Problem::Ar } else { Problem::Lr };
            let target = graph("target", &a.target)?;
            let budget = a.budget.budget(cli.jobs);
            searches(problem, &a.n, cache.as_ref(), vec![target], None, |n, gs| match problem {
                Problem::Ar => ar_exact(n, &gs[0], &budget),
                _ => lr_exact(n, &gs[0], &budget),
            })
        }
        Command::Ex(a) => {
            let forbidden = a.forbid.iter().map(|s| graph("forbid", s)).collect::<Result<Vec<_>, _>>()?;
            let budget = a.budget.budget(cli.jobs);
            searches(Problem::Ex, &a.n, cache.as_ref(), forbidden, None, |n, gs| ex_exact(n, gs, &budget))
        }
        Command::Verify(a) => verify(a),
        Command::Pattern(a) => pattern(a),
        Command::Find(a) => find(a),
        Command::Pack(a) => pack_cmd(a),
        Command::Overlap(a) => overlap(a),
        Command::Blockers(a) => blockers(a),
        Command::Invariants(a) => invariants(a),
        Command::Suite(a) => {
            let report = suite::run(a.level, cli.jobs);
            let table = suite::table(&report);
            let success = report.failed == 0;
            Ok(Output { json: envelope("suite", "result", &report), table, success })
        }
    }
}

fn problem_name(p: Problem) -> &'static str {
    match p {
        Problem::F => "f",
        Problem::G => "g",
        Problem::Ar => "ar",
        Problem::Lr => "lr",
        Problem::Ex => "ex",
    }
}

fn searches(
    problem: Problem,
    ns: &NRange,
    cache: Option<&Cache>,
    graphs: Vec<Graph>,
    family: Option<String>,
    solve: impl Fn(usize, &[Graph]) -> arlab_core::Result<SearchResult> + Sync,
) -> Result<Output, CliError> {
    let job = |n: usize| -> Result<SearchResult, CliError> {
        let key = cache::key(problem, n, &graphs, family.as_deref());
        if let Some(mut hit) = cache.and_then(|c| c.load(&key)) {
            // The entry may have been stored for an isomorphic relabelling.
            if problem == Problem::Ex {
                hit.forbidden = graphs.clone();
            } else {
                hit.target = Some(graphs[0].clone());
            }
            return Ok(hit);
        }
        let result = solve(n, &graphs)?;
        if let Some(c) = cache {
            c.store(&key, &result).map_err(|e| CliError::Io(format!("cache write failed: {e}")))?;
        }
        Ok(result)
    };
    let results = ns.0.par_iter().map(|&n| job(n)).collect::<Result<Vec<_>, _>>()?;

    let mut t = Table::new(["problem", "n", "graph", "family", "value", "status", "nodes", "ms"]);
    for r in &results {
        let shown = match problem {
            Problem::Ex => r.forbidden.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(" ; "),
            _ => r.target.as_ref().map(|g| g.to_string()).unwrap_or_default(),
        };
        t.row([
            problem_name(problem).to_string(),
            r.n.to_string(),
            shown,
            r.family.as_ref().map(|f| f.name.clone()).unwrap_or_else(|| "-".into()),
            r.value.to_string(),
            serde_json::to_value(r.status).unwrap().as_str().unwrap_or_default().to_string(),
            r.stats.nodes.to_string(),
            r.stats.millis.to_string(),
        ]);
    }
    Ok(Output { json: envelope(problem_name(problem), "results", &results), table: t.render(), success: true })
}

fn coloring_from(src: &SourceArgs) -> Result<(EdgeColoring, Value), CliError> {
    if let Some(pattern) = src.pattern {
        let n = src.n.ok_or_else(|| CliError::Usage("--pattern needs --n".into()))?;
        let c = build_pattern(&PatternParams { pattern, n, m: src.m })?;
        return Ok((c, json!({ "pattern": pattern, "n": n, "m": src.m })));
    }
    if let Some(spec) = &src.rainbow {
        let host = graph("rainbow", spec)?;
        let n = src.n.unwrap_or(host.order());
        let host = host.padded(n)?;
        return Ok((EdgeColoring::rainbow_with_mono_complement(&host), json!({ "rainbow": host, "n": n })));
    }
    if let Some(path) = &src.coloring {
        let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        let c: EdgeColoring = serde_json::from_str(&text)
            .map_err(|e| CliError::Usage(format!("{}: not a coloring: {e}", path.display())))?;
        return Ok((c, json!({ "file": path })));
    }
    Err(CliError::Usage("a coloring is required: --pattern, --rainbow or --coloring".into()))
}

fn verify(a: &VerifyArgs) -> Result<Output, CliError> {
    let (c, source) = coloring_from(&a.source)?;
    let target = graph("target", &a.target)?;
    let fam = family(&a.family)?;
    let mode = match a.mode {
        ModeArg::FBad => VerifyMode::FBad,
        ModeArg::GValid => VerifyMode::GValid,
    };
    let report = verify_construction(&c, mode, &target, &fam)?;
    let mut t = Table::new(["mode", "n", "colors", "verified", "bound"]);
    t.row([
        serde_json::to_value(mode).unwrap().as_str().unwrap_or_default().to_string(),
        report.n.to_string(),
        report.colors.to_string(),
        report.verified.to_string(),
        report.bound.clone().unwrap_or_else(|| "-".into()),
    ]);
    let mut table = t.render();
    if let Some(w) = &report.violating {
        table.push_str(&format!("violating copy on {:?}: edges {:?}\n", w.vertices, w.edges));
    }
    let mut json = envelope("verify", "result", &report);
    json["source"] = source;
    json["target"] = serde_json::to_value(&target).unwrap();
    json["family"] = serde_json::to_value(fam.describe()).unwrap();
    Ok(Output { json, table, success: report.verified })
}

fn matrix(c: &EdgeColoring) -> String {
    let n = c.n();
    let width = c.color_count().max(1).to_string().len();
    let mut s = String::new();
    for i in 0..n {
        let row: Vec<String> = (0..n)
            .map(|j| if i == j { format!("{:>width$}", ".") } else { format!("{:>width$}", c.color(i, j)) })
            .collect();
        s.push_str(&row.join(" "));
        s.push('\n');
    }
    s
}

fn pattern(a: &SourceArgs) -> Result<Output, CliError> {
    let (c, source) = coloring_from(a)?;
    let mut json = envelope("pattern", "result", json!({ "colors": c.color_count(), "coloring": &c }));
    json["source"] = source;
    let table = format!("K{} with {} colours\n{}", c.n(), c.color_count(), matrix(&c));
    Ok(Output { json, table, success: true })
}

fn need(v: Option<usize>, flag: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--{flag} is required")))
}

fn find(a: &FindArgs) -> Result<Output, CliError> {
    let (c, source) = coloring_from(&a.source)?;
    let (result, table) = match a.kind {
        FindKind::Clique => {
            let t = need(a.t, "t")?;
            let found = find_canonical_clique(&c, t);
            let table = match &found {
                Some((kind, verts)) => format!("{kind:?} K{t} on {verts:?}\n"),
                None => format!("no monochromatic, rainbow or LEX K{t}\n"),
            };
            (json!(found.map(|(kind, vertices)| json!({ "kind": kind, "vertices": vertices }))), table)
        }
        FindKind::Multipartite => {
            let (r, t) = (need(a.r, "r")?, need(a.t, "t")?);
            let found = find_clean_multipartite(&c, r, t);
            let table = match &found {
                Some(m) => format!("clean K({r}x{t}) with classes {:?}\n", m.classes),
                None => format!("no clean K({r}x{t})\n"),
            };
            (json!(found), table)
        }
        FindKind::Rainbow => {
            let k = need(a.k, "k")?;
            let found = find_min_order_rainbow(&c, k)?;
            let table = format!("rainbow {k}-edge subgraph on {} vertices: {:?}\n", found.order(), found.edges);
            (json!({ "order": found.order(), "subgraph": found }), table)
        }
    };
    let mut json = envelope("find", "result", result);
    json["source"] = source;
    Ok(Output { json, table, success: true })
}

fn pack_cmd(a: &PackArgs) -> Result<Output, CliError> {
    let g1 = graph("g1", &a.g1)?;
    let g2 = graph("g2", &a.g2)?;
    let natural = g1.order().max(g2.order());
    let p = a.p.unwrap_or(natural);
    let witness = pack(&g1, &g2, p)?;
    // The degree-sum criterion speaks about graphs of equal order.
    let be = (p == natural).then(|| be_packable(&g1, &g2));
    let table = match &witness {
        Some(w) => format!("packs in K{p}: first {:?}, second {:?}\n", w.first, w.second),
        None => format!("does not pack in K{p}\n"),
    };
    let result = json!({ "p": p, "packs": witness.is_some(), "witness": witness, "be_verdict": be });
    Ok(Output { json: envelope("pack", "result", result), table, success: true })
}

fn overlap(a: &OverlapArgs) -> Result<Output, CliError> {
    let h = graph("h", &a.h)?;
    let g = graph("g", &a.g)?;
    let report = min_overlap(&h, &g, a.p)?;
    let mut t = Table::new(["p", "min_overlap", "h_placement", "g_placement", "shared"]);
    t.row([
        report.p.to_string(),
        report.min_overlap.to_string(),
        format!("{:?}", report.h_placement),
        format!("{:?}", report.g_placement),
        format!("{:?}", report.shared_edges),
    ]);
    Ok(Output { json: envelope("overlap", "result", &report), table: t.render(), success: true })
}

fn blockers(a: &BlockersArgs) -> Result<Output, CliError> {
    let g = graph("g", &a.g)?;
    let kind = match a.kind {
        ObstructionArg::Blocker => Obstruction::Blocker,
        ObstructionArg::AntiPacker => Obstruction::AntiPacker,
    };
    let deadline = Instant::now() + Duration::from_secs(a.budget_secs);
    let family = enumerate_minimal(kind, &g, a.p, a.max_edges, Some(deadline))?;
    let mut t = Table::new(["edges", "graph", "graph6"]);
    for h in &family.graphs {
        t.row([h.edge_count().to_string(), h.to_string(), to_graph6(h)]);
    }
    let mut table = t.render();
    if !family.complete {
        table.push_str("incomplete: deadline reached\n");
    }
    let result = json!({
        "kind": kind, "g": g, "p": a.p, "max_edges": a.max_edges,
        "graphs": family.graphs, "complete": family.complete,
    });
    Ok(Output { json: envelope("blockers", "result", result), table, success: true })
}

fn invariants(a: &InvariantsArgs) -> Result<Output, CliError> {
    let g = graph("graph", &a.graph)?;
    let inv = invariants_of(&g);
    let mut result = serde_json::to_value(&inv).expect("invariants serialize");
    result["graph6"] = json!(to_graph6(&g));
    let mut t = Table::new(["order", "edges", "chi", "alpha", "girth", "max_deg", "min_deg", "components"]);
    t.row([
        inv.order.to_string(),
        inv.edges.to_string(),
        inv.chi.to_string(),
        inv.alpha.to_string(),
        inv.girth.map_or("inf".into(), |x| x.to_string()),
        inv.max_deg.to_string(),
        inv.min_deg.to_string(),
        inv.components.to_string(),
    ]);
    let mut table = t.render();
    if let Some(expr) = &a.family {
        let fam = family(expr)?;
        if g.edge_count() > 24 {
            return Err(CliError::Core(arlab_core::Error::TooLarge(format!(
                "chi_F enumerates edge subsets; {} edges is too many",
                g.edge_count()
            ))));
        }
        let cf = chi_family(&g, &fam);
        result["chi_family"] = json!({ "family": fam.name(), "value": cf.value, "no_removal": cf.no_removal });
        table.push_str(&format!(
            "chi_{}(G) = {}{}\n",
            fam.name(),
            cf.value,
            if cf.no_removal { " (no removable class)" } else { "" }
        ));
    }
    Ok(Output { json: envelope("invariants", "result", result), table, success: true })
}
