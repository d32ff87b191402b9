use super::{EdgeCountSequence, FamilyExpr, GraphFamily};
use crate::error::{Error, Result};
use crate::graph::{parse_graph, Graph};

const KEYWORDS: &[&str] = &[
    "all",
    "k2",
    "is:",
    "up:",
    "not:",
    "free:",
    "matchings",
    "regular",
    "maxdeg",
    "order",
    "connected",
    "disconnected",
    "edges:",
    "co:",
    "(",
];

pub fn parse_family(expr: &str) -> Result<GraphFamily> {
    let (e, name) = parse_union(expr.trim())?;
    Ok(GraphFamily::new(e, name))
}

fn parse_union(s: &str) -> Result<(FamilyExpr, String)> {
    let terms = split_union(s)?;
    if terms.len() == 1 {
        return parse_term(terms[0]);
    }
    let mut exprs = Vec::new();
    let mut names = Vec::new();
    for t in terms {
        let (e, n) = parse_term(t)?;
        exprs.push(e);
        names.push(n);
    }
    Ok((FamilyExpr::Union(exprs), names.join("+")))
}

/// Splits at depth-0 `+` signs that are followed by a family keyword.
fn split_union(s: &str) -> Result<Vec<&str>> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' | '{' => depth += 1,
            ')' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
                }
            }
            '+' if depth == 0 => {
                let rest = s[i + 1..].trim_start();
                if KEYWORDS.iter().any(|k| rest.starts_with(k)) {
                    out.push(s[start..i].trim());
                    start = i + 1;
                }
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced brackets in `{s}`")));
    }
    out.push(s[start..].trim());
    if out.iter().any(|t| t.is_empty()) {
        return Err(Error::Parse(format!("empty term in family expression `{s}`")));
    }
    Ok(out)
}

fn parse_term(t: &str) -> Result<(FamilyExpr, String)> {
    let t = t.trim();
    if let Some(rest) = t.strip_prefix("co:") {
        let (inner, name) = parse_term(rest)?;
        let name = if matches!(inner, FamilyExpr::Union(_)) { format!("co:({name})") } else { format!("co:{name}") };
        return Ok((FamilyExpr::Complement(Box::new(inner)), name));
    }
    if let Some(inner) = t.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        return parse_union(inner);
    }
    let graph = |spec: &str| -> Result<Graph> { Ok(parse_graph(spec)?.without_isolates()) };
    let expr = if let Some(spec) = t.strip_prefix("is:") {
        FamilyExpr::Is(graph(spec)?)
    } else if let Some(spec) = t.strip_prefix("up:") {
        FamilyExpr::Up(graph(spec)?)
    } else if let Some(spec) = t.strip_prefix("not:") {
        FamilyExpr::Not(graph(spec)?)
    } else if let Some(spec) = t.strip_prefix("free:") {
        FamilyExpr::Free(graph(spec)?)
    } else if let Some(seq) = t.strip_prefix("edges:") {
        FamilyExpr::Edges(parse_sequence(seq)?)
    } else if let Some(r) = t.strip_prefix("matchings<=") {
        FamilyExpr::Matchings(Some(number(r)?))
    } else if let Some(d) = t.strip_prefix("maxdeg<=") {
        FamilyExpr::MaxDeg(number(d)?)
    } else if let Some(k) = t.strip_prefix("order<=") {
        FamilyExpr::OrderAtMost(number(k)?)
    } else {
        match t {
            "all" => FamilyExpr::All,
            "k2" => FamilyExpr::Is(Graph::complete(2)),
            "matchings" => FamilyExpr::Matchings(None),
            "regular" => FamilyExpr::Regular,
            "connected" => FamilyExpr::Connected,
            "disconnected" => FamilyExpr::Disconnected,
            _ if t.starts_with("noind:") => {
                return Err(Error::Parse("induced-subgraph families (`noind:`) are not supported".into()))
            }
            _ => return Err(Error::Parse(format!("unknown family term `{t}`"))),
        }
    };
    Ok((expr, t.to_string()))
}

fn number(s: &str) -> Result<usize> {
    s.trim().parse().map_err(|_| Error::Parse(format!("expected a number, got `{s}`")))
}

fn parse_sequence(s: &str) -> Result<EdgeCountSequence> {
    if s == "squares" {
        return Ok(EdgeCountSequence::Squares);
    }
    if let Some(rest) = s.strip_prefix("mod,") {
        let parts: Vec<&str> = rest.split(',').collect();
        let [r, k] = parts[..] else {
            return Err(Error::Parse(format!("expected edges:mod,<r>,<k>, got `edges:{s}`")));
        };
        let (residue, modulus) = (number(r)?, number(k)?);
        if modulus == 0 {
            return Err(Error::Parse("edges:mod needs a positive modulus".into()));
        }
        return Ok(EdgeCountSequence::Mod { residue: residue % modulus, modulus });
    }
    if let Some(rest) = s.strip_prefix("set,") {
        let body = rest
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("expected edges:set,{{...}}, got `edges:{s}`")))?;
        let values = body.split(',').filter(|x| !x.trim().is_empty()).map(number).collect::<Result<_>>()?;
        return Ok(EdgeCountSequence::Set(values));
    }
    Err(Error::Parse(format!("unknown edge-count sequence `edges:{s}`")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_union_inside_spec() {
        let f = parse_family("up:K3+K2").unwrap();
        assert_eq!(f.name(), "up:K3+K2");
        assert!(f.member(&parse_graph("K3+K2").unwrap()));
        assert!(!f.member(&parse_graph("K3").unwrap()));
    }

    #[test]
    fn family_union() {
        let f = parse_family("up:K3 + matchings<=2").unwrap();
        assert_eq!(f.name(), "up:K3+matchings<=2");
        assert!(f.member(&parse_graph("M2").unwrap()));
        assert!(f.member(&parse_graph("K4").unwrap()));
        assert!(!f.member(&parse_graph("P3").unwrap()));
        assert!(f.contains_k2());
    }

    #[test]
    fn parenthesised_complement() {
        let f = parse_family("co:(k2+up:K3)").unwrap();
        assert_eq!(f.name(), "co:(k2+up:K3)");
        assert!(f.member(&parse_graph("P3").unwrap()));
        assert!(!f.member(&parse_graph("K2").unwrap()));
        assert!(!f.member(&parse_graph("K3").unwrap()));
    }

    #[test]
    fn sequences() {
        let f = parse_family("edges:mod,1,3").unwrap();
        assert!(f.member(&parse_graph("P5").unwrap()));
        assert!(!f.member(&parse_graph("P4").unwrap()));
        let s = parse_family("edges:set,{1,3,6}").unwrap();
        assert!(s.member(&parse_graph("K3").unwrap()));
        assert!(!s.member(&parse_graph("M2").unwrap()));
        assert!(parse_family("edges:set,{1,3,6}+up:C4").is_ok());
    }

    #[test]
    fn errors() {
        for bad in ["", "foo", "up:", "up:Q9", "edges:mod,1,0", "edges:set,1,2", "(all", "all+", "noind:K3"] {
            assert!(parse_family(bad).is_err(), "{bad}");
        }
    }
}
