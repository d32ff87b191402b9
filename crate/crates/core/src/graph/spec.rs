//! Textual graph constructors.
//!
//! Grammar (terms joined by `+` form a disjoint union):
//!
//! ```text
//! term  := [coef] atom
//! atom  := K<p> | K<p>-e | P<k> | C<k> | S<t> | M<m> | T<n>,<m> | KB<a>,<b>
//!        | MULTI<a1>,...,<ar> | E<n> | PETERSEN
//!        | [<order>:]<u>-<v>,<u>-<v>,...      explicit edge list
//!        | <graph6 string>
//! ```
//!
//! `S<t>` is the star `K_{1,t}`, `M<m>` the matching `mK_2`, `E<n>` the
//! edgeless graph on `n` vertices. A leading coefficient repeats the atom,
//! so `2K1+K3` is `K_3` plus two isolated vertices.

use super::{from_graph6, Graph};
use crate::error::{Error, Result};

pub fn parse_graph(spec: &str) -> Result<Graph> {
    let spec = spec.trim();
    if spec.is_empty() {
        return Err(Error::Parse("empty graph spec".into()));
    }
    // An explicit edge list may itself contain neither '+' nor letters, so
    // it is safe to split on '+' first.
    let mut acc: Option<Graph> = None;
    for term in spec.split('+') {
        let g = parse_term(term.trim())?;
        acc = Some(match acc {
            None => g,
            Some(a) => a.disjoint_union(&g)?,
        });
    }
    Ok(acc.expect("split yields at least one term"))
}

fn parse_term(term: &str) -> Result<Graph> {
    if term.is_empty() {
        return Err(Error::Parse("empty term in graph spec".into()));
    }
    if is_edge_list(term) {
        return parse_edge_list(term);
    }
    let digits = term.bytes().take_while(u8::is_ascii_digit).count();
    if digits > 0 && digits < term.len() {
        let coef: usize = parse_num(&term[..digits])?;
        let atom = parse_atom(&term[digits..])?;
        let mut g = Graph::empty(0);
        for _ in 0..coef {
            g = g.disjoint_union(&atom)?;
        }
        return Ok(g);
    }
    parse_atom(term)
}

fn parse_atom(atom: &str) -> Result<Graph> {
    if let Some(g) = parse_named(atom)? {
        return Ok(g);
    }
    from_graph6(atom).map_err(|_| Error::Parse(format!("unrecognised graph spec `{atom}`")))
}

fn parse_named(atom: &str) -> Result<Option<Graph>> {
    let upper = atom.to_ascii_uppercase();
    if upper == "PETERSEN" {
        return Ok(Some(Graph::petersen()));
    }
    let (name, rest) = split_name(atom);
    if name.is_empty() || rest.is_empty() || !rest.as_bytes()[0].is_ascii_digit() {
        return Ok(None);
    }
    let g = match name {
        "K" => {
            if let Some(p) = rest.strip_suffix("-e") {
                let p = checked_order(parse_num(p)?)?;
                if p < 2 {
                    return Err(Error::Parse("K<p>-e needs p >= 2".into()));
                }
                let mut g = Graph::complete(p);
                g.remove_edge(p - 2, p - 1);
                g
            } else {
                Graph::complete(checked_order(parse_num(rest)?)?)
            }
        }
        "P" => {
            let k = checked_order(parse_num(rest)?)?;
            if k == 0 {
                return Err(Error::Parse("P0 is not a graph".into()));
            }
            Graph::path(k)
        }
        "C" => {
            let k = checked_order(parse_num(rest)?)?;
            if k < 3 {
                return Err(Error::Parse(format!("cycle C{k} needs at least 3 vertices")));
            }
            Graph::cycle(k)
        }
        "S" => Graph::star(checked_order(parse_num::<usize>(rest)? + 1)? - 1),
        "M" => Graph::matching(checked_order(2 * parse_num::<usize>(rest)?)? / 2),
        "E" => Graph::empty(checked_order(parse_num(rest)?)?),
        "T" => {
            let nums = parse_list(rest)?;
            let [n, m] = nums[..] else {
                return Err(Error::Parse(format!("Turán graph needs T<n>,<m>, got `{atom}`")));
            };
            if m == 0 {
                return Err(Error::Parse("Turán graph needs at least one class".into()));
            }
            Graph::turan(checked_order(n)?, m)
        }
        "KB" => {
            let nums = parse_list(rest)?;
            let [a, b] = nums[..] else {
                return Err(Error::Parse(format!("complete bipartite needs KB<a>,<b>, got `{atom}`")));
            };
            checked_order(a + b)?;
            Graph::complete_bipartite(a, b)
        }
        "MULTI" => {
            let sizes = parse_list(rest)?;
            checked_order(sizes.iter().sum())?;
            Graph::complete_multipartite(&sizes)
        }
        _ => return Ok(None),
    };
    Ok(Some(g))
}

fn split_name(atom: &str) -> (&str, &str) {
    let k = atom.bytes().take_while(u8::is_ascii_alphabetic).count();
    (&atom[..k], &atom[k..])
}

fn checked_order(n: usize) -> Result<usize> {
    if n > super::MAX_ORDER {
        Err(Error::OrderOverflow { order: n, max: super::MAX_ORDER })
    } else {
        Ok(n)
    }
}

fn parse_num<T: std::str::FromStr>(s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse(format!("expected a number, got `{s}`")))
}

fn parse_list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(|x| parse_num(x.trim())).collect()
}

fn is_edge_list(term: &str) -> bool {
    let body = match term.split_once(':') {
        Some((order, body)) if order.bytes().all(|b| b.is_ascii_digit()) => body,
        Some(_) => return false,
        None => term,
    };
    body.is_empty() && term.contains(':')
        || body.split(',').all(|e| {
            e.split_once('-').is_some_and(|(a, b)| {
                !a.is_empty()
                    && !b.is_empty()
                    && a.trim().bytes().all(|c| c.is_ascii_digit())
                    && b.trim().bytes().all(|c| c.is_ascii_digit())
            })
        })
}

fn parse_edge_list(term: &str) -> Result<Graph> {
    let (order, body) = match term.split_once(':') {
        Some((o, b)) => (Some(parse_num::<usize>(o)?), b),
        None => (None, term),
    };
    let mut edges = Vec::new();
    if !body.is_empty() {
        for e in body.split(',') {
            let (a, b) = e.split_once('-').expect("checked by is_edge_list");
            edges.push((parse_num::<usize>(a.trim())?, parse_num::<usize>(b.trim())?));
        }
    }
    let inferred = edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(0);
    let order = order.unwrap_or(inferred);
    if order < inferred {
        return Err(Error::Parse(format!("edge list uses vertex {} but order is {order}", inferred - 1)));
    }
    Graph::from_edges(checked_order(order)?, &edges)
}
