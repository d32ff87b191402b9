//! graph6 encoding for graphs of order at most 62 (single-byte size header),
//! which covers every graph this crate can hold.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = vec![(n as u8) + 63];
    let mut acc = 0u8;
    let mut filled = 0;
    // Column-major upper triangle: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn from_graph6(s: &str) -> Result<Graph> {
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    let Some((&head, body)) = bytes.split_first() else {
        return Err(Error::Parse("empty graph6 string".into()));
    };
    if !(63..=126).contains(&head) || head == 126 {
        return Err(Error::Parse(format!("bad graph6 header in `{s}`")));
    }
    let n = (head - 63) as usize;
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(Error::Parse(format!("graph6 `{s}` has wrong length for {n} vertices")));
    }
    if body.iter().any(|b| !(63..=126).contains(b)) {
        return Err(Error::Parse(format!("bad graph6 character in `{s}`")));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
