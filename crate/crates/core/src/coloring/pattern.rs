use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::EdgeColoring;
use crate::error::{Error, Result};
use crate::graph::{class_index, turan_class_sizes, MAX_ORDER};

/// Homogeneous patterns and the four rainbow-Turán compounds. In every
/// compound, the rainbow `T_{n,m}` uses colours that never occur inside a
/// class; the suffix says what happens inside the classes:
/// `EM` one shared colour, `DM` one private colour per class, `EL` LEX with
/// level colours shared across classes, `DL` LEX with private colours.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Pattern {
    Mono,
    Rainbow,
    Lex,
    Rtem,
    Rtdm,
    Rtel,
    Rtdl,
}

impl Pattern {
    pub fn needs_parts(self) -> bool {
        matches!(self, Pattern::Rtem | Pattern::Rtdm | Pattern::Rtel | Pattern::Rtdl)
    }
}

impl FromStr for Pattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_uppercase().as_str() {
            "MONO" | "MONOCHROMATIC" => Pattern::Mono,
            "RAINBOW" => Pattern::Rainbow,
            "LEX" => Pattern::Lex,
            "RTEM" => Pattern::Rtem,
            "RTDM" => Pattern::Rtdm,
            "RTEL" => Pattern::Rtel,
            "RTDL" => Pattern::Rtdl,
            _ => return Err(Error::Parse(format!("unknown pattern `{s}`"))),
        })
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Pattern::Mono => "MONO",
            Pattern::Rainbow => "RAINBOW",
            Pattern::Lex => "LEX",
            Pattern::Rtem => "RTEM",
            Pattern::Rtdm => "RTDM",
            Pattern::Rtel => "RTEL",
            Pattern::Rtdl => "RTDL",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternParams {
    pub pattern: Pattern,
    pub n: usize,
    /// Number of Turán classes; required by the RT* patterns only.
    pub m: Option<usize>,
}

#[derive(PartialEq, Eq, Hash)]
enum Key {
    Cross(usize, usize),
    Shared,
    Private(usize),
    Level(usize),
    PrivateLevel(usize, usize),
}

pub fn build_pattern(p: &PatternParams) -> Result<EdgeColoring> {
    let n = p.n;
    if n > MAX_ORDER {
        return Err(Error::OrderOverflow { order: n, max: MAX_ORDER });
    }
    match p.pattern {
        // 0-based: edge {i, j}, i < j, gets colour j - 1.
        Pattern::Mono => return Ok(EdgeColoring::monochromatic(n)),
        Pattern::Rainbow => return Ok(EdgeColoring::rainbow(n)),
        Pattern::Lex => return EdgeColoring::from_fn(n, |_, j| j),
        _ => {}
    }
    let m = p.m.ok_or_else(|| Error::Invalid(format!("pattern {} needs the number of parts m", p.pattern)))?;
    if m < 2 || m > n {
        return Err(Error::Invalid(format!("pattern {} needs 2 <= m <= n, got m={m}, n={n}", p.pattern)));
    }
    let sizes = turan_class_sizes(n, m);
    let class = class_index(&sizes);
    let first: Vec<usize> = sizes
        .iter()
        .scan(0, |acc, &s| {
            let start = *acc;
            *acc += s;
            Some(start)
        })
        .collect();
    // Position of a vertex inside its class.
    let rank = |v: usize| v - first[class[v]];
    EdgeColoring::from_fn(n, |i, j| {
        if class[i] != class[j] {
            return Key::Cross(i, j);
        }
        match p.pattern {
            Pattern::Rtem => Key::Shared,
            Pattern::Rtdm => Key::Private(class[i]),
            Pattern::Rtel => Key::Level(rank(j)),
            Pattern::Rtdl => Key::PrivateLevel(class[i], rank(j)),
            _ => unreachable!("homogeneous patterns handled above"),
        }
    })
}
