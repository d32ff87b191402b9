//! Canonical labelling by equitable partition refinement plus
//! individualisation, with automorphism pruning of sibling branches.
//!
//! The canonical code is the lexicographically largest adjacency code over
//! all leaves of the refinement tree. Two sibling branches related by a known
//! automorphism that fixes the current path produce identical leaf codes,
//! so only one of them is explored.

use serde::{Deserialize, Serialize};

use super::Graph;

/// Byte string: order, then the upper-triangle adjacency bits under the
/// canonical labelling, packed MSB first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CanonicalCode(pub Vec<u8>);

impl CanonicalCode {
    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let lab = canonical_labeling(g);
    CanonicalCode(code_of(g, &lab))
}

/// `lab[i]` is the vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n == 0 {
        return Vec::new();
    }
    let mut cells = vec![(0..n as u8).collect::<Vec<u8>>()];
    refine(g, &mut cells);
    let mut state = SearchState { best: None, autos: Vec::new() };
    search(g, cells, &mut Vec::new(), &mut state);
    state.best.expect("search reaches at least one leaf").1
}

struct SearchState {
    best: Option<(Vec<u8>, Vec<usize>)>,
    autos: Vec<Vec<u8>>,
}

fn code_of(g: &Graph, lab: &[usize]) -> Vec<u8> {
    let n = lab.len();
    let mut out = vec![n as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(lab[i], lab[j]));
            filled += 1;
            if filled == 8 {
                out.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(acc << (8 - filled));
    }
    out
}

fn cell_mask(cell: &[u8]) -> u16 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

/// Refines `cells` to the coarsest equitable partition below it. Splits are
/// ordered by neighbour count, so the result depends only on structure.
fn refine(g: &Graph, cells: &mut Vec<Vec<u8>>) {
    'outer: loop {
        for w in 0..cells.len() {
            let wmask = cell_mask(&cells[w]);
            let mut next: Vec<Vec<u8>> = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell.clone());
                    continue;
                }
                let count = |v: u8| (g.neighbors(v as usize) & wmask).count_ones();
                let first = count(cell[0]);
                if cell.iter().all(|&v| count(v) == first) {
                    next.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(u32, u8)> = cell.iter().map(|&v| (count(v), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split = true;
            }
            if split {
                *cells = next;
                continue 'outer;
            }
        }
        return;
    }
}

fn search(g: &Graph, cells: Vec<Vec<u8>>, path: &mut Vec<u8>, state: &mut SearchState) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let lab: Vec<usize> = cells.iter().map(|c| c[0] as usize).collect();
        let code = code_of(g, &lab);
        match &state.best {
            None => state.best = Some((code, lab)),
            Some((best, best_lab)) => {
                if code == *best {
                    let mut gamma = vec![0u8; lab.len()];
                    for (i, &v) in best_lab.iter().enumerate() {
                        gamma[v] = lab[i] as u8;
                    }
                    state.autos.push(gamma);
                } else if code > *best {
                    state.best = Some((code, lab));
                }
            }
        }
        return;
    };
    let mut members = cells[target].clone();
    members.sort_unstable();
    let mut explored: Vec<u8> = Vec::new();
    for &v in &members {
        if !explored.is_empty() && in_explored_orbit(g.order(), &state.autos, path, &explored, v) {
            continue;
        }
        let mut child = Vec::with_capacity(cells.len() + 1);
        for (i, cell) in cells.iter().enumerate() {
            if i == target {
                child.push(vec![v]);
                child.push(cell.iter().copied().filter(|&x| x != v).collect());
            } else {
                child.push(cell.clone());
            }
        }
        refine(g, &mut child);
        path.push(v);
        search(g, child, path, state);
        path.pop();
        explored.push(v);
    }
}

/// Orbit test under the group generated by the stored automorphisms that fix
/// every vertex of `path`.
fn in_explored_orbit(n: usize, autos: &[Vec<u8>], path: &[u8], explored: &[u8], v: u8) -> bool {
    let mut parent: Vec<u8> = (0..n as u8).collect();
    fn find(parent: &mut [u8], mut x: u8) -> u8 {
        while parent[x as usize] != x {
            parent[x as usize] = parent[parent[x as usize] as usize];
            x = parent[x as usize];
        }
        x
    }
    let mut any = false;
    for gamma in autos {
        if path.iter().any(|&p| gamma[p as usize] != p) {
            continue;
        }
        any = true;
        for x in 0..n as u8 {
            let (a, b) = (find(&mut parent, x), find(&mut parent, gamma[x as usize]));
            if a != b {
                parent[a as usize] = b;
            }
        }
    }
    if !any {
        return false;
    }
    let root = find(&mut parent, v);
    explored.iter().any(|&u| find(&mut parent, u) == root)
}
