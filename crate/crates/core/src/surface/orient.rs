use std::collections::VecDeque;

use super::HexTiling;
use crate::graph::{Cycle, EdgeId};

/// Result of trying to orient every cell coherently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Orientation {
    /// `signs[c]` is `+1` when cell `c` keeps its stored direction.
    Orientable { signs: Vec<i8> },
    /// A closed chain of cells, consecutive ones (and last with first)
    /// sharing an edge, along which the orientation flips an odd number of
    /// times.
    NonOrientable { cells: Vec<usize> },
}

impl Orientation {
    pub fn is_orientable(&self) -> bool {
        matches!(self, Orientation::Orientable { .. })
    }
}

/// Direction in which cell `c` runs along edge `e`: `+1` from the smaller to
/// the larger endpoint.
fn direction(t: &HexTiling, c: &Cycle, e: EdgeId) -> i8 {
    let (lo, _) = t.graph().endpoints(e);
    c.steps().find(|&(_, _, f)| f == e).map(|(from, _, _)| if from == lo { 1 } else { -1 }).expect("edge on cell")
}

pub fn orientation_signs(t: &HexTiling) -> Orientation {
    let f = t.cell_count();
    let mut sign = vec![0i8; f];
    let mut parent: Vec<Option<usize>> = vec![None; f];
    sign[0] = 1;
    let mut queue = VecDeque::from([0usize]);
    while let Some(a) = queue.pop_front() {
        let cell = &t.cells()[a];
        for &e in cell.edges() {
            let [x, y] = t.cells_of_edge(e);
            let b = if x == a { y } else { x };
            // the two cells must traverse e in opposite directions
            let want = -sign[a] * direction(t, cell, e) * direction(t, &t.cells()[b], e);
            if sign[b] == 0 {
                sign[b] = want;
                parent[b] = Some(a);
                queue.push_back(b);
            } else if sign[b] != want {
                return Orientation::NonOrientable { cells: witness(&parent, a, b) };
            }
        }
    }
    Orientation::Orientable { signs: sign }
}

fn witness(parent: &[Option<usize>], a: usize, b: usize) -> Vec<usize> {
    let chain = |mut x: usize| {
        let mut out = vec![x];
        while let Some(p) = parent[x] {
            out.push(p);
            x = p;
        }
        out
    };
    let pa = chain(a);
    let pb = chain(b);
    // drop the common tail above the lowest common ancestor
    let mut common = 0;
    while common < pa.len().min(pb.len()) && pa[pa.len() - 1 - common] == pb[pb.len() - 1 - common] {
        common += 1;
    }
    let mut cells: Vec<usize> = pa[..=pa.len() - common].to_vec();
    cells.extend(pb[..pb.len() - common].iter().rev());
    cells
}

/// Edge signature of the rotation system in which every vertex cycles its
/// neighbours in increasing order: `-1` on edges where the two endpoint
/// rotations disagree. A closed walk reverses orientation iff the product of
/// the signs along it is `-1`.
pub fn edge_signature(t: &HexTiling) -> Vec<i8> {
    let g = t.graph();
    let next = |v: usize, w: usize| {
        let mut nb: Vec<usize> = g.neighbors(v).collect();
        nb.sort_unstable();
        let i = nb.iter().position(|&x| x == w).unwrap();
        nb[(i + 1) % nb.len()]
    };
    g.edges()
        .iter()
        .map(|&(v, w)| {
            let left = t.corner_cell(w, v, next(v, w));
            let right = t.corner_cell(v, w, next(w, v));
            if left != right {
                1
            } else {
                -1
            }
        })
        .collect()
}

/// Product of `signature` over the edges of `c`.
pub(crate) fn walk_sign(signature: &[i8], edges: &[EdgeId]) -> i8 {
    edges.iter().map(|&e| signature[e]).product()
}
