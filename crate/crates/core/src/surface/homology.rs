use std::collections::VecDeque;
use std::fmt;

use num_traits::ToPrimitive;

use super::HexTiling;
use crate::graph::{Cycle, Graph};
use crate::snf::{mat_mul, smith_big, smith_i64, SmithForm};

/// Isomorphism type of H1: `Z^rank` plus cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct H1Shape {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl fmt::Display for H1Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".into()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z{d}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join("+"))
        }
    }
}

/// Coordinates of a 1-cycle in H1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct H1Class {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
    pub moduli: Vec<i64>,
}

impl H1Class {
    pub fn is_zero(&self) -> bool {
        self.free.iter().all(|&x| x == 0) && self.torsion.iter().all(|&x| x == 0)
    }
}

/// Linear functionals on edge vectors reading off H1 coordinates.
///
/// With `U B V = D` the Smith form of the cell-boundary matrix `B`, the
/// coordinates `y = U z` identify `Z^E / im B` with the torsion factors plus
/// `Z^(E - rank B)`. The free part of a cycle lives in the sublattice spanned
/// by the images of a cycle basis, whose own Smith form fixes the basis.
#[derive(Debug, Clone)]
pub struct Homology {
    torsion_rows: Vec<Vec<i64>>,
    moduli: Vec<i64>,
    free_rows: Vec<Vec<i64>>,
    free_div: Vec<i64>,
}

fn left_transform(a: &[Vec<i64>]) -> SmithForm<i64> {
    match smith_i64(a, true) {
        Ok(s) => s,
        Err(_) => {
            let big: Vec<Vec<_>> = a.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect();
            let s = smith_big(&big, true);
            let small = |x: &num_bigint::BigInt| x.to_i64().expect("homology transform entry exceeds i64");
            SmithForm {
                invariant_factors: s.invariant_factors.iter().map(small).collect(),
                left: s.left.map(|u| u.iter().map(|r| r.iter().map(small).collect()).collect()),
            }
        }
    }
}

/// Fundamental cycles of a BFS spanning tree, one column per non-tree edge.
fn cycle_basis(g: &Graph) -> Vec<Vec<i64>> {
    let n = g.vertex_count();
    let e = g.edge_count();
    let mut parent_edge = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    let mut depth = vec![0usize; n];
    let mut tree = vec![false; e];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(w, id) in g.incident(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent_edge[w] = id;
                    depth[w] = depth[u] + 1;
                    tree[id] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut columns = Vec::new();
    for id in (0..e).filter(|&id| !tree[id]) {
        let mut z = vec![0i64; e];
        let (u, v) = g.endpoints(id);
        z[id] += 1;
        // walk v -> u through the tree
        let (mut a, mut b) = (v, u);
        let other = |x: usize, pe: usize| {
            let (p, q) = g.endpoints(pe);
            if p == x {
                q
            } else {
                p
            }
        };
        let mut up_a = Vec::new();
        let mut up_b = Vec::new();
        while a != b {
            if depth[a] >= depth[b] {
                let pe = parent_edge[a];
                let next = other(a, pe);
                up_a.push((a, next, pe));
                a = next;
            } else {
                let pe = parent_edge[b];
                let next = other(b, pe);
                up_b.push((next, b, pe));
                b = next;
            }
        }
        for (from, to, pe) in up_a.into_iter().chain(up_b.into_iter().rev()) {
            z[pe] += if from < to { 1 } else { -1 };
        }
        columns.push(z);
    }
    // transpose into E x (E - n + c)
    (0..e).map(|row| columns.iter().map(|c| c[row]).collect()).collect()
}

/// Edge vector of a closed walk, edges oriented from smaller to larger end.
pub(crate) fn edge_vector(g: &Graph, c: &Cycle) -> Vec<i64> {
    let mut z = vec![0i64; g.edge_count()];
    for (from, to, e) in c.steps() {
        z[e] += if from <= to { 1 } else { -1 };
    }
    z
}

impl Homology {
    pub fn new(t: &HexTiling) -> Homology {
        let g = t.graph();
        let e = g.edge_count();
        let mut boundary = vec![vec![0i64; t.cell_count()]; e];
        for (ci, c) in t.cells().iter().enumerate() {
            for (from, to, id) in c.steps() {
                boundary[id][ci] += if from < to { 1 } else { -1 };
            }
        }
        let s = left_transform(&boundary);
        let r = s.rank();
        let u = s.left.expect("left transform requested");
        let mut torsion_rows = Vec::new();
        let mut moduli = Vec::new();
        for (i, &d) in s.invariant_factors.iter().enumerate() {
            if d > 1 {
                torsion_rows.push(u[i].clone());
                moduli.push(d);
            }
        }
        let tail: Vec<Vec<i64>> = u[r..].to_vec();
        let basis = cycle_basis(g);
        let image = mat_mul(&tail, &basis).expect("cycle images fit in i64");
        let s2 = left_transform(&image);
        let rho = s2.rank();
        let u2 = s2.left.expect("left transform requested");
        let free_rows = mat_mul(&u2[..rho], &tail).expect("free functionals fit in i64");
        Homology { torsion_rows, moduli, free_rows, free_div: s2.invariant_factors[..rho].to_vec() }
    }

    pub fn shape(&self) -> H1Shape {
        H1Shape { rank: self.free_rows.len(), torsion: self.moduli.clone() }
    }

    /// Class of an edge vector that is a 1-cycle.
    pub fn class_of_vector(&self, z: &[i64]) -> H1Class {
        let dot = |row: &[i64]| row.iter().zip(z).map(|(&a, &b)| a * b).sum::<i64>();
        let free = self
            .free_rows
            .iter()
            .zip(&self.free_div)
            .map(|(row, &d)| {
                let x = dot(row);
                debug_assert_eq!(x % d, 0, "not a cycle");
                x / d
            })
            .collect();
        let torsion = self.torsion_rows.iter().zip(&self.moduli).map(|(row, &d)| dot(row).rem_euclid(d)).collect();
        H1Class { free, torsion, moduli: self.moduli.clone() }
    }

    pub fn class_of(&self, g: &Graph, c: &Cycle) -> H1Class {
        self.class_of_vector(&edge_vector(g, c))
    }

    /// Undivided free functional values on each edge (oriented low to high).
    pub(crate) fn free_weights(&self) -> &[Vec<i64>] {
        &self.free_rows
    }
}

pub fn homology_class(t: &HexTiling, c: &Cycle) -> H1Class {
    Homology::new(t).class_of(t.graph(), c)
}
