//! Building blocks: grids, walls, cylinders, circuits, ladders and the two
//! twisted cylinders.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::graph::{EdgeId, Graph, VertexId};

/// Vertex label: a grid coordinate `(row, column)` or an auxiliary vertex
/// outside any grid, such as the extra cycles of family F.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Cell(usize, usize),
    Aux(char, usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Cell(r, c) => write!(f, "({r},{c})"),
            Label::Aux(ch, i) => write!(f, "{ch}{i}"),
        }
    }
}

/// How an edge entered a construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeRole {
    /// Edge of the underlying wall or ladder.
    Wall,
    /// Edge closing a wall into a cylinder or a ladder into a twisted
    /// cylinder.
    Seam,
    /// Edge added by a family recipe to close the structure into a tiling.
    Closing,
}

/// A graph whose vertices carry construction labels and whose degree-2
/// peripheral vertices carry names such as `z3` or `w0`.
#[derive(Debug, Clone)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<Label>,
    pub roles: Vec<EdgeRole>,
    pub peripheral: BTreeMap<(char, usize), VertexId>,
}

impl LabeledGraph {
    pub fn vertex(&self, label: Label) -> Option<VertexId> {
        self.labels.iter().position(|&l| l == label)
    }

    pub fn named(&self, ch: char, i: usize) -> VertexId {
        self.peripheral[&(ch, i)]
    }

    /// Edges counted as exterior: everything not in the underlying wall or
    /// ladder.
    pub fn exterior_edges(&self) -> Vec<EdgeId> {
        (0..self.roles.len()).filter(|&e| self.roles[e] != EdgeRole::Wall).collect()
    }

    /// Number of peripheral vertices with name `ch`.
    pub fn peripheral_count(&self, ch: char) -> usize {
        self.peripheral.keys().filter(|(c, _)| *c == ch).count()
    }
}

/// Incremental builder keyed by labels.
#[derive(Debug, Default, Clone)]
pub(crate) struct Builder {
    index: HashMap<Label, VertexId>,
    labels: Vec<Label>,
    edges: Vec<(VertexId, VertexId)>,
    roles: Vec<EdgeRole>,
    pub(crate) peripheral: BTreeMap<(char, usize), VertexId>,
}

impl Builder {
    pub(crate) fn vertex(&mut self, l: Label) -> VertexId {
        if let Some(&v) = self.index.get(&l) {
            return v;
        }
        let v = self.labels.len();
        self.labels.push(l);
        self.index.insert(l, v);
        v
    }

    pub(crate) fn id(&self, l: Label) -> VertexId {
        *self.index.get(&l).unwrap_or_else(|| panic!("no vertex {l}"))
    }

    pub(crate) fn edge(&mut self, a: Label, b: Label, role: EdgeRole) {
        let (u, v) = (self.id(a), self.id(b));
        self.edges.push((u.min(v), u.max(v)));
        self.roles.push(role);
    }

    pub(crate) fn edge_ids(&mut self, u: VertexId, v: VertexId, role: EdgeRole) {
        self.edges.push((u.min(v), u.max(v)));
        self.roles.push(role);
    }

    pub(crate) fn name(&mut self, ch: char, i: usize, l: Label) {
        let v = self.id(l);
        self.peripheral.insert((ch, i), v);
    }

    pub(crate) fn named(&self, ch: char, i: usize) -> VertexId {
        self.peripheral[&(ch, i)]
    }

    pub(crate) fn remove_edge_where(&mut self, mut pred: impl FnMut(Label, Label) -> bool) {
        let labels = &self.labels;
        let mut keep = Vec::with_capacity(self.edges.len());
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            if !pred(labels[u], labels[v]) && !pred(labels[v], labels[u]) {
                keep.push(i);
            }
        }
        self.edges = keep.iter().map(|&i| self.edges[i]).collect();
        self.roles = keep.iter().map(|&i| self.roles[i]).collect();
    }

    /// Drops vertices (and their edges), renumbering the rest in order.
    pub(crate) fn remove_vertices_where(&mut self, mut pred: impl FnMut(Label) -> bool) {
        let gone: Vec<bool> = self.labels.iter().map(|&l| pred(l)).collect();
        let mut new_id = vec![usize::MAX; self.labels.len()];
        let mut labels = Vec::new();
        for (v, &l) in self.labels.iter().enumerate() {
            if !gone[v] {
                new_id[v] = labels.len();
                labels.push(l);
            }
        }
        let mut edges = Vec::new();
        let mut roles = Vec::new();
        for (&(u, v), &r) in self.edges.iter().zip(&self.roles) {
            if !gone[u] && !gone[v] {
                edges.push((new_id[u], new_id[v]));
                roles.push(r);
            }
        }
        self.peripheral.retain(|_, v| !gone[*v]);
        for v in self.peripheral.values_mut() {
            *v = new_id[*v];
        }
        self.index = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        self.labels = labels;
        self.edges = edges;
        self.roles = roles;
    }

    pub(crate) fn finish(self) -> LabeledGraph {
        let graph = Graph::new(self.labels.len(), &self.edges).expect("builder endpoints are in range");
        LabeledGraph { graph, labels: self.labels, roles: self.roles, peripheral: self.peripheral }
    }
}

/// `p x q` grid; `wrap` adds the cylinder edges `(j,0)-(j,q-1)`.
pub(crate) fn grid_builder(p: usize, q: usize, wrap: bool) -> Builder {
    let mut b = Builder::default();
    for r in 0..p {
        for c in 0..q {
            b.vertex(Label::Cell(r, c));
        }
    }
    for r in 0..p {
        for c in 0..q {
            if c + 1 < q {
                b.edge(Label::Cell(r, c), Label::Cell(r, c + 1), EdgeRole::Wall);
            }
            if r + 1 < p {
                b.edge(Label::Cell(r, c), Label::Cell(r + 1, c), EdgeRole::Wall);
            }
        }
    }
    if wrap && q > 2 {
        for r in 0..p {
            b.edge(Label::Cell(r, 0), Label::Cell(r, q - 1), EdgeRole::Seam);
        }
    }
    b
}

/// Removes the vertical edges `(r,c)-(r+1,c)` with `r + c` of the given
/// parity.
fn drop_verticals(b: &mut Builder, parity: usize) {
    b.remove_edge_where(|x, y| match (x, y) {
        (Label::Cell(r1, c1), Label::Cell(r2, c2)) => c1 == c2 && r2 == r1 + 1 && (r1 + c1) % 2 == parity,
        _ => false,
    });
}

pub(crate) fn wall_builder(k: usize, m: usize, wrap: bool) -> Builder {
    let mut b = grid_builder(m + 1, 2 * k, wrap);
    drop_verticals(&mut b, 0);
    for j in 0..k {
        b.name('z', j, Label::Cell(0, 2 * j));
        let col = if m % 2 == 1 { 2 * j } else { 2 * j + 1 };
        b.name('x', j, Label::Cell(m, col));
    }
    b
}

pub fn grid(p: usize, q: usize) -> LabeledGraph {
    grid_builder(p, q, false).finish()
}

pub fn cylinder_grid(p: usize, q: usize) -> LabeledGraph {
    grid_builder(p, q, true).finish()
}

/// Hexagonal wall of length `k` and breadth `m` on the `(m+1) x 2k` grid.
pub fn wall(k: usize, m: usize) -> LabeledGraph {
    wall_builder(k, m, false).finish()
}

/// Hexagonal cylinder of length `k` and breadth `m`, peripheral vertices
/// named `z_j` (row 0) and `x_j` (row m).
pub fn cylinder(k: usize, m: usize) -> LabeledGraph {
    wall_builder(k, m, true).finish()
}

pub fn cylinder_circuit(k: usize) -> LabeledGraph {
    cylinder(k, 1)
}

pub fn moebius_circuit(k: usize) -> LabeledGraph {
    let mut b = wall_builder(k, 1, false);
    b.edge(Label::Cell(0, 0), Label::Cell(1, 2 * k - 1), EdgeRole::Seam);
    b.edge(Label::Cell(1, 0), Label::Cell(0, 2 * k - 1), EdgeRole::Seam);
    b.finish()
}

pub fn parallel_moebius(k: usize) -> LabeledGraph {
    let mut b = grid_builder(3, 2 * k + 1, false);
    b.remove_edge_where(|x, y| match (x, y) {
        (Label::Cell(r1, c1), Label::Cell(r2, c2)) => {
            c1 == c2 && r2 == r1 + 1 && ((r1 == 0 && c1 % 2 == 1) || (r1 == 1 && c1 % 2 == 0))
        }
        _ => false,
    });
    let w = 2 * k;
    b.edge(Label::Cell(0, 0), Label::Cell(2, w), EdgeRole::Seam);
    b.edge(Label::Cell(1, 0), Label::Cell(1, w), EdgeRole::Seam);
    b.edge(Label::Cell(2, 0), Label::Cell(0, w), EdgeRole::Seam);
    b.finish()
}

pub(crate) fn ladder_builder(k: usize, m: usize) -> Builder {
    let cols = 2 * k + m;
    let mut b = Builder::default();
    let first = |i: usize| (m - 1).saturating_sub(i);
    let last = |i: usize| if i <= 1 { cols - 1 } else { cols - 1 - (i - 1) };
    for i in 0..=m {
        for c in first(i)..=last(i) {
            b.vertex(Label::Cell(i, c));
        }
    }
    for i in 0..=m {
        for c in first(i)..last(i) {
            b.edge(Label::Cell(i, c), Label::Cell(i, c + 1), EdgeRole::Wall);
        }
        if i < m {
            for c in first(i).max(first(i + 1))..=last(i).min(last(i + 1)) {
                let removed = c + i >= m && (c + i - m) % 2 == 0 && (c + i - m) / 2 < k;
                if !removed {
                    b.edge(Label::Cell(i, c), Label::Cell(i + 1, c), EdgeRole::Wall);
                }
            }
        }
    }
    b
}

/// Hexagonal ladder of length `k` and breadth `m` (`m >= 1`).
pub fn ladder(k: usize, m: usize) -> LabeledGraph {
    ladder_builder(k, m).finish()
}

/// `TC_{k,m,1}`, defined for `k <= m - 2`.
pub(crate) fn tc1_builder(k: usize, m: usize) -> Builder {
    let mut b = ladder_builder(k, m);
    let top = Label::Cell(0, 2 * k + m);
    let side = Label::Cell(m - k - 1, 3 * k + 2);
    b.vertex(top);
    b.vertex(side);
    // the two pendant attachments do not count as exterior
    b.edge(top, Label::Cell(0, 2 * k + m - 1), EdgeRole::Wall);
    b.edge(side, Label::Cell(m - k - 1, 3 * k + 1), EdgeRole::Wall);
    b.edge(top, Label::Cell(k + 1, m - k - 2), EdgeRole::Seam);
    b.edge(side, Label::Cell(m, 0), EdgeRole::Seam);
    for j in 1..=(m - k - 2) {
        b.edge(Label::Cell(j, 2 * k + m - j), Label::Cell(k + j + 1, m - k - j - 2), EdgeRole::Seam);
    }
    for j in 0..=k {
        b.name('z', j, Label::Cell(0, 2 * k + m - 2 * j));
        b.name('x', j, Label::Cell(j, m - (j + 1)));
    }
    b.name('w', 0, Label::Cell(m, 2 * k));
    for i in 0..k {
        b.name('w', i + 1, Label::Cell(m, 2 * k - (2 * i + 1)));
    }
    name_tc1_v(&mut b, k, m);
    b
}

/// The `v` vertices of the second peripheral cycle of `TC_{k,m,1}`: `v_0`
/// is the added side vertex and `v_{i+1}` is the degree-2 vertex on the
/// right boundary of row `m - k + i`.
fn name_tc1_v(b: &mut Builder, k: usize, m: usize) {
    b.name('v', 0, Label::Cell(m - k - 1, 3 * k + 2));
    for i in 0..k {
        let row = m - k + i;
        let col = 2 * k + m - row;
        b.name('v', i + 1, Label::Cell(row, col));
    }
}

pub fn tc1(k: usize, m: usize) -> LabeledGraph {
    tc1_builder(k, m).finish()
}

/// `TC_{k,m,2}`, defined for `k >= m + 1`.
pub(crate) fn tc2_builder(k: usize, m: usize) -> Builder {
    let mut b = ladder_builder(k, m + 1);
    if k > m + 1 {
        let cut = 2 * (k - m) - 3;
        b.remove_vertices_where(|l| matches!(l, Label::Cell(r, c) if r == m + 1 && c <= cut));
    }
    b.edge(Label::Cell(0, 2 * k + m), Label::Cell(m + 1, 2 * (k - m - 1)), EdgeRole::Seam);
    if k > m + 1 {
        for j in 0..=(k - m - 2) {
            b.edge(
                Label::Cell(0, 2 * k + m - (2 * j + 1)),
                Label::Cell(m, 2 * (k - m - 1) - (2 * j + 2)),
                EdgeRole::Seam,
            );
        }
    }
    for i in 0..=m {
        b.name('x', i, Label::Cell(m - i, i));
        b.name('z', i, Label::Cell(0, m + 2 * i + 1));
        b.name('w', i, Label::Cell(i + 1, 2 * k + m - i));
        b.name('v', i, Label::Cell(m + 1, 2 * k - (2 * i + 1)));
    }
    b
}

pub fn tc2(k: usize, m: usize) -> LabeledGraph {
    tc2_builder(k, m).finish()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degrees(g: &LabeledGraph) -> Vec<usize> {
        (0..g.graph.vertex_count()).map(|v| g.graph.degree(v)).collect()
    }

    fn peripheral_degree_two(g: &LabeledGraph) {
        for (&(ch, i), &v) in &g.peripheral {
            assert_eq!(g.graph.degree(v), 2, "{ch}{i} at {}", g.labels[v]);
        }
        let twos = degrees(g).iter().filter(|&&d| d == 2).count();
        assert_eq!(twos, g.peripheral.len(), "every degree-2 vertex is named");
    }

    #[test]
    fn cylinder_sizes() {
        let c = cylinder(4, 3);
        assert_eq!(c.graph.vertex_count(), 32);
        assert_eq!(c.peripheral_count('z'), 4);
        assert_eq!(c.peripheral_count('x'), 4);
        peripheral_degree_two(&c);
        let c = cylinder(5, 4);
        peripheral_degree_two(&c);
    }

    #[test]
    fn wall_is_subcubic() {
        for (k, m) in [(3, 2), (4, 5), (6, 1)] {
            let w = wall(k, m);
            assert_eq!(w.graph.vertex_count(), (m + 1) * 2 * k);
            assert!(degrees(&w).iter().all(|&d| d <= 3));
        }
    }

    #[test]
    fn circuits() {
        let c = cylinder_circuit(5);
        assert!(degrees(&c).iter().all(|&d| d == 2 || d == 3));
        let mb = moebius_circuit(5);
        assert_eq!(mb.graph.edge_count(), c.graph.edge_count());
        let p = parallel_moebius(9);
        assert_eq!(p.graph.vertex_count(), 3 * 19);
        assert!(degrees(&p).iter().all(|&d| d == 2 || d == 3));
    }

    #[test]
    fn ladder_shape() {
        let l = ladder(7, 4);
        assert_eq!(l.graph.vertex_count(), 5 * 16 - 2);
        assert!(degrees(&l).iter().all(|&d| (2..=3).contains(&d)));
        assert!(l.graph.is_connected());
    }

    #[test]
    fn twisted_cylinders() {
        let t = tc2(7, 4);
        assert_eq!(t.graph.vertex_count(), 2 * 5 * 9);
        peripheral_degree_two(&t);
        let t = tc2(5, 4);
        peripheral_degree_two(&t);
        let t = tc1(4, 6);
        assert_eq!(t.graph.vertex_count(), 2 * 7 * 5);
        peripheral_degree_two(&t);
        let t = tc1(2, 4);
        peripheral_degree_two(&t);
    }
}
