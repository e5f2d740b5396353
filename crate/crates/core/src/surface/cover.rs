use thiserror::Error;

use super::orient::{edge_signature, orientation_signs, walk_sign};
use super::{HexTiling, Rejection};
use crate::graph::{Cycle, EdgeId, Graph, VertexId};

/// Orientation double cover of a non-orientable tiling.
///
/// Cover vertex `2 v` is `(v, +)` and `2 v + 1` is `(v, -)`. Base edge `e`
/// from `u < w` with sign `s` lifts to edge `2 e` joining `(u, +)` to
/// `(w, s)` and edge `2 e + 1` joining `(u, -)` to `(w, -s)`.
#[derive(Debug, Clone)]
pub struct DoubleCover {
    tiling: HexTiling,
    signature: Vec<i8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("tiling is orientable")]
    Orientable,
    #[error("lifted cells do not form a tiling: {0}")]
    Lift(Rejection),
}

const fn sheet_vertex(v: VertexId, plus: bool) -> VertexId {
    2 * v + if plus { 0 } else { 1 }
}

impl DoubleCover {
    pub fn tiling(&self) -> &HexTiling {
        &self.tiling
    }

    pub fn projection(&self, x: VertexId) -> VertexId {
        x / 2
    }

    /// Full projection table, cover vertex to base vertex.
    pub fn projection_map(&self) -> Vec<VertexId> {
        (0..self.tiling.graph().vertex_count()).map(|x| x / 2).collect()
    }

    pub fn lift_vertex(&self, v: VertexId, plus: bool) -> VertexId {
        sheet_vertex(v, plus)
    }

    /// Cover edge over `e` leaving the cover vertex `x`.
    pub fn lift_edge(&self, base: &Graph, e: EdgeId, x: VertexId) -> (EdgeId, VertexId) {
        lift_step(base, &self.signature, e, x)
    }

    /// Lifts a closed walk starting at `(v0, +)`. The lift is closed iff the
    /// walk preserves orientation; otherwise it ends at `(v0, -)` and `None`
    /// is returned.
    pub fn lift_cycle(&self, base: &Graph, c: &Cycle) -> Option<Cycle> {
        lift_closed(base, &self.signature, c)
    }
}

fn lift_step(base: &Graph, signature: &[i8], e: EdgeId, x: VertexId) -> (EdgeId, VertexId) {
    let (u, w) = base.endpoints(e);
    let (v, plus) = (x / 2, x % 2 == 0);
    let s = signature[e] > 0;
    if v == u {
        let target = sheet_vertex(w, plus == s);
        (if plus { 2 * e } else { 2 * e + 1 }, target)
    } else {
        // sheet at w of edge 2e is s
        let top = plus == s;
        (if top { 2 * e } else { 2 * e + 1 }, sheet_vertex(u, top))
    }
}

fn lift_closed(base: &Graph, signature: &[i8], c: &Cycle) -> Option<Cycle> {
    if walk_sign(signature, c.edges()) < 0 {
        return None;
    }
    let mut x = sheet_vertex(c.vertices()[0], true);
    let mut vertices = Vec::with_capacity(c.len());
    let mut edges = Vec::with_capacity(c.len());
    for (_, _, e) in c.steps() {
        vertices.push(x);
        let (f, y) = lift_step(base, signature, e, x);
        edges.push(f);
        x = y;
    }
    debug_assert_eq!(x, vertices[0]);
    Some(Cycle::from_parts(vertices, edges))
}

pub fn double_cover(t: &HexTiling) -> Result<DoubleCover, CoverError> {
    if orientation_signs(t).is_orientable() {
        return Err(CoverError::Orientable);
    }
    let base = t.graph();
    let signature = edge_signature(t);
    let mut edges = Vec::with_capacity(2 * base.edge_count());
    for (e, &(u, w)) in base.edges().iter().enumerate() {
        let s = signature[e] > 0;
        edges.push((sheet_vertex(u, true), sheet_vertex(w, s)));
        edges.push((sheet_vertex(u, false), sheet_vertex(w, !s)));
    }
    let edges: Vec<_> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
    let graph = Graph::new(2 * base.vertex_count(), &edges).expect("cover endpoints in range");
    let mut cells = Vec::with_capacity(2 * t.cell_count());
    for c in t.cells() {
        let up = lift_closed(base, &signature, c).expect("cells preserve orientation");
        let down_start = sheet_vertex(c.vertices()[0], false);
        let mut x = down_start;
        let mut vertices = Vec::new();
        let mut lifted = Vec::new();
        for (_, _, e) in c.steps() {
            vertices.push(x);
            let (f, y) = lift_step(base, &signature, e, x);
            lifted.push(f);
            x = y;
        }
        cells.push(up);
        cells.push(Cycle::from_parts(vertices, lifted));
    }
    let tiling = HexTiling::from_cells(graph, cells).map_err(CoverError::Lift)?;
    Ok(DoubleCover { tiling, signature })
}
