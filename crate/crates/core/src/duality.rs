//! Geometric duals: hexagonal tilings to locally C6 graphs and back through
//! triangles.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{enumerate_cycles_upto, EdgeId, Graph, VertexId};
use crate::surface::HexTiling;

/// Dual of a tiling. Vertex `i` is cell `i`; dual edge `e` crosses primal
/// edge `e`, so the edge bijection is the identity on ids.
#[derive(Debug, Clone)]
pub struct DualTiling {
    pub graph: Graph,
}

impl DualTiling {
    pub fn dual_edge(&self, primal: EdgeId) -> EdgeId {
        primal
    }

    pub fn primal_edge(&self, dual: EdgeId) -> EdgeId {
        dual
    }

    /// Two cells sharing more than one edge, if any; these make the dual a
    /// multigraph.
    pub fn parallel_cells(&self) -> Option<(usize, usize)> {
        self.graph.first_parallel_pair().map(|(e, _)| self.graph.endpoints(e))
    }
}

pub fn dual_tiling(t: &HexTiling) -> DualTiling {
    let edges: Vec<_> = (0..t.graph().edge_count())
        .map(|e| {
            let [a, b] = t.cells_of_edge(e);
            (a, b)
        })
        .collect();
    DualTiling { graph: Graph::new(t.cell_count(), &edges).expect("cell ids in range") }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum C6Violation {
    #[error("graph is empty")]
    Empty,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has a loop or parallel edges")]
    NotSimple,
    #[error("vertex {vertex} has degree {degree}")]
    Degree { vertex: VertexId, degree: usize },
    #[error("neighbourhood of vertex {vertex} is not an induced 6-cycle")]
    Neighbourhood { vertex: VertexId },
}

pub fn is_locally_c6(g: &Graph) -> Result<(), C6Violation> {
    if g.vertex_count() == 0 {
        return Err(C6Violation::Empty);
    }
    if !g.is_simple() {
        return Err(C6Violation::NotSimple);
    }
    if let Some(vertex) = (0..g.vertex_count()).find(|&v| g.degree(v) != 6) {
        return Err(C6Violation::Degree { vertex, degree: g.degree(vertex) });
    }
    if !g.is_connected() {
        return Err(C6Violation::Disconnected);
    }
    for v in 0..g.vertex_count() {
        let nbrs: Vec<_> = g.neighbors(v).collect();
        let link = g.induced(&nbrs);
        if !(link.is_regular(2) && link.is_connected()) {
            return Err(C6Violation::Neighbourhood { vertex: v });
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleRejection {
    #[error("edge {edge} lies in {count} triangles")]
    EdgeTriangles { edge: EdgeId, count: usize },
}

/// Dual of a triangulated surface graph: one vertex per triangle, one edge
/// per edge of `g` joining its two triangles. Applied to a locally C6 graph
/// this recovers the hexagonal tiling.
pub fn triangle_dual(g: &Graph) -> Result<Graph, TriangleRejection> {
    let triangles: Vec<_> = enumerate_cycles_upto(g, 3).into_iter().filter(|c| c.len() == 3).collect();
    let mut on_edge: HashMap<EdgeId, Vec<usize>> = HashMap::new();
    for (i, c) in triangles.iter().enumerate() {
        for &e in c.edges() {
            on_edge.entry(e).or_default().push(i);
        }
    }
    let mut edges = Vec::with_capacity(g.edge_count());
    for edge in 0..g.edge_count() {
        match on_edge.get(&edge).map(Vec::as_slice) {
            Some(&[a, b]) => edges.push((a, b)),
            other => {
                return Err(TriangleRejection::EdgeTriangles { edge, count: other.map_or(0, <[usize]>::len) })
            }
        }
    }
    Ok(Graph::new(triangles.len(), &edges).expect("triangle ids in range"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{isomorphic, named};
    use crate::hex_families::build_hex;

    #[test]
    fn dual_of_a_torus_member() {
        let t = build_hex(&"Hr:5,4,1".parse().unwrap()).unwrap();
        let d = dual_tiling(&t);
        assert_eq!(d.graph.vertex_count(), 25);
        assert!(d.graph.is_regular(6));
        assert_eq!(d.graph.edge_count(), t.graph().edge_count());
        assert_eq!(is_locally_c6(&d.graph), Ok(()));
        let back = triangle_dual(&d.graph).unwrap();
        assert!(isomorphic(&back, t.graph()).is_some());
    }

    #[test]
    fn platonic_solids_are_not_locally_c6() {
        assert!(matches!(is_locally_c6(&named::octahedron()), Err(C6Violation::Degree { degree: 4, .. })));
        assert!(matches!(is_locally_c6(&named::icosahedron()), Err(C6Violation::Degree { degree: 5, .. })));
        assert_eq!(is_locally_c6(&Graph::empty(0)), Err(C6Violation::Empty));
    }

    #[test]
    fn klein_member_round_trips() {
        let t = build_hex(&"Hf:7,4".parse().unwrap()).unwrap();
        let d = dual_tiling(&t);
        assert_eq!(d.parallel_cells(), None);
        assert_eq!(is_locally_c6(&d.graph), Ok(()));
        assert!(isomorphic(&triangle_dual(&d.graph).unwrap(), t.graph()).is_some());
    }
}
